#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>
#include "bellwords/ints.hpp"

// Building-block construction of restricted words.
//
// For a head letter b, the block set W_b(j) holds the b^{j-1} words of
// length j that start with b followed by j-1 letters from {0,...,b-1}.
// Every word starting with a letter >= b factors uniquely into such blocks
// (split in front of each letter >= b). A block_system fixes an admissible
// subset U_j of W_b(j) with |U_j| = f0(j). Concatenating blocks, the first
// with head exactly b and later ones with the head replaced by any of
// b..b+m-1, produces the block-word sets whose sizes the invert transform
// of f0 computes.
//
// brute_count is the independent oracle: plain exhaustive generation over
// a full alphabet, with optional sound prefix pruning.

namespace bellwords {

using word = std::vector<int>;

std::string word_to_string(const word& w);

// Exceeding an enumeration budget raises this instead of truncating.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long default_brute_budget = 100'000'000;
inline constexpr long long default_enum_budget = 1'000'000;

enum class selector_kind { lex, nonincreasing, by_predicate };

struct block_system {
    int b = 1;
    std::function<bigint(int)> f0;
    selector_kind selector = selector_kind::lex;
    std::function<bool(const word&)> block_pred;  // used by selector_kind::by_predicate
};

// W_b(j) in lexicographic order; |W_b(j)| = b^{j-1}.
std::vector<word> blocks(int b, int j);

// U_j for the system's selector, in lexicographic order, with |U_j| = f0(j):
//   lex            — the f0(j) smallest members of W_b(j);
//   nonincreasing  — all blocks with nonincreasing digits (count must match f0);
//   by_predicate   — all blocks satisfying block_pred (count must match f0).
std::vector<word> select_blocks(const block_system& sys, int j);

// U_j^m: each block repeated with its head replaced by b, b+1, ..., b+m-1.
std::vector<word> expand_heads(const std::vector<word>& u, int b, int m);

// Number of length-n words formed as block concatenations (first head b,
// later heads free over b..b+m-1). Memoized suffix counts; no enumeration.
bigint count_blockwords(const block_system& sys, int m, int n);

// The full word set, and the same partitioned by block count k. The
// expected size is checked against `budget` before any generation.
std::set<word> enumerate_blockwords(const block_system& sys, int m, int n,
                                    const bigint& budget = default_enum_budget);
std::map<int, std::set<word>> enumerate_blockwords_by_k(const block_system& sys, int m, int n,
                                                        const bigint& budget = default_enum_budget);

// Unique block factorization: split in front of every letter >= b.
// The word must start with a letter >= b.
std::vector<word> decompose(const word& w, int b);

// A full-word restriction, with an optional viability test on prefixes.
// `viable` must be sound (every prefix of an acceptable word is viable);
// when absent the search cannot prune and enumerates everything.
struct word_predicate {
    std::function<bool(const word&)> accept;
    std::function<bool(const word&)> viable;
};

// Number of words of length n over {0,...,alphabet-1} satisfying p.
// Refuses (budget_error) when alphabet^n exceeds the budget.
bigint brute_count(int alphabet, int n, const word_predicate& p,
                   const bigint& budget = default_brute_budget);

}  // namespace bellwords
