#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>
#include "bellwords/ints.hpp"
#include "bellwords/wordmodel.hpp"

// Catalog of restriction families. Each family bundles
//   * the block-count sequence f0 and the block selector defining U_j,
//   * the word-level restriction over the full alphabet {0,...,b+m-1},
//   * a closed-form evaluator for f_m (the m-th invert transform of f0),
//   * the index offset between f_m and "words of length L".
//
// The families and their conventions:
//
//   name                  b      restriction on words          L <-> f_m
//   bounded-zero-runs     1      no ell consecutive zeros      f_m(L+1)
//   odd-zero-runs         1      zero runs of even length      f_m(L+1)
//   min-gap               1      >= ell zeros between nonzero  f_m(L+2*ell+1)
//   zero-blocks-exactly   1      zero runs of length ell       f_m(L+1)
//   no-exact-run          1      no zero run of exactly ell    f_m(L+1)
//   ascent-avoiding       r+2    no a1<a2 rise with a2<=r+1    f_m(L+1)
//   ii-avoiding           q      no ii for i < q               f_m(L+1)
//
// Offsets are carried as data rather than normalized away: the sources of
// these formulas use three different shifts and silent renormalizing is
// how off-by-one errors creep in.

namespace bellwords {

struct family {
    std::string name;
    std::map<std::string, int> params;
    block_system block_sys;

    // words of length L are counted by f_m(L + word_offset)
    int word_offset = 1;
    // ascent-avoiding quotes its terms at f_m indices; everyone else
    // quotes word counts directly
    bool term_is_fm_indexed = false;
    int min_term_index = 0;

    // f_m(n) by the family's closed form; n >= 0, f_m(0) = 1
    std::function<bigint(int m, int n)> fm;
    // restriction on free words over {0,...,alphabet(m)-1}
    std::function<word_predicate(int m)> make_predicate;

    int alphabet(int m) const { return block_sys.b + m; }
    bigint count_words(int m, int length) const { return fm(m, length + word_offset); }
    bigint term(int m, int n) const { return term_is_fm_indexed ? fm(m, n) : count_words(m, n); }
};

// no run of ell consecutive zeros (ell >= 1)
family fam_bounded_zero_runs(int ell);
// every maximal zero run has even length
family fam_odd_zero_runs();
// at least ell zeros between any two nonzero letters (ell >= 1);
// fm is the unshifted block-word count, count_words the shifted one
family fam_min_gap(int ell);
// every maximal zero run has length exactly ell (ell >= 2)
family fam_zero_blocks_exactly(int ell);
// no maximal zero run of exactly ell (ell >= 1)
family fam_no_exact_run(int ell);
// no adjacent pair a1 a2 with a1 < a2 <= r+1 (r >= 0)
family fam_ascent_avoiding(int r);
// no doubled letter ii with i < q (q >= 1)
family fam_ii_avoiding(int q);

// words of length n over {0,...,m} that start with 1 and have every nonzero
// letter followed by at least ell zeros; equals fam_min_gap(ell).fm(m, n)
word_predicate min_gap_block_predicate(int ell, int n);

// The whole catalog with representative parameters, for verification sweeps.
std::vector<family> standard_catalog();

// Factory by CLI name ("bounded-zero-runs", ...); params may carry ell/r/q.
family make_family(const std::string& name, const std::map<std::string, int>& params);

// g(n, x) = sum_k C(n+k+1, n-k) x^k. Checks g(0,x) = 1, g(1,x) = x+2 and
// g(n+1,x) = (x+2) g(n,x) - g(n-1,x) for 1 <= n < n_max and all supplied x,
// entirely in integer arithmetic. Requires n_max >= 2.
bigint chebyshev_g(int n, const bigint& x);
bool chebyshev_identity_check(int n_max, const std::vector<long long>& x_values);

// ---- cross-verification harness ----

enum class budget_policy { error, skip };

struct verify_options {
    bigint brute_budget = default_brute_budget;
    bigint enum_budget = default_enum_budget;
    budget_policy on_over_budget = budget_policy::error;
    bool check_block_refinement = true;
};

struct verify_cell {
    int m = 0;
    int n = 0;       // family term index
    int length = 0;  // free word length
    bigint closed, bell, gf;
    std::optional<bigint> brute;       // absent when over budget (skip policy)
    std::optional<bigint> enum_count;  // absent when over budget
    bool refinement_ok = true;         // per-k block counts vs Bell terms
    bool ok = false;
    std::string note;
};

struct verify_report {
    std::string family_name;
    std::vector<verify_cell> cells;  // ordered by (m, n)

    bool all_ok() const;
    const verify_cell* first_mismatch() const;
    std::string summary() const;
};

// Evaluates, for every m in [m_lo, m_hi] and term index n in [n_lo, n_hi]:
// closed form, Bell route, generating-function route, brute force (within
// budget) and block enumeration (within budget), plus the per-k refinement.
verify_report cross_verify(const family& f, int m_lo, int m_hi, int n_lo, int n_hi,
                           const verify_options& opt = {});

}  // namespace bellwords
