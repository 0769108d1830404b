#include "bellwords/wordmodel.hpp"

#include <algorithm>
#include <stdexcept>

namespace bellwords {

std::string word_to_string(const word& w) {
    bool wide = std::any_of(w.begin(), w.end(), [](int c) { return c > 9; });
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (wide && i > 0) s += '.';
        s += std::to_string(w[i]);
    }
    return s;
}

std::vector<word> blocks(int b, int j) {
    if (b < 1) throw std::invalid_argument("blocks: b must be >= 1");
    if (j < 1) throw std::invalid_argument("blocks: j must be >= 1");
    std::vector<word> out;
    word w(static_cast<size_t>(j), 0);
    w[0] = b;
    // odometer over the j-1 tail positions, base b
    for (;;) {
        out.push_back(w);
        int pos = j - 1;
        while (pos >= 1 && w[static_cast<size_t>(pos)] == b - 1) {
            w[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 1) break;
        ++w[static_cast<size_t>(pos)];
    }
    return out;
}

namespace {

bool nonincreasing_digits(const word& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) return false;
    return true;
}

long f0_as_count(const block_system& sys, int j) {
    bigint v = sys.f0(j);
    if (v < 0) throw std::invalid_argument("select_blocks: f0(" + std::to_string(j) + ") < 0");
    if (v > int_pow(sys.b, j - 1))
        throw std::invalid_argument("select_blocks: f0(" + std::to_string(j) + ") exceeds b^(j-1)");
    return v.convert_to<long>();
}

}  // namespace

std::vector<word> select_blocks(const block_system& sys, int j) {
    if (j < 1) throw std::invalid_argument("select_blocks: j must be >= 1");
    long want = f0_as_count(sys, j);

    if (sys.selector == selector_kind::lex) {
        // stream the first f0(j) blocks without materializing W_b(j)
        std::vector<word> out;
        out.reserve(static_cast<size_t>(want));
        word w(static_cast<size_t>(j), 0);
        w[0] = sys.b;
        while (static_cast<long>(out.size()) < want) {
            out.push_back(w);
            int pos = j - 1;
            while (pos >= 1 && w[static_cast<size_t>(pos)] == sys.b - 1) {
                w[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 1) break;
            ++w[static_cast<size_t>(pos)];
        }
        return out;
    }

    auto keep = sys.selector == selector_kind::nonincreasing
                    ? std::function<bool(const word&)>(nonincreasing_digits)
                    : sys.block_pred;
    if (!keep) throw std::invalid_argument("select_blocks: predicate selector without predicate");

    std::vector<word> out;
    for (word& w : blocks(sys.b, j))
        if (keep(w)) out.push_back(std::move(w));
    if (static_cast<long>(out.size()) != want)
        throw std::invalid_argument("select_blocks: selector matched " +
                                    std::to_string(out.size()) + " blocks at j=" +
                                    std::to_string(j) + " but f0 demands " + std::to_string(want));
    return out;
}

std::vector<word> expand_heads(const std::vector<word>& u, int b, int m) {
    if (m < 1) throw std::invalid_argument("expand_heads: m must be >= 1");
    std::vector<word> out;
    out.reserve(u.size() * static_cast<size_t>(m));
    for (int head = b; head < b + m; ++head)
        for (const word& w : u) {
            word v = w;
            v[0] = head;
            out.push_back(std::move(v));
        }
    return out;
}

bigint count_blockwords(const block_system& sys, int m, int n) {
    if (m < 1) throw std::invalid_argument("count_blockwords: m must be >= 1");
    if (n < 0) throw std::invalid_argument("count_blockwords: n must be >= 0");
    if (n == 0) return 1;
    // suffix(r) = number of concatenations of free-head blocks of total length r
    std::vector<bigint> f0(static_cast<size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
        f0[static_cast<size_t>(j)] = sys.f0(j);
        if (f0[static_cast<size_t>(j)] < 0)
            throw std::invalid_argument("count_blockwords: f0 < 0 at j=" + std::to_string(j));
    }
    std::vector<bigint> suffix(static_cast<size_t>(n) + 1);
    suffix[0] = 1;
    for (int r = 1; r <= n; ++r) {
        bigint acc = 0;
        for (int j = 1; j <= r; ++j)
            acc += f0[static_cast<size_t>(j)] * suffix[static_cast<size_t>(r - j)];
        suffix[static_cast<size_t>(r)] = m * acc;
    }
    bigint total = 0;
    for (int j = 1; j <= n; ++j)
        total += f0[static_cast<size_t>(j)] * suffix[static_cast<size_t>(n - j)];
    return total;
}

namespace {

void enumerate_impl(const block_system& sys, int m, int n, const bigint& budget,
                    const std::function<void(const word&, int k)>& emit) {
    if (m < 1) throw std::invalid_argument("enumerate_blockwords: m must be >= 1");
    if (n < 0) throw std::invalid_argument("enumerate_blockwords: n must be >= 0");
    bigint expected = count_blockwords(sys, m, n);
    if (expected > budget)
        throw budget_error("enumerate_blockwords: " + expected.str() + " words exceed budget " +
                           budget.str());
    if (n == 0) {
        emit(word{}, 0);
        return;
    }
    // materialize U_j and U_j^m for every usable block length
    std::vector<std::vector<word>> u(static_cast<size_t>(n) + 1);
    std::vector<std::vector<word>> um(static_cast<size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
        if (sys.f0(j) == 0) continue;
        u[static_cast<size_t>(j)] = select_blocks(sys, j);
        um[static_cast<size_t>(j)] = expand_heads(u[static_cast<size_t>(j)], sys.b, m);
    }
    word current;
    current.reserve(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int remaining, int k) -> void {
        if (remaining == 0) {
            emit(current, k);
            return;
        }
        for (int j = 1; j <= remaining; ++j) {
            const auto& pool = (k == 0) ? u[static_cast<size_t>(j)] : um[static_cast<size_t>(j)];
            for (const word& blk : pool) {
                current.insert(current.end(), blk.begin(), blk.end());
                self(self, remaining - j, k + 1);
                current.resize(current.size() - blk.size());
            }
        }
    };
    rec(rec, n, 0);
}

}  // namespace

std::set<word> enumerate_blockwords(const block_system& sys, int m, int n, const bigint& budget) {
    std::set<word> out;
    enumerate_impl(sys, m, n, budget, [&](const word& w, int) {
        if (!out.insert(w).second)
            throw std::logic_error("enumerate_blockwords: duplicate word, factorization broken");
    });
    return out;
}

std::map<int, std::set<word>> enumerate_blockwords_by_k(const block_system& sys, int m, int n,
                                                        const bigint& budget) {
    std::map<int, std::set<word>> out;
    enumerate_impl(sys, m, n, budget, [&](const word& w, int k) {
        if (!out[k].insert(w).second)
            throw std::logic_error("enumerate_blockwords: duplicate word, factorization broken");
    });
    return out;
}

std::vector<word> decompose(const word& w, int b) {
    if (b < 1) throw std::invalid_argument("decompose: b must be >= 1");
    if (w.empty() || w[0] < b)
        throw std::invalid_argument("decompose: word does not start with a head letter >= b");
    std::vector<word> parts;
    size_t start = 0;
    for (size_t i = 1; i <= w.size(); ++i) {
        if (i == w.size() || w[i] >= b) {
            parts.emplace_back(w.begin() + static_cast<long>(start),
                               w.begin() + static_cast<long>(i));
            start = i;
        }
    }
    return parts;
}

bigint brute_count(int alphabet, int n, const word_predicate& p, const bigint& budget) {
    if (alphabet < 1) throw std::invalid_argument("brute_count: alphabet must be >= 1");
    if (n < 0) throw std::invalid_argument("brute_count: n must be >= 0");
    if (!p.accept) throw std::invalid_argument("brute_count: predicate missing");
    bigint space = int_pow(alphabet, n);
    if (space > budget)
        throw budget_error("brute_count: " + std::to_string(alphabet) + "^" + std::to_string(n) +
                           " = " + space.str() + " candidates exceed budget " + budget.str());
    bigint count = 0;
    word w;
    w.reserve(static_cast<size_t>(n));
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == n) {
            if (p.accept(w)) ++count;
            return;
        }
        for (int c = 0; c < alphabet; ++c) {
            w.push_back(c);
            if (!p.viable || p.viable(w)) self(self);
            w.pop_back();
        }
    };
    rec(rec);
    return count;
}

}  // namespace bellwords
