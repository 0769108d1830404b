#include "bellwords/bellpoly.hpp"

#include <stdexcept>
#include <utility>

namespace bellwords {

bell_args::bell_args(std::vector<bigint> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("bell_args: empty argument vector");
}

const bigint& bell_args::z(int j) const {
    if (j < 1 || j > size())
        throw std::out_of_range("bell_args: z_" + std::to_string(j) +
                                " requested, only " + std::to_string(size()) + " terms stored");
    return terms_[static_cast<size_t>(j - 1)];
}

namespace {

void check_nk(int n, int k) {
    if (n < 1) throw std::invalid_argument("bell: n must be >= 1");
    if (k < 1 || k > n) throw std::invalid_argument("bell: k must satisfy 1 <= k <= n");
}

void check_args_length(int n, int k, const bell_args& z) {
    if (z.size() < n - k + 1)
        throw std::invalid_argument("bell: argument vector has " + std::to_string(z.size()) +
                                    " terms, need " + std::to_string(n - k + 1));
}

// The multiplicity vector of a partition of n into k parts: alpha[i] = number
// of parts equal to i. The summand coefficient n! / (prod alpha_i! (i!)^alpha_i)
// counts set partitions with that block-size profile, so it is an integer; we
// build it as a product of binomials and never divide.
//
// Stage 1 distributes the n labels among the size classes (one binomial per
// class); stage 2 splits each class of i*alpha_i labels into alpha_i unordered
// blocks of size i by repeatedly anchoring the smallest remaining label:
// C(i*t - 1, i - 1) for t = alpha_i, ..., 1.
bigint profile_coefficient(int n, const std::vector<int>& alpha) {
    bigint c = 1;
    long remaining = n;
    for (size_t i = 1; i < alpha.size(); ++i) {
        int a = alpha[i];
        if (a == 0) continue;
        long class_size = static_cast<long>(i) * a;
        c *= binomial(remaining, class_size);
        remaining -= class_size;
        for (long t = a; t >= 1; --t)
            c *= binomial(static_cast<long>(i) * t - 1, static_cast<long>(i) - 1);
    }
    return c;
}

// Enumerate partitions of n into exactly k parts (nonincreasing), calling
// visit with the multiplicity vector of each.
template <typename Visit>
void for_each_partition(int n, int k, Visit&& visit) {
    std::vector<int> alpha(static_cast<size_t>(n) + 1, 0);
    // rec(remaining, parts_left, max_part)
    auto rec = [&](auto&& self, int remaining, int parts_left, int max_part) -> void {
        if (parts_left == 0) {
            if (remaining == 0) visit(alpha);
            return;
        }
        // each remaining part is >= 1 and <= max_part
        int hi = std::min(max_part, remaining - (parts_left - 1));
        for (int p = hi; p >= 1; --p) {
            if (static_cast<long>(p) * parts_left < remaining) break;
            ++alpha[static_cast<size_t>(p)];
            self(self, remaining - p, parts_left - 1, p);
            --alpha[static_cast<size_t>(p)];
        }
    };
    rec(rec, n, k, n);
}

}  // namespace

bigint bell_oracle(int n, int k, const bell_args& z) {
    check_nk(n, k);
    check_args_length(n, k, z);
    bigint total = 0;
    for_each_partition(n, k, [&](const std::vector<int>& alpha) {
        bigint monomial = 1;
        for (int i = 1; i <= n; ++i) {
            int a = alpha[static_cast<size_t>(i)];
            if (a == 0) continue;
            monomial *= int_pow(z.z(i), a);
            if (monomial == 0) break;
        }
        if (monomial != 0) total += profile_coefficient(n, alpha) * monomial;
    });
    return total;
}

bell_table::bell_table(bell_args z) : z_(std::move(z)) {
    rows_.push_back({bigint(1)});  // B_{0,0} = 1
}

void bell_table::extend(int n) {
    for (int i = static_cast<int>(rows_.size()); i <= n; ++i) {
        std::vector<bigint> row(static_cast<size_t>(i) + 1);
        row[0] = 0;  // B_{i,0} = 0 for i >= 1
        // binomials C(i-1, j-1) for j = 1..i
        std::vector<bigint> binom(static_cast<size_t>(i) + 1);
        for (int j = 1; j <= i; ++j) binom[static_cast<size_t>(j)] = binomial(i - 1, j - 1);
        for (int kk = 1; kk <= i; ++kk) {
            bigint acc = 0;
            int jmax = std::min(i - kk + 1, z_.size());
            for (int j = 1; j <= jmax; ++j) {
                const bigint& zj = z_.z(j);
                if (zj == 0) continue;
                const bigint& sub = rows_[static_cast<size_t>(i - j)][static_cast<size_t>(kk - 1)];
                if (sub == 0) continue;
                acc += binom[static_cast<size_t>(j)] * zj * sub;
            }
            row[static_cast<size_t>(kk)] = std::move(acc);
        }
        rows_.push_back(std::move(row));
    }
}

const bigint& bell_table::value(int n, int k) {
    check_nk(n, k);
    check_args_length(n, k, z_);
    extend(n);
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

bigint bell_recurrence(int n, int k, const bell_args& z) {
    check_nk(n, k);
    check_args_length(n, k, z);
    bell_table table(z);
    return table.value(n, k);
}

bigint identity1_truncated_factorials(int n, int k, int ell) {
    check_nk(n, k);
    if (ell < 1) throw std::invalid_argument("identity1: ell must be >= 1");
    bigint sum = 0;
    for (int j = 0; j <= (n - k) / ell; ++j) {
        bigint term = binomial(k, j) * binomial(n - static_cast<long>(ell) * j - 1, k - 1);
        sum += (j % 2 == 0) ? term : -term;
    }
    return falling_quotient(n, k) * sum;
}

bigint identity2_sparse(int n, int k, int ell) {
    check_nk(n, k);
    if (ell < 2) throw std::invalid_argument("identity2: ell must be >= 2");
    long d = n - k;
    if (d % ell != 0) return 0;
    long s = d / ell;
    return binomial(n, d + s) * falling_quotient(d + s, s);
}

bigint identity3_gap(int n, int k, int ell) {
    check_nk(n, k);
    if (ell < 1) throw std::invalid_argument("identity3: ell must be >= 1");
    bigint sum = 0;
    for (int kappa = 0; kappa < k; ++kappa) {
        bigint term = binomial(k, kappa) *
                      binomial(n - static_cast<long>(ell + 1) * kappa - 1, k - kappa - 1);
        sum += (kappa % 2 == 0) ? term : -term;
    }
    if (static_cast<long>(ell + 1) * k == n) sum += (k % 2 == 0) ? 1 : -1;
    return falling_quotient(n, k) * sum;
}

bigint identity4_figurate(int n, int k, int r) {
    check_nk(n, k);
    if (r < 0) throw std::invalid_argument("identity4: r must be >= 0");
    return falling_quotient(n, k) * binomial(n + static_cast<long>(r + 1) * k - 1, n - k);
}

bell_args identity1_args(int len, int ell) {
    if (len < 1) throw std::invalid_argument("identity1_args: len must be >= 1");
    std::vector<bigint> z(static_cast<size_t>(len));
    for (int j = 1; j <= len; ++j) z[static_cast<size_t>(j - 1)] = (j <= ell) ? factorial(j) : 0;
    return bell_args(std::move(z));
}

bell_args identity2_args(int len, int ell) {
    if (len < 1) throw std::invalid_argument("identity2_args: len must be >= 1");
    std::vector<bigint> z(static_cast<size_t>(len), bigint(0));
    z[0] = 1;
    if (ell + 1 <= len) z[static_cast<size_t>(ell)] = factorial(ell + 1);
    return bell_args(std::move(z));
}

bell_args identity3_args(int len, int ell) {
    if (len < 1) throw std::invalid_argument("identity3_args: len must be >= 1");
    std::vector<bigint> z(static_cast<size_t>(len));
    for (int j = 1; j <= len; ++j)
        z[static_cast<size_t>(j - 1)] = (j == ell + 1) ? 0 : factorial(j);
    return bell_args(std::move(z));
}

bell_args identity4_args(int len, int r) {
    if (len < 1) throw std::invalid_argument("identity4_args: len must be >= 1");
    std::vector<bigint> z(static_cast<size_t>(len));
    for (int j = 1; j <= len; ++j)
        z[static_cast<size_t>(j - 1)] = factorial(j) * binomial(j + r, r + 1);
    return bell_args(std::move(z));
}

}  // namespace bellwords
