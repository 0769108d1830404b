#pragma once

#include <vector>
#include "bellwords/ints.hpp"

// Partial Bell polynomials B_{n,k}(z_1, ..., z_{n-k+1}), evaluated exactly.
//
// Three routes are provided:
//   * bell_oracle     — straight from the partition-sum definition; the
//                       reference implementation everything else is checked
//                       against.
//   * bell_recurrence — the usual B_{n,k} = sum_j C(n-1,j-1) z_j B_{n-j,k-1}
//                       table; this is the workhorse for larger n.
//   * identity1..4    — closed forms for four specific argument vectors
//                       (truncated factorials, a sparse two-term vector, a
//                       one-gap factorial vector, and figurate numbers).
//
// All results are exact integers; no rational intermediates appear anywhere.

namespace bellwords {

// Argument vector (z_1, ..., z_L), 1-indexed. Reading past the stored
// length is an error, never an implicit zero.
class bell_args {
public:
    explicit bell_args(std::vector<bigint> terms);

    int size() const { return static_cast<int>(terms_.size()); }
    const bigint& z(int j) const;

    const std::vector<bigint>& terms() const { return terms_; }

private:
    std::vector<bigint> terms_;
};

// Definition-level evaluation: iterate the multi-indices alpha with
// sum alpha_i = k and sum i*alpha_i = n (equivalently, partitions of n into
// k parts) and accumulate exact summands. Requires z.size() >= n-k+1.
bigint bell_oracle(int n, int k, const bell_args& z);

// Full triangle of B_{i,j} for 1 <= j <= i <= n_max over a fixed argument
// vector; used by the recurrence route and by the sequence transforms,
// which consume every row at once.
class bell_table {
public:
    explicit bell_table(bell_args z);

    // B_{n,k}; computes and caches rows up to n on demand.
    const bigint& value(int n, int k);

    int max_supported_n() const { return z_.size(); }

private:
    void extend(int n);

    bell_args z_;
    std::vector<std::vector<bigint>> rows_;  // rows_[n][k], k = 0..n
};

// Single value through the recurrence; equal to bell_oracle on all inputs.
bigint bell_recurrence(int n, int k, const bell_args& z);

// B_{n,k}(1!, 2!, ..., ell!, 0, 0, ...)
bigint identity1_truncated_factorials(int n, int k, int ell);

// B_{n,k}(1!, 0, ..., 0, (ell+1)!, 0, ...), nonzero only when ell | n-k.
// Requires ell >= 2.
bigint identity2_sparse(int n, int k, int ell);

// B_{n,k}(1!, ..., ell!, 0, (ell+2)!, (ell+3)!, ...)
bigint identity3_gap(int n, int k, int ell);

// B_{n,k}(1!*t_1, 2!*t_2, ...) with t_j = C(j+r, r+1).
bigint identity4_figurate(int n, int k, int r);

// The argument vectors the four identities close over, truncated to len
// terms; used by the oracle cross-checks and the CLI.
bell_args identity1_args(int len, int ell);
bell_args identity2_args(int len, int ell);
bell_args identity3_args(int len, int ell);
bell_args identity4_args(int len, int r);

}  // namespace bellwords
