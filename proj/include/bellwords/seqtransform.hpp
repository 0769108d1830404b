#pragma once

#include <functional>
#include <vector>
#include "bellwords/ints.hpp"

// Truncated integer sequences and the invert transform.
//
// A seq holds the first N terms x_1..x_N of a sequence; the transforms
// preserve the truncation length exactly and never zero-extend. Where a
// convention x_0 = 1 is needed it is implicit, not stored.
//
// The m-th invert transform is implemented two ways here: the direct
// X/(1-mX) coefficient recurrence (invert_m) and the partial-Bell
// representation (invert_m_via_bell). A third route, m-fold composition
// of the plain transform, lives in the test code as an oracle.

namespace bellwords {

class seq {
public:
    explicit seq(std::vector<bigint> terms);

    static seq from_f0(const std::function<bigint(int)>& f0, int len);

    int size() const { return static_cast<int>(terms_.size()); }
    const bigint& at(int n) const;  // 1-indexed

    const std::vector<bigint>& terms() const { return terms_; }
    bool operator==(const seq&) const = default;

private:
    std::vector<bigint> terms_;
};

// y_n = x_n + sum_{j<n} x_j y_{n-j}  (coefficients of X/(1-X))
seq invert(const seq& x);

// m = 0 returns x unchanged; m >= 1 gives coefficients of X/(1-mX).
seq invert_m(const seq& x, int m);

// Same values through B_{n,k}(1!x_1, 2!x_2, ...); m >= 1.
seq invert_m_via_bell(const seq& x, int m);

// The k-indexed summands (k!/n!) m^{k-1} B_{n,k}(1!x_1, 2!x_2, ...) for
// k = 1..n. Each is an exact integer; term k counts the words assembled
// from exactly k building blocks in the word model.
std::vector<bigint> bell_route_terms(const seq& x, int m, int n);

// x with invert(x) == y:  x_n = y_n - sum_{j<n} x_j y_{n-j}.
seq invert_inverse(const seq& y);

}  // namespace bellwords
