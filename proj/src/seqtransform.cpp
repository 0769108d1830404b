#include "bellwords/seqtransform.hpp"

#include <stdexcept>
#include <utility>
#include "bellwords/bellpoly.hpp"

namespace bellwords {

seq::seq(std::vector<bigint> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("seq: empty sequence");
}

seq seq::from_f0(const std::function<bigint(int)>& f0, int len) {
    if (len < 1) throw std::invalid_argument("seq::from_f0: len must be >= 1");
    std::vector<bigint> t(static_cast<size_t>(len));
    for (int j = 1; j <= len; ++j) t[static_cast<size_t>(j - 1)] = f0(j);
    return seq(std::move(t));
}

const bigint& seq::at(int n) const {
    if (n < 1 || n > size())
        throw std::out_of_range("seq: index " + std::to_string(n) + " outside 1.." +
                                std::to_string(size()));
    return terms_[static_cast<size_t>(n - 1)];
}

namespace {

// Shared convolution kernel: y_n = x_n + c * sum_{j=1}^{n-1} x_j y_{n-j}.
seq convolve_transform(const seq& x, const bigint& c) {
    const int n_max = x.size();
    std::vector<bigint> y(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        bigint acc = x.at(n);
        bigint conv = 0;
        for (int j = 1; j < n; ++j) conv += x.at(j) * y[static_cast<size_t>(n - j - 1)];
        acc += c * conv;
        y[static_cast<size_t>(n - 1)] = std::move(acc);
    }
    return seq(std::move(y));
}

bell_args scaled_args(const seq& x) {
    std::vector<bigint> z(static_cast<size_t>(x.size()));
    for (int j = 1; j <= x.size(); ++j) z[static_cast<size_t>(j - 1)] = factorial(j) * x.at(j);
    return bell_args(std::move(z));
}

// (k!/n!) * m^{k-1} * B; the division is exact because k! B_{n,k}(1!x_1,...)
// is n! times an integer polynomial in the x_j.
bigint exact_term(const bigint& bell_value, int n, int k, int m) {
    if (bell_value == 0) return 0;
    bigint num = bell_value * factorial(k);
    bigint q, r;
    boost::multiprecision::divide_qr(num, factorial(n), q, r);
    if (r != 0) throw std::logic_error("bell route: non-integer term, argument vector corrupt");
    return q * int_pow(m, k - 1);
}

}  // namespace

seq invert(const seq& x) { return convolve_transform(x, 1); }

seq invert_m(const seq& x, int m) {
    if (m < 0) throw std::invalid_argument("invert_m: m must be >= 0");
    if (m == 0) return x;
    return convolve_transform(x, m);
}

seq invert_m_via_bell(const seq& x, int m) {
    if (m < 1) throw std::invalid_argument("invert_m_via_bell: m must be >= 1");
    bell_table table(scaled_args(x));
    std::vector<bigint> y(static_cast<size_t>(x.size()));
    for (int n = 1; n <= x.size(); ++n) {
        bigint acc = 0;
        for (int k = 1; k <= n; ++k) acc += exact_term(table.value(n, k), n, k, m);
        y[static_cast<size_t>(n - 1)] = std::move(acc);
    }
    return seq(std::move(y));
}

std::vector<bigint> bell_route_terms(const seq& x, int m, int n) {
    if (m < 1) throw std::invalid_argument("bell_route_terms: m must be >= 1");
    if (n < 1 || n > x.size())
        throw std::invalid_argument("bell_route_terms: n outside sequence length");
    bell_table table(scaled_args(x));
    std::vector<bigint> terms(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
        terms[static_cast<size_t>(k - 1)] = exact_term(table.value(n, k), n, k, m);
    return terms;
}

seq invert_inverse(const seq& y) {
    const int n_max = y.size();
    std::vector<bigint> x(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        bigint acc = y.at(n);
        for (int j = 1; j < n; ++j) acc -= x[static_cast<size_t>(j - 1)] * y.at(n - j);
        x[static_cast<size_t>(n - 1)] = std::move(acc);
    }
    return seq(std::move(x));
}

}  // namespace bellwords
