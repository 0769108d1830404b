#pragma once

#include <stdexcept>
#include <boost/multiprecision/cpp_int.hpp>

// Exact integer arithmetic used everywhere in this library. Counting values
// grow super-exponentially (factorials of a few hundred appear in the Bell
// polynomial routines), so all public quantities are multiprecision.

namespace bellwords {

using bigint = boost::multiprecision::cpp_int;

inline bigint factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    bigint r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// n!/k! as the product (k+1)(k+2)...n, for 0 <= k <= n.
inline bigint falling_quotient(long n, long k) {
    if (k < 0 || k > n) throw std::invalid_argument("falling_quotient: need 0 <= k <= n");
    bigint r = 1;
    for (long i = k + 1; i <= n; ++i) r *= i;
    return r;
}

// Binomial coefficient with the vanishing convention: C(n, k) = 0 whenever
// n < 0, k < 0 or k > n. The identity evaluators rely on this uniformly;
// do NOT substitute a convention with C(-1, 0) = 1 here.
inline bigint binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

// base^exp for exp >= 0, with 0^0 = 1.
inline bigint int_pow(const bigint& base, long exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    bigint r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline bigint int_pow(long base, long exp) { return int_pow(bigint(base), exp); }

}  // namespace bellwords
