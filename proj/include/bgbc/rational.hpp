#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bgbc {

/// Exact rational scalar. All algebra in this library is over Q; no
/// floating point appears anywhere in the core.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Integer factorial(long n) {
    Integer f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Falling factorial k(k-1)...(k-j+1); empty product for j = 0.
inline Integer falling_factorial(long k, long j) {
    Integer f = 1;
    for (long t = 0; t < j; ++t) f *= (k - t);
    return f;
}

inline Integer binomial(long n, long k) {
    if (k < 0) return 0;
    Integer b = falling_factorial(n, k);
    mpz_class d = factorial(k);
    return b / d;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace bgbc
