#pragma once

#include <gmpxx.h>

#include <string>

namespace motivic {

// All integer data is arbitrary precision; intermediate rationals are exact.
using Int = mpz_class;
using Rat = mpq_class;

// binomial(n, k) for arbitrary-precision n, including the usual extension
// to negative n (binomial(-1, 0) = 1, binomial(v, k) = 0 for 0 <= v < k).
inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int int_pow(const Int& base, unsigned long exponent) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

inline std::string to_decimal(const Int& x) { return x.get_str(); }

inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

}  // namespace motivic
