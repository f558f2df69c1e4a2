#pragma once

#include <gmpxx.h>

namespace hookmod {

// All core arithmetic is exact. Coefficients are GMP rationals; counts and
// factorials are GMP integers. No floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// gmpxx has no long long constructor; on this platform long is 64-bit.
inline Rational rational_of(long long v) { return Rational(static_cast<long>(v)); }

}  // namespace hookmod
