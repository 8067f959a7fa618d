#pragma once

#include <cmath>
#include <string>

#include <gmpxx.h>

namespace treehom {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// Natural log of a positive big integer. Exact exponent plus a double
// mantissa, so the relative error is at machine precision regardless of size.
inline double log_int(const Int& x) {
    signed long e2 = 0;
    double d = mpz_get_d_2exp(&e2, x.get_mpz_t());
    return std::log(d) + static_cast<double>(e2) * std::log(2.0);
}

inline std::string dec(const Int& x) { return x.get_str(); }

} // namespace treehom
