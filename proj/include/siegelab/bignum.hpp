#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace siegelab {

/// Arbitrary-size integer (GMP-backed). Convergent denominators overflow
/// 64-bit integers quickly for generic rotation numbers, so all continued
/// fraction integer data lives in this type.
using BigInt = boost::multiprecision::mpz_int;

/// Software floating point with runtime-set precision (MPFR-backed).
using BigFloat = boost::multiprecision::mpfr_float;

/// Sets the working precision for all subsequently constructed BigFloat
/// values. The Gauss map loses roughly log2(a_n * q_n^2) bits per step, so
/// deep expansions need generous precision; 512 bits is the default.
inline void set_precision_bits(unsigned bits) {
    // boost exposes decimal digits; round up so at least `bits` survive.
    const unsigned digits10 = static_cast<unsigned>(bits * 0.3010299957) + 2;
    BigFloat::default_precision(digits10);
}

/// Approximate working precision in bits (from the decimal digit setting).
inline unsigned precision_bits() {
    return static_cast<unsigned>(BigFloat::default_precision() / 0.3010299957);
}

/// RAII guard used by code that needs a temporary precision bump.
class PrecisionGuard {
    unsigned saved_digits_;
public:
    explicit PrecisionGuard(unsigned bits) : saved_digits_(BigFloat::default_precision()) {
        set_precision_bits(bits);
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved_digits_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
};

} // namespace siegelab
