#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "siegelab/contfrac.hpp"
#include "siegelab/errors.hpp"

namespace siegelab::polyfam {

using Complex = std::complex<double>;
using contfrac::RotationNumber;

/// A critical-data recipe: rotation number plus the free critical points
/// c_1..c_{d-2}. The last critical point is pinned at 1, so a spec with k
/// points describes a degree-(k+2) polynomial.
struct CriticalSpec {
    RotationNumber alpha;
    std::vector<Complex> points;  // c_1..c_{d-2}, all nonzero; c_{d-1}=1 implied
    std::size_t degree() const { return points.size() + 2; }
};

/// Degree-d polynomial f(z) = a_1 z + ... + a_d z^d fixing 0 with multiplier
/// e^{2 pi i alpha} and an explicit critical set (c_{d-1} = 1 by convention
/// when built from a CriticalSpec). Immutable; evaluation is reentrant.
class SiegelPolynomial {
public:
    SiegelPolynomial(RotationNumber alpha, std::vector<Complex> coeffs,
                     std::vector<Complex> critical_points);

    std::size_t degree() const { return coeffs_.size(); }
    const RotationNumber& alpha() const { return alpha_; }
    /// e^{2 pi i alpha} evaluated from the high-precision alpha.
    Complex multiplier() const { return multiplier_; }
    /// a_1..a_d (no constant term; f(0) = 0 identically).
    const std::vector<Complex>& coefficients() const { return coeffs_; }
    /// The critical set the polynomial was built with (may be empty for
    /// hand-rolled coefficient lists).
    const std::vector<Complex>& critical_set() const { return critical_; }

    Complex eval(Complex z) const;
    Complex derivative(Complex z) const;

    /// Residual scale for "f'(c) = 0" checks:
    /// 1e-10 * max(1, max |c_i|^{d-1}); conditioning degrades with the
    /// spread of the critical points.
    double build_tolerance() const;

private:
    RotationNumber alpha_;
    Complex multiplier_;
    std::vector<Complex> coeffs_;
    std::vector<Complex> critical_;
};

/// Elementary symmetric polynomial e_k of the given points (e_0 = 1).
Complex elementary_symmetric(const std::vector<Complex>& points, std::size_t k);

/// Builds the unique polynomial with multiplier e^{2 pi i alpha} at 0 whose
/// critical set is spec.points together with 1:
///   a_i = e^{2 pi i alpha} * ((-1)^{i-1} / i) * Q_{d-i}(c) / (c_1...c_{d-1}).
SiegelPolynomial from_critical_points(const CriticalSpec& spec);

/// Conjugation Q(z) = c^{-1} f(c z) moving the critical point c to 1. The
/// multiplier is unchanged and coefficients pick up powers of c.
SiegelPolynomial rescale_to_critical(const SiegelPolynomial& f, Complex c);

/// All d-1 roots of f' (with multiplicity), via simultaneous Aberth-Ehrlich
/// iteration with a companion-matrix fallback.
std::vector<Complex> critical_points(const SiegelPolynomial& f);

/// Roots of c_0 + c_1 z + ... + c_n z^n. Exposed for reuse and testing.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

/// JSON round-trip (degree, alpha as coefficient list, points as [re, im]).
std::string to_json(const CriticalSpec& spec);
std::string to_json(const SiegelPolynomial& f);
CriticalSpec critical_spec_from_json(const std::string& text);
SiegelPolynomial polynomial_from_json(const std::string& text);

} // namespace siegelab::polyfam
