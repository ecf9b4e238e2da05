#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "siegelab/circlemap.hpp"
#include "siegelab/contfrac.hpp"

namespace siegelab::blaschke {

using Complex = std::complex<double>;
using contfrac::RotationNumber;
using circlemap::CircleMapHandle;

/// Degree-(2d-1) Blaschke product
///   B(z) = lambda z^d prod_i (1 - z/zeta_i) / (z - 1/conj(zeta_i))
/// written with its nonzero finite zeros zeta_i stored OUTSIDE the unit disk
/// (|zeta_i| > 1); the poles are their reflections inside. On the circle
/// |B| = 1 and the restriction is a homeomorphism for suitable zeros.
class BlaschkeProduct {
public:
    BlaschkeProduct(double lambda_phase, std::vector<Complex> zeros);

    /// d in the family parametrization; the map degree is 2d-1.
    int d() const { return static_cast<int>(zeros_.size()) + 1; }
    int degree() const { return 2 * d() - 1; }
    double lambda_phase() const { return lambda_phase_; }
    Complex lambda() const;
    const std::vector<Complex>& zeros() const { return zeros_; }

    Complex eval(Complex z) const;

    /// Circle restriction in phase coordinates: the real-analytic lift
    ///   F(x) = t + x - (1/pi) sum_i Arg(1 - a_i e^{-2 pi i x}),
    /// a_i the poles, together with its first two derivatives.
    double lift(double x) const;
    double lift_derivative(double x) const;
    double lift_second(double x) const;

    /// Certified circle-map handle of the restriction.
    CircleMapHandle circle_map() const;

    /// e^{2 pi i dt} * B (the tuning family).
    BlaschkeProduct rotated(double dt) const;

private:
    double lambda_phase_;
    std::vector<Complex> zeros_;
    std::vector<Complex> poles_;  // 1/conj(zeros), cached
};

/// Douady-Ghys premodel B(z) = e^{2 pi i t} z^2 (z - 3)/(1 - 3 z): a double
/// critical point on the circle at z = 1, homeomorphic restriction.
BlaschkeProduct build_dg(double t);

/// Rotation-number tuning of the family t -> e^{2 pi i t} B by bisection.
struct TuneResult {
    double t = 0.0;
    double rho = 0.0;          ///< rotation number estimate at t
    double rho_error = 0.0;    ///< estimator bound at t
    double bracket_width = 1.0;
    int bisections = 0;
    bool plateau = false;      ///< mode-locking plateau detected (rational target)
};
TuneResult tune_rotation(const BlaschkeProduct& base, const RotationNumber& target,
                         double tol, int sweep_points = 64);

/// Monotone circle homeomorphism sampled at nodes, interpolated linearly.
class SampledCircleMap {
public:
    /// Builds from (phase, image-phase) pairs. The image order must be a
    /// cyclic rotation of the source order (Poincare); otherwise NotMonotone.
    static SampledCircleMap from_pairs(std::vector<std::pair<double, double>> nodes);
    static SampledCircleMap identity();

    double lift(double x) const;
    double eval(double x) const;    ///< frac(lift(x))
    double invert(double y) const;  ///< phase with eval == y

    std::size_t size() const { return x_.size(); }
    double node_phase(std::size_t i) const { return x_[i]; }
    double node_value(std::size_t i) const { return y_lift_[i]; }

private:
    std::vector<double> x_;       // sorted node phases in [0,1)
    std::vector<double> y_lift_;  // strictly increasing lift values
};

/// h with h(B^k(1)) = e^{2 pi i k alpha} on the forward orbit of 1,
/// monotone-interpolated in between. Throws OrbitTooSparse when the orbit
/// does not reach gap <= 1/sqrt(n).
SampledCircleMap boundary_conjugacy(const BlaschkeProduct& B, const RotationNumber& alpha,
                                    std::size_t n);

/// Surgery premodel: B outside the closed disk, H^{-1} R_alpha H inside,
/// with H the radial-angular interpolation of the boundary conjugacy
/// (weight w(r) = 3r^2 - 2r^3, so H fixes 0 and restricts to h on the
/// circle).
struct SurgeryModel {
    BlaschkeProduct exterior;
    RotationNumber alpha;
    SampledCircleMap h;
    double tol_conj = 1e-6;
};

SurgeryModel make_surgery_model(BlaschkeProduct B, RotationNumber alpha,
                                std::size_t samples);

Complex surgery_eval(const SurgeryModel& m, Complex z);

/// Max mismatch between the interior and exterior branches on the circle,
/// measured at the conjugacy nodes.
double surgery_glue_residual(const SurgeryModel& m);

/// Yoccoz cells of level n over the backward points of the level-n interval
/// system: for each point, a radial drop of half the neighbor chord span, a
/// chord top side, and the bounding arc.
struct Cell {
    std::size_t left = 0, right = 0;  ///< sorted-point indices of the radial sides
    std::vector<Complex> polygon;     ///< x_l, y_l, y_r, x_r, then arc samples back
    double area = 0.0;
};
struct CellComplex {
    int level = 0;
    std::vector<double> point_phases;  ///< sorted
    std::vector<Complex> tops;         ///< y_i per sorted point
    std::vector<Cell> cells;           ///< one per adjacent pair, by phase
    double y_area = 0.0;               ///< area between the circle and the top polyline
    double max_adjacent_chord = 0.0;
    bool guard_ok = false;             ///< all adjacent chords < 1
};

CellComplex yoccoz_cells(const CircleMapHandle& m, const RotationNumber& alpha, int level);
CellComplex yoccoz_cells(const BlaschkeProduct& B, const RotationNumber& alpha, int level);

/// Smallest level <= max_level whose adjacent chord gaps are all < 1, or -1.
int level_guard(const CircleMapHandle& m, const RotationNumber& alpha, int max_level);

/// Sampled interior-disjointness certificate.
bool cells_tile_without_overlap(const CellComplex& complex, std::size_t samples_per_cell = 16);

/// Geometric decay rate fitted to a positive sequence (exp of the log-slope).
double fitted_geometric_rate(const std::vector<double>& values);

/// Critical arguments of the circle restriction (phases where the derivative
/// of arg B(e^{2 pi i x}) vanishes), with multiplicity order (2 for critical
/// points the restriction touches, 1 for transversal sign changes).
struct CriticalArg {
    double arg = 0.0;  ///< phase in [0,1)
    int order = 1;
};
std::vector<CriticalArg> critical_args_on_circle(const BlaschkeProduct& B,
                                                 std::size_t grid = std::size_t(1) << 14);

std::string to_json(const BlaschkeProduct& B);
BlaschkeProduct blaschke_from_json(const std::string& text);

void write_cells_csv(std::ostream& os, const std::vector<CellComplex>& levels);
void write_cells_svg(std::ostream& os, const CellComplex& complex);

} // namespace siegelab::blaschke
