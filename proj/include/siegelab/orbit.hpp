#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "siegelab/polyfam.hpp"

namespace siegelab::orbit {

using Complex = std::complex<double>;
using contfrac::RotationNumber;
using polyfam::CriticalSpec;
using polyfam::SiegelPolynomial;

/// Forward orbit of the marked critical point 1.
struct OrbitTrace {
    std::vector<Complex> points;          ///< f^0(1) .. f^n(1)
    std::optional<std::size_t> escaped_at;  ///< first index with |f^k(1)| > radius
    double escape_radius = 0.0;
};

/// Root-bound style default escape radius 2 (1 + sum |a_i| / |a_d|)^{1/(d-1)}.
double default_escape_radius(const SiegelPolynomial& f);

/// Iterates the critical orbit; records the escape index, if any.
/// Throws NonFinite on overflow/NaN mid-orbit.
OrbitTrace iterate(const SiegelPolynomial& f, std::size_t n, double escape_radius);

/// Shared forward trace: sigma, tables and curves all read from one orbit,
/// grown on demand. Immutable map, growing cache.
class OrbitCache {
public:
    OrbitCache(SiegelPolynomial f, double escape_radius);
    explicit OrbitCache(SiegelPolynomial f);

    const SiegelPolynomial& map() const { return f_; }

    /// f^k(1). Throws IndexBeyondEscape if the orbit escaped before k.
    Complex point(std::size_t k);

    /// Oscillation sigma_{k,m} = f^k(1) - f^m(1), k > m >= 0.
    Complex sigma(std::size_t k, std::size_t m);

    /// True if the orbit stays within the escape radius through index k.
    bool bounded_through(std::size_t k);

    const OrbitTrace& trace() const { return trace_; }

private:
    void ensure(std::size_t k);
    SiegelPolynomial f_;
    OrbitTrace trace_;
};

/// Phases frac(k * theta) for k = 0..count-1, computed at working precision
/// and rounded to double once per index.
std::vector<double> rotation_phases(const RotationNumber& theta, std::size_t count);

/// Binned min/max of |sigma_{k,m}| over all pairs k > m <= K, binned by the
/// phase distance |e^{2 pi i (k-m) theta} - 1|.
struct OscBin {
    double lo = 0.0, hi = 0.0;       ///< bin covers (lo, hi]
    double min_abs = 0.0, max_abs = 0.0;
    std::size_t count = 0;
};
struct OscillationTable {
    std::vector<OscBin> bins;  ///< partition of (0, 2]: underflow bin + log bins
    std::size_t max_index = 0;
};

/// Default bin layout: `bins` logarithmic bins over (1e-4, 2], plus one
/// underflow bin (0, 1e-4] so the table partitions (0, 2].
OscillationTable oscillation_table(OrbitCache& cache, const RotationNumber& theta,
                                   std::size_t K, std::size_t bins = 32);

/// Orbit samples sorted by their rotation phase k*theta mod 1.
struct BoundaryCurve {
    struct Sample {
        double phase;    ///< k*theta mod 1
        Complex point;   ///< f^k(1)
        std::size_t k;
    };
    std::vector<Sample> samples;   ///< sorted by phase
    std::size_t source_orbit_length = 0;
    double max_phase_gap = 0.0;    ///< largest cyclic gap between phases
};

BoundaryCurve boundary_curve(OrbitCache& cache, const RotationNumber& theta, std::size_t n);

/// Numerical injectivity certificate: the minimum Euclidean distance over
/// sample pairs whose cyclic phase distance exceeds `phase_margin`
/// (phases measured mod 1). Positive means no phase-separated collision.
double jordan_proxy(const BoundaryCurve& curve, double phase_margin);

/// Symmetric Hausdorff distance between point sets. Throws EmptySet.
double hausdorff(const std::vector<Complex>& A, const std::vector<Complex>& B);

/// theta_N perturbation study: same critical data, truncated rotation
/// numbers; boundary curves, oscillation tables, pairwise Hausdorff matrix.
struct PerturbationReport {
    std::vector<std::size_t> N_list;
    std::vector<RotationNumber> thetas;
    std::vector<BoundaryCurve> curves;
    std::vector<OscillationTable> tables;
    std::vector<std::vector<double>> hausdorff_matrix;  ///< [i][j]
};

PerturbationReport perturbation_experiment(const RotationNumber& theta,
                                           const CriticalSpec& spec,
                                           const std::vector<std::size_t>& N_list,
                                           std::size_t orbit_length = 5000,
                                           std::size_t osc_K = 2000,
                                           std::size_t osc_bins = 32);

void write_csv(std::ostream& os, const OscillationTable& table);
void write_svg(std::ostream& os, const BoundaryCurve& curve);

} // namespace siegelab::orbit
