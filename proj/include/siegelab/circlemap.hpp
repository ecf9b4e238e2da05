#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "siegelab/contfrac.hpp"
#include "siegelab/errors.hpp"

namespace siegelab::circlemap {

using contfrac::RotationNumber;

/// A monotone degree-1 circle map given by its lift F: R -> R with
/// F(x+1) = F(x) + 1. Handles are immutable; evaluation is reentrant.
class CircleMapHandle {
public:
    enum class Kind { RigidRotation, BlaschkeRestriction, UserLift };

    static CircleMapHandle rigid_rotation(double alpha);

    /// Wraps a user lift. Certifies monotonicity and the degree-1 identity
    /// on a 2^14 sample grid unless `certify` is false (raw real functions,
    /// e.g. a Mobius transformation of the line, are useful test subjects
    /// for the Schwarzian estimator but are not circle lifts).
    static CircleMapHandle from_lift(std::function<double(double)> lift,
                                     std::vector<double> critical_args = {},
                                     bool certify = true);

    /// Same, tagged as the restriction of a Blaschke product.
    static CircleMapHandle blaschke_restriction(std::function<double(double)> lift,
                                                std::vector<double> critical_args);

    Kind kind() const { return kind_; }
    const std::vector<double>& critical_args() const { return critical_args_; }

    /// The lift F.
    double lift(double x) const { return lift_(x); }
    /// F iterated n >= 0 times.
    double lift_iterate(double x, long n) const;
    /// Phase map x -> F(x) mod 1 on [0,1).
    double circle(double x) const;

    /// Solves F(x) = y by bisection (robust at near-critical flat spots).
    double invert(double y, double tol = 1e-15) const;

    /// Monotonicity + periodicity certificate at the given resolution.
    /// Throws NotACircleLift on failure.
    void certify_lift(std::size_t samples = std::size_t(1) << 14) const;

private:
    CircleMapHandle(Kind kind, std::function<double(double)> lift,
                    std::vector<double> critical_args)
        : kind_(kind), lift_(std::move(lift)), critical_args_(std::move(critical_args)) {}
    Kind kind_;
    std::function<double(double)> lift_;
    std::vector<double> critical_args_;
    double rotation_alpha_ = 0.0;  // valid when kind_ == RigidRotation
};

/// Rotation number estimate from closest returns.
struct RotationEstimate {
    double value = 0.0;        ///< p/q of the deepest observed closest return
    double error_bound = 1.0;  ///< 1/(q (q + q_prev)) from the return structure
    bool converged = false;    ///< error_bound <= requested tolerance
    std::vector<std::pair<long, long>> closest_returns;  ///< (q, p) pairs
};

/// Birkhoff estimate accelerated along closest returns: iterating the phase
/// of 0 and recording successive closest returns yields the convergent
/// denominators of the rotation number; the deepest return pins the value to
/// 1/(q_n q_{n+1}). Unconverged results are flagged but still returned.
RotationEstimate rotation_number(const CircleMapHandle& m, long iters, double tol);

/// Backward orbit x_0 = 0 (the phase of the point 1), x_{i+1} = F^{-1}(x_i),
/// so that the i-th entry satisfies B^i(x_i) = 1. Phases in [0,1).
std::vector<double> backward_orbit(const CircleMapHandle& m, std::size_t count);

/// Max residual |B^i(x_i) - 1| (as cyclic phase distance) over the orbit.
double backward_orbit_residual(const CircleMapHandle& m, const std::vector<double>& orbit);

/// One interval of a dynamical partition. `family` is 0 for the q_{n+1}
/// intervals mapped onto I_n and 1 for the q_n intervals mapped onto
/// I_{n+1}; `index` is the iterate count i with B^i(interval) = I_family.
struct PartitionInterval {
    double lo = 0.0;   ///< left endpoint phase in [0,1)
    double len = 0.0;
    int family = 0;
    long index = 0;
    long lo_point_index = 0;  ///< backward-orbit index of the left endpoint
};

/// Level-n interval system: the backward points x_0..x_{q_n + q_{n+1} - 1}
/// cut the circle into q_{n+1} intervals of level n and q_n of level n+1.
struct DynamicalPartition {
    int level = 0;
    long q_n = 0, q_n1 = 0;
    std::vector<double> backward_points;        ///< by backward index
    std::vector<PartitionInterval> intervals;   ///< sorted by lo
    double total_length() const;
};

/// Builds the level-n partition, checking the rotation number against alpha
/// (RotationMismatch if the closest-return estimate disagrees beyond
/// rot_tol) and validating the adjacency combinatorics exactly.
DynamicalPartition dynamical_partition(const CircleMapHandle& m, const RotationNumber& alpha,
                                       int level, double rot_tol = 1e-9);

/// Max ratio of lengths of adjacent intervals (the real-bounds observable).
double commensurability_report(const DynamicalPartition& p);

/// Cross-ratio [a,b,c,d] = (b-a)/(c-a) * (d-c)/(d-b) for a<b<c<d<a+1 in lift
/// coordinates. Throws DegenerateQuadruple on coincident points.
double cross_ratio(double a, double b, double c, double d);

/// Cross-ratio distortion of the quadruple under F^power.
double distortion(double a, double b, double c, double d, const CircleMapHandle& m,
                  long power);

/// Least-squares fit of log|I_k| = c - e * log(min(k, m-k+1)) over the
/// pieces an interval of `pn` is cut into by the endpoints of `pnext`.
/// exponent == 2 is the saddle-node signature.
struct SaddleNodeFit {
    double exponent = 0.0;
    double residual_rms = 0.0;
    std::vector<double> lengths;
};
SaddleNodeFit saddle_node_profile(const DynamicalPartition& pn,
                                  const DynamicalPartition& pnext,
                                  std::size_t interval_index);

/// Fits the synthetic profile directly from a piece-length list (the oracle
/// path used to validate the partition-driven overload).
SaddleNodeFit fit_saddle_lengths(const std::vector<double>& lengths);

/// Schwarzian derivative S = F'''/F' - (3/2)(F''/F')^2 by central
/// differences, Richardson-extrapolated over h and h/2. Refuses near
/// critical points (F' < 1e-6) rather than regularizing.
double schwarzian(const std::function<double(double)>& F, double x, double h);
double schwarzian(const CircleMapHandle& m, double x, double h);

/// CSV rows: family, index, lo, length, adjacency ratio to the next interval.
void write_csv(std::ostream& os, const DynamicalPartition& p);

} // namespace siegelab::circlemap
