#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "siegelab/bignum.hpp"
#include "siegelab/errors.hpp"

namespace siegelab::contfrac {

/// One convergent p_n/q_n of a continued fraction.
///
/// Index convention, used everywhere in this library:
///   (p_{-1}, q_{-1}) = (1, 0),  (p_0, q_0) = (0, 1),
///   p_n = a_n p_{n-1} + p_{n-2},  q_n = a_n q_{n-1} + q_{n-2}.
/// So q_1 = a_1 and p_1/q_1 = 1/a_1.
struct Convergent {
    BigInt p;
    BigInt q;
};

/// An irrational rotation number 0 < theta < 1 held as a continued fraction
/// [a_1, a_2, ...]: a stored prefix, an optional periodic tail, and the
/// high-precision value. Immutable after construction; safe to share across
/// threads.
class RotationNumber {
public:
    /// Gauss-map expansion of a high-precision real in (0,1) to n terms.
    /// Throws RationalInput if a remainder hits zero exactly and
    /// PrecisionExhausted if the working precision is less than 4x the bits
    /// consumed by the expansion so far.
    static RotationNumber from_value(const BigFloat& x, std::size_t n_terms);

    /// Build from explicit coefficients. With a nonempty `period` the value
    /// is exact (quadratic-irrational tail, evaluated in closed form at
    /// working precision); with an empty period the value is the finite
    /// continued fraction of the prefix.
    static RotationNumber from_coeffs(std::vector<BigInt> prefix,
                                      std::vector<BigInt> period = {});

    /// The golden mean (sqrt(5)-1)/2 = [1, 1, 1, ...].
    static RotationNumber golden();

    const std::vector<BigInt>& prefix() const { return prefix_; }
    const std::vector<BigInt>& period() const { return period_; }
    bool eventually_periodic() const { return !period_.empty(); }

    /// Number of directly stored coefficients (prefix length).
    std::size_t stored_terms() const { return prefix_.size(); }

    /// True if a_n is determined (inside the prefix, or any n when a periodic
    /// tail is present). 1-based.
    bool has_term(std::size_t n) const;

    /// a_n, 1-based. Throws InsufficientCoefficients when not determined.
    const BigInt& term(std::size_t n) const;

    /// High-precision value in (0,1).
    const BigFloat& value() const { return value_; }

    /// Convergents p_1/q_1 .. p_n/q_n.
    /// Throws InsufficientCoefficients if fewer than n terms are determined.
    std::vector<Convergent> convergents(std::size_t n) const;
    Convergent convergent(std::size_t n) const;

private:
    RotationNumber() = default;
    std::vector<BigInt> prefix_;
    std::vector<BigInt> period_;
    BigFloat value_;
};

/// Arithmetic classification of a rotation number prefix.
struct ArithClassReport {
    std::optional<BigInt> bounded_by;  ///< sup a_n over the inspected prefix
    double david_constant = 0.0;       ///< max_n log(a_n)/sqrt(n)
    double brjuno_partial = 0.0;       ///< sum_{n<=depth-1} log(q_{n+1})/q_n
    bool in_theta_c = false;           ///< david_constant <= C on the prefix
    bool within_bound = false;         ///< sup a_n <= bound
    std::size_t depth = 0;
};

/// Gauss-map expansion (convenience alias for RotationNumber::from_value).
RotationNumber expand(const BigFloat& x, std::size_t n_terms);

/// Classifies the first `depth` coefficients: David constant, boundedness,
/// and the Brjuno partial sum over the prefix.
ArithClassReport classify(const RotationNumber& r, double C, const BigInt& bound,
                          std::size_t depth);

/// theta_N: keep a_1..a_N, replace the tail with the all-ones (golden) tail.
/// The result is of bounded type with sup coefficient max(a_1..a_N, 1) and
/// its value is exact at working precision.
RotationNumber truncate_bounded(const RotationNumber& r, std::size_t N);

/// Partial Brjuno sum  sum_{n=1..N} log(q_{n+1}) / q_n.  Needs N+1 terms.
double brjuno_partial(const RotationNumber& r, std::size_t N);

/// One row per n = 1..N: n, a_n, p_n, q_n, log(a_n)/sqrt(n), Brjuno partial
/// through n. Needs N+1 terms (the Brjuno column looks one convergent ahead).
void write_csv(std::ostream& os, const RotationNumber& r, std::size_t N);

} // namespace siegelab::contfrac
