#include "siegelab/circlemap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "siegelab/csv.hpp"

namespace siegelab::circlemap {

namespace {

double frac(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f -= 1.0;
    return f;
}

// Cyclic distance between phases in [0,1).
double phase_dist(double a, double b) {
    const double d = std::abs(a - b);
    return std::min(d, 1.0 - d);
}

long checked_long(const BigInt& v, const char* what) {
    if (v > BigInt(std::numeric_limits<long>::max() / 4))
        throw Error(std::string(what) + ": convergent denominator too large");
    return static_cast<long>(v);
}

} // namespace

CircleMapHandle CircleMapHandle::rigid_rotation(double alpha) {
    CircleMapHandle h(Kind::RigidRotation, [alpha](double x) { return x + alpha; }, {});
    h.rotation_alpha_ = alpha;
    return h;
}

CircleMapHandle CircleMapHandle::from_lift(std::function<double(double)> lift,
                                           std::vector<double> critical_args, bool certify) {
    CircleMapHandle h(Kind::UserLift, std::move(lift), std::move(critical_args));
    if (certify) h.certify_lift();
    return h;
}

CircleMapHandle CircleMapHandle::blaschke_restriction(std::function<double(double)> lift,
                                                      std::vector<double> critical_args) {
    CircleMapHandle h(Kind::BlaschkeRestriction, std::move(lift), std::move(critical_args));
    h.certify_lift();
    return h;
}

double CircleMapHandle::lift_iterate(double x, long n) const {
    for (long i = 0; i < n; ++i) x = lift_(x);
    return x;
}

double CircleMapHandle::circle(double x) const { return frac(lift_(x)); }

double CircleMapHandle::invert(double y, double tol) const {
    // F is increasing with F(x+1) = F(x)+1, so F(y-2) < y < F(y+2) brackets.
    double lo = y - 2.0, hi = y + 2.0;
    if (lift_(lo) > y || lift_(hi) < y)
        throw InverseBisectionFailed("invert: bracket failed (not a degree-1 lift?)");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // hit double resolution
        if (lift_(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

void CircleMapHandle::certify_lift(std::size_t samples) const {
    double prev = lift_(0.0);
    const double wrap = lift_(1.0);
    if (std::abs(wrap - prev - 1.0) > 1e-9)
        throw NotACircleLift("lift violates F(x+1) = F(x) + 1");
    for (std::size_t i = 1; i <= samples; ++i) {
        const double x = static_cast<double>(i) / samples;
        const double v = lift_(x);
        if (v < prev - 1e-12)
            throw NotACircleLift("lift is not monotone at x = " + std::to_string(x));
        prev = v;
    }
}

RotationEstimate rotation_number(const CircleMapHandle& m, long iters, double tol) {
    RotationEstimate est;
    // Track the phase and the accumulated integer displacement separately so
    // roundoff stays at the phase scale for arbitrarily long orbits.
    double phase = 0.0;
    long p_accum = 0;
    double best = 2.0;
    long q_prev = 0;
    for (long n = 1; n <= iters; ++n) {
        const double lifted = m.lift(phase);
        const double fl = std::floor(lifted);
        p_accum += static_cast<long>(fl);
        phase = lifted - fl;
        if (phase >= 1.0) {  // guard against floor rounding at the seam
            phase -= 1.0;
            ++p_accum;
        }
        const double d = std::min(phase, 1.0 - phase);
        if (d < best) {
            best = d;
            const long p = p_accum + (phase > 0.5 ? 1 : 0);
            if (!est.closest_returns.empty()) q_prev = est.closest_returns.back().first;
            est.closest_returns.emplace_back(n, p);
            if (d == 0.0) {  // exact (rational) return
                est.value = static_cast<double>(p) / static_cast<double>(n);
                est.error_bound = 0.0;
                est.converged = true;
                return est;
            }
            const double q = static_cast<double>(n);
            est.value = static_cast<double>(p) / q;
            est.error_bound = 1.0 / (q * (q + static_cast<double>(q_prev)));
            if (est.error_bound <= tol) {
                est.converged = true;
                return est;
            }
        }
    }
    est.converged = est.error_bound <= tol;
    return est;
}

std::vector<double> backward_orbit(const CircleMapHandle& m, std::size_t count) {
    std::vector<double> x(count);
    if (count == 0) return x;
    x[0] = 0.0;  // phase of the point 1
    for (std::size_t i = 1; i < count; ++i) x[i] = frac(m.invert(x[i - 1]));
    return x;
}

double backward_orbit_residual(const CircleMapHandle& m, const std::vector<double>& orbit) {
    double worst = 0.0;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        const double fwd = frac(m.lift_iterate(orbit[i], static_cast<long>(i)));
        worst = std::max(worst, phase_dist(fwd, 0.0));
    }
    return worst;
}

double DynamicalPartition::total_length() const {
    double s = 0.0;
    for (const auto& iv : intervals) s += iv.len;
    return s;
}

DynamicalPartition dynamical_partition(const CircleMapHandle& m, const RotationNumber& alpha,
                                       int level, double rot_tol) {
    if (level < 1) throw Error("dynamical_partition: level must be >= 1");
    const auto conv = alpha.convergents(static_cast<std::size_t>(level) + 1);
    const long q_n = checked_long(conv[level - 1].q, "dynamical_partition");
    const long q_n1 = checked_long(conv[level].q, "dynamical_partition");

    // The handle must actually rotate by alpha before the interval
    // combinatorics below can hold.
    const long need = 4 * (q_n + q_n1);
    const auto rot = rotation_number(m, std::max<long>(need, 1024),
                                     std::min(rot_tol, 0.25 / (double(q_n1) * double(q_n1))));
    const double alpha_d = static_cast<double>(alpha.value());
    if (std::abs(rot.value - alpha_d) > rot_tol + rot.error_bound)
        throw RotationMismatch("dynamical_partition: map rotation number " +
                               std::to_string(rot.value) + " does not match alpha");

    DynamicalPartition part;
    part.level = level;
    part.q_n = q_n;
    part.q_n1 = q_n1;
    part.backward_points = backward_orbit(m, static_cast<std::size_t>(q_n + q_n1));

    // Sort points, then read the gap structure: each gap joins indices that
    // differ by exactly q_n (a level-n interval) or q_{n+1} (level n+1).
    const std::size_t count = part.backward_points.size();
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return part.backward_points[a] < part.backward_points[b];
    });

    part.intervals.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        const std::size_t ia = order[s];
        const std::size_t ib = order[(s + 1) % count];
        const double lo = part.backward_points[ia];
        double len = part.backward_points[ib] - lo;
        if (s + 1 == count) len += 1.0;
        const long diff = std::labs(static_cast<long>(ia) - static_cast<long>(ib));
        PartitionInterval iv;
        iv.lo = lo;
        iv.len = len;
        iv.lo_point_index = static_cast<long>(ia);
        if (diff == q_n) {
            iv.family = 0;
            iv.index = static_cast<long>(std::min(ia, ib));
        } else if (diff == q_n1) {
            iv.family = 1;
            iv.index = static_cast<long>(std::min(ia, ib));
        } else {
            throw RotationMismatch(
                "dynamical_partition: adjacency combinatorics failed (gap joins "
                "indices " + std::to_string(ia) + " and " + std::to_string(ib) + ")");
        }
        part.intervals.push_back(iv);
    }

    // Family counts are forced: q_{n+1} level-n intervals, q_n level-(n+1).
    long n_family0 = 0, n_family1 = 0;
    for (const auto& iv : part.intervals) (iv.family == 0 ? n_family0 : n_family1)++;
    if (n_family0 != q_n1 || n_family1 != q_n)
        throw RotationMismatch("dynamical_partition: family counts are off");
    return part;
}

double commensurability_report(const DynamicalPartition& p) {
    const auto& iv = p.intervals;
    if (iv.size() < 2) return 1.0;
    double worst = 1.0;
    for (std::size_t i = 0; i < iv.size(); ++i) {
        const double a = iv[i].len;
        const double b = iv[(i + 1) % iv.size()].len;
        worst = std::max(worst, std::max(a / b, b / a));
    }
    return worst;
}

double cross_ratio(double a, double b, double c, double d) {
    if (!(a < b && b < c && c < d && d < a + 1.0))
        throw DegenerateQuadruple("cross_ratio: need a < b < c < d < a + 1");
    return (b - a) / (c - a) * (d - c) / (d - b);
}

double distortion(double a, double b, double c, double d, const CircleMapHandle& m,
                  long power) {
    const double src = cross_ratio(a, b, c, d);
    const double fa = m.lift_iterate(a, power);
    const double fb = m.lift_iterate(b, power);
    const double fc = m.lift_iterate(c, power);
    const double fd = m.lift_iterate(d, power);
    return cross_ratio(fa, fb, fc, fd) / src;
}

SaddleNodeFit fit_saddle_lengths(const std::vector<double>& lengths) {
    const std::size_t m = lengths.size();
    if (m < 4) throw TooFewSubintervals("saddle fit: need at least 4 pieces");
    // Regress log L_k on t_k = log min(k, m-k+1); the exponent is -slope.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 1; k <= m; ++k) {
        const double t = std::log(static_cast<double>(std::min(k, m - k + 1)));
        const double y = std::log(lengths[k - 1]);
        sx += t;
        sy += y;
        sxx += t * t;
        sxy += t * y;
    }
    const double n = static_cast<double>(m);
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-30)
        throw TooFewSubintervals("saddle fit: degenerate predictor (m too small)");
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    double rss = 0.0;
    for (std::size_t k = 1; k <= m; ++k) {
        const double t = std::log(static_cast<double>(std::min(k, m - k + 1)));
        const double r = std::log(lengths[k - 1]) - (intercept + slope * t);
        rss += r * r;
    }
    SaddleNodeFit fit;
    fit.exponent = -slope;
    fit.residual_rms = std::sqrt(rss / n);
    fit.lengths = lengths;
    return fit;
}

SaddleNodeFit saddle_node_profile(const DynamicalPartition& pn,
                                  const DynamicalPartition& pnext,
                                  std::size_t interval_index) {
    if (interval_index >= pn.intervals.size())
        throw IndexOutOfRange("saddle_node_profile: interval index out of range");
    const PartitionInterval& iv = pn.intervals[interval_index];

    // Collect refinement endpoints strictly inside the interval.
    std::vector<double> cuts;
    for (double p : pnext.backward_points) {
        double rel = p - iv.lo;
        if (rel < 0) rel += 1.0;
        if (rel > 1e-13 && rel < iv.len - 1e-13) cuts.push_back(rel);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> lengths;
    lengths.reserve(cuts.size() + 1);
    double prev = 0.0;
    for (double c : cuts) {
        lengths.push_back(c - prev);
        prev = c;
    }
    lengths.push_back(iv.len - prev);
    if (lengths.size() < 4)
        throw TooFewSubintervals("saddle_node_profile: interval splits into fewer than 4 pieces");
    return fit_saddle_lengths(lengths);
}

namespace {

double schwarzian_once(const std::function<double(double)>& F, double x, double h) {
    const double f2 = F(x + 2 * h), f1 = F(x + h), fm1 = F(x - h), fm2 = F(x - 2 * h);
    const double f0 = F(x);
    const double d1 = (f1 - fm1) / (2 * h);
    if (std::abs(d1) < 1e-6)
        throw DerivativeVanishes("schwarzian: F' below threshold near a critical point");
    const double d2 = (f1 - 2 * f0 + fm1) / (h * h);
    const double d3 = (f2 - 2 * f1 + 2 * fm1 - fm2) / (2 * h * h * h);
    const double ratio = d2 / d1;
    return d3 / d1 - 1.5 * ratio * ratio;
}

} // namespace

double schwarzian(const std::function<double(double)>& F, double x, double h) {
    // Both stencils are O(h^2); one Richardson step cancels the leading term.
    const double s_h = schwarzian_once(F, x, h);
    const double s_h2 = schwarzian_once(F, x, h / 2);
    return (4.0 * s_h2 - s_h) / 3.0;
}

double schwarzian(const CircleMapHandle& m, double x, double h) {
    return schwarzian([&m](double t) { return m.lift(t); }, x, h);
}

void write_csv(std::ostream& os, const DynamicalPartition& p) {
    csv::Writer w(os, {"family", "index", "lo", "length", "adjacent_ratio"});
    const auto& iv = p.intervals;
    for (std::size_t i = 0; i < iv.size(); ++i) {
        const double a = iv[i].len;
        const double b = iv[(i + 1) % iv.size()].len;
        w.row()
            .field(static_cast<long>(iv[i].family == 0 ? p.level : p.level + 1))
            .field(iv[i].index)
            .field(iv[i].lo)
            .field(iv[i].len)
            .field(std::max(a / b, b / a));
    }
}

} // namespace siegelab::circlemap
