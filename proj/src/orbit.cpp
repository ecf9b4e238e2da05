#include "siegelab/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "siegelab/csv.hpp"
#include "siegelab/parallel.hpp"
#include "siegelab/svg.hpp"

namespace siegelab::orbit {

double default_escape_radius(const SiegelPolynomial& f) {
    const auto& a = f.coefficients();
    const double lead = std::abs(a.back());
    double s = 0.0;
    for (const auto& c : a) s += std::abs(c);
    return 2.0 * std::pow(1.0 + s / lead, 1.0 / static_cast<double>(f.degree() - 1));
}

OrbitTrace iterate(const SiegelPolynomial& f, std::size_t n, double escape_radius) {
    OrbitTrace t;
    t.escape_radius = escape_radius;
    t.points.reserve(n + 1);
    Complex z = 1.0;
    t.points.push_back(z);
    for (std::size_t k = 1; k <= n; ++k) {
        z = f.eval(z);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw NonFinite("orbit became non-finite at index " + std::to_string(k));
        t.points.push_back(z);
        if (std::abs(z) > escape_radius) {
            t.escaped_at = k;
            break;
        }
    }
    return t;
}

OrbitCache::OrbitCache(SiegelPolynomial f, double escape_radius) : f_(std::move(f)) {
    trace_ = iterate(f_, 1, escape_radius);
}

OrbitCache::OrbitCache(SiegelPolynomial f) : f_(std::move(f)) {
    trace_ = iterate(f_, 1, default_escape_radius(f_));
}

void OrbitCache::ensure(std::size_t k) {
    if (trace_.escaped_at) return;
    while (trace_.points.size() <= k) {
        Complex z = f_.eval(trace_.points.back());
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw NonFinite("orbit became non-finite at index " +
                            std::to_string(trace_.points.size()));
        trace_.points.push_back(z);
        if (std::abs(z) > trace_.escape_radius) {
            trace_.escaped_at = trace_.points.size() - 1;
            return;
        }
    }
}

Complex OrbitCache::point(std::size_t k) {
    ensure(k);
    if (trace_.escaped_at && k > *trace_.escaped_at)
        throw IndexBeyondEscape("orbit escaped at index " +
                                std::to_string(*trace_.escaped_at));
    return trace_.points[k];
}

Complex OrbitCache::sigma(std::size_t k, std::size_t m) {
    if (k <= m) throw IndexOutOfRange("sigma requires k > m >= 0");
    const Complex pk = point(k);
    const Complex pm = point(m);
    return pk - pm;
}

bool OrbitCache::bounded_through(std::size_t k) {
    ensure(k);
    return !trace_.escaped_at || *trace_.escaped_at > k;
}

std::vector<double> rotation_phases(const RotationNumber& theta, std::size_t count) {
    std::vector<double> out(count);
    BigFloat phase = 0;
    const BigFloat& th = theta.value();
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = static_cast<double>(phase);
        phase += th;
        if (phase >= 1) phase -= 1;
    }
    return out;
}

OscillationTable oscillation_table(OrbitCache& cache, const RotationNumber& theta,
                                   std::size_t K, std::size_t bins) {
    if (!cache.bounded_through(K))
        throw EscapedOrbit("oscillation_table: orbit escapes before index K");
    OscillationTable table;
    table.max_index = K;

    // Bin edges: an underflow bin (0, lo] then `bins` logarithmic bins over
    // (lo, 2]; min/max phase distances concentrate near zero.
    const double lo = 1e-4, hi = 2.0;
    std::vector<double> edges;
    edges.push_back(0.0);
    for (std::size_t i = 0; i <= bins; ++i)
        edges.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / bins));
    edges.back() = hi;
    table.bins.resize(edges.size() - 1);
    for (std::size_t b = 0; b < table.bins.size(); ++b) {
        table.bins[b].lo = edges[b];
        table.bins[b].hi = edges[b + 1];
        table.bins[b].min_abs = std::numeric_limits<double>::infinity();
        table.bins[b].max_abs = 0.0;
    }

    // The phase distance depends only on j = k - m, so precompute
    // |e^{2 pi i j theta} - 1| = 2 sin(pi frac(j theta)) at high precision.
    const auto phases = rotation_phases(theta, K + 1);
    std::vector<std::size_t> bin_of(K + 1, 0);
    for (std::size_t j = 1; j <= K; ++j) {
        const double dist = 2.0 * std::sin(M_PI * phases[j]);
        const auto it = std::lower_bound(edges.begin() + 1, edges.end(), dist);
        bin_of[j] = static_cast<std::size_t>(it - edges.begin()) - 1;
    }

    const auto& pts = cache.trace().points;
    for (std::size_t k = 1; k <= K; ++k) {
        for (std::size_t m = 0; m < k; ++m) {
            OscBin& b = table.bins[bin_of[k - m]];
            const double v = std::abs(pts[k] - pts[m]);
            b.min_abs = std::min(b.min_abs, v);
            b.max_abs = std::max(b.max_abs, v);
            ++b.count;
        }
    }
    for (OscBin& b : table.bins)
        if (b.count == 0) b.min_abs = b.max_abs = 0.0;
    return table;
}

BoundaryCurve boundary_curve(OrbitCache& cache, const RotationNumber& theta, std::size_t n) {
    if (n == 0) throw IndexOutOfRange("boundary_curve: need n >= 1");
    if (!cache.bounded_through(n - 1))
        throw EscapedOrbit("boundary_curve: orbit escapes before index n");
    BoundaryCurve curve;
    curve.source_orbit_length = n;
    const auto phases = rotation_phases(theta, n);
    curve.samples.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        curve.samples[k] = {phases[k], cache.point(k), k};
    std::sort(curve.samples.begin(), curve.samples.end(),
              [](const auto& a, const auto& b) { return a.phase < b.phase; });
    double gap = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        gap = std::max(gap, curve.samples[i + 1].phase - curve.samples[i].phase);
    gap = std::max(gap, 1.0 - curve.samples.back().phase + curve.samples.front().phase);
    curve.max_phase_gap = gap;
    return curve;
}

double jordan_proxy(const BoundaryCurve& curve, double phase_margin) {
    const auto& s = curve.samples;
    if (s.size() < 4) throw IndexOutOfRange("jordan_proxy: need at least 4 samples");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const double d = s[j].phase - s[i].phase;  // samples sorted by phase
            const double circ = std::min(d, 1.0 - d);
            if (circ <= phase_margin) continue;
            best = std::min(best, std::abs(s[j].point - s[i].point));
        }
    }
    return std::isfinite(best) ? best : 0.0;
}

double hausdorff(const std::vector<Complex>& A, const std::vector<Complex>& B) {
    if (A.empty() || B.empty()) throw EmptySet("hausdorff: empty point set");
    auto one_sided = [](const std::vector<Complex>& from, const std::vector<Complex>& to) {
        double worst = 0.0;
        for (const Complex& a : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Complex& b : to) {
                const double dx = a.real() - b.real(), dy = a.imag() - b.imag();
                best = std::min(best, dx * dx + dy * dy);
                if (best == 0.0) break;
            }
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    return std::max(one_sided(A, B), one_sided(B, A));
}

PerturbationReport perturbation_experiment(const RotationNumber& theta,
                                           const CriticalSpec& spec,
                                           const std::vector<std::size_t>& N_list,
                                           std::size_t orbit_length, std::size_t osc_K,
                                           std::size_t osc_bins) {
    PerturbationReport rep;
    rep.N_list = N_list;
    rep.thetas.reserve(N_list.size());
    for (std::size_t N : N_list)
        rep.thetas.push_back(contfrac::truncate_bounded(theta, N));

    rep.curves.resize(N_list.size());
    rep.tables.resize(N_list.size());
    std::vector<std::string> failures(N_list.size());
    parallel_for(N_list.size(), [&](std::size_t i) {
        try {
            CriticalSpec s{rep.thetas[i], spec.points};
            OrbitCache cache(polyfam::from_critical_points(s));
            rep.curves[i] = boundary_curve(cache, rep.thetas[i], orbit_length);
            rep.tables[i] = oscillation_table(cache, rep.thetas[i], osc_K, osc_bins);
        } catch (const Error& e) {
            failures[i] = e.what();
        }
    });
    for (const auto& msg : failures)
        if (!msg.empty()) throw Error("perturbation_experiment: " + msg);

    const std::size_t n = N_list.size();
    rep.hausdorff_matrix.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Complex> Ai;
        Ai.reserve(rep.curves[i].samples.size());
        for (const auto& s : rep.curves[i].samples) Ai.push_back(s.point);
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Complex> Bj;
            Bj.reserve(rep.curves[j].samples.size());
            for (const auto& s : rep.curves[j].samples) Bj.push_back(s.point);
            rep.hausdorff_matrix[i][j] = rep.hausdorff_matrix[j][i] = hausdorff(Ai, Bj);
        }
    }
    return rep;
}

void write_csv(std::ostream& os, const OscillationTable& table) {
    csv::Writer w(os, {"bin_lo", "bin_hi", "min_sigma", "max_sigma", "count"});
    for (const auto& b : table.bins)
        w.row().field(b.lo).field(b.hi).field(b.min_abs).field(b.max_abs).field(b.count);
}

void write_svg(std::ostream& os, const BoundaryCurve& curve) {
    double r = 1.0;
    for (const auto& s : curve.samples) r = std::max(r, std::abs(s.point));
    r *= 1.1;
    svg::Scene scene(-r, -r, r, r);
    std::vector<Complex> pts;
    pts.reserve(curve.samples.size());
    for (const auto& s : curve.samples) pts.push_back(s.point);
    scene.polyline(pts, "#203080", 0.6, true);
    // Phase-colored markers every few samples.
    const std::size_t step = std::max<std::size_t>(1, curve.samples.size() / 512);
    for (std::size_t i = 0; i < curve.samples.size(); i += step)
        scene.dot(curve.samples[i].point, 1.5, svg::Scene::heat_color(curve.samples[i].phase));
    scene.write(os);
}

} // namespace siegelab::orbit
