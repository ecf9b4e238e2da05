#include "siegelab/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "siegelab/csv.hpp"
#include "siegelab/orbit.hpp"
#include "siegelab/svg.hpp"

namespace siegelab::blaschke {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double frac(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f -= 1.0;
    return f;
}

double phase_dist(double a, double b) {
    const double d = std::abs(frac(a) - frac(b));
    return std::min(d, 1.0 - d);
}

Complex unit(double phase) { return {std::cos(kTwoPi * phase), std::sin(kTwoPi * phase)}; }

} // namespace

BlaschkeProduct::BlaschkeProduct(double lambda_phase, std::vector<Complex> zeros)
    : lambda_phase_(frac(lambda_phase)), zeros_(std::move(zeros)) {
    poles_.reserve(zeros_.size());
    for (const Complex& z : zeros_) {
        if (std::abs(z) <= 1.0)
            throw Error("BlaschkeProduct: zeros must lie outside the closed unit disk");
        poles_.push_back(1.0 / std::conj(z));
    }
}

Complex BlaschkeProduct::lambda() const { return unit(lambda_phase_); }

Complex BlaschkeProduct::eval(Complex z) const {
    Complex acc = lambda();
    for (int i = 0; i < d(); ++i) acc *= z;
    for (std::size_t i = 0; i < zeros_.size(); ++i)
        acc *= (1.0 - z / zeros_[i]) / (z - poles_[i]);
    return acc;
}

double BlaschkeProduct::lift(double x) const {
    // Each factor contributes -Arg(1 - a e^{-2 pi i x})/pi; the principal
    // branch is the continuous one since |a| < 1 keeps the real part positive.
    double s = 0.0;
    const Complex e = unit(-x);
    for (const Complex& a : poles_) s += std::arg(1.0 - a * e);
    return lambda_phase_ + x - s / M_PI;
}

double BlaschkeProduct::lift_derivative(double x) const {
    double s = 0.0;
    const Complex e = unit(-x);
    for (const Complex& a : poles_) {
        const Complex w = a * e;
        s += (w / (1.0 - w)).real();
    }
    return 1.0 - 2.0 * s;
}

double BlaschkeProduct::lift_second(double x) const {
    double s = 0.0;
    const Complex e = unit(-x);
    for (const Complex& a : poles_) {
        const Complex w = a * e;
        const Complex den = (1.0 - w) * (1.0 - w);
        s += (w / den).imag();
    }
    return -2.0 * kTwoPi * s;
}

CircleMapHandle BlaschkeProduct::circle_map() const {
    std::vector<double> crit;
    for (const auto& c : critical_args_on_circle(*this)) crit.push_back(c.arg);
    BlaschkeProduct copy = *this;
    return CircleMapHandle::blaschke_restriction(
        [copy](double x) { return copy.lift(x); }, std::move(crit));
}

BlaschkeProduct BlaschkeProduct::rotated(double dt) const {
    return BlaschkeProduct(lambda_phase_ + dt, zeros_);
}

BlaschkeProduct build_dg(double t) { return BlaschkeProduct(t, {Complex(3.0, 0.0)}); }

namespace {

circlemap::RotationEstimate rho_estimate(const BlaschkeProduct& B, double tol, long iters_cap) {
    BlaschkeProduct copy = B;
    // Skip the homeomorphism certificate here: tuning probes the family at
    // parameters where the restriction is already monotone by construction.
    auto handle = CircleMapHandle::from_lift([copy](double x) { return copy.lift(x); }, {}, false);
    return circlemap::rotation_number(handle, iters_cap, tol);
}

long iter_budget(double tol) {
    const double suggested = 64.0 / std::sqrt(std::max(tol, 1e-14));
    return static_cast<long>(std::min(suggested, 8.0e6));
}

} // namespace

TuneResult tune_rotation(const BlaschkeProduct& base, const RotationNumber& target,
                         double tol, int sweep_points) {
    const double alpha = static_cast<double>(target.value());

    // Coarse sweep: monotonicity certificate and initial bracket.
    const double coarse_tol = 1e-5;
    std::vector<double> est(sweep_points), err(sweep_points);
    for (int i = 0; i < sweep_points; ++i) {
        const double t = static_cast<double>(i) / sweep_points;
        const auto r = rho_estimate(base.rotated(t), coarse_tol, iter_budget(coarse_tol));
        est[i] = r.value;
        err[i] = std::max(r.error_bound, coarse_tol);
    }
    for (int i = 0; i + 1 < sweep_points; ++i)
        if (est[i + 1] < est[i] - (err[i] + err[i + 1]))
            throw NotMonotone("tune_rotation: rotation number decreased across the sweep");

    // Plateau detection: several sweep samples already sitting on the target
    // signal a mode-locked (rational) value.
    int plateau_lo = -1, plateau_hi = -1;
    for (int i = 0; i < sweep_points; ++i) {
        if (std::abs(est[i] - alpha) <= err[i]) {
            if (plateau_lo < 0) plateau_lo = i;
            plateau_hi = i;
        }
    }
    const bool plateau = plateau_hi > plateau_lo && plateau_lo >= 0;

    double lo = 0.0, hi = 1.0;
    for (int i = 0; i + 1 < sweep_points; ++i) {
        if (est[i] < alpha - err[i]) lo = static_cast<double>(i) / sweep_points;
        if (est[sweep_points - 1 - i] > alpha + err[sweep_points - 1 - i])
            hi = static_cast<double>(sweep_points - 1 - i) / sweep_points;
    }
    if (plateau) {
        // Bisect the left edge of the plateau and report it.
        double in_plateau = static_cast<double>(plateau_lo) / sweep_points;
        TuneResult res;
        res.plateau = true;
        const double eval_tol = std::max(tol / 4, 1e-13);
        for (int k = 0; k < 60 && in_plateau - lo > tol; ++k) {
            const double mid = 0.5 * (lo + in_plateau);
            const auto r = rho_estimate(base.rotated(mid), eval_tol, iter_budget(eval_tol));
            ++res.bisections;
            if (std::abs(r.value - alpha) <= r.error_bound + eval_tol)
                in_plateau = mid;
            else
                lo = mid;
        }
        res.t = in_plateau;
        const auto r = rho_estimate(base.rotated(res.t), tol / 4, iter_budget(tol / 4));
        res.rho = r.value;
        res.rho_error = r.error_bound;
        res.bracket_width = in_plateau - lo;
        return res;
    }

    TuneResult res;
    const double eval_tol = std::max(tol / 4, 1e-13);
    const long cap = iter_budget(eval_tol);
    double mid = 0.5 * (lo + hi);
    for (int k = 0; k < 64; ++k) {
        if (hi - lo < 1e-15) throw BracketExhausted("tune_rotation: bracket exhausted");
        mid = 0.5 * (lo + hi);
        const auto r = rho_estimate(base.rotated(mid), eval_tol, cap);
        ++res.bisections;
        res.rho = r.value;
        res.rho_error = r.error_bound;
        if (std::abs(r.value - alpha) <= r.error_bound) {
            // Cannot resolve a side; the value is within the estimator bound.
            if (r.error_bound <= tol) break;
        }
        if (r.value < alpha)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= tol && std::abs(res.rho - alpha) <= tol) break;
    }
    res.t = mid;
    res.bracket_width = hi - lo;
    return res;
}

SampledCircleMap SampledCircleMap::from_pairs(std::vector<std::pair<double, double>> nodes) {
    if (nodes.size() < 2) throw NotMonotone("SampledCircleMap: need at least 2 nodes");
    std::sort(nodes.begin(), nodes.end());
    SampledCircleMap m;
    m.x_.reserve(nodes.size());
    m.y_lift_.reserve(nodes.size());
    for (const auto& [x, y] : nodes) {
        m.x_.push_back(frac(x));
        m.y_lift_.push_back(frac(y));
    }
    // The image order must be a single cyclic rotation: exactly one descent.
    std::size_t wrap = 0;
    int descents = 0;
    for (std::size_t i = 0; i + 1 < m.y_lift_.size(); ++i) {
        if (m.y_lift_[i + 1] < m.y_lift_[i]) {
            ++descents;
            wrap = i + 1;
        }
    }
    if (descents > 1)
        throw NotMonotone("SampledCircleMap: image phases are not cyclically ordered");
    if (wrap > 0)
        for (std::size_t i = wrap; i < m.y_lift_.size(); ++i) m.y_lift_[i] += 1.0;
    for (std::size_t i = 0; i + 1 < m.y_lift_.size(); ++i)
        if (!(m.y_lift_[i + 1] > m.y_lift_[i]) || !(m.x_[i + 1] > m.x_[i]))
            throw NotMonotone("SampledCircleMap: nodes not strictly increasing");
    return m;
}

SampledCircleMap SampledCircleMap::identity() {
    return from_pairs({{0.0, 0.0}, {0.25, 0.25}, {0.5, 0.5}, {0.75, 0.75}});
}

double SampledCircleMap::lift(double x) const {
    const double shift = std::floor(x - x_.front());
    double x0 = x - shift;  // in [x_front, x_front + 1)
    auto it = std::upper_bound(x_.begin(), x_.end(), x0);
    double xa, xb, ya, yb;
    if (it == x_.begin() || it == x_.end()) {
        // segment from the last node back to the first (wrapped by one turn)
        xa = x_.back();
        xb = x_.front() + 1.0;
        ya = y_lift_.back();
        yb = y_lift_.front() + 1.0;
        if (it == x_.begin()) {
            xa -= 1.0;
            xb -= 1.0;
            ya -= 1.0;
            yb -= 1.0;
        }
    } else {
        const std::size_t i = static_cast<std::size_t>(it - x_.begin());
        xa = x_[i - 1];
        xb = x_[i];
        ya = y_lift_[i - 1];
        yb = y_lift_[i];
    }
    const double t = (x0 - xa) / (xb - xa);
    return ya + t * (yb - ya) + shift;
}

double SampledCircleMap::eval(double x) const { return frac(lift(x)); }

double SampledCircleMap::invert(double y) const {
    const double shift = std::floor(y - y_lift_.front());
    double y0 = y - shift;
    auto it = std::upper_bound(y_lift_.begin(), y_lift_.end(), y0);
    double xa, xb, ya, yb;
    if (it == y_lift_.begin() || it == y_lift_.end()) {
        ya = y_lift_.back();
        yb = y_lift_.front() + 1.0;
        xa = x_.back();
        xb = x_.front() + 1.0;
        if (it == y_lift_.begin()) {
            xa -= 1.0;
            xb -= 1.0;
            ya -= 1.0;
            yb -= 1.0;
        }
    } else {
        const std::size_t i = static_cast<std::size_t>(it - y_lift_.begin());
        ya = y_lift_[i - 1];
        yb = y_lift_[i];
        xa = x_[i - 1];
        xb = x_[i];
    }
    const double t = (y0 - ya) / (yb - ya);
    return frac(xa + t * (xb - xa) + shift);
}

SampledCircleMap boundary_conjugacy(const BlaschkeProduct& B, const RotationNumber& alpha,
                                    std::size_t n) {
    if (n < 4) throw OrbitTooSparse("boundary_conjugacy: need at least 4 samples");
    std::vector<std::pair<double, double>> nodes(n);
    const auto targets = orbit::rotation_phases(alpha, n);
    double x = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        nodes[k] = {x, targets[k]};
        x = frac(B.lift(x));
    }
    auto m = SampledCircleMap::from_pairs(std::move(nodes));
    double max_gap = frac(m.node_phase(0) - m.node_phase(m.size() - 1));
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        max_gap = std::max(max_gap, m.node_phase(i + 1) - m.node_phase(i));
    if (max_gap > 1.0 / std::sqrt(static_cast<double>(n)))
        throw OrbitTooSparse("boundary_conjugacy: orbit gap " + std::to_string(max_gap) +
                             " too large for n = " + std::to_string(n));
    return m;
}

namespace {

double surgery_weight(double r) { return r * r * (3.0 - 2.0 * r); }

// Angular part of H at radius r: x + w(r) * (h(x) - x), a degree-1 lift.
double blended_angle(const SurgeryModel& m, double r, double x) {
    const double w = surgery_weight(r);
    const double eta = m.h.lift(x) - x;
    return x + w * eta;
}

double invert_blended_angle(const SurgeryModel& m, double r, double psi) {
    double lo = psi - 2.0, hi = psi + 2.0;
    if (blended_angle(m, r, lo) > psi || blended_angle(m, r, hi) < psi)
        throw ExtensionInversionFailed("surgery: interior angle inversion lost its bracket");
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (blended_angle(m, r, mid) < psi)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

SurgeryModel make_surgery_model(BlaschkeProduct B, RotationNumber alpha, std::size_t samples) {
    auto h = boundary_conjugacy(B, alpha, samples);
    return SurgeryModel{std::move(B), std::move(alpha), std::move(h)};
}

Complex surgery_eval(const SurgeryModel& m, Complex z) {
    const double r = std::abs(z);
    if (r >= 1.0) return m.exterior.eval(z);
    if (r == 0.0) return z;  // the extension fixes the origin
    const double x = frac(std::arg(z) / kTwoPi);
    const double alpha = static_cast<double>(m.alpha.value());
    const double psi = blended_angle(m, r, x) + alpha;
    const double xr = invert_blended_angle(m, r, psi);
    return r * unit(frac(xr));
}

double surgery_glue_residual(const SurgeryModel& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.h.size(); ++i) {
        const double x = m.h.node_phase(i);
        const Complex exterior = m.exterior.eval(unit(x));
        const double alpha = static_cast<double>(m.alpha.value());
        const double interior_phase = m.h.invert(frac(m.h.eval(x) + alpha));
        worst = std::max(worst, std::abs(exterior - unit(interior_phase)));
    }
    return worst;
}

CellComplex yoccoz_cells(const CircleMapHandle& m, const RotationNumber& alpha, int level) {
    const auto conv = alpha.convergents(static_cast<std::size_t>(level) + 1);
    if (conv[level].q > BigInt(1000000))
        throw Error("yoccoz_cells: level too deep");
    const long count = static_cast<long>(conv[level - 1].q) + static_cast<long>(conv[level].q);
    auto points = circlemap::backward_orbit(m, static_cast<std::size_t>(count));
    std::sort(points.begin(), points.end());

    CellComplex cx;
    cx.level = level;
    cx.point_phases = points;
    const std::size_t M = points.size();
    if (M < 3) throw DegenerateCell("yoccoz_cells: need at least 3 boundary points");

    cx.tops.resize(M);
    cx.max_adjacent_chord = 0.0;
    for (std::size_t s = 0; s < M; ++s) {
        const double prev = points[(s + M - 1) % M];
        const double next = points[(s + 1) % M];
        const double gap_prev = phase_dist(points[s], prev);
        const double gap_next = phase_dist(next, points[s]);
        if (gap_prev < 1e-12 || gap_next < 1e-12)
            throw DegenerateCell("yoccoz_cells: adjacent points below resolution");
        const double chord = std::abs(unit(next) - unit(prev));
        const double adjacent = std::abs(unit(next) - unit(points[s]));
        cx.max_adjacent_chord = std::max(cx.max_adjacent_chord, adjacent);
        const double height = chord / 2.0;
        if (height >= 1.0 - 1e-9)
            throw DegenerateCell("yoccoz_cells: radial height reaches the origin");
        cx.tops[s] = (1.0 - height) * unit(points[s]);
    }
    cx.guard_ok = cx.max_adjacent_chord < 1.0;

    double inner_area = 0.0, outer_area = 0.0;
    cx.cells.resize(M);
    for (std::size_t s = 0; s < M; ++s) {
        const std::size_t sn = (s + 1) % M;
        Cell& cell = cx.cells[s];
        cell.left = s;
        cell.right = sn;
        double gap = points[sn] - points[s];
        if (gap <= 0) gap += 1.0;
        // Polygon: radial side up at x_s, chord top, radial side down at
        // x_{s+1}, then the arc sampled back from x_{s+1} to x_s.
        const int arcs = std::max(8, static_cast<int>(gap * 512));
        cell.polygon.push_back(unit(points[s]));
        cell.polygon.push_back(cx.tops[s]);
        cell.polygon.push_back(cx.tops[sn]);
        for (int a = arcs; a >= 1; --a)
            cell.polygon.push_back(unit(points[s] + gap * a / (arcs + 0.0)));
        double area2 = 0.0;
        for (std::size_t i = 0; i < cell.polygon.size(); ++i) {
            const Complex& p = cell.polygon[i];
            const Complex& q = cell.polygon[(i + 1) % cell.polygon.size()];
            area2 += p.real() * q.imag() - q.real() * p.imag();
        }
        cell.area = 0.5 * std::abs(area2);

        inner_area += cx.tops[s].real() * cx.tops[sn].imag() -
                      cx.tops[sn].real() * cx.tops[s].imag();
        for (int a = 0; a < arcs; ++a) {
            const Complex p = unit(points[s] + gap * a / (arcs + 0.0));
            const Complex q = unit(points[s] + gap * (a + 1) / (arcs + 0.0));
            outer_area += p.real() * q.imag() - q.real() * p.imag();
        }
    }
    cx.y_area = 0.5 * (outer_area - inner_area);
    return cx;
}

CellComplex yoccoz_cells(const BlaschkeProduct& B, const RotationNumber& alpha, int level) {
    return yoccoz_cells(B.circle_map(), alpha, level);
}

int level_guard(const CircleMapHandle& m, const RotationNumber& alpha, int max_level) {
    for (int n = 1; n <= max_level; ++n) {
        try {
            const auto cx = yoccoz_cells(m, alpha, n);
            if (cx.guard_ok) return n;
        } catch (const Error&) {
            continue;
        }
    }
    return -1;
}

namespace {

bool point_in_polygon(const std::vector<Complex>& poly, Complex p) {
    bool inside = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const bool crosses = (poly[i].imag() > p.imag()) != (poly[j].imag() > p.imag());
        if (!crosses) continue;
        const double t = (p.imag() - poly[j].imag()) / (poly[i].imag() - poly[j].imag());
        const double x = poly[j].real() + t * (poly[i].real() - poly[j].real());
        if (p.real() < x) inside = !inside;
    }
    return inside;
}

} // namespace

bool cells_tile_without_overlap(const CellComplex& cx, std::size_t samples_per_cell) {
    // Interior samples of each cell must not land in any other cell. By
    // construction only phase neighbors could overlap, but scan all cells
    // whose phase range can contain the sample to keep the certificate honest.
    const std::size_t M = cx.cells.size();
    for (std::size_t s = 0; s < M; ++s) {
        const Cell& cell = cx.cells[s];
        double gap = cx.point_phases[cell.right] - cx.point_phases[cell.left];
        if (gap <= 0) gap += 1.0;
        for (std::size_t k = 0; k < samples_per_cell; ++k) {
            // Strictly interior: blend between arc midpointish and top side.
            const double t = (k + 0.5) / samples_per_cell;
            const double phase = cx.point_phases[cell.left] + gap * t;
            const Complex bottom = unit(phase);
            const Complex top =
                cx.tops[cell.left] + t * (cx.tops[cell.right] - cx.tops[cell.left]);
            const Complex p = bottom + 0.5 * (top - bottom);
            if (!point_in_polygon(cell.polygon, p)) continue;  // degenerate wedge; skip
            for (std::size_t o = 0; o < M; ++o) {
                if (o == s) continue;
                if (point_in_polygon(cx.cells[o].polygon, p)) return false;
            }
        }
    }
    return true;
}

double fitted_geometric_rate(const std::vector<double>& values) {
    if (values.size() < 2) return 1.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double x = static_cast<double>(i);
        const double y = std::log(std::max(values[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(values.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return std::exp(slope);
}

std::vector<CriticalArg> critical_args_on_circle(const BlaschkeProduct& B, std::size_t grid) {
    std::vector<CriticalArg> out;
    std::vector<double> d(grid);
    for (std::size_t i = 0; i < grid; ++i)
        d[i] = B.lift_derivative(static_cast<double>(i) / grid);

    const double step = 1.0 / grid;
    auto refine_sign_change = [&](double lo, double hi) {
        for (int k = 0; k < 60; ++k) {
            const double mid = 0.5 * (lo + hi);
            if ((B.lift_derivative(lo) < 0) == (B.lift_derivative(mid) < 0))
                lo = mid;
            else
                hi = mid;
        }
        return frac(0.5 * (lo + hi));
    };
    auto refine_minimum = [&](double lo, double hi) {
        // Golden-section on F' (smooth), enough to localize a touch point.
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = lo, b = hi;
        double x1 = b - g * (b - a), x2 = a + g * (b - a);
        double f1 = B.lift_derivative(x1), f2 = B.lift_derivative(x2);
        for (int k = 0; k < 80; ++k) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - g * (b - a);
                f1 = B.lift_derivative(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + g * (b - a);
                f2 = B.lift_derivative(x2);
            }
        }
        return std::pair<double, double>(frac(0.5 * (a + b)),
                                         B.lift_derivative(0.5 * (a + b)));
    };

    for (std::size_t i = 0; i < grid; ++i) {
        const std::size_t j = (i + 1) % grid;
        const double xi = i * step;
        if ((d[i] < 0) != (d[j] < 0)) {
            out.push_back({refine_sign_change(xi, xi + step), 1});
            continue;
        }
        // Touch-type critical points: local minimum of F' reaching zero.
        const std::size_t prev = (i + grid - 1) % grid;
        if (d[i] <= d[prev] && d[i] < d[j] && d[i] >= 0 && d[i] < 1e-3) {
            const auto [arg, val] = refine_minimum(xi - step, xi + step);
            if (std::abs(val) < 1e-8) out.push_back({arg, 2});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CriticalArg& a, const CriticalArg& b) { return a.arg < b.arg; });
    // Merge duplicates from adjacent grid cells.
    std::vector<CriticalArg> merged;
    for (const auto& c : out) {
        if (!merged.empty() && phase_dist(merged.back().arg, c.arg) < 2 * step) {
            if (merged.back().order != c.order)
                throw GridTooCoarse("critical_args_on_circle: ambiguous critical cluster");
            continue;
        }
        merged.push_back(c);
    }
    int total = 0;
    for (const auto& c : merged) total += c.order;
    if (total > 2 * (B.d() - 1))
        throw GridTooCoarse("critical_args_on_circle: too many events for the degree");
    return merged;
}

std::string to_json(const BlaschkeProduct& B) {
    nlohmann::json j;
    j["lambda_phase"] = B.lambda_phase();
    j["degree"] = B.degree();
    j["zeros"] = nlohmann::json::array();
    for (const auto& z : B.zeros()) j["zeros"].push_back({z.real(), z.imag()});
    return j.dump(2);
}

BlaschkeProduct blaschke_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        std::vector<Complex> zeros;
        for (const auto& e : j.at("zeros"))
            zeros.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        return BlaschkeProduct(j.at("lambda_phase").get<double>(), std::move(zeros));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigParse(std::string("blaschke JSON: ") + e.what());
    }
}

void write_cells_csv(std::ostream& os, const std::vector<CellComplex>& levels) {
    csv::Writer w(os, {"level", "cell_count", "y_area", "max_adjacent_chord", "guard_ok"});
    for (const auto& cx : levels)
        w.row()
            .field(static_cast<long>(cx.level))
            .field(cx.cells.size())
            .field(cx.y_area)
            .field(cx.max_adjacent_chord)
            .field(static_cast<long>(cx.guard_ok ? 1 : 0));
}

void write_cells_svg(std::ostream& os, const CellComplex& cx) {
    svg::Scene scene(-1.1, -1.1, 1.1, 1.1);
    scene.circle({0, 0}, 1.0, "#888888", 0.5);
    for (std::size_t s = 0; s < cx.cells.size(); ++s) {
        const double hue = static_cast<double>(s) / cx.cells.size();
        scene.polygon(cx.cells[s].polygon, svg::Scene::heat_color(hue), 0.55);
    }
    scene.write(os);
}

} // namespace siegelab::blaschke
