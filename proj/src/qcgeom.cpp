#include "siegelab/qcgeom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <ostream>

#include "siegelab/csv.hpp"
#include "siegelab/parallel.hpp"
#include "siegelab/svg.hpp"

namespace siegelab::qcgeom {

namespace {

constexpr double kEps = 1e-13;

struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]
};

Vec2 apply(const Mat2& m, Vec2 v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }

double det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 mat_inverse(const Mat2& m) {
    const double dt = det(m);
    return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

// Ratio of singular values sigma1/sigma2 >= 1.
double dilatation_of(const Mat2& m) {
    const double e = 0.5 * (m.a + m.d), f = 0.5 * (m.a - m.d);
    const double g = 0.5 * (m.c + m.b), h = 0.5 * (m.c - m.b);
    const double q = std::sqrt(e * e + h * h), r = std::sqrt(f * f + g * g);
    const double s1 = q + r, s2 = std::abs(q - r);
    if (s2 <= 0) throw SingularDifferential("differential has a vanishing singular value");
    return s1 / s2;
}

double cross(Vec2 o, Vec2 p, Vec2 q) {
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

// ---------------------------------------------------------------------------
// Chains (parametrized polylines) and parameter pairings.
// ---------------------------------------------------------------------------

struct Chain {
    std::vector<Vec2> pts;
    std::vector<double> u;  // normalized parameter per vertex

    /// Graph chains (x-monotone) are parametrized by normalized abscissa so
    /// that blended level curves keep vertical rulings; corner cells then
    /// cannot fold under the banded parameter drift.
    static Chain polyline(std::vector<Vec2> p) {
        Chain c;
        c.pts = std::move(p);
        c.u.resize(c.pts.size());
        const double x0 = c.pts.front().x;
        const double span = c.pts.back().x - x0;
        if (span <= 0) throw DegenerateTriangle("chain has zero horizontal span");
        for (std::size_t i = 0; i < c.pts.size(); ++i) c.u[i] = (c.pts[i].x - x0) / span;
        c.u.front() = 0.0;
        c.u.back() = 1.0;
        return c;
    }

    /// Arc-length parametrization, for chains that are not graphs (the
    /// three-sided target path used to open a lens onto the full square).
    static Chain polyline_by_arc(std::vector<Vec2> p) {
        Chain c;
        c.pts = std::move(p);
        c.u.resize(c.pts.size());
        double acc = 0.0;
        c.u[0] = 0.0;
        for (std::size_t i = 1; i < c.pts.size(); ++i) {
            acc += std::hypot(c.pts[i].x - c.pts[i - 1].x, c.pts[i].y - c.pts[i - 1].y);
            c.u[i] = acc;
        }
        if (acc <= 0) throw DegenerateTriangle("chain has zero length");
        for (double& v : c.u) v /= acc;
        c.u.back() = 1.0;
        return c;
    }

    Vec2 at(double t) const {
        if (t <= 0) return pts.front();
        if (t >= 1) return pts.back();
        const auto it = std::upper_bound(u.begin(), u.end(), t);
        const std::size_t i = static_cast<std::size_t>(it - u.begin());
        const double du = u[i] - u[i - 1];
        const double w = du > 0 ? (t - u[i - 1]) / du : 0.0;
        return {pts[i - 1].x + w * (pts[i].x - pts[i - 1].x),
                pts[i - 1].y + w * (pts[i].y - pts[i - 1].y)};
    }

    // Height of an x-monotone chain at abscissa x.
    double height_at(double x) const {
        if (x <= pts.front().x) return pts.front().y;
        if (x >= pts.back().x) return pts.back().y;
        std::size_t lo = 0, hi = pts.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            (pts[mid].x <= x ? lo : hi) = mid;
        }
        const double dx = pts[hi].x - pts[lo].x;
        const double w = dx > 0 ? (x - pts[lo].x) / dx : 0.0;
        return pts[lo].y + w * (pts[hi].y - pts[lo].y);
    }
};

using Pairs = std::vector<std::pair<double, double>>;

double interp_pairs(const Pairs& pr, double u) {
    if (u <= pr.front().first) return pr.front().second;
    if (u >= pr.back().first) return pr.back().second;
    std::size_t lo = 0, hi = pr.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        (pr[mid].first <= u ? lo : hi) = mid;
    }
    const double du = pr[hi].first - pr[lo].first;
    const double w = du > 0 ? (u - pr[lo].first) / du : 0.0;
    return pr[lo].second + w * (pr[hi].second - pr[lo].second);
}

void validate_pairs(const Pairs& pr, const char* what) {
    if (pr.size() < 2 || pr.front().first != 0.0 || pr.back().first != 1.0)
        throw Error(std::string(what) + ": pairs must span [0,1]");
    for (std::size_t i = 1; i < pr.size(); ++i)
        if (pr[i].first <= pr[i - 1].first + kEps || pr[i].second <= pr[i - 1].second + kEps)
            throw Error(std::string(what) + ": pairs must be increasing on both sides");
}

// ---------------------------------------------------------------------------
// MeshMap: piecewise-affine homeomorphism between two lens regions, each
// bounded below and above by a chain. Columns sit at the union of the pair
// parameters; the target column spacing interpolates geometrically between
// the bottom and top parameter tracks across the rows, which is what keeps
// the worst affine stretch per band bounded while the partitions disagree
// by polynomially large factors.
// ---------------------------------------------------------------------------

struct Tri {
    Vec2 s0, s1, s2;  // source triangle
    Vec2 d0;          // image of s0
    Mat2 M, Minv;
    double dil = 1.0;
};

class Locator {
public:
    void build(const std::vector<Tri>& tris, bool source_side) {
        lo_ = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
        hi_ = {-lo_.x, -lo_.y};
        auto corners = [&](const Tri& t) {
            std::array<Vec2, 3> c;
            if (source_side) {
                c = {t.s0, t.s1, t.s2};
            } else {
                c = {t.d0, Vec2{t.d0.x + apply(t.M, {t.s1.x - t.s0.x, t.s1.y - t.s0.y}).x,
                                t.d0.y + apply(t.M, {t.s1.x - t.s0.x, t.s1.y - t.s0.y}).y},
                     Vec2{t.d0.x + apply(t.M, {t.s2.x - t.s0.x, t.s2.y - t.s0.y}).x,
                          t.d0.y + apply(t.M, {t.s2.x - t.s0.x, t.s2.y - t.s0.y}).y}};
            }
            return c;
        };
        for (const Tri& t : tris)
            for (const Vec2& p : corners(t)) {
                lo_.x = std::min(lo_.x, p.x);
                lo_.y = std::min(lo_.y, p.y);
                hi_.x = std::max(hi_.x, p.x);
                hi_.y = std::max(hi_.y, p.y);
            }
        const double pad = 1e-9 + 1e-9 * (hi_.x - lo_.x + hi_.y - lo_.y);
        lo_.x -= pad;
        lo_.y -= pad;
        hi_.x += pad;
        hi_.y += pad;
        grid_ = std::max<std::size_t>(
            8, static_cast<std::size_t>(std::sqrt(static_cast<double>(tris.size()))));
        cells_.assign(grid_ * grid_, {});
        for (std::size_t i = 0; i < tris.size(); ++i) {
            const auto c = corners(tris[i]);
            double bx0 = c[0].x, bx1 = c[0].x, by0 = c[0].y, by1 = c[0].y;
            for (const Vec2& p : c) {
                bx0 = std::min(bx0, p.x);
                bx1 = std::max(bx1, p.x);
                by0 = std::min(by0, p.y);
                by1 = std::max(by1, p.y);
            }
            for (std::size_t gy = cell_of_y(by0); gy <= cell_of_y(by1); ++gy)
                for (std::size_t gx = cell_of_x(bx0); gx <= cell_of_x(bx1); ++gx)
                    cells_[gy * grid_ + gx].push_back(static_cast<int>(i));
        }
    }

    const std::vector<int>& candidates(Vec2 p) const {
        return cells_[cell_of_y(p.y) * grid_ + cell_of_x(p.x)];
    }

private:
    std::size_t cell_of_x(double x) const {
        const double t = (x - lo_.x) / (hi_.x - lo_.x);
        const long i = static_cast<long>(t * static_cast<double>(grid_));
        return static_cast<std::size_t>(std::clamp<long>(i, 0, static_cast<long>(grid_) - 1));
    }
    std::size_t cell_of_y(double y) const {
        const double t = (y - lo_.y) / (hi_.y - lo_.y);
        const long i = static_cast<long>(t * static_cast<double>(grid_));
        return static_cast<std::size_t>(std::clamp<long>(i, 0, static_cast<long>(grid_) - 1));
    }
    Vec2 lo_, hi_;
    std::size_t grid_ = 8;
    std::vector<std::vector<int>> cells_;
};

class MeshMap : public SquareMap {
public:
    static std::shared_ptr<MeshMap> build(const Chain& bottom_src, const Chain& top_src,
                                          const Chain& bottom_dst, const Chain& top_dst,
                                          Pairs bottom_pairs, Pairs top_pairs);

    Vec2 eval(Vec2 p) const override {
        if (identity_) return p;
        const Tri& t = locate(p, /*source=*/true);
        const Vec2 rel{p.x - t.s0.x, p.y - t.s0.y};
        const Vec2 img = apply(t.M, rel);
        return {t.d0.x + img.x, t.d0.y + img.y};
    }

    Vec2 inverse(Vec2 q) const {
        if (identity_) return q;
        const Tri& t = locate(q, /*source=*/false);
        const Vec2 rel{q.x - t.d0.x, q.y - t.d0.y};
        const Vec2 img = apply(t.Minv, rel);
        return {t.s0.x + img.x, t.s0.y + img.y};
    }

    double triangle_dilatation_bound() const override {
        double worst = 1.0;
        for (const Tri& t : tris_) worst = std::max(worst, t.dil);
        return identity_ ? 1.0 : worst;
    }

private:
    const Tri& locate(Vec2 p, bool source) const;
    std::vector<Tri> tris_;
    Locator src_loc_, dst_loc_;
    bool identity_ = false;
};

std::shared_ptr<MeshMap> MeshMap::build(const Chain& bottom_src, const Chain& top_src,
                                        const Chain& bottom_dst, const Chain& top_dst,
                                        Pairs bottom_pairs, Pairs top_pairs) {
    validate_pairs(bottom_pairs, "MeshMap bottom");
    validate_pairs(top_pairs, "MeshMap top");

    // Columns: the union of all source-side pair parameters.
    std::vector<double> U;
    for (const auto& [u, v] : bottom_pairs) U.push_back(u);
    for (const auto& [u, v] : top_pairs) U.push_back(u);
    std::sort(U.begin(), U.end());
    U.erase(std::unique(U.begin(), U.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-12; }),
            U.end());
    U.front() = 0.0;
    U.back() = 1.0;
    const std::size_t J = U.size();

    std::vector<double> vb(J), vt(J);
    for (std::size_t j = 0; j < J; ++j) {
        vb[j] = interp_pairs(bottom_pairs, U[j]);
        vt[j] = interp_pairs(top_pairs, U[j]);
    }

    // Row count from the worst per-column length ratio between the two
    // target tracks; each band then stretches by at most ~sqrt(2), which
    // keeps the discrete mesh close to the continuum interpolation it
    // samples.
    double worst_log2 = 1.0;
    for (std::size_t j = 0; j + 1 < J; ++j) {
        const double lb = std::max(vb[j + 1] - vb[j], 1e-14);
        const double lt = std::max(vt[j + 1] - vt[j], 1e-14);
        worst_log2 = std::max(worst_log2, std::abs(std::log2(lb / lt)));
    }
    const std::size_t R =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(2.0 * worst_log2)), 2, 96);

    // Level curves: linear blends of the chains; target columns move along
    // the geometric interpolation of the two parameter tracks.
    auto src_vertex = [&](std::size_t k, std::size_t j) {
        const double v = static_cast<double>(k) / static_cast<double>(R);
        const Vec2 b = bottom_src.at(U[j]);
        const Vec2 t = top_src.at(U[j]);
        return Vec2{(1 - v) * b.x + v * t.x, (1 - v) * b.y + v * t.y};
    };
    // The pair lists span [0,1] on both sides, so every row's track starts
    // at 0 and ends at 1 after normalization.
    std::vector<std::vector<double>> p(R + 1, std::vector<double>(J));
    for (std::size_t k = 0; k <= R; ++k) {
        const double v = static_cast<double>(k) / static_cast<double>(R);
        double acc = 0.0;
        p[k][0] = 0.0;
        for (std::size_t j = 0; j + 1 < J; ++j) {
            const double lb = std::max(vb[j + 1] - vb[j], 1e-14);
            const double lt = std::max(vt[j + 1] - vt[j], 1e-14);
            acc += std::exp((1 - v) * std::log(lb) + v * std::log(lt));
            p[k][j + 1] = acc;
        }
        for (std::size_t j = 1; j < J; ++j) p[k][j] /= acc;
        p[k][J - 1] = 1.0;
    }
    auto dst_vertex = [&](std::size_t k, std::size_t j) {
        const double v = static_cast<double>(k) / static_cast<double>(R);
        const Vec2 b = bottom_dst.at(p[k][j]);
        const Vec2 t = top_dst.at(p[k][j]);
        return Vec2{(1 - v) * b.x + v * t.x, (1 - v) * b.y + v * t.y};
    };

    auto mesh = std::make_shared<MeshMap>();
    bool identical = true;
    for (std::size_t k = 0; k < R; ++k) {
        for (std::size_t j = 0; j + 1 < J; ++j) {
            const Vec2 A = src_vertex(k, j), B = src_vertex(k, j + 1);
            const Vec2 C = src_vertex(k + 1, j + 1), D = src_vertex(k + 1, j);
            const Vec2 A2 = dst_vertex(k, j), B2 = dst_vertex(k, j + 1);
            const Vec2 C2 = dst_vertex(k + 1, j + 1), D2 = dst_vertex(k + 1, j);
            auto add_tri = [&](Vec2 a, Vec2 b, Vec2 c, Vec2 a2, Vec2 b2, Vec2 c2) {
                const double area_s = cross(a, b, c);
                const double area_d = cross(a2, b2, c2);
                if (std::abs(area_s) < 1e-15 && std::abs(area_d) < 1e-15) return;
                if (area_s <= 1e-16 || area_d <= 1e-16)
                    throw DegenerateTriangle(
                        "mesh triangle collapsed or flipped (src area " +
                        std::to_string(area_s) + " at (" + std::to_string(a.x) + "," +
                        std::to_string(a.y) + "), dst area " + std::to_string(area_d) +
                        " at (" + std::to_string(a2.x) + "," + std::to_string(a2.y) + "))");
                Tri t;
                t.s0 = a;
                t.s1 = b;
                t.s2 = c;
                t.d0 = a2;
                const Mat2 S{b.x - a.x, c.x - a.x, b.y - a.y, c.y - a.y};
                const Mat2 Dm{b2.x - a2.x, c2.x - a2.x, b2.y - a2.y, c2.y - a2.y};
                const Mat2 Sinv = mat_inverse(S);
                t.M = Mat2{Dm.a * Sinv.a + Dm.b * Sinv.c, Dm.a * Sinv.b + Dm.b * Sinv.d,
                           Dm.c * Sinv.a + Dm.d * Sinv.c, Dm.c * Sinv.b + Dm.d * Sinv.d};
                t.Minv = mat_inverse(t.M);
                t.dil = dilatation_of(t.M);
                mesh->tris_.push_back(t);
                if (std::abs(a.x - a2.x) + std::abs(a.y - a2.y) + std::abs(b.x - b2.x) +
                        std::abs(b.y - b2.y) + std::abs(c.x - c2.x) + std::abs(c.y - c2.y) >
                    0.0)
                    identical = false;
            };
            add_tri(A, B, C, A2, B2, C2);
            add_tri(A, C, D, A2, C2, D2);
        }
    }
    if (mesh->tris_.empty()) throw DegenerateTriangle("mesh is empty");
    mesh->identity_ = identical;
    if (!mesh->identity_) {
        mesh->src_loc_.build(mesh->tris_, true);
        mesh->dst_loc_.build(mesh->tris_, false);
    }
    return mesh;
}

const Tri& MeshMap::locate(Vec2 p, bool source) const {
    const Locator& loc = source ? src_loc_ : dst_loc_;
    const Tri* best = nullptr;
    double best_miss = std::numeric_limits<double>::infinity();
    auto consider = [&](const Tri& t) {
        Vec2 a, b, c;
        if (source) {
            a = t.s0;
            b = t.s1;
            c = t.s2;
        } else {
            a = t.d0;
            const Vec2 rb = apply(t.M, {t.s1.x - t.s0.x, t.s1.y - t.s0.y});
            const Vec2 rc = apply(t.M, {t.s2.x - t.s0.x, t.s2.y - t.s0.y});
            b = {a.x + rb.x, a.y + rb.y};
            c = {a.x + rc.x, a.y + rc.y};
        }
        const double full = cross(a, b, c);
        const double w0 = cross(a, b, p) / full;
        const double w1 = cross(b, c, p) / full;
        const double w2 = cross(c, a, p) / full;
        const double miss = -std::min({w0, w1, w2});
        if (miss < best_miss) {
            best_miss = miss;
            best = &t;
        }
    };
    for (int idx : loc.candidates(p)) consider(tris_[idx]);
    if (best == nullptr || best_miss > 1e-6) {
        // Rare boundary-roundoff escape from the bucket: scan everything.
        for (const Tri& t : tris_) consider(t);
    }
    if (best == nullptr)
        throw Error("MeshMap::locate: point outside the mesh");
    return *best;
}

// ---------------------------------------------------------------------------
// Square-map assembly.
// ---------------------------------------------------------------------------

std::vector<double> saddle_weights(std::size_t intervals) {
    std::vector<double> w(intervals);
    for (std::size_t j = 1; j <= intervals; ++j) {
        const double k = static_cast<double>(std::min(j, intervals + 1 - j));
        w[j - 1] = 1.0 / (k * k);
    }
    return w;
}

Chain unit_bottom() { return Chain::polyline({{0, 0}, {1, 0}}); }
Chain unit_top() { return Chain::polyline({{0, 1}, {1, 1}}); }

// The banded mesh matches the two bottom partitions directly; both the
// single-piece block and the multi-piece case ride on the same multiscale
// interpolation (piece boundaries are ordinary matched columns, so the
// piecewise structure needs no separate decomposition stage).
std::shared_ptr<MeshMap> base_square_mesh(const PolygonSpec& src, const PolygonSpec& dst) {
    Pairs bottom;
    for (std::size_t i = 0; i < src.points.size(); ++i)
        bottom.emplace_back(src.points[i], dst.points[i]);
    Pairs top;
    for (double y : dst.points) top.emplace_back(y, y);
    return MeshMap::build(unit_bottom(), unit_top(), unit_bottom(), unit_top(),
                          std::move(bottom), std::move(top));
}

std::shared_ptr<const SquareMap> build_square_map(const PolygonSpec& src,
                                                  const PolygonSpec& dst, int depth) {
    if (depth > 16) throw RecursionDepthExceeded("polygon map recursion too deep");
    if (src.m() != dst.m()) throw Error("build_polygon_map: partitions must have equal m");
    if (src.m() < 2) throw InvalidBreakpoints("build_polygon_map: need m >= 2");
    return base_square_mesh(src, dst);
}

} // namespace

PolygonSpec make_saddle_partition(std::size_t m, const std::vector<std::size_t>& interior_breaks,
                                  double c0) {
    if (m < 2) throw InvalidBreakpoints("make_saddle_partition: m must be >= 2");
    PolygonSpec spec;
    spec.tag = PolygonSpec::Tag::SaddleNode;
    spec.c0 = c0;
    spec.breakpoints.push_back(1);
    for (std::size_t b : interior_breaks) {
        if (b <= spec.breakpoints.back() || b >= m)
            throw InvalidBreakpoints("make_saddle_partition: breakpoints must be ordered in (1, m)");
        spec.breakpoints.push_back(b);
    }
    spec.breakpoints.push_back(m);

    const std::size_t l = spec.breakpoints.size() - 1;
    spec.points.resize(m);
    for (std::size_t piece = 0; piece < l; ++piece) {
        const std::size_t lo = spec.breakpoints[piece];
        const std::size_t hi = spec.breakpoints[piece + 1];
        const double x0 = static_cast<double>(piece) / l;
        const double x1 = static_cast<double>(piece + 1) / l;
        const auto w = saddle_weights(hi - lo);
        double total = 0.0;
        for (double v : w) total += v;
        double acc = 0.0;
        spec.points[lo - 1] = x0;
        for (std::size_t j = lo; j < hi; ++j) {
            acc += w[j - lo];
            spec.points[j] = x0 + (x1 - x0) * acc / total;
        }
    }
    spec.points.front() = 0.0;
    spec.points.back() = 1.0;
    return spec;
}

PolygonSpec make_linear_partition(std::size_t m) {
    if (m < 2) throw InvalidBreakpoints("make_linear_partition: m must be >= 2");
    PolygonSpec spec;
    spec.tag = PolygonSpec::Tag::Linear;
    spec.points.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        spec.points[i] = static_cast<double>(i) / static_cast<double>(m - 1);
    return spec;
}

double geometry_band_constant(const PolygonSpec& spec) {
    const std::size_t m = spec.m();
    if (m < 2) return 1.0;
    double worst = 1.0;
    if (spec.tag == PolygonSpec::Tag::Linear) {
        const double uniform = 1.0 / static_cast<double>(m - 1);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            const double len = spec.points[i + 1] - spec.points[i];
            worst = std::max(worst, std::max(len / uniform, uniform / len));
        }
        return worst;
    }
    std::vector<std::size_t> bp = spec.breakpoints;
    if (bp.size() < 2) bp = {1, m};
    for (std::size_t piece = 0; piece + 1 < bp.size(); ++piece) {
        const std::size_t lo = bp[piece], hi = bp[piece + 1];
        const double plen = spec.points[hi - 1] - spec.points[lo - 1];
        const std::size_t count = hi - lo;
        double norm = 0.0;
        for (std::size_t local = 1; local <= count; ++local) {
            const double k = static_cast<double>(std::min(local, count + 1 - local));
            norm += 1.0 / (k * k);
        }
        for (std::size_t j = lo; j < hi; ++j) {
            const double len = spec.points[j] - spec.points[j - 1];
            const std::size_t local = j - lo + 1;
            const double k = static_cast<double>(std::min(local, count + 1 - local));
            const double model = plen / (k * k) / norm;
            worst = std::max(worst, std::max(len / model, model / len));
        }
    }
    return worst;
}

PolygonMapResult build_polygon_map(const PolygonSpec& src, const PolygonSpec& dst,
                                   std::size_t report_grid) {
    for (const PolygonSpec* s : {&src, &dst}) {
        if (s->m() < 2 || s->points.front() != 0.0 || s->points.back() != 1.0)
            throw InvalidBreakpoints("build_polygon_map: partition must span [0,1]");
        for (std::size_t i = 1; i < s->m(); ++i)
            if (s->points[i] <= s->points[i - 1])
                throw InvalidBreakpoints("build_polygon_map: partition must increase");
    }
    PolygonMapResult result;
    result.map = build_square_map(src, dst, 0);
    auto fn = [map = result.map](Vec2 p) { return map->eval(p); };
    result.report = dilatation_field(fn, report_grid, src, dst);
    return result;
}

QcMapReport dilatation_field(const std::function<Vec2(Vec2)>& f, std::size_t grid) {
    QcMapReport rep;
    rep.sample_grid = grid;
    rep.orientation_certificate = true;
    const double h = 1e-6;
    std::vector<double> row_max(grid, 1.0);
    std::vector<char> row_ok(grid, 1);
    parallel_for(grid, [&](std::size_t gy) {
        double local = 1.0;
        for (std::size_t gx = 0; gx < grid; ++gx) {
            const double x = (gx + 0.5) / static_cast<double>(grid);
            const double y = (gy + 0.5) / static_cast<double>(grid);
            const Vec2 fx1 = f({x + h, y}), fx0 = f({x - h, y});
            const Vec2 fy1 = f({x, y + h}), fy0 = f({x, y - h});
            const Mat2 J{(fx1.x - fx0.x) / (2 * h), (fy1.x - fy0.x) / (2 * h),
                         (fx1.y - fx0.y) / (2 * h), (fy1.y - fy0.y) / (2 * h)};
            if (det(J) <= 0) row_ok[gy] = 0;
            local = std::max(local, dilatation_of(J));
        }
        row_max[gy] = local;
    });
    for (std::size_t gy = 0; gy < grid; ++gy) {
        rep.max_dilatation = std::max(rep.max_dilatation, row_max[gy]);
        if (!row_ok[gy]) rep.orientation_certificate = false;
    }
    return rep;
}

QcMapReport dilatation_field(const std::function<Vec2(Vec2)>& f, std::size_t grid,
                             const PolygonSpec& src, const PolygonSpec& dst) {
    QcMapReport rep = dilatation_field(f, grid);
    // Declared boundary behavior: bottom marks map piecewise linearly,
    // the other three sides map identically.
    Pairs bottom;
    for (std::size_t i = 0; i < src.points.size(); ++i)
        bottom.emplace_back(src.points[i], dst.points[i]);
    double worst = 0.0;
    const std::size_t samples = std::max<std::size_t>(grid, 64);
    for (std::size_t i = 0; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        const Vec2 bot = f({t, 0.0});
        worst = std::max(worst, std::hypot(bot.x - interp_pairs(bottom, t), bot.y));
        const Vec2 top = f({t, 1.0});
        worst = std::max(worst, std::hypot(top.x - t, top.y - 1.0));
        const Vec2 left = f({0.0, t});
        worst = std::max(worst, std::hypot(left.x, left.y - t));
        const Vec2 right = f({1.0, t});
        worst = std::max(worst, std::hypot(right.x - 1.0, right.y - t));
    }
    rep.edge_linearity_residual = worst;
    return rep;
}

void write_csv(std::ostream& os, const std::vector<std::pair<std::size_t, QcMapReport>>& rows,
               std::size_t pieces) {
    csv::Writer w(os, {"m", "pieces", "max_dilatation", "fitted_C", "edge_residual",
                       "orientation_ok"});
    for (const auto& [m, rep] : rows) {
        const double lm = std::log(static_cast<double>(m));
        w.row()
            .field(m)
            .field(pieces)
            .field(rep.max_dilatation)
            .field(rep.max_dilatation / (1.0 + lm * lm))
            .field(rep.edge_linearity_residual)
            .field(static_cast<long>(rep.orientation_certificate ? 1 : 0));
    }
}

void write_svg(std::ostream& os, const std::function<Vec2(Vec2)>& f, std::size_t grid) {
    svg::Scene scene(0, 0, 1, 1, 640, 640);
    const double h = 1e-6;
    std::vector<std::vector<double>> dil(grid, std::vector<double>(grid, 1.0));
    double lo = std::numeric_limits<double>::infinity(), hi = 1.0;
    for (std::size_t gy = 0; gy < grid; ++gy)
        for (std::size_t gx = 0; gx < grid; ++gx) {
            const double x = (gx + 0.5) / grid, y = (gy + 0.5) / grid;
            const Vec2 fx1 = f({x + h, y}), fx0 = f({x - h, y});
            const Vec2 fy1 = f({x, y + h}), fy0 = f({x, y - h});
            const Mat2 J{(fx1.x - fx0.x) / (2 * h), (fy1.x - fy0.x) / (2 * h),
                         (fx1.y - fx0.y) / (2 * h), (fy1.y - fy0.y) / (2 * h)};
            dil[gy][gx] = dilatation_of(J);
            lo = std::min(lo, dil[gy][gx]);
            hi = std::max(hi, dil[gy][gx]);
        }
    const double span = std::max(hi - lo, 1e-12);
    for (std::size_t gy = 0; gy < grid; ++gy)
        for (std::size_t gx = 0; gx < grid; ++gx) {
            const double t = (dil[gy][gx] - lo) / span;
            const double x0 = static_cast<double>(gx) / grid, y0 = static_cast<double>(gy) / grid;
            const double s = 1.0 / grid;
            scene.polygon({{x0, y0}, {x0 + s, y0}, {x0 + s, y0 + s}, {x0, y0 + s}},
                          svg::Scene::heat_color(t));
        }
    scene.write(os);
}

} // namespace siegelab::qcgeom
