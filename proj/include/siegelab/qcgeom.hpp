#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

#include "siegelab/errors.hpp"

namespace siegelab::qcgeom {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

/// A marked partition of the bottom side of the unit square.
struct PolygonSpec {
    enum class Tag { Linear, SaddleNode };
    std::vector<double> points;             ///< x_1..x_m with x_1 = 0, x_m = 1
    Tag tag = Tag::Linear;
    std::vector<std::size_t> breakpoints;   ///< 1-based piece bounds 1=b_0<...<b_l=m
    double c0 = 1.0;                        ///< declared saddle-node band constant

    std::size_t m() const { return points.size(); }
    std::size_t piece_count() const {
        return breakpoints.size() < 2 ? 1 : breakpoints.size() - 1;
    }
};

/// Synthetic saddle-node partition: equal pieces, each subdivided with the
/// exact profile |piece| / min(j - b_i + 1, b_{i+1} - j)^2 (normalized), so
/// the generator meets its own band with C0 = 1. `interior_breaks` lists the
/// 1-based breakpoint indices strictly between 1 and m (empty = one piece).
PolygonSpec make_saddle_partition(std::size_t m, const std::vector<std::size_t>& interior_breaks,
                                  double c0 = 1.0);

/// Uniform partition (linear geometry).
PolygonSpec make_linear_partition(std::size_t m);

/// Worst deviation factor of the partition from the exact profile declared
/// by its tag, per piece (1.0 = exact). Used by the --check mode.
double geometry_band_constant(const PolygonSpec& spec);

/// A homeomorphism of the closed unit square.
class SquareMap {
public:
    virtual ~SquareMap() = default;
    virtual Vec2 eval(Vec2 p) const = 0;
    /// Exact per-triangle dilatation bound when the map is piecewise affine
    /// (composites return an estimate from their stages).
    virtual double triangle_dilatation_bound() const = 0;
};

struct QcMapReport {
    std::size_t sample_grid = 0;
    double max_dilatation = 1.0;
    double edge_linearity_residual = 0.0;
    bool orientation_certificate = false;  ///< Jacobian > 0 at all grid samples
};

struct PolygonMapResult {
    std::shared_ptr<const SquareMap> map;
    QcMapReport report;
};

/// Builds the piecewise-affine homeomorphism of the unit square matching the
/// two bottom partitions (x_i -> y_i, affine between marks, identity on the
/// other three sides). Single pieces use a banded mesh whose horizontal
/// spacing interpolates geometrically between the partitions; multi-piece
/// saddle sources are split by the tent polylines L (legs at pi/3, half-piece
/// lengths) and S (pi/4 / pi/3 legs, third-piece lengths) into four regions,
/// with the leading (l-1)-piece part handled recursively.
PolygonMapResult build_polygon_map(const PolygonSpec& src, const PolygonSpec& dst,
                                   std::size_t report_grid = 256);

/// Central-difference dilatation scan of an arbitrary square map: singular
/// values of the difference-quotient Jacobian on a grid of interior samples.
/// Throws SingularDifferential if a sample Jacobian collapses.
QcMapReport dilatation_field(const std::function<Vec2(Vec2)>& f, std::size_t grid);

/// Adds the boundary check: max deviation of boundary images from the
/// declared piecewise-linear correspondence (bottom x_i -> y_i, identity on
/// the remaining sides).
QcMapReport dilatation_field(const std::function<Vec2(Vec2)>& f, std::size_t grid,
                             const PolygonSpec& src, const PolygonSpec& dst);

void write_csv(std::ostream& os, const std::vector<std::pair<std::size_t, QcMapReport>>& rows,
               std::size_t pieces);
void write_svg(std::ostream& os, const std::function<Vec2(Vec2)>& f, std::size_t grid);

} // namespace siegelab::qcgeom
