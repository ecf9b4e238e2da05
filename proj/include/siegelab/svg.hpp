#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace siegelab::svg {

/// Minimal SVG scene writer. No timestamps or generator metadata are
/// emitted, so output bytes depend only on the drawing calls.
class Scene {
public:
    /// World window [x0,x1]x[y0,y1] rendered into a width x height canvas.
    Scene(double x0, double y0, double x1, double y1, int width = 800, int height = 800);

    void polyline(const std::vector<std::complex<double>>& pts, const std::string& stroke,
                  double stroke_width = 1.0, bool closed = false);
    void circle(std::complex<double> center, double radius, const std::string& stroke,
                double stroke_width = 1.0);
    /// Small filled marker dot.
    void dot(std::complex<double> p, double radius, const std::string& fill);
    /// Filled polygon (used for cell and dilatation heat maps).
    void polygon(const std::vector<std::complex<double>>& pts, const std::string& fill,
                 double opacity = 1.0);

    void write(std::ostream& os) const;

    /// Heat color ramp (blue -> red) for t in [0,1].
    static std::string heat_color(double t);

private:
    double map_x(double x) const;
    double map_y(double y) const;
    double x0_, y0_, x1_, y1_;
    int width_, height_;
    std::vector<std::string> elements_;
};

} // namespace siegelab::svg
