#include "siegelab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "siegelab/csv.hpp"

namespace siegelab::svg {

namespace {
std::string fmt(double v) {
    // Two decimals are plenty for pixel coordinates and keep files small.
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}
} // namespace

Scene::Scene(double x0, double y0, double x1, double y1, int width, int height)
    : x0_(x0), y0_(y0), x1_(x1), y1_(y1), width_(width), height_(height) {}

double Scene::map_x(double x) const { return (x - x0_) / (x1_ - x0_) * width_; }
double Scene::map_y(double y) const { return (y1_ - y) / (y1_ - y0_) * height_; }

void Scene::polyline(const std::vector<std::complex<double>>& pts, const std::string& stroke,
                     double stroke_width, bool closed) {
    std::ostringstream e;
    e << (closed ? "<polygon" : "<polyline") << " fill=\"none\" stroke=\"" << stroke
      << "\" stroke-width=\"" << fmt(stroke_width) << "\" points=\"";
    for (const auto& p : pts) e << fmt(map_x(p.real())) << ',' << fmt(map_y(p.imag())) << ' ';
    e << "\"/>";
    elements_.push_back(e.str());
}

void Scene::circle(std::complex<double> center, double radius, const std::string& stroke,
                   double stroke_width) {
    std::ostringstream e;
    e << "<circle fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
      << fmt(stroke_width) << "\" cx=\"" << fmt(map_x(center.real())) << "\" cy=\""
      << fmt(map_y(center.imag())) << "\" r=\"" << fmt(radius / (x1_ - x0_) * width_) << "\"/>";
    elements_.push_back(e.str());
}

void Scene::dot(std::complex<double> p, double radius, const std::string& fill) {
    std::ostringstream e;
    e << "<circle fill=\"" << fill << "\" cx=\"" << fmt(map_x(p.real())) << "\" cy=\""
      << fmt(map_y(p.imag())) << "\" r=\"" << fmt(radius) << "\"/>";
    elements_.push_back(e.str());
}

void Scene::polygon(const std::vector<std::complex<double>>& pts, const std::string& fill,
                    double opacity) {
    std::ostringstream e;
    e << "<polygon fill=\"" << fill << "\"";
    if (opacity < 1.0) e << " fill-opacity=\"" << fmt(opacity) << "\"";
    e << " points=\"";
    for (const auto& p : pts) e << fmt(map_x(p.real())) << ',' << fmt(map_y(p.imag())) << ' ';
    e << "\"/>";
    elements_.push_back(e.str());
}

void Scene::write(std::ostream& os) const {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
       << height_ << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n";
    for (const auto& e : elements_) os << e << '\n';
    os << "</svg>\n";
}

std::string Scene::heat_color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const int r = static_cast<int>(255 * t);
    const int b = static_cast<int>(255 * (1 - t));
    const int g = static_cast<int>(96 * (1 - std::abs(2 * t - 1)));
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

} // namespace siegelab::svg
