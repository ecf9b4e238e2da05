#include "siegelab/polyfam.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <json.hpp>

namespace siegelab::polyfam {

namespace {

Complex multiplier_from_alpha(const RotationNumber& alpha) {
    // Evaluate e^{2 pi i alpha} at working precision, then round once.
    const BigFloat pi = 4 * atan(BigFloat(1));
    const BigFloat two_pi_alpha = 2 * pi * alpha.value();
    return {static_cast<double>(cos(two_pi_alpha)), static_cast<double>(sin(two_pi_alpha))};
}

double poly_eval_scale(const std::vector<Complex>& coeffs, Complex z) {
    // sum |c_k| |z|^k, a backward-error yardstick for Horner evaluation.
    double s = 0.0, zp = 1.0;
    const double az = std::abs(z);
    for (const auto& c : coeffs) {
        zp *= az;
        s += std::abs(c) * zp;
    }
    return s;
}

} // namespace

SiegelPolynomial::SiegelPolynomial(RotationNumber alpha, std::vector<Complex> coeffs,
                                   std::vector<Complex> critical_points)
    : alpha_(std::move(alpha)),
      multiplier_(multiplier_from_alpha(alpha_)),
      coeffs_(std::move(coeffs)),
      critical_(std::move(critical_points)) {
    if (coeffs_.size() < 2) throw Error("SiegelPolynomial: degree must be >= 2");
    if (coeffs_.back() == Complex(0)) throw Error("SiegelPolynomial: leading coefficient is 0");
}

Complex SiegelPolynomial::eval(Complex z) const {
    Complex acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * z + coeffs_[i];
    return acc * z;
}

Complex SiegelPolynomial::derivative(Complex z) const {
    const std::size_t d = coeffs_.size();
    Complex acc = static_cast<double>(d) * coeffs_[d - 1];
    for (std::size_t i = d - 1; i-- > 0;) acc = acc * z + static_cast<double>(i + 1) * coeffs_[i];
    return acc;
}

double SiegelPolynomial::build_tolerance() const {
    double cmax = 1.0;
    for (const auto& c : critical_) cmax = std::max(cmax, std::abs(c));
    return 1e-10 * std::max(1.0, std::pow(cmax, static_cast<double>(degree() - 1)));
}

Complex elementary_symmetric(const std::vector<Complex>& points, std::size_t k) {
    if (k > points.size())
        throw IndexOutOfRange("elementary_symmetric: k exceeds point count");
    // e_k via the product expansion prod (1 + c_i t), degree-k coefficient.
    std::vector<Complex> e(k + 1, Complex(0));
    e[0] = 1;
    for (const Complex& c : points)
        for (std::size_t j = std::min(k, e.size() - 1); j >= 1; --j) e[j] += c * e[j - 1];
    return e[k];
}

SiegelPolynomial from_critical_points(const CriticalSpec& spec) {
    std::vector<Complex> pts = spec.points;
    for (const Complex& c : pts)
        if (c == Complex(0)) throw ZeroCriticalPoint("critical points must be nonzero");
    pts.push_back(Complex(1));
    const std::size_t d = pts.size() + 1;

    // All elementary symmetric values at once.
    std::vector<Complex> e(d, Complex(0));
    e[0] = 1;
    for (const Complex& c : pts)
        for (std::size_t j = d - 1; j >= 1; --j) e[j] += c * e[j - 1];

    Complex prod = 1;
    for (const Complex& c : pts) prod *= c;

    const Complex mult = multiplier_from_alpha(spec.alpha);
    std::vector<Complex> coeffs(d);
    double sign = 1.0;
    for (std::size_t i = 1; i <= d; ++i) {
        coeffs[i - 1] = mult * (sign / static_cast<double>(i)) * e[d - i] / prod;
        sign = -sign;
    }
    return SiegelPolynomial(spec.alpha, std::move(coeffs), std::move(pts));
}

SiegelPolynomial rescale_to_critical(const SiegelPolynomial& f, Complex c) {
    if (c == Complex(0)) throw ZeroCriticalPoint("rescale: c must be nonzero");
    const double scale =
        poly_eval_scale(f.coefficients(), c) / std::max(1e-300, std::abs(c));
    if (std::abs(f.derivative(c)) > 1e-8 * std::max(1.0, scale))
        throw NotACriticalPoint("rescale: |f'(c)| residual too large");
    std::vector<Complex> coeffs(f.degree());
    Complex cp = 1;  // c^{i-1}
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i] = cp * f.coefficients()[i];
        cp *= c;
    }
    std::vector<Complex> crit;
    crit.reserve(f.critical_set().size());
    for (const Complex& x : f.critical_set()) crit.push_back(x / c);
    return SiegelPolynomial(f.alpha(), std::move(coeffs), std::move(crit));
}

namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
    return acc;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs) {
    const std::size_t n = coeffs.size() - 1;
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) M(i + 1, i) = 1.0;
    for (std::size_t i = 0; i < n; ++i) M(i, n - 1) = -coeffs[i] / coeffs[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(M, false);
    if (solver.info() != Eigen::Success)
        throw RootFindingDiverged("companion-matrix eigensolver failed");
    std::vector<Complex> roots(n);
    for (std::size_t i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(i);
    return roots;
}

} // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs_in) {
    std::vector<Complex> coeffs = coeffs_in;
    while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    const std::size_t n = coeffs.size() - 1;
    if (n == 0) return {};
    if (n == 1) return {-coeffs[0] / coeffs[1]};

    // Derivative coefficients for the Aberth correction.
    std::vector<Complex> dcoeffs(n);
    for (std::size_t i = 1; i <= n; ++i) dcoeffs[i - 1] = static_cast<double>(i) * coeffs[i];

    // Initial guesses on a circle at the Cauchy-bound radius.
    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        radius = std::max(radius, std::pow(std::abs(coeffs[i] / coeffs[n]), 1.0 / (n - i)));
    radius = 2.0 * std::max(radius, 1e-8);
    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double phi = 2 * M_PI * (static_cast<double>(i) / n) + 0.4;
        z[i] = radius * Complex(std::cos(phi), std::sin(phi));
    }

    bool converged = false;
    for (int iter = 0; iter < 200 && !converged; ++iter) {
        converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex p = horner(coeffs, z[i]);
            const double scale = poly_eval_scale(coeffs, z[i]) + std::abs(coeffs[0]);
            if (std::abs(p) <= 1e-16 * scale) continue;
            const Complex dp = horner(dcoeffs, z[i]);
            Complex newton = (dp == Complex(0)) ? Complex(1e-12) : p / dp;
            Complex repulse = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && z[i] != z[j]) repulse += 1.0 / (z[i] - z[j]);
            const Complex denom = Complex(1) - newton * repulse;
            const Complex step = (denom == Complex(0)) ? newton : newton / denom;
            z[i] -= step;
            if (std::abs(step) > 1e-14 * (1.0 + std::abs(z[i]))) converged = false;
        }
    }
    if (!converged) {
        z = companion_roots(coeffs);
        // A few Newton polish steps on each eigenvalue.
        for (auto& r : z)
            for (int k = 0; k < 8; ++k) {
                const Complex dp = horner(dcoeffs, r);
                if (dp == Complex(0)) break;
                r -= horner(coeffs, r) / dp;
            }
    }
    for (const Complex& r : z)
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
            throw RootFindingDiverged("polynomial_roots: non-finite root");
    return z;
}

std::vector<Complex> critical_points(const SiegelPolynomial& f) {
    const std::size_t d = f.degree();
    std::vector<Complex> dcoeffs(d);
    for (std::size_t i = 1; i <= d; ++i)
        dcoeffs[i - 1] = static_cast<double>(i) * f.coefficients()[i - 1];
    return polynomial_roots(dcoeffs);
}

namespace {

using nlohmann::json;

json alpha_to_json(const RotationNumber& a) {
    json j;
    j["coefficients"] = json::array();
    for (const auto& c : a.prefix()) j["coefficients"].push_back(c.str());
    j["period"] = json::array();
    for (const auto& c : a.period()) j["period"].push_back(c.str());
    return j;
}

RotationNumber alpha_from_json(const json& j) {
    std::vector<BigInt> prefix, period;
    for (const auto& c : j.at("coefficients")) prefix.emplace_back(c.get<std::string>());
    if (j.contains("period"))
        for (const auto& c : j.at("period")) period.emplace_back(c.get<std::string>());
    return RotationNumber::from_coeffs(std::move(prefix), std::move(period));
}

json complex_list_to_json(const std::vector<Complex>& v) {
    json arr = json::array();
    for (const auto& z : v) arr.push_back({z.real(), z.imag()});
    return arr;
}

std::vector<Complex> complex_list_from_json(const json& arr) {
    std::vector<Complex> v;
    for (const auto& e : arr) v.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return v;
}

} // namespace

std::string to_json(const CriticalSpec& spec) {
    json j;
    j["degree"] = spec.degree();
    j["alpha"] = alpha_to_json(spec.alpha);
    j["critical_points"] = complex_list_to_json(spec.points);
    return j.dump(2);
}

std::string to_json(const SiegelPolynomial& f) {
    json j;
    j["degree"] = f.degree();
    j["alpha"] = alpha_to_json(f.alpha());
    j["coefficients"] = complex_list_to_json(f.coefficients());
    j["critical_points"] = complex_list_to_json(f.critical_set());
    return j.dump(2);
}

CriticalSpec critical_spec_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        CriticalSpec spec{alpha_from_json(j.at("alpha")),
                          complex_list_from_json(j.at("critical_points"))};
        return spec;
    } catch (const json::exception& e) {
        throw ConfigParse(std::string("critical spec JSON: ") + e.what());
    }
}

SiegelPolynomial polynomial_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        return SiegelPolynomial(alpha_from_json(j.at("alpha")),
                                complex_list_from_json(j.at("coefficients")),
                                complex_list_from_json(j.at("critical_points")));
    } catch (const json::exception& e) {
        throw ConfigParse(std::string("polynomial JSON: ") + e.what());
    }
}

} // namespace siegelab::polyfam
