#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "siegelab/polyfam.hpp"

using namespace siegelab;
using namespace siegelab::polyfam;

namespace {
struct PrecisionSetup {
    PrecisionSetup() { set_precision_bits(256); }
};
const PrecisionSetup setup;

// Greedy minimal matching error between two small point sets.
double matching_error(std::vector<Complex> a, std::vector<Complex> b) {
    REQUIRE(a.size() == b.size());
    std::sort(a.begin(), a.end(), [](Complex u, Complex v) {
        return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
    });
    double worst = 0.0;
    std::vector<bool> used(b.size(), false);
    for (const Complex& x : a) {
        double best = 1e300;
        std::size_t pick = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - b[j]);
            if (d < best) {
                best = d;
                pick = j;
            }
        }
        used[pick] = true;
        worst = std::max(worst, best);
    }
    return worst;
}
} // namespace

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric({Complex(3, 1)}, 1) == Complex(3, 1));
    CHECK(elementary_symmetric({Complex(1), Complex(2), Complex(3)}, 2) == Complex(11));
    CHECK(elementary_symmetric({Complex(5), Complex(-2)}, 0) == Complex(1));
    CHECK_THROWS_AS(elementary_symmetric({Complex(1)}, 2), IndexOutOfRange);
}

TEST_CASE("quadratic closed form") {
    CriticalSpec spec{contfrac::RotationNumber::golden(), {}};
    const auto f = from_critical_points(spec);
    REQUIRE(f.degree() == 2);
    const Complex mult = f.multiplier();
    CHECK(std::abs(f.coefficients()[0] - mult) < 1e-15);
    CHECK(std::abs(f.coefficients()[1] + mult / 2.0) < 1e-15);
    CHECK(std::abs(f.eval(Complex(0))) == 0.0);
    CHECK(std::abs(f.derivative(Complex(0)) - mult) < 1e-15);
}

TEST_CASE("double critical point at 1 for the cubic") {
    CriticalSpec spec{contfrac::RotationNumber::golden(), {Complex(1)}};
    const auto f = from_critical_points(spec);
    REQUIRE(f.degree() == 3);
    CHECK(std::abs(f.derivative(Complex(1))) < 1e-14);
    // f'(z) = 3 a_3 (z-1)^2: check at another point
    const Complex a3 = f.coefficients()[2];
    const Complex z(0.3, -0.2);
    CHECK(std::abs(f.derivative(z) - 3.0 * a3 * (z - 1.0) * (z - 1.0)) < 1e-13);
}

TEST_CASE("critical residual over random specs") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> mag(0.1, 10.0), arg(0.0, 2 * M_PI);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 5);
        std::vector<Complex> pts;
        for (int i = 0; i < d - 2; ++i) pts.push_back(std::polar(mag(rng), arg(rng)));
        CriticalSpec spec{contfrac::RotationNumber::golden(), pts};
        const auto f = from_critical_points(spec);
        for (const Complex& c : f.critical_set())
            CHECK(std::abs(f.derivative(c)) <= f.build_tolerance());
    }
}

TEST_CASE("zero critical point is rejected") {
    CriticalSpec spec{contfrac::RotationNumber::golden(), {Complex(0)}};
    CHECK_THROWS_AS(from_critical_points(spec), ZeroCriticalPoint);
}

TEST_CASE("leading coefficient identity") {
    // a_d = e^{2 pi i alpha} (-1)^{d-1} / (d c_1...c_{d-1})
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> mag(0.3, 3.0), arg(0.0, 2 * M_PI);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 5);
        std::vector<Complex> pts;
        for (int i = 0; i < d - 2; ++i) pts.push_back(std::polar(mag(rng), arg(rng)));
        CriticalSpec spec{contfrac::RotationNumber::golden(), pts};
        const auto f = from_critical_points(spec);
        Complex prod = 1.0;
        for (const Complex& c : f.critical_set()) prod *= c;
        const double sign = (f.degree() % 2 == 0) ? -1.0 : 1.0;
        const Complex expect =
            f.multiplier() * sign / (static_cast<double>(f.degree()) * prod);
        CHECK(std::abs(f.coefficients().back() - expect) < 1e-13);
    }
}

TEST_CASE("rescaling") {
    CriticalSpec spec{contfrac::RotationNumber::golden(),
                      {Complex(0.5, 0.8), Complex(-1.2, 0.1)}};
    const auto f = from_critical_points(spec);
    SUBCASE("c = 1 is the identity") {
        const auto g = rescale_to_critical(f, Complex(1));
        for (std::size_t i = 0; i < f.degree(); ++i)
            CHECK(std::abs(g.coefficients()[i] - f.coefficients()[i]) < 1e-15);
    }
    SUBCASE("moves the chosen critical point to 1, multiplier fixed") {
        const Complex c = spec.points[0];
        const auto g = rescale_to_critical(f, c);
        CHECK(std::abs(g.derivative(Complex(1))) < 1e-12);
        CHECK(std::abs(g.coefficients()[0] - f.coefficients()[0]) < 1e-15);
        for (std::size_t i = 0; i < g.degree(); ++i) {
            const Complex expect = std::pow(c, static_cast<double>(i)) * f.coefficients()[i];
            CHECK(std::abs(g.coefficients()[i] - expect) < 1e-13);
        }
    }
    SUBCASE("double application is the identity") {
        const Complex c = spec.points[1];
        const auto g = rescale_to_critical(f, c);
        const auto h = rescale_to_critical(g, 1.0 / c);
        for (std::size_t i = 0; i < f.degree(); ++i)
            CHECK(std::abs(h.coefficients()[i] - f.coefficients()[i]) < 1e-12);
    }
    SUBCASE("non-critical point is refused") {
        CHECK_THROWS_AS(rescale_to_critical(f, Complex(0.123, 0.456)), NotACriticalPoint);
    }
}

TEST_CASE("derivative matches central differences") {
    CriticalSpec spec{contfrac::RotationNumber::golden(), {Complex(0.7, -0.4)}};
    const auto f = from_critical_points(spec);
    const Complex z(0.31, 0.12);
    double prev_err = 1e300;
    for (double h : {1e-3, 5e-4, 2.5e-4}) {
        const Complex fd = (f.eval(z + h) - f.eval(z - h)) / (2 * h);
        const double err = std::abs(fd - f.derivative(z));
        CHECK(err < prev_err);  // O(h^2) shrinks with h
        prev_err = err;
    }
    CHECK(prev_err < 1e-7);
}

TEST_CASE("critical point recovery") {
    SUBCASE("explicit spec round trip") {
        CriticalSpec spec{contfrac::RotationNumber::golden(),
                          {Complex(0, 1), Complex(0, -2)}};
        const auto f = from_critical_points(spec);
        auto roots = critical_points(f);
        std::vector<Complex> expect = {Complex(0, 1), Complex(0, -2), Complex(1)};
        CHECK(matching_error(roots, expect) < 1e-8);
    }
    SUBCASE("quadratic normal form") {
        CriticalSpec spec{contfrac::RotationNumber::golden(), {}};
        const auto roots = critical_points(from_critical_points(spec));
        REQUIRE(roots.size() == 1);
        CHECK(std::abs(roots[0] - Complex(1)) < 1e-12);
    }
    SUBCASE("repeated critical point clusters within 1e-6") {
        CriticalSpec spec{contfrac::RotationNumber::golden(),
                          {Complex(-0.5, 0.4), Complex(-0.5, 0.4)}};
        const auto f = from_critical_points(spec);
        auto roots = critical_points(f);
        int close = 0;
        for (const Complex& r : roots)
            if (std::abs(r - Complex(-0.5, 0.4)) < 1e-6) ++close;
        CHECK(close == 2);
    }
    SUBCASE("1000 random specs round trip under 1e-8") {
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> mag(0.2, 5.0), arg(0.0, 2 * M_PI);
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const int d = 2 + static_cast<int>(rng() % 5);
            std::vector<Complex> pts;
            for (int i = 0; i < d - 2; ++i) pts.push_back(std::polar(mag(rng), arg(rng)));
            CriticalSpec spec{contfrac::RotationNumber::golden(), pts};
            const auto f = from_critical_points(spec);
            auto expect = pts;
            expect.push_back(Complex(1));
            worst = std::max(worst, matching_error(critical_points(f), expect));
        }
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("orbit diameter against the smallest critical modulus") {
    // For bounded critical orbits the diameter should stay within a modest
    // multiple of min |c|; the multiple is reported, not pinned.
    CriticalSpec spec{contfrac::RotationNumber::golden(), {}};
    const auto f = from_critical_points(spec);
    Complex z = 1.0;
    double lo = 1e300, hi = -1e300, lo_im = 1e300, hi_im = -1e300;
    for (int k = 0; k < 10000; ++k) {
        lo = std::min(lo, z.real());
        hi = std::max(hi, z.real());
        lo_im = std::min(lo_im, z.imag());
        hi_im = std::max(hi_im, z.imag());
        z = f.eval(z);
        REQUIRE(std::abs(z) < 10.0);
    }
    const double diam = std::hypot(hi - lo, hi_im - lo_im);
    double min_c = 1e300;
    for (const Complex& c : f.critical_set()) min_c = std::min(min_c, std::abs(c));
    const double fitted_L = diam / min_c;
    CHECK(fitted_L > 0.0);
    CHECK(fitted_L < 100.0);
    MESSAGE("fitted diameter constant L = ", fitted_L);
}

TEST_CASE("json round trip") {
    CriticalSpec spec{contfrac::RotationNumber::from_coeffs({BigInt(2), BigInt(3)},
                                                            {BigInt(1)}),
                      {Complex(0.5, -1.5)}};
    const auto spec2 = critical_spec_from_json(to_json(spec));
    CHECK(spec2.points == spec.points);
    CHECK(abs(spec2.alpha.value() - spec.alpha.value()) < BigFloat("1e-60"));

    const auto f = from_critical_points(spec);
    const auto f2 = polynomial_from_json(to_json(f));
    REQUIRE(f2.degree() == f.degree());
    for (std::size_t i = 0; i < f.degree(); ++i)
        CHECK(f2.coefficients()[i] == f.coefficients()[i]);
}
