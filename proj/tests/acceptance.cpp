// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "siegelab/blaschke.hpp"
#include "siegelab/circlemap.hpp"
#include "siegelab/contfrac.hpp"
#include "siegelab/orbit.hpp"
#include "siegelab/polyfam.hpp"
#include "siegelab/qcgeom.hpp"
#include "siegelab/run.hpp"

using namespace siegelab;
using siegelab::BigFloat;
using siegelab::BigInt;
using contfrac::RotationNumber;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty()) {
        std::printf("[PASS] criterion %2d: %s (%.1fs)\n", number, label.c_str(), secs);
    } else {
        std::printf("[FAIL] criterion %2d: %s (%.1fs)\n       %s\n", number, label.c_str(),
                    secs, error.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

void require_runtime(double secs, double limit) {
    require(secs < limit, "runtime " + std::to_string(secs) + "s exceeded the " +
                              std::to_string(limit) + "s budget");
}

double frac(double x) { return x - std::floor(x); }

// --------------------------------------------------------------------- //

void criterion1() {
    const auto start = std::chrono::steady_clock::now();
    set_precision_bits(512);
    std::mt19937_64 rng(20260809);
    for (int trial = 0; trial < 50; ++trial) {
        // quadratic irrationals: sqrt of a non-square integer, fractional part
        BigInt n = BigInt(2) + BigInt(rng() % 1000000);
        BigFloat x = sqrt(BigFloat(n));
        x -= floor(x);
        if (x == 0) continue;
        const auto r = contfrac::expand(x, 40);
        const auto conv = r.convergents(41);
        BigInt p_prev = 1, q_prev = 0, p0 = 0, q0 = 1;
        for (std::size_t k = 1; k <= 40; ++k) {
            const BigInt& a = r.term(k);
            const BigInt pk = a * p0 + p_prev;
            const BigInt qk = a * q0 + q_prev;
            require(pk == conv[k - 1].p && qk == conv[k - 1].q,
                    "convergent recurrence mismatch");
            require(gcd(pk, qk) == 1, "convergents not coprime");
            const BigFloat err = abs(x - BigFloat(pk) / BigFloat(qk));
            require(err <= 1 / (BigFloat(conv[k - 1].q) * BigFloat(conv[k].q)),
                    "approximation bound violated at n=" + std::to_string(k));
            p_prev = p0;
            q_prev = q0;
            p0 = pk;
            q0 = qk;
        }
    }
    for (double C : {0.001, 0.5, 2.0, 100.0}) {
        const auto rep = contfrac::classify(RotationNumber::golden(), C, BigInt(1), 40);
        require(rep.david_constant == 0.0 && rep.in_theta_c,
                "golden mean must classify into every Theta_C");
    }
    require_runtime(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 5.0);
}

void criterion2() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> mag(0.2, 5.0), arg(0.0, 2 * M_PI);
    const auto alpha = RotationNumber::golden();
    double worst_resid = 0.0, worst_match = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 5);
        std::vector<polyfam::Complex> pts;
        for (int i = 0; i < d - 2; ++i) pts.push_back(std::polar(mag(rng), arg(rng)));
        polyfam::CriticalSpec spec{alpha, pts};
        const auto f = polyfam::from_critical_points(spec);
        for (const auto& c : f.critical_set())
            worst_resid = std::max(worst_resid,
                                   std::abs(f.derivative(c)) / (f.build_tolerance() / 1e-10));
        auto expect = pts;
        expect.push_back(polyfam::Complex(1.0));
        auto roots = polyfam::critical_points(f);
        std::vector<bool> used(roots.size(), false);
        for (const auto& e : expect) {
            double best = 1e300;
            std::size_t pick = 0;
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (used[j]) continue;
                if (std::abs(roots[j] - e) < best) {
                    best = std::abs(roots[j] - e);
                    pick = j;
                }
            }
            used[pick] = true;
            worst_match = std::max(worst_match, best);
        }
    }
    require(worst_resid <= 1.0, "relative critical residual above 1e-10: " +
                                    std::to_string(worst_resid * 1e-10));
    require(worst_match < 1e-8,
            "critical-point round trip error " + std::to_string(worst_match));
    polyfam::CriticalSpec quad{alpha, {}};
    const auto f2 = polyfam::from_critical_points(quad);
    require(std::abs(f2.coefficients()[1] + f2.multiplier() / 2.0) <= 1e-14,
            "d=2 closed form a2 = -e^{2 pi i alpha}/2 missed 1e-14");
    require_runtime(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 30.0);
}

void criterion3() {
    const double alpha_d = 0.5 * (std::sqrt(5.0) - 1.0);
    const auto alpha = RotationNumber::golden();
    const auto conv = alpha.convergents(12);
    const auto handle = circlemap::CircleMapHandle::rigid_rotation(alpha_d);
    for (int level = 1; level <= 10; ++level) {
        const auto part = circlemap::dynamical_partition(handle, alpha, level);
        // brute-force three-distance gaps of the backward point set
        const long count = part.q_n + part.q_n1;
        std::vector<double> pts(count);
        for (long k = 0; k < count; ++k) pts[k] = frac(-k * alpha_d);
        std::sort(pts.begin(), pts.end());
        std::vector<double> gaps(count);
        for (long i = 0; i + 1 < count; ++i) gaps[i] = pts[i + 1] - pts[i];
        gaps[count - 1] = 1.0 - pts.back() + pts.front();
        std::vector<double> lens;
        for (const auto& iv : part.intervals) lens.push_back(iv.len);
        require(lens.size() == gaps.size(), "interval count != gap count");
        std::sort(lens.begin(), lens.end());
        std::sort(gaps.begin(), gaps.end());
        for (std::size_t i = 0; i < lens.size(); ++i)
            require(std::abs(lens[i] - gaps[i]) <= 1e-12,
                    "length mismatch above 1e-12 at level " + std::to_string(level));
        // combinatorics: the partition build already certifies index gaps of
        // q_n / q_{n+1}; check the closest-return adjacency identities too.
        if (level >= 2) {
            const long q_n = static_cast<long>(conv[level - 1].q);
            const long q_prev = static_cast<long>(conv[level - 2].q);
            std::vector<std::pair<double, long>> sorted;
            for (long i = 0; i < q_n; ++i) sorted.emplace_back(frac(-i * alpha_d), i);
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t s = 0; s < sorted.size(); ++s) {
                const long j = sorted[s].second;
                const long k = sorted[(s + 1) % sorted.size()].second;
                const long lo = std::min(j, k), d = std::labs(j - k);
                const bool case_a = (d == q_prev && lo < q_n - q_prev);
                const bool case_b = (d == q_n - q_prev && lo < q_prev);
                require(case_a || case_b,
                        "adjacency identity failed at level " + std::to_string(level));
            }
        }
    }
}

void criterion4() {
    // rigid rotations: distortion exactly 1 (to 1e-14) on 10^4 quadruples
    const double alpha_d = 0.5 * (std::sqrt(5.0) - 1.0);
    const auto handle = circlemap::CircleMapHandle::rigid_rotation(alpha_d);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int tested = 0;
    while (tested < 10000) {
        double v[4] = {u(rng), u(rng), u(rng), u(rng)};
        std::sort(v, v + 4);
        if (v[1] - v[0] < 1e-6 || v[2] - v[1] < 1e-6 || v[3] - v[2] < 1e-6) continue;
        const long power = 1 + static_cast<long>(rng() % 100);
        const double dist = circlemap::distortion(v[0], v[1], v[2], v[3], handle, power);
        require(std::abs(dist - 1.0) <= 1e-14, "rotation distortion off by " +
                                                   std::to_string(std::abs(dist - 1.0)));
        ++tested;
    }

    // premodel: quadruples whose base interval has disjoint forward images
    const auto alpha = RotationNumber::golden();
    const auto tuned = blaschke::tune_rotation(blaschke::build_dg(0.0), alpha, 1e-9);
    const auto B = blaschke::build_dg(tuned.t);
    const auto m = B.circle_map();
    const auto conv = alpha.convergents(9);
    const long q8 = static_cast<long>(conv[7].q);  // 21
    const auto part = circlemap::dynamical_partition(m, alpha, 7, 1e-7);
    double max_distortion = 0.0;
    int samples = 0;
    for (std::size_t i = 0; i < part.intervals.size(); ++i) {
        // a, b = one partition interval: its first q_n forward images are
        // pairwise disjoint partition members; c, d extend to neighbors.
        const auto& iv = part.intervals[i];
        const auto& next = part.intervals[(i + 1) % part.intervals.size()];
        const auto& after = part.intervals[(i + 2) % part.intervals.size()];
        double a = iv.lo, b = iv.lo + iv.len;
        double c = next.lo + next.len, d = after.lo + after.len;
        if (!(a < b && b < c && c < d && d < a + 1.0)) {
            b = a + iv.len;
            c = b + next.len;
            d = c + after.len;
        }
        for (long power : {1L, q8 / 2, q8}) {
            const double v = circlemap::distortion(a, b, c, d, m, power);
            max_distortion = std::max(max_distortion, std::max(v, 1.0 / v));
            ++samples;
        }
    }
    require(samples > 0 && std::isfinite(max_distortion),
            "premodel distortion sweep produced no finite values");
    std::printf("       premodel distortion max over %d disjoint-orbit quadruples (m <= q_8 = %ld): %.4f\n",
                samples, q8, max_distortion);
}

void criterion5() {
    const auto start = std::chrono::steady_clock::now();
    const auto theta = RotationNumber::golden();
    polyfam::CriticalSpec spec{theta, {}};
    orbit::OrbitCache cache(polyfam::from_critical_points(spec), 10.0);

    const auto table = orbit::oscillation_table(cache, theta, 2000, 32);
    for (const auto& b : table.bins)
        if (b.count > 0)
            require(b.min_abs > 0.0, "an occupied oscillation bin has min |sigma| = 0");

    const auto curve = orbit::boundary_curve(cache, theta, 5000);
    require(orbit::jordan_proxy(curve, 0.05) > 0.0, "jordan proxy not positive");

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t m = rng() % 4000;
        const std::size_t j = m + 1 + rng() % 500;
        const std::size_t k = j + 1 + rng() % 499;
        const auto lhs = cache.sigma(k, m);
        const auto rhs = cache.sigma(k, j) + cache.sigma(j, m);
        require(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)),
                "telescoping identity above 1e-10 relative");
    }
    require_runtime(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 60.0);
}

void criterion6() {
    const auto theta = RotationNumber::from_coeffs({}, {BigInt(2), BigInt(3)});
    polyfam::CriticalSpec spec{theta, {}};
    const auto rep = orbit::perturbation_experiment(theta, spec, {4, 8, 16}, 5000, 200, 16);
    std::printf("       hausdorff matrix (N = 4, 8, 16):\n");
    for (std::size_t i = 0; i < 3; ++i)
        std::printf("         %.6e %.6e %.6e\n", rep.hausdorff_matrix[i][0],
                    rep.hausdorff_matrix[i][1], rep.hausdorff_matrix[i][2]);
    const double d01 = rep.hausdorff_matrix[0][1];
    const double d12 = rep.hausdorff_matrix[1][2];
    require(d01 > 0 && d12 > 0, "degenerate Hausdorff distances");
    require(d12 <= d01, "successive boundary distances did not decrease");
}

void criterion7() {
    // synthetic profile: exponent 2 within 1e-6
    const std::size_t m = 21;
    std::vector<double> lengths(m);
    for (std::size_t k = 1; k <= m; ++k) {
        const double mk = static_cast<double>(std::min(k, m - k + 1));
        lengths[k - 1] = 1.0 / (mk * mk);
    }
    const auto fit = circlemap::fit_saddle_lengths(lengths);
    require(std::abs(fit.exponent - 2.0) <= 1e-6,
            "synthetic exponent " + std::to_string(fit.exponent));

    // premodel at a rotation number with a spike coefficient
    const auto alpha = RotationNumber::from_coeffs(
        {BigInt(1), BigInt(1), BigInt(1), BigInt(20)}, {BigInt(1)});
    const auto tuned = blaschke::tune_rotation(blaschke::build_dg(0.0), alpha, 1e-10);
    const auto handle = blaschke::build_dg(tuned.t).circle_map();
    const auto p2 = circlemap::dynamical_partition(handle, alpha, 2, 1e-6);
    const auto p3 = circlemap::dynamical_partition(handle, alpha, 3, 1e-6);
    double best_exponent = 0.0;
    std::size_t best_pieces = 0;
    for (std::size_t idx = 0; idx < p2.intervals.size(); ++idx) {
        try {
            const auto f = circlemap::saddle_node_profile(p2, p3, idx);
            if (f.lengths.size() > best_pieces) {
                best_pieces = f.lengths.size();
                best_exponent = f.exponent;
            }
        } catch (const Error&) {
        }
    }
    require(best_pieces >= 10, "no interval split into a long tower");
    std::printf("       premodel tower of %zu pieces fitted exponent %.3f\n", best_pieces,
                best_exponent);
    require(best_exponent >= 1.7 && best_exponent <= 2.3,
            "fitted exponent " + std::to_string(best_exponent) + " outside [1.7, 2.3]");
}

void criterion8() {
    const auto start = std::chrono::steady_clock::now();
    const auto lin16 = qcgeom::make_linear_partition(16);
    const auto ident = qcgeom::build_polygon_map(lin16, lin16, 512);
    require(ident.report.max_dilatation == 1.0, "identity dilatation not exactly 1");
    require(ident.report.orientation_certificate, "identity orientation certificate");

    std::vector<double> Cs;
    for (std::size_t m : {8, 16, 32, 64, 128, 256}) {
        const auto built = qcgeom::build_polygon_map(qcgeom::make_saddle_partition(m, {}),
                                                     qcgeom::make_linear_partition(m), 512);
        require(built.report.orientation_certificate,
                "Jacobian sign failure at m=" + std::to_string(m));
        const double lm = std::log(static_cast<double>(m));
        Cs.push_back(built.report.max_dilatation / (1.0 + lm * lm));
    }
    double lnsum = 0.0;
    for (double c : Cs) lnsum += std::log(c);
    const double fit = std::exp(lnsum / Cs.size());
    std::printf("       growth-law constants:");
    for (double c : Cs) std::printf(" %.3f", c);
    std::printf(" (fit %.3f)\n", fit);
    for (double c : Cs)
        require(c / fit <= 2.0 && fit / c <= 2.0,
                "growth-law constant " + std::to_string(c) +
                    " departs from the fitted constant " + std::to_string(fit) +
                    " by more than a factor 2");
    require_runtime(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(),
        120.0);
}

void criterion9() {
    const auto alpha = RotationNumber::golden();
    const auto tuned = blaschke::tune_rotation(blaschke::build_dg(0.0), alpha, 1e-9);
    const auto handle = blaschke::build_dg(tuned.t).circle_map();
    std::vector<double> areas;
    double prev = 1e300;
    for (int level = 2; level <= 8; ++level) {
        const auto cx = blaschke::yoccoz_cells(handle, alpha, level);
        require(blaschke::cells_tile_without_overlap(cx),
                "cells overlap at level " + std::to_string(level));
        require(cx.y_area < prev,
                "cell area did not decrease at level " + std::to_string(level));
        prev = cx.y_area;
        areas.push_back(cx.y_area);
    }
    const double rate = blaschke::fitted_geometric_rate(areas);
    std::printf("       area(Y_n) levels 2..8 decay rate %.4f\n", rate);
    require(rate < 1.0, "fitted geometric rate not below 1");
}

void criterion10() {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "siegelab_acceptance_det";
    fs::remove_all(base);
    const std::vector<std::string> cmd = {"experiment", "--theta-period", "2,3",
                                          "--N-list", "4,8",  "--n",   "500",
                                          "--K",      "150",  "--bins", "16",
                                          "--seed",   "2024"};
    auto run_into = [&](const std::string& sub) {
        auto args = cmd;
        args.push_back("--out");
        args.push_back((base / sub).string());
        require(cli::run(args) == 0, "experiment run failed");
    };
    run_into("a");
    run_into("b");
    for (const char* name :
         {"hausdorff.csv", "oscillation_N4.csv", "oscillation_N8.csv", "run_meta.json"}) {
        std::ifstream fa(base / "a" / name, std::ios::binary);
        std::ifstream fb(base / "b" / name, std::ios::binary);
        std::ostringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        require(!sa.str().empty() && sa.str() == sb.str(),
                std::string("artifact bytes differ for ") + name);
    }
    fs::remove_all(base);
}

} // namespace

int main() {
    set_precision_bits(512);
    criterion(1, "continued-fraction suite at 512 bits", criterion1);
    criterion(2, "polynomial builder residuals and round trips", criterion2);
    criterion(3, "rigid-rotation partitions vs three-distance oracle", criterion3);
    criterion(4, "cross-ratio distortion bounds", criterion4);
    criterion(5, "oscillation bins, jordan proxy, telescoping", criterion5);
    criterion(6, "theta_N perturbation Hausdorff trend", criterion6);
    criterion(7, "saddle-node exponent fits", criterion7);
    criterion(8, "polygon qc growth law", criterion8);
    criterion(9, "yoccoz cell tiling and area decay", criterion9);
    criterion(10, "deterministic artifacts", criterion10);
    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
