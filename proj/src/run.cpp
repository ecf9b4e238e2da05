#include "siegelab/run.hpp"

#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "siegelab/blaschke.hpp"
#include "siegelab/circlemap.hpp"
#include "siegelab/contfrac.hpp"
#include "siegelab/csv.hpp"
#include "siegelab/orbit.hpp"
#include "siegelab/polyfam.hpp"
#include "siegelab/qcgeom.hpp"
#include "siegelab/svg.hpp"

namespace siegelab::cli {

namespace fs = std::filesystem;
using siegelab::BigFloat;
using siegelab::BigInt;
using contfrac::RotationNumber;

namespace {

struct CommonOpts {
    unsigned precision_bits = 512;
    std::string out = "out";
    std::uint64_t seed = 1;
    bool check = false;
    bool svg = false;
    std::string config_file;
};

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--precision-bits", c.precision_bits, "working precision in bits (>= 64)");
    sub->add_option("--out", c.out, "output directory");
    sub->add_option("--seed", c.seed, "seed for randomized sweeps");
    sub->add_flag("--check", c.check, "run invariant checks and fail loudly");
    sub->add_flag("--svg", c.svg, "emit SVG artifacts");
    sub->add_option("--config", c.config_file, "JSON config file; overrides flags");
}

void apply_config(CommonOpts& c, CLI::App* sub) {
    if (c.config_file.empty()) return;
    std::ifstream in(c.config_file);
    if (!in) throw ConfigParse("cannot open config file " + c.config_file);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigParse(std::string("config JSON: ") + e.what());
    }
    if (j.contains("precision_bits")) c.precision_bits = j["precision_bits"].get<unsigned>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("check")) c.check = j["check"].get<bool>();
    if (j.contains("svg")) c.svg = j["svg"].get<bool>();
    // Subcommand-specific overrides: match option names without dashes.
    for (auto& [key, value] : j.items()) {
        const std::string flag = "--" + key;
        if (CLI::Option* opt = sub->get_option_no_throw(flag)) {
            if (key == "precision_bits" || key == "out" || key == "seed" || key == "check" ||
                key == "svg")
                continue;
            std::ostringstream text;
            if (value.is_string())
                text << value.get<std::string>();
            else
                text << value;
            opt->clear();
            opt->add_result(text.str());
        }
    }
}

void finish_common(const CommonOpts& c, const std::string& command) {
    if (c.precision_bits < 64) throw ConfigParse("precision_bits must be >= 64");
    set_precision_bits(c.precision_bits);
    fs::create_directories(c.out);
    nlohmann::json meta;
    meta["command"] = command;
    meta["seed"] = c.seed;
    meta["precision_bits"] = c.precision_bits;
    meta["generator"] = "mt19937_64";
    std::ofstream f(fs::path(c.out) / "run_meta.json", std::ios::binary);
    f << meta.dump(2) << '\n';
}

std::ofstream open_out(const CommonOpts& c, const std::string& name) {
    std::ofstream f(fs::path(c.out) / name, std::ios::binary);
    if (!f) throw IoFailure("cannot open output file " + name);
    return f;
}

std::vector<BigInt> parse_int_list(const std::string& text, bool* golden_tail = nullptr) {
    std::vector<BigInt> out;
    if (golden_tail) *golden_tail = false;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "...") {
            if (golden_tail) *golden_tail = true;
            break;
        }
        try {
            out.emplace_back(tok);
        } catch (...) {
            throw ConfigParse("bad integer '" + tok + "' in list");
        }
    }
    return out;
}

RotationNumber parse_alpha(const std::string& alpha, const std::string& prefix,
                           const std::string& period) {
    if (alpha == "golden" || (alpha.empty() && prefix.empty() && period.empty()))
        return RotationNumber::golden();
    if (!alpha.empty() && alpha.rfind("cf:", 0) == 0) {
        bool tail = false;
        auto coeffs = parse_int_list(alpha.substr(3), &tail);
        return RotationNumber::from_coeffs(std::move(coeffs),
                                           tail ? std::vector<BigInt>{BigInt(1)}
                                                : std::vector<BigInt>{});
    }
    if (!alpha.empty() && alpha != "golden")
        throw ConfigParse("unknown alpha spec '" + alpha + "' (use golden or cf:a1,a2,...)");
    std::vector<BigInt> pre = parse_int_list(prefix);
    std::vector<BigInt> per = parse_int_list(period);
    if (per.empty()) per = {BigInt(1)};
    return RotationNumber::from_coeffs(std::move(pre), std::move(per));
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
    // "re,im;re,im;..."
    std::vector<std::complex<double>> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok.empty()) continue;
        const auto comma = tok.find(',');
        try {
            if (comma == std::string::npos) {
                out.emplace_back(std::stod(tok), 0.0);
            } else {
                out.emplace_back(std::stod(tok.substr(0, comma)),
                                 std::stod(tok.substr(comma + 1)));
            }
        } catch (...) {
            throw ConfigParse("bad complex '" + tok + "'");
        }
    }
    return out;
}

blaschke::BlaschkeProduct parse_model(const std::string& map_spec,
                                      const RotationNumber& alpha, double tune_tol) {
    if (map_spec.rfind("dg:", 0) == 0) return blaschke::build_dg(std::stod(map_spec.substr(3)));
    if (map_spec == "dg") {
        const auto tuned = blaschke::tune_rotation(blaschke::build_dg(0.0), alpha, tune_tol);
        return blaschke::build_dg(tuned.t);
    }
    if (map_spec.rfind("blaschke:", 0) == 0) {
        std::ifstream in(map_spec.substr(9));
        if (!in) throw ConfigParse("cannot open model file");
        std::stringstream buf;
        buf << in.rdbuf();
        return blaschke::blaschke_from_json(buf.str());
    }
    throw ConfigParse("unknown map spec '" + map_spec + "'");
}

// ---------------------------------------------------------------------- //

int cmd_classify(const CommonOpts& c, const std::string& cf, double C,
                 const std::string& bound, std::size_t depth) {
    finish_common(c, "classify");
    bool tail = false;
    auto coeffs = parse_int_list(cf, &tail);
    RotationNumber r = RotationNumber::from_coeffs(
        std::move(coeffs), tail ? std::vector<BigInt>{BigInt(1)} : std::vector<BigInt>{});
    const std::size_t d = tail ? depth : std::min(depth, r.stored_terms());
    const auto rep = contfrac::classify(r, C, BigInt(bound), d);
    {
        auto f = open_out(c, "classify.csv");
        contfrac::write_csv(f, r, d > 1 ? d - 1 : d);
    }
    std::cout << "david_constant=" << csv::format_double(rep.david_constant)
              << (rep.in_theta_c ? " in" : " not in") << " Theta_" << C;
    if (rep.bounded_by)
        std::cout << (rep.within_bound ? ", bounded type, " : ", exceeds bound, ")
                  << "sup a = " << rep.bounded_by->str();
    std::cout << ", brjuno_partial=" << csv::format_double(rep.brjuno_partial) << '\n';
    if (c.check) {
        // Monotonicity of the David constant in depth.
        double prev = 0.0;
        for (std::size_t k = 1; k <= d; ++k) {
            const auto r2 = contfrac::classify(r, C, BigInt(bound), k);
            if (r2.david_constant + 1e-15 < prev) {
                std::cerr << "check failed: david constant not monotone\n";
                return 1;
            }
            prev = r2.david_constant;
        }
    }
    return 0;
}

int cmd_poly(const CommonOpts& c, const std::string& alpha, const std::string& prefix,
             const std::string& period, const std::string& critical) {
    finish_common(c, "poly");
    polyfam::CriticalSpec spec{parse_alpha(alpha, prefix, period),
                               parse_complex_list(critical)};
    const auto f = polyfam::from_critical_points(spec);
    {
        auto out = open_out(c, "poly.json");
        out << polyfam::to_json(f) << '\n';
    }
    double worst = 0.0;
    for (const auto& cp : f.critical_set())
        worst = std::max(worst, std::abs(f.derivative(cp)));
    std::cout << "degree=" << f.degree() << " max|f'(c_i)|=" << csv::format_double(worst)
              << '\n';
    if (c.check && worst > f.build_tolerance()) {
        std::cerr << "check failed: critical residual above tolerance\n";
        return 1;
    }
    if (c.check) {
        std::mt19937_64 rng(c.seed);
        std::uniform_real_distribution<double> mag(0.2, 5.0), arg(0.0, 2 * M_PI);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::complex<double>> pts;
            const int d = 2 + static_cast<int>(rng() % 5);
            for (int i = 0; i < d - 2; ++i)
                pts.push_back(std::polar(mag(rng), arg(rng)));
            polyfam::CriticalSpec s{spec.alpha, pts};
            const auto g = polyfam::from_critical_points(s);
            for (const auto& cp : g.critical_set())
                if (std::abs(g.derivative(cp)) > g.build_tolerance()) {
                    std::cerr << "check failed: random spec residual\n";
                    return 1;
                }
        }
    }
    return 0;
}

int cmd_orbit(const CommonOpts& c, const std::string& alpha, const std::string& prefix,
              const std::string& period, const std::string& family,
              const std::string& spec_file, std::size_t n, std::size_t K, std::size_t bins,
              double escape, bool emit_curve) {
    finish_common(c, "orbit");
    RotationNumber theta = parse_alpha(alpha, prefix, period);
    polyfam::CriticalSpec spec{theta, {}};
    if (!spec_file.empty()) {
        std::ifstream in(spec_file);
        std::stringstream buf;
        buf << in.rdbuf();
        spec = polyfam::critical_spec_from_json(buf.str());
        theta = spec.alpha;
    } else if (family != "quad") {
        throw ConfigParse("unknown family '" + family + "' (use quad or --spec)");
    }
    auto f = polyfam::from_critical_points(spec);
    orbit::OrbitCache cache = escape > 0 ? orbit::OrbitCache(f, escape) : orbit::OrbitCache(f);
    const auto table = orbit::oscillation_table(cache, theta, K, bins);
    {
        auto out = open_out(c, "oscillation.csv");
        orbit::write_csv(out, table);
    }
    const auto curve = orbit::boundary_curve(cache, theta, n);
    if (emit_curve || c.svg) {
        auto out = open_out(c, "curve.svg");
        orbit::write_svg(out, curve);
    }
    const double proxy = orbit::jordan_proxy(curve, 0.05);
    std::cout << "orbit n=" << n << " max_phase_gap=" << csv::format_double(curve.max_phase_gap)
              << " jordan_proxy(0.05)=" << csv::format_double(proxy) << '\n';
    if (c.check) {
        for (const auto& b : table.bins)
            if (b.count > 0 && !(b.min_abs > 0)) {
                std::cerr << "check failed: an occupied oscillation bin hit zero\n";
                return 1;
            }
        if (!(proxy > 0)) {
            std::cerr << "check failed: jordan proxy not positive\n";
            return 1;
        }
    }
    return 0;
}

int cmd_partition(const CommonOpts& c, const std::string& alpha, const std::string& prefix,
                  const std::string& period, const std::string& map_spec, int level_max,
                  double tune_tol) {
    finish_common(c, "partition");
    const RotationNumber a = parse_alpha(alpha, prefix, period);
    circlemap::CircleMapHandle handle = [&] {
        if (map_spec == "rotation")
            return circlemap::CircleMapHandle::rigid_rotation(
                static_cast<double>(a.value()));
        return parse_model(map_spec, a, tune_tol).circle_map();
    }();
    for (int level = 1; level <= level_max; ++level) {
        const auto part = circlemap::dynamical_partition(handle, a, level);
        auto out = open_out(c, "partition_level" + std::to_string(level) + ".csv");
        circlemap::write_csv(out, part);
        std::cout << "level " << level << ": " << part.intervals.size()
                  << " intervals, commensurability="
                  << csv::format_double(circlemap::commensurability_report(part)) << '\n';
        if (c.check && std::abs(part.total_length() - 1.0) > 1e-10) {
            std::cerr << "check failed: partition does not tile the circle\n";
            return 1;
        }
    }
    return 0;
}

int cmd_blaschke(const CommonOpts& c, const std::string& alpha, const std::string& prefix,
                 const std::string& period, const std::string& map_spec, double tol,
                 std::size_t samples) {
    finish_common(c, "blaschke");
    const RotationNumber a = parse_alpha(alpha, prefix, period);
    blaschke::BlaschkeProduct base =
        map_spec.empty() ? blaschke::build_dg(0.0) : parse_model(map_spec, a, tol);
    const auto tuned = blaschke::tune_rotation(base, a, tol);
    const auto model = base.rotated(tuned.t - base.lambda_phase());
    {
        auto out = open_out(c, "model.json");
        out << blaschke::to_json(model) << '\n';
    }
    const auto surgery = blaschke::make_surgery_model(model, a, samples);
    const double glue = blaschke::surgery_glue_residual(surgery);
    {
        auto out = open_out(c, "blaschke_report.csv");
        csv::Writer w(out, {"t", "rho", "rho_error", "bracket_width", "bisections", "plateau",
                            "glue_residual"});
        w.row()
            .field(tuned.t)
            .field(tuned.rho)
            .field(tuned.rho_error)
            .field(tuned.bracket_width)
            .field(tuned.bisections)
            .field(static_cast<long>(tuned.plateau ? 1 : 0))
            .field(glue);
    }
    std::cout << "tuned t=" << csv::format_double(tuned.t)
              << " glue_residual=" << csv::format_double(glue) << '\n';
    if (c.check && glue > 1e-6) {
        std::cerr << "check failed: surgery glue residual too large\n";
        return 1;
    }
    return 0;
}

int cmd_cells(const CommonOpts& c, const std::string& alpha, const std::string& prefix,
              const std::string& period, const std::string& map_spec, int level_lo,
              int level_hi, double tune_tol) {
    finish_common(c, "cells");
    const RotationNumber a = parse_alpha(alpha, prefix, period);
    circlemap::CircleMapHandle handle = [&] {
        if (map_spec == "rotation")
            return circlemap::CircleMapHandle::rigid_rotation(static_cast<double>(a.value()));
        return parse_model(map_spec, a, tune_tol).circle_map();
    }();
    std::vector<blaschke::CellComplex> levels;
    for (int level = level_lo; level <= level_hi; ++level) {
        levels.push_back(blaschke::yoccoz_cells(handle, a, level));
        if (c.svg) {
            auto out = open_out(c, "cells_level" + std::to_string(level) + ".svg");
            blaschke::write_cells_svg(out, levels.back());
        }
        if (c.check && !blaschke::cells_tile_without_overlap(levels.back())) {
            std::cerr << "check failed: cells overlap at level " << level << '\n';
            return 1;
        }
    }
    {
        auto out = open_out(c, "cells.csv");
        blaschke::write_cells_csv(out, levels);
    }
    std::vector<double> areas;
    for (const auto& cx : levels) areas.push_back(cx.y_area);
    std::cout << "levels " << level_lo << ".." << level_hi
              << " decay_rate=" << csv::format_double(blaschke::fitted_geometric_rate(areas))
              << '\n';
    return 0;
}

int cmd_qc(const CommonOpts& c, std::size_t m, std::size_t pieces, std::size_t grid) {
    finish_common(c, "qc");
    std::vector<std::size_t> breaks;
    for (std::size_t i = 1; i < pieces; ++i) breaks.push_back(1 + i * (m - 1) / pieces);
    const auto src = qcgeom::make_saddle_partition(m, breaks);
    const auto dst = qcgeom::make_linear_partition(m);
    const auto built = qcgeom::build_polygon_map(src, dst, grid);
    {
        auto out = open_out(c, "qc.csv");
        qcgeom::write_csv(out, {{m, built.report}}, pieces);
    }
    if (c.svg) {
        auto out = open_out(c, "qc_heatmap.svg");
        qcgeom::write_svg(out, [&](qcgeom::Vec2 p) { return built.map->eval(p); }, 64);
    }
    std::cout << "m=" << m << " pieces=" << pieces
              << " max_dilatation=" << csv::format_double(built.report.max_dilatation)
              << " edge_residual=" << csv::format_double(built.report.edge_linearity_residual)
              << (built.report.orientation_certificate ? " orientation_ok" : " ORIENTATION_FAIL")
              << '\n';
    if (c.check &&
        (!built.report.orientation_certificate || built.report.edge_linearity_residual > 1e-9)) {
        std::cerr << "check failed: qc map certificates\n";
        return 1;
    }
    return 0;
}

int cmd_experiment(const CommonOpts& c, const std::string& prefix, const std::string& period,
                   const std::string& N_list_text, const std::string& critical, std::size_t n,
                   std::size_t K, std::size_t bins) {
    finish_common(c, "experiment");
    const RotationNumber theta = parse_alpha("", prefix, period);
    polyfam::CriticalSpec spec{theta, parse_complex_list(critical)};
    std::vector<std::size_t> N_list;
    for (const BigInt& v : parse_int_list(N_list_text))
        N_list.push_back(static_cast<std::size_t>(v));
    const auto rep = orbit::perturbation_experiment(theta, spec, N_list, n, K, bins);
    {
        auto out = open_out(c, "hausdorff.csv");
        std::vector<std::string> header{"N"};
        for (std::size_t N : N_list) header.push_back("d_to_N" + std::to_string(N));
        csv::Writer w(out, header);
        for (std::size_t i = 0; i < N_list.size(); ++i) {
            auto row = w.row();
            row.field(N_list[i]);
            for (std::size_t j = 0; j < N_list.size(); ++j)
                row.field(rep.hausdorff_matrix[i][j]);
        }
    }
    for (std::size_t i = 0; i < N_list.size(); ++i) {
        auto out = open_out(c, "oscillation_N" + std::to_string(N_list[i]) + ".csv");
        orbit::write_csv(out, rep.tables[i]);
        if (c.svg) {
            auto svg_out = open_out(c, "curve_N" + std::to_string(N_list[i]) + ".svg");
            orbit::write_svg(svg_out, rep.curves[i]);
        }
    }
    std::cout << "experiment N={";
    for (std::size_t i = 0; i < N_list.size(); ++i)
        std::cout << (i ? "," : "") << N_list[i];
    std::cout << "} successive distances:";
    for (std::size_t i = 0; i + 1 < N_list.size(); ++i)
        std::cout << ' ' << csv::format_double(rep.hausdorff_matrix[i][i + 1]);
    std::cout << '\n';
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"numerical laboratory for Siegel disks of polynomial maps"};
    app.require_subcommand(1);

    CommonOpts c;

    // classify
    auto* classify = app.add_subcommand("classify", "continued-fraction arithmetic class");
    std::string cf = "1,1,1,...";
    double C = 1.0;
    std::string bound = "1000000";
    std::size_t depth = 40;
    classify->add_option("--cf", cf, "coefficients, e.g. 1,2,3 or 1,1,1,...");
    classify->add_option("--C", C, "David-class constant");
    classify->add_option("--bound", bound, "bounded-type threshold");
    classify->add_option("--depth", depth, "coefficients to inspect");
    add_common(classify, c);

    // poly
    auto* poly = app.add_subcommand("poly", "build a Siegel polynomial from critical data");
    std::string alpha = "golden", aprefix, aperiod, critical;
    poly->add_option("--alpha", alpha, "golden or cf:a1,a2,...");
    poly->add_option("--alpha-prefix", aprefix, "prefix coefficients");
    poly->add_option("--alpha-period", aperiod, "periodic tail coefficients");
    poly->add_option("--critical", critical, "extra critical points re,im;re,im;...");
    add_common(poly, c);

    // orbit
    auto* orbit_cmd = app.add_subcommand("orbit", "critical orbit, oscillation, boundary curve");
    std::string family = "quad", spec_file;
    std::size_t n = 5000, K = 2000, bins = 32;
    double escape = 0.0;
    bool emit_curve = false;
    orbit_cmd->add_option("--alpha", alpha, "golden or cf:...");
    orbit_cmd->add_option("--alpha-prefix", aprefix, "prefix coefficients");
    orbit_cmd->add_option("--alpha-period", aperiod, "periodic tail coefficients");
    orbit_cmd->add_option("--family", family, "quad (degree-2 normal form)");
    orbit_cmd->add_option("--spec", spec_file, "critical spec JSON file");
    orbit_cmd->add_option("--n-iter,--n", n, "boundary curve samples");
    orbit_cmd->add_option("--K", K, "oscillation max index");
    orbit_cmd->add_option("--bins", bins, "oscillation bins");
    orbit_cmd->add_option("--escape", escape, "escape radius (0 = default bound)");
    orbit_cmd->add_flag("--emit-curve", emit_curve, "write curve.svg");
    add_common(orbit_cmd, c);

    // partition
    auto* part = app.add_subcommand("partition", "dynamical partitions of a circle map");
    std::string map_spec = "rotation";
    int level_max = 5;
    double tune_tol = 1e-9;
    part->add_option("--alpha", alpha, "golden or cf:...");
    part->add_option("--alpha-prefix", aprefix, "prefix coefficients");
    part->add_option("--alpha-period", aperiod, "periodic tail coefficients");
    part->add_option("--map", map_spec, "rotation | dg | dg:<t> | blaschke:<file>");
    part->add_option("--level-max", level_max, "deepest level");
    part->add_option("--tune-tol", tune_tol, "rotation tuning tolerance");
    add_common(part, c);

    // blaschke
    auto* bl = app.add_subcommand("blaschke", "tune a premodel and build the surgery map");
    std::string bl_map;
    double bl_tol = 1e-9;
    std::size_t bl_samples = 4096;
    bl->add_option("--alpha", alpha, "golden or cf:...");
    bl->add_option("--alpha-prefix", aprefix, "prefix coefficients");
    bl->add_option("--alpha-period", aperiod, "periodic tail coefficients");
    bl->add_option("--map", bl_map, "dg | dg:<t> | blaschke:<file> (default dg family)");
    bl->add_option("--tol", bl_tol, "tuning tolerance");
    bl->add_option("--samples", bl_samples, "conjugacy sample count");
    add_common(bl, c);

    // cells
    auto* cells = app.add_subcommand("cells", "Yoccoz cells and area decay");
    int level_lo = 2, level_hi = 8;
    cells->add_option("--alpha", alpha, "golden or cf:...");
    cells->add_option("--alpha-prefix", aprefix, "prefix coefficients");
    cells->add_option("--alpha-period", aperiod, "periodic tail coefficients");
    cells->add_option("--map", map_spec, "rotation | dg | dg:<t> | blaschke:<file>");
    cells->add_option("--level-lo", level_lo, "first level");
    cells->add_option("--level-hi", level_hi, "last level");
    cells->add_option("--tune-tol", tune_tol, "rotation tuning tolerance");
    add_common(cells, c);

    // qc
    auto* qc = app.add_subcommand("qc", "polygon quasiconformal map report");
    std::size_t qc_m = 64, qc_pieces = 1, qc_grid = 256;
    qc->add_option("--m", qc_m, "bottom partition size");
    qc->add_option("--pieces", qc_pieces, "saddle-node piece count");
    qc->add_option("--grid", qc_grid, "dilatation sample grid");
    add_common(qc, c);

    // experiment
    auto* exp = app.add_subcommand("experiment", "theta_N perturbation study");
    std::string N_list_text = "4,8,16";
    exp->add_option("--theta-prefix", aprefix, "prefix coefficients of theta");
    exp->add_option("--theta-period", aperiod, "periodic tail of theta");
    exp->add_option("--N-list", N_list_text, "truncation depths");
    exp->add_option("--critical", critical, "extra critical points re,im;...");
    exp->add_option("--n-iter,--n", n, "boundary curve samples");
    exp->add_option("--K", K, "oscillation max index");
    exp->add_option("--bins", bins, "oscillation bins");
    add_common(exp, c);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        apply_config(c, sub);
        if (sub == classify) return cmd_classify(c, cf, C, bound, depth);
        if (sub == poly) return cmd_poly(c, alpha, aprefix, aperiod, critical);
        if (sub == orbit_cmd)
            return cmd_orbit(c, alpha, aprefix, aperiod, family, spec_file, n, K, bins, escape,
                             emit_curve);
        if (sub == part) return cmd_partition(c, alpha, aprefix, aperiod, map_spec, level_max,
                                              tune_tol);
        if (sub == bl) return cmd_blaschke(c, alpha, aprefix, aperiod, bl_map, bl_tol, bl_samples);
        if (sub == cells)
            return cmd_cells(c, alpha, aprefix, aperiod, map_spec, level_lo, level_hi, tune_tol);
        if (sub == qc) return cmd_qc(c, qc_m, qc_pieces, qc_grid);
        if (sub == exp)
            return cmd_experiment(c, aprefix, aperiod, N_list_text, critical, n, K, bins);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace siegelab::cli
