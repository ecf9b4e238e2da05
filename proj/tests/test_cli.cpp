#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "siegelab/run.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("siegelab_test_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("classify subcommand") {
    TempDir dir("classify");
    const int rc = siegelab::cli::run({"classify", "--cf", "1,1,1,...", "--C", "2",
                                       "--depth", "12", "--out", dir.path.string()});
    CHECK(rc == 0);
    CHECK(fs::exists(dir.path / "classify.csv"));
    CHECK(fs::exists(dir.path / "run_meta.json"));
}

TEST_CASE("precision floor is enforced") {
    TempDir dir("prec");
    const int rc = siegelab::cli::run({"classify", "--cf", "1,1,...", "--precision-bits",
                                       "32", "--out", dir.path.string()});
    CHECK(rc != 0);
}

TEST_CASE("orbit subcommand emits oscillation table and curve") {
    TempDir dir("orbit");
    const int rc = siegelab::cli::run({"orbit", "--alpha", "golden", "--n", "400", "--K",
                                       "200", "--bins", "16", "--emit-curve", "--check",
                                       "--out", dir.path.string()});
    CHECK(rc == 0);
    CHECK(fs::exists(dir.path / "oscillation.csv"));
    CHECK(fs::exists(dir.path / "curve.svg"));
    const std::string svg = slurp(dir.path / "curve.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("timestamp") == std::string::npos);
}

TEST_CASE("partition subcommand with checks") {
    TempDir dir("part");
    const int rc = siegelab::cli::run({"partition", "--alpha", "golden", "--map",
                                       "rotation", "--level-max", "4", "--check", "--out",
                                       dir.path.string()});
    CHECK(rc == 0);
    CHECK(fs::exists(dir.path / "partition_level4.csv"));
}

TEST_CASE("qc subcommand") {
    TempDir dir("qc");
    const int rc = siegelab::cli::run({"qc", "--m", "16", "--pieces", "1", "--grid", "64",
                                       "--check", "--svg", "--out", dir.path.string()});
    CHECK(rc == 0);
    CHECK(fs::exists(dir.path / "qc.csv"));
    CHECK(fs::exists(dir.path / "qc_heatmap.svg"));
}

TEST_CASE("config file overrides flags") {
    TempDir dir("config");
    const fs::path cfg = dir.path / "cfg.json";
    {
        std::ofstream f(cfg);
        f << R"({"m": 8, "grid": 32})";
    }
    const int rc = siegelab::cli::run({"qc", "--m", "64", "--grid", "64", "--config",
                                       cfg.string(), "--out", dir.path.string()});
    CHECK(rc == 0);
    const std::string csv = slurp(dir.path / "qc.csv");
    CHECK(csv.find("\n8,") != std::string::npos);  // config m=8 won over --m 64
}

TEST_CASE("experiment artifacts are byte-identical across reruns") {
    TempDir dir1("det1"), dir2("det2");
    const std::vector<std::string> base = {
        "experiment", "--theta-period", "2,3",    "--N-list", "4,8", "--n", "300",
        "--K",        "100",            "--bins", "8",        "--seed", "42"};
    auto run_into = [&](const TempDir& d) {
        auto args = base;
        args.push_back("--out");
        args.push_back(d.path.string());
        REQUIRE(siegelab::cli::run(args) == 0);
    };
    run_into(dir1);
    run_into(dir2);
    for (const char* name : {"hausdorff.csv", "oscillation_N4.csv", "oscillation_N8.csv",
                             "run_meta.json"}) {
        CHECK(slurp(dir1.path / name) == slurp(dir2.path / name));
        CHECK(!slurp(dir1.path / name).empty());
    }
}

TEST_CASE("unknown family is a config error") {
    TempDir dir("bad");
    CHECK(siegelab::cli::run({"orbit", "--family", "septic", "--out",
                              dir.path.string()}) != 0);
}
