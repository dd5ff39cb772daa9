#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "archval/cli.hpp"
#include "archval/scenario.hpp"

namespace fs = std::filesystem;

namespace {

int cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"archval"};
    for (const auto& arg : args) argv.push_back(arg.c_str());
    return archval::run_cli(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("archval_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path demo_path() { return fs::path(ARCHVAL_DATA_DIR) / "f6_demo.json"; }

} // namespace

TEST_CASE("validate exits 0 on the bundled scenario and 1 on a broken one") {
    CHECK(cli({"validate", "-s", demo_path().string()}) == 0);

    TempDir tmp;
    const auto broken = tmp.path / "broken.json";
    std::ofstream(broken) << "{\"simulation\": {}}";
    CHECK(cli({"validate", "-s", broken.string()}) == 1);
    CHECK(cli({"validate", "-s", (tmp.path / "missing.json").string()}) == 1);
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({}) == 2);
    CHECK(cli({"validate"}) == 2);              // missing -s
    CHECK(cli({"frobnicate", "-s", "x"}) == 2); // unknown subcommand
    CHECK(cli({"value", "-s", demo_path().string(), "--from", "monolithic"}) == 2);
}

TEST_CASE("value emits a byte-stable csv and decision report") {
    TempDir out_a;
    TempDir out_b;
    const std::vector<std::string> base{"value",  "-s",   demo_path().string(),
                                        "--from", "monolithic", "--to",
                                        "fractionated", "--runs", "60",
                                        "--seed", "42"};
    auto with_out = [&](const TempDir& dir) {
        auto args = base;
        args.insert(args.end(), {"-o", dir.path.string()});
        return args;
    };
    CHECK(cli(with_out(out_a)) == 0);
    CHECK(cli(with_out(out_b)) == 0);

    const std::string csv_a = slurp(out_a.path / "value.csv");
    CHECK(csv_a == slurp(out_b.path / "value.csv"));
    CHECK(slurp(out_a.path / "decision.txt") == slurp(out_b.path / "decision.txt"));
    CHECK(csv_a.rfind("year,mean,sd,q05,q25,q50,q75,q95\n", 0) == 0);
    CHECK(std::count(csv_a.begin(), csv_a.end(), '\n') == 21); // header + 20 years

    const std::string report = slurp(out_a.path / "decision.txt");
    CHECK(report.find("transition: monolithic -> fractionated") != std::string::npos);
    CHECK(report.find("kind: fractionation") != std::string::npos);
    CHECK(report.find("recommend:") != std::string::npos);
}

TEST_CASE("value results are identical across worker thread counts") {
    TempDir serial;
    TempDir threaded;
    setenv("ARCHVAL_THREADS", "1", 1);
    CHECK(cli({"value", "-s", demo_path().string(), "--from", "monolithic", "--to",
               "fractionated", "--runs", "80", "-o", serial.path.string()}) == 0);
    setenv("ARCHVAL_THREADS", "4", 1);
    CHECK(cli({"value", "-s", demo_path().string(), "--from", "monolithic", "--to",
               "fractionated", "--runs", "80", "-o", threaded.path.string()}) == 0);
    unsetenv("ARCHVAL_THREADS");
    CHECK(slurp(serial.path / "value.csv") == slurp(threaded.path / "value.csv"));
    CHECK(slurp(serial.path / "decision.txt") == slurp(threaded.path / "decision.txt"));
}

TEST_CASE("simulate writes one trajectory row per year per architecture") {
    TempDir out;
    CHECK(cli({"simulate", "-s", demo_path().string(), "-a", "monolithic", "-a", "fractionated",
               "--runs", "50", "--grid-years", "1,5,10,20", "-o", out.path.string()}) == 0);
    const std::string csv = slurp(out.path / "trajectory.csv");
    CHECK(csv.rfind("year,architecture,mean,sd,q05,q25,q50,q75,q95\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9); // header + 2 archs * 4 years
    CHECK(csv.find(",monolithic,") != std::string::npos);
    CHECK(csv.find(",fractionated,") != std::string::npos);
    CHECK(cli({"simulate", "-s", demo_path().string(), "-a", "no_such_arch", "--runs", "10",
               "-o", out.path.string()}) == 1);
}

TEST_CASE("sweep runs stored specs by name and appends the crossing comment") {
    TempDir out;
    CHECK(cli({"sweep", "-s", demo_path().string(), "--name", "f6tp_reliability", "--runs", "40",
               "-o", out.path.string()}) == 0);
    const std::string csv = slurp(out.path / "sweep.csv");
    CHECK(csv.rfind("tech_packages.f6tp.failure.mean,tech_packages.f6tp.failure.shape,"
                    "mean,sd,q05,q95\n",
                    0) == 0);
    CHECK(csv.find("# zero_crossing=") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 22); // header + 20 rows + comment
}

TEST_CASE("sweep accepts explicit parameters") {
    TempDir out;
    CHECK(cli({"sweep", "-s", demo_path().string(), "--param", "components.payload.cost",
               "--values", "1600,27000", "--from", "monolithic", "--to", "fractionated",
               "--runs", "30", "-o", out.path.string()}) == 0);
    const std::string csv = slurp(out.path / "sweep.csv");
    CHECK(csv.rfind("components.payload.cost,mean,sd,q05,q95\n", 0) == 0);
    CHECK(cli({"sweep", "-s", demo_path().string(), "--param", "components.payload.cost",
               "--values", "not,numbers", "--from", "monolithic", "--to", "fractionated",
               "-o", out.path.string()}) == 1);
    CHECK(cli({"sweep", "-s", demo_path().string(), "-o", out.path.string()}) == 1);
}

TEST_CASE("env-states prints the state table when a model is declared") {
    CHECK(cli({"env-states", "-s", demo_path().string()}) == 1); // no environment section

    TempDir tmp;
    const auto path = tmp.path / "env.json";
    std::ofstream(path) << R"({
      "simulation": {"lifetime": 5, "discount_rate": 0, "launch_rate": 0, "runs": 1, "seed": 1},
      "components": [
        {"name": "unit", "cost": 1, "mass": 1, "failure": {"kind": "point_mass", "time": 9}}
      ],
      "buses": [
        {"name": "carrier", "cost": 0, "mass": 0, "failure": {"kind": "point_mass", "time": 9}}
      ],
      "architectures": [
        {"name": "solo", "fractions": [{"components": ["unit"], "bus": "carrier"}]}
      ],
      "environment": {
        "parameters": [
          {"name": "demand", "levels": ["L", "H"]},
          {"name": "temperature", "levels": ["L", "H"]}
        ],
        "stakeholders": [
          {"requirements": [[{"demand": "L", "temperature": "L"}],
                            [{"demand": "L", "temperature": "H"}]]},
          {"requirements": [[{"demand": "H", "temperature": "L"}],
                            [{"demand": "H", "temperature": "H"}]]}
        ]
      }
    })";
    CHECK(cli({"env-states", "-s", path.string()}) == 0);
}
