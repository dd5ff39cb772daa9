#include "doctest.h"

#include <filesystem>
#include <string>

#include "archval/errors.hpp"
#include "archval/scenario.hpp"

using archval::ConfigError;
using archval::parse_scenario;
using archval::Scenario;
using archval::ScenarioParseError;
using archval::ValidationError;

namespace {

bool mentions(const ValidationError& error, const std::string& needle) {
    for (const auto& issue : error.issues()) {
        if (issue.find(needle) != std::string::npos) return true;
    }
    return false;
}

} // namespace

TEST_CASE("the bundled demo parses and prices correctly") {
    const Scenario& scenario = archval::f6_demo();
    CHECK(scenario.catalog.size() == 12);
    CHECK(scenario.simulation.lifetime == 20.0);
    CHECK(scenario.simulation.discount_rate == 0.02);
    CHECK(scenario.simulation.launch_rate == 30.0);
    CHECK(scenario.simulation.seed == 42);
    CHECK(scenario.simulation.trajectory_grid.size() == 20);
    CHECK(deployment_cost(scenario.architecture("monolithic").fractions[0], scenario.catalog,
                          scenario.simulation.launch_rate) == 178300.0);
    REQUIRE(scenario.sweeps.size() == 1);
    CHECK(scenario.find_sweep("f6tp_reliability") != nullptr);
    CHECK(scenario.find_sweep("nonsense") == nullptr);
}

TEST_CASE("the shipped data file matches the embedded fixture") {
    const auto path = std::filesystem::path(ARCHVAL_DATA_DIR) / "f6_demo.json";
    const Scenario from_file = archval::load_scenario(path);
    CHECK(serialize_scenario(from_file) == serialize_scenario(archval::f6_demo()));
}

TEST_CASE("round trip is the identity") {
    const std::string first = serialize_scenario(archval::f6_demo());
    const Scenario reloaded = parse_scenario(first, "round-trip");
    CHECK(serialize_scenario(reloaded) == first);
}

TEST_CASE("malformed json reports a position") {
    try {
        parse_scenario("{\"simulation\": ", "broken.json");
        FAIL("expected a parse error");
    } catch (const ScenarioParseError& error) {
        const std::string what = error.what();
        CHECK(what.find("broken.json") != std::string::npos);
        CHECK(what.find("parse error") != std::string::npos);
    }
}

TEST_CASE("negative mass names the component") {
    std::string text = archval::f6_demo_json();
    const auto pos = text.find("\"mass\": 50");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 10, "\"mass\": -50");
    try {
        parse_scenario(text, "bad");
        FAIL("expected a validation error");
    } catch (const ValidationError& error) {
        CHECK(mentions(error, "payload"));
        CHECK(mentions(error, "mass must be nonnegative"));
    }
}

TEST_CASE("unknown keys are rejected by name") {
    std::string text = archval::f6_demo_json();
    const auto pos = text.find("\"mass\": 50");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 10, "\"masss\": 50");
    try {
        parse_scenario(text, "bad");
        FAIL("expected a validation error");
    } catch (const ValidationError& error) {
        CHECK(mentions(error, "unknown key \"masss\""));
        // The original key is now missing too; both issues arrive at once.
        CHECK(mentions(error, "missing key \"mass\""));
        CHECK(error.issues().size() >= 2);
    }
}

TEST_CASE("unknown distribution kinds are rejected") {
    std::string text = archval::f6_demo_json();
    const auto pos = text.find("\"kind\": \"weibull\"");
    REQUIRE(pos != std::string::npos);
    std::string mutated = text;
    mutated.replace(pos, 17, "\"kind\": \"weibul\"");
    CHECK_THROWS_AS(parse_scenario(mutated, "bad"), ValidationError);
}

TEST_CASE("dangling architecture references are validation issues") {
    std::string text = archval::f6_demo_json();
    const auto pos = text.find("\"bus\": \"bus_monolithic\"");
    REQUIRE(pos != std::string::npos);
    std::string mutated = text;
    mutated.replace(pos, 23, "\"bus\": \"bus_x\"");
    try {
        parse_scenario(mutated, "bad");
        FAIL("expected a validation error");
    } catch (const ValidationError& error) {
        CHECK(mentions(error, "unknown bus \"bus_x\""));
    }
}

TEST_CASE("seed and runs must be integers") {
    std::string text = archval::f6_demo_json();
    const auto pos = text.find("\"runs\": 10000");
    REQUIRE(pos != std::string::npos);
    std::string mutated = text;
    mutated.replace(pos, 13, "\"runs\": 99.5");
    CHECK_THROWS_AS(parse_scenario(mutated, "bad"), ValidationError);
}

TEST_CASE("environment models parse, infer periods, and round trip") {
    const std::string text = R"({
      "simulation": {"lifetime": 5, "discount_rate": 0, "launch_rate": 0, "runs": 1, "seed": 1},
      "components": [
        {"name": "unit", "cost": 1, "mass": 1,
         "failure": {"kind": "point_mass", "time": 9}}
      ],
      "buses": [
        {"name": "carrier", "cost": 0, "mass": 0,
         "failure": {"kind": "point_mass", "time": 9}}
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
          {"requirements": [[{"demand": "L", "temperature": "H"}],
                            [{"demand": "H", "temperature": "L"}]]}
        ],
        "discount": 0.9
      }
    })";
    const Scenario scenario = parse_scenario(text, "env");
    REQUIRE(scenario.environment.has_value());
    CHECK(scenario.environment->periods == 2);
    CHECK(archval::heterogeneity_score(*scenario.environment) ==
          doctest::Approx(1.9).epsilon(1e-12));
    const std::string serialized = serialize_scenario(scenario);
    CHECK(serialize_scenario(parse_scenario(serialized, "env2")) == serialized);
}

TEST_CASE("environment levels outside the domain are issues") {
    const std::string text = R"({
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
        "parameters": [{"name": "demand", "levels": ["L", "H"]}],
        "stakeholders": [{"requirements": [[{"demand": "X"}]]}]
      }
    })";
    try {
        parse_scenario(text, "env");
        FAIL("expected a validation error");
    } catch (const ValidationError& error) {
        CHECK(mentions(error, "outside the domain"));
    }
}

TEST_CASE("stored sweeps referencing unknown names are issues") {
    std::string text = archval::f6_demo_json();
    const auto pos = text.find("\"from\": \"monolithic\"");
    REQUIRE(pos != std::string::npos);
    std::string mutated = text;
    mutated.replace(pos, 20, "\"from\": \"monolith\"");
    try {
        parse_scenario(mutated, "bad");
        FAIL("expected a validation error");
    } catch (const ValidationError& error) {
        CHECK(mentions(error, "unknown architecture \"monolith\""));
    }
}

TEST_CASE("parameter paths read and write scenario fields") {
    Scenario scenario = archval::f6_demo();
    CHECK(read_parameter(scenario, "simulation.lifetime") == 20.0);
    apply_parameter(scenario, "simulation.lifetime", 10.0);
    CHECK(scenario.simulation.lifetime == 10.0);

    CHECK(read_parameter(scenario, "components.payload.cost") == 27000.0);
    apply_parameter(scenario, "components.payload.cost", 1600.0);
    CHECK(scenario.catalog.at("payload").cost == 1600.0);

    CHECK(read_parameter(scenario, "tech_packages.f6tp.failure.scale") == 600.0);
    apply_parameter(scenario, "tech_packages.f6tp.failure.mean", 35.0);
    CHECK(read_parameter(scenario, "tech_packages.f6tp.failure.mean") ==
          doctest::Approx(35.0).epsilon(1e-12));
    CHECK(read_parameter(scenario, "tech_packages.f6tp.failure.shape") == 1.7);

    apply_parameter(scenario, "components.payload.obsolescence.sd", 2.0);
    CHECK(scenario.catalog.at("payload").obsolescence->lognormal_sd() == 2.0);
}

TEST_CASE("bad parameter paths raise configuration errors") {
    Scenario scenario = archval::f6_demo();
    CHECK_THROWS_AS(read_parameter(scenario, "simulation.runs"), ConfigError);
    CHECK_THROWS_AS(read_parameter(scenario, "components.f6tp.failure.scale"), ConfigError);
    CHECK_THROWS_AS(read_parameter(scenario, "buses.bus_payload.obsolescence.mean"), ConfigError);
    CHECK_THROWS_AS(read_parameter(scenario, "tech_packages.f6tp.failure.sd"), ConfigError);
    CHECK_THROWS_AS(apply_parameter(scenario, "components.payload", 1.0), ConfigError);
    CHECK_THROWS_AS(apply_parameter(scenario, "components.payload.cost", -5.0), ConfigError);
}

TEST_CASE("missing scenario files fail cleanly") {
    CHECK_THROWS_AS(archval::load_scenario("/nonexistent/never.json"), ScenarioParseError);
}
