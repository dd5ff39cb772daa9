#include "doctest.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "archval/errors.hpp"
#include "archval/rng.hpp"
#include "archval/scenario.hpp"
#include "archval/sensitivity.hpp"

using archval::ConfigError;
using archval::find_zero_crossing;
using archval::Scenario;
using archval::sweep;
using archval::SweepAxis;
using archval::SweepPoint;
using archval::SweepResult;

namespace {

SweepResult rows_1d(std::vector<std::pair<double, double>> axis_and_mean) {
    SweepResult result;
    result.axis_paths = {"x"};
    for (const auto& [axis, mean] : axis_and_mean) {
        SweepPoint point;
        point.axis = {axis};
        point.value.mean = mean;
        result.points.push_back(point);
    }
    return result;
}

} // namespace

TEST_CASE("a three-value axis yields three ordered rows") {
    const auto& scenario = archval::f6_demo();
    const SweepAxis axis{"tech_packages.f6tp.failure.mean", {10.0, 35.0, 100.0}};
    const auto result =
        sweep(scenario, "monolithic", "fractionated", axis, std::nullopt, std::int64_t{100});
    REQUIRE(result.points.size() == 3);
    CHECK(result.axis_paths == std::vector<std::string>{"tech_packages.f6tp.failure.mean"});
    CHECK(result.points[0].axis == std::vector<double>{10.0});
    CHECK(result.points[1].axis == std::vector<double>{35.0});
    CHECK(result.points[2].axis == std::vector<double>{100.0});
}

TEST_CASE("sweeping an unused parameter changes nothing but the noise") {
    const auto& scenario = archval::f6_demo();
    // payload_2 is cataloged but not referenced by either architecture.
    const SweepAxis axis{"components.payload_2.cost", {1000.0, 2000.0, 3000.0}};
    const auto result =
        sweep(scenario, "monolithic", "fractionated", axis, std::nullopt, std::int64_t{300});
    const double se = result.points[0].value.sd / std::sqrt(300.0);
    for (const auto& point : result.points) {
        CHECK(std::abs(point.value.mean - result.points[0].value.mean) < 6.0 * se);
    }
    // Identical invocation, identical table.
    const auto again =
        sweep(scenario, "monolithic", "fractionated", axis, std::nullopt, std::int64_t{300});
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        CHECK(result.points[i].value.mean == again.points[i].value.mean);
        CHECK(result.points[i].value.sd == again.points[i].value.sd);
    }
}

TEST_CASE("grid refinement leaves existing points untouched") {
    const auto& scenario = archval::f6_demo();
    const SweepAxis coarse{"tech_packages.f6tp.failure.mean", {10.0, 100.0}};
    const SweepAxis fine{"tech_packages.f6tp.failure.mean", {10.0, 35.0, 100.0}};
    const auto a =
        sweep(scenario, "monolithic", "fractionated", coarse, std::nullopt, std::int64_t{150});
    const auto b =
        sweep(scenario, "monolithic", "fractionated", fine, std::nullopt, std::int64_t{150});
    CHECK(a.points[0].value.mean == b.points[0].value.mean);
    CHECK(a.points[0].value.q95 == b.points[0].value.q95);
    CHECK(a.points[1].value.mean == b.points[2].value.mean);
    CHECK(a.points[1].value.q95 == b.points[2].value.q95);
}

TEST_CASE("secondary values apply before the primary axis") {
    const auto& base = archval::f6_demo();
    const SweepAxis axis{"tech_packages.f6tp.failure.mean", {35.0}};
    const SweepAxis secondary{"tech_packages.f6tp.failure.shape", {5.0}};
    const auto result =
        sweep(base, "monolithic", "fractionated", axis, secondary, std::int64_t{120});
    REQUIRE(result.points.size() == 1);

    // Reproduce the point by hand: shape first, then the mean at that
    // shape, and the substream keyed by (secondary, primary) values.
    Scenario manual = base;
    manual.simulation.runs = 120;
    archval::apply_parameter(manual, "tech_packages.f6tp.failure.shape", 5.0);
    archval::apply_parameter(manual, "tech_packages.f6tp.failure.mean", 35.0);
    CHECK(archval::read_parameter(manual, "tech_packages.f6tp.failure.scale") ==
          doctest::Approx(38.1193547370418).epsilon(1e-9));
    manual.simulation.seed = archval::RngStream(base.simulation.seed)
                                 .child(std::bit_cast<std::uint64_t>(5.0))
                                 .child(std::bit_cast<std::uint64_t>(35.0))
                                 .key();
    const auto direct = mplus_value(manual.architecture("monolithic"),
                                    manual.architecture("fractionated"), manual.catalog,
                                    manual.simulation);
    CHECK(result.points[0].value.mean == direct.summary.mean);
    CHECK(result.points[0].value.sd == direct.summary.sd);
    CHECK(result.points[0].axis == std::vector<double>{35.0, 5.0});
}

TEST_CASE("sweep input validation") {
    const auto& scenario = archval::f6_demo();
    CHECK_THROWS_AS(sweep(scenario, "monolithic", "fractionated",
                          SweepAxis{"components.nonsense.cost", {1.0}}, std::nullopt,
                          std::int64_t{10}),
                    ConfigError);
    CHECK_THROWS_AS(sweep(scenario, "monolithic", "fractionated",
                          SweepAxis{"components.payload.cost", {}}, std::nullopt,
                          std::int64_t{10}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sweep(scenario, "monolithic", "nonexistent",
                          SweepAxis{"components.payload.cost", {1.0}}, std::nullopt,
                          std::int64_t{10}),
                    archval::CatalogError);
}

TEST_CASE("zero crossing by linear interpolation") {
    CHECK(find_zero_crossing(rows_1d({{25.0, -10.0}, {45.0, 30.0}})) == 30.0);
    CHECK(!find_zero_crossing(rows_1d({{25.0, 10.0}, {45.0, 30.0}})));
    CHECK(find_zero_crossing(rows_1d({{30.0, 0.0}, {40.0, 5.0}})) == 30.0);
    // First crossing wins.
    CHECK(find_zero_crossing(rows_1d({{0.0, -1.0}, {1.0, 1.0}, {2.0, -1.0}})) == 0.5);
    // Crossing lies inside the axis range.
    const auto crossing = find_zero_crossing(rows_1d({{25.0, -10.0}, {45.0, 30.0}}));
    CHECK(*crossing >= 25.0);
    CHECK(*crossing <= 45.0);
}

TEST_CASE("zero crossing input validation") {
    CHECK_THROWS_AS(find_zero_crossing(rows_1d({{25.0, -10.0}})), std::invalid_argument);
    CHECK_THROWS_AS(find_zero_crossing(rows_1d({{45.0, -10.0}, {25.0, 30.0}})),
                    std::invalid_argument);

    SweepResult grid2d;
    grid2d.axis_paths = {"x", "y"};
    for (double y : {1.0, 2.0}) {
        for (double x : {1.0, 2.0}) {
            SweepPoint point;
            point.axis = {x, y};
            point.value.mean = x - 1.5;
            grid2d.points.push_back(point);
        }
    }
    CHECK_THROWS_AS(find_zero_crossing(grid2d), std::invalid_argument);
}
