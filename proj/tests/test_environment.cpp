#include "doctest.h"

#include <stdexcept>

#include "archval/environment.hpp"

using archval::EnvironmentModel;
using archval::EnvironmentState;
using archval::enumerate_states;
using archval::heterogeneity_score;
using archval::required_states;
using archval::StakeholderModel;

namespace {

EnvironmentState state(std::vector<std::string> levels) { return {std::move(levels)}; }

// Two binary parameters (demand, temperature): S1..S4 in enumeration
// order (L,L), (L,H), (H,L), (H,H).
EnvironmentModel two_binary_parameters() {
    EnvironmentModel model;
    model.parameters = {{"demand", {"L", "H"}}, {"temperature", {"L", "H"}}};
    model.periods = 2;
    model.discount = 1.0;
    return model;
}

StakeholderModel stakeholder(std::vector<std::vector<EnvironmentState>> requirements) {
    return {std::move(requirements)};
}

} // namespace

TEST_CASE("state enumeration is the lexicographic cross product") {
    const auto model = two_binary_parameters();
    const auto states = enumerate_states(model);
    REQUIRE(states.size() == 4);
    CHECK(states[0] == state({"L", "L"}));
    CHECK(states[1] == state({"L", "H"}));
    CHECK(states[2] == state({"H", "L"}));
    CHECK(states[3] == state({"H", "H"}));

    EnvironmentModel three_level;
    three_level.parameters = {{"mode", {"a", "b", "c"}}};
    CHECK(enumerate_states(three_level).size() == 3);

    EnvironmentModel three_binary;
    three_binary.parameters = {{"p", {"0", "1"}}, {"q", {"0", "1"}}, {"r", {"0", "1"}}};
    CHECK(enumerate_states(three_binary).size() == 8);
}

TEST_CASE("empty domains are rejected") {
    EnvironmentModel model;
    CHECK_THROWS_AS(enumerate_states(model), std::invalid_argument);
    model.parameters = {{"demand", {}}};
    CHECK_THROWS_AS(enumerate_states(model), std::invalid_argument);
}

TEST_CASE("single constant stakeholder needs one state") {
    auto model = two_binary_parameters();
    model.stakeholders = {stakeholder({{state({"L", "L"})}, {state({"L", "L"})}})};
    const auto required = required_states(model);
    REQUIRE(required.size() == 1);
    CHECK(required[0].state == state({"L", "L"}));
    CHECK(required[0].first_period == 0);
    CHECK(heterogeneity_score(model) == 1.0);
}

TEST_CASE("temporal and spatial heterogeneity count alike") {
    // One stakeholder whose needs change across periods...
    auto temporal = two_binary_parameters();
    temporal.stakeholders = {stakeholder({{state({"L", "H"})}, {state({"H", "L"})}})};
    const auto temporal_required = required_states(temporal);
    CHECK(temporal_required.size() == 2);

    // ...and two stakeholders with constant, different needs.
    auto spatial = two_binary_parameters();
    spatial.stakeholders = {stakeholder({{state({"L", "H"})}, {state({"L", "H"})}}),
                            stakeholder({{state({"H", "L"})}, {state({"H", "L"})}})};
    const auto spatial_required = required_states(spatial);
    CHECK(spatial_required.size() == 2);

    // Same state count, same undiscounted score.
    CHECK(heterogeneity_score(temporal) == heterogeneity_score(spatial));
}

TEST_CASE("two uncertain stakeholders can need all four states") {
    auto model = two_binary_parameters();
    model.stakeholders = {stakeholder({{state({"L", "L"})}, {state({"L", "H"})}}),
                          stakeholder({{state({"H", "L"})}, {state({"H", "H"})}})};
    CHECK(required_states(model).size() == 4);
    CHECK(heterogeneity_score(model) == 4.0);
}

TEST_CASE("discounting weights by first occurrence") {
    auto model = two_binary_parameters();
    model.discount = 0.9;
    model.stakeholders = {stakeholder({{state({"L", "H"})}, {state({"H", "L"})}})};
    CHECK(heterogeneity_score(model) == doctest::Approx(1.0 + 0.9).epsilon(1e-12));

    // A state named in both periods counts at its earliest occurrence.
    model.stakeholders = {stakeholder({{state({"L", "H"})}, {state({"L", "H"})}})};
    CHECK(heterogeneity_score(model) == 1.0);
}

TEST_CASE("required states never exceed the enumeration") {
    auto model = two_binary_parameters();
    model.stakeholders = {
        stakeholder({{state({"L", "L"}), state({"L", "H"})},
                     {state({"H", "L"}), state({"H", "H"}), state({"L", "L"})}})};
    CHECK(required_states(model).size() <= enumerate_states(model).size());
}

TEST_CASE("adding a stakeholder never lowers the score") {
    auto base = two_binary_parameters();
    base.stakeholders = {stakeholder({{state({"L", "L"})}, {state({"L", "H"})}})};
    const double before = heterogeneity_score(base);
    auto extended = base;
    extended.stakeholders.push_back(stakeholder({{state({"H", "H"})}, {state({"H", "H"})}}));
    CHECK(heterogeneity_score(extended) >= before);
}

TEST_CASE("requirements outside the domain are rejected") {
    auto model = two_binary_parameters();
    model.stakeholders = {stakeholder({{state({"L", "X"})}, {state({"L", "L"})}})};
    CHECK_THROWS_AS(required_states(model), std::invalid_argument);
}
