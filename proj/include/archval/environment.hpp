#pragma once

#include <string>
#include <vector>

namespace archval {

struct EnvironmentParameter {
    std::string name;
    std::vector<std::string> levels; // ordered
};

/// One full assignment of a level to every parameter, aligned with the
/// model's parameter order.
struct EnvironmentState {
    std::vector<std::string> assignment;

    friend bool operator==(const EnvironmentState&, const EnvironmentState&) = default;
};

/// One stakeholder's requirements: for each period, the set of states the
/// stakeholder needs the system to answer.
struct StakeholderModel {
    std::vector<std::vector<EnvironmentState>> requirements; // [period][requirement]
};

/**
 * Space-time model of the environment: the parameter grid spans the
 * possible states; stakeholders name, per period, the states the system
 * must respond to. Spatial heterogeneity shows up as several
 * stakeholders, temporal heterogeneity as requirements changing across
 * periods.
 */
struct EnvironmentModel {
    std::vector<EnvironmentParameter> parameters;
    std::vector<StakeholderModel> stakeholders;
    int periods = 1;
    double discount = 1.0; // per-period factor in (0, 1]
};

// Full cross product of parameter levels in lexicographic order (first
// parameter slowest). Throws std::invalid_argument when a parameter has
// no levels or no parameters are declared.
std::vector<EnvironmentState> enumerate_states(const EnvironmentModel& model);

struct RequiredState {
    EnvironmentState state;
    int first_period = 0; // earliest period (0-based) any stakeholder names it
};

// Union over stakeholders and periods of the required states, each
// tagged with its earliest period, ordered by (first period, enumeration
// order).
std::vector<RequiredState> required_states(const EnvironmentModel& model);

// Sum over required states of discount^first_period. With discount 1
// this is the required-state count. Advisory metadata: more states, or
// earlier states, mean more heterogeneity to answer.
double heterogeneity_score(const EnvironmentModel& model);

} // namespace archval
