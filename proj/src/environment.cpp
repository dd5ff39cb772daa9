#include "archval/environment.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace archval {

std::vector<EnvironmentState> enumerate_states(const EnvironmentModel& model) {
    if (model.parameters.empty()) {
        throw std::invalid_argument("environment model declares no parameters");
    }
    std::size_t count = 1;
    for (const auto& parameter : model.parameters) {
        if (parameter.levels.empty()) {
            throw std::invalid_argument("environment parameter \"" + parameter.name +
                                        "\" has an empty level domain");
        }
        count *= parameter.levels.size();
    }

    std::vector<EnvironmentState> states;
    states.reserve(count);
    EnvironmentState current;
    current.assignment.resize(model.parameters.size());
    // Odometer over levels, first parameter slowest.
    std::vector<std::size_t> idx(model.parameters.size(), 0);
    for (std::size_t n = 0; n < count; ++n) {
        for (std::size_t p = 0; p < model.parameters.size(); ++p) {
            current.assignment[p] = model.parameters[p].levels[idx[p]];
        }
        states.push_back(current);
        for (std::size_t p = model.parameters.size(); p-- > 0;) {
            if (++idx[p] < model.parameters[p].levels.size()) break;
            idx[p] = 0;
        }
    }
    return states;
}

std::vector<RequiredState> required_states(const EnvironmentModel& model) {
    const auto all = enumerate_states(model);
    const auto state_index = [&all](const EnvironmentState& state) {
        const auto it = std::find(all.begin(), all.end(), state);
        if (it == all.end()) {
            throw std::invalid_argument("requirement names a state outside the declared domains");
        }
        return static_cast<std::size_t>(it - all.begin());
    };

    std::map<std::size_t, int> first_period; // enumeration index -> earliest period
    for (const auto& stakeholder : model.stakeholders) {
        for (std::size_t period = 0; period < stakeholder.requirements.size(); ++period) {
            for (const auto& state : stakeholder.requirements[period]) {
                const std::size_t key = state_index(state);
                const auto it = first_period.find(key);
                if (it == first_period.end() || it->second > static_cast<int>(period)) {
                    first_period[key] = static_cast<int>(period);
                }
            }
        }
    }

    std::vector<RequiredState> required;
    required.reserve(first_period.size());
    for (const auto& [key, period] : first_period) {
        required.push_back({all[key], period});
    }
    std::sort(required.begin(), required.end(),
              [&](const RequiredState& a, const RequiredState& b) {
                  if (a.first_period != b.first_period) return a.first_period < b.first_period;
                  return state_index(a.state) < state_index(b.state);
              });
    return required;
}

double heterogeneity_score(const EnvironmentModel& model) {
    double score = 0.0;
    for (const auto& required : required_states(model)) {
        score += std::pow(model.discount, required.first_period);
    }
    return score;
}

} // namespace archval
