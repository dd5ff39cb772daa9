#include "archval/mplus.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "archval/parallel.hpp"

namespace archval {

TransitionKind transition_kind(ModularityStage from, ModularityStage to) {
    if (from == to) return TransitionKind::SameStage;
    if (from == ModularityStage::M1 && to == ModularityStage::M2) return TransitionKind::Splitting;
    if (from == ModularityStage::M2 && to == ModularityStage::M3) {
        return TransitionKind::Fractionation;
    }
    if (from == ModularityStage::M3 && to == ModularityStage::M4) {
        return TransitionKind::DecentralizedSharing;
    }
    return TransitionKind::Other;
}

const char* to_string(TransitionKind kind) {
    switch (kind) {
        case TransitionKind::SameStage: return "same-stage";
        case TransitionKind::Splitting: return "splitting";
        case TransitionKind::Fractionation: return "fractionation";
        case TransitionKind::DecentralizedSharing: return "decentralized-sharing";
        case TransitionKind::Other: return "other";
    }
    return "?";
}

namespace {

void reject_unimplemented(const ArchitectureSpec& source, const ArchitectureSpec& target) {
    if (transition_kind(stage_of(source), stage_of(target)) ==
        TransitionKind::DecentralizedSharing) {
        throw std::logic_error("decentralized-sharing (M3 -> M4) valuation is not implemented; "
                               "it requires an agent-based model of dynamic resource sharing");
    }
}

// Present value of a constant benefit stream over the lifetime.
double benefit_npv(double rate_per_year, const SimulationConfig& config) {
    if (rate_per_year == 0.0) return 0.0;
    if (config.discount_rate == 0.0) return rate_per_year * config.lifetime;
    return rate_per_year * -std::expm1(-config.discount_rate * config.lifetime) /
           config.discount_rate;
}

std::vector<double> fraction_costs_of(const ArchitectureModel& model) {
    std::vector<double> costs;
    costs.reserve(model.fractions.size());
    for (const auto& fraction : model.fractions) costs.push_back(fraction.cost);
    return costs;
}

} // namespace

ValueDistribution mplus_value(const ArchitectureSpec& source, const ArchitectureSpec& target,
                              const Catalog& catalog, const SimulationConfig& config) {
    reject_unimplemented(source, target);
    const ArchitectureModel source_model = compile_architecture(source, catalog, config);
    const ArchitectureModel target_model = compile_architecture(target, catalog, config);
    const std::vector<double> source_costs = fraction_costs_of(source_model);
    const std::vector<double> target_costs = fraction_costs_of(target_model);
    const double benefit_shift =
        benefit_npv(target.revenue_rate, config) - benefit_npv(source.revenue_rate, config);

    ValueDistribution value;
    value.samples.resize(static_cast<std::size_t>(config.runs));
    parallel_for(config.runs, [&](std::int64_t run) {
        const double source_cost = discounted_cost(simulate_events(source_model, config, run),
                                                   source_costs, config.discount_rate);
        const double target_cost = discounted_cost(simulate_events(target_model, config, run),
                                                   target_costs, config.discount_rate);
        value.samples[static_cast<std::size_t>(run)] =
            (source_cost - target_cost) + benefit_shift;
    });
    value.summary = summarize(value.samples);
    return value;
}

std::vector<ValueDistribution> value_trajectory(const ArchitectureSpec& source,
                                                const ArchitectureSpec& target,
                                                const Catalog& catalog,
                                                const SimulationConfig& config) {
    reject_unimplemented(source, target);
    if (config.trajectory_grid.empty()) {
        throw std::invalid_argument("trajectory grid must not be empty");
    }
    const ArchitectureModel source_model = compile_architecture(source, catalog, config);
    const ArchitectureModel target_model = compile_architecture(target, catalog, config);
    const std::vector<double> source_costs = fraction_costs_of(source_model);
    const std::vector<double> target_costs = fraction_costs_of(target_model);
    const auto& grid = config.trajectory_grid;
    {
        double prev = 0.0;
        for (double t : grid) {
            if (!(t > prev) || !(t <= config.lifetime)) {
                throw std::invalid_argument(
                    "trajectory grid must be strictly increasing within (0, lifetime]");
            }
            prev = t;
        }
    }

    std::vector<ValueDistribution> trajectory(grid.size());
    for (auto& point : trajectory) point.samples.resize(static_cast<std::size_t>(config.runs));

    parallel_for(config.runs, [&](std::int64_t run) {
        const auto source_cumulative = cumulative_discounted_costs(
            simulate_events(source_model, config, run), source_costs, config.discount_rate, grid);
        const auto target_cumulative = cumulative_discounted_costs(
            simulate_events(target_model, config, run), target_costs, config.discount_rate, grid);
        for (std::size_t g = 0; g < grid.size(); ++g) {
            trajectory[g].samples[static_cast<std::size_t>(run)] =
                source_cumulative[g] - target_cumulative[g];
        }
    });

    const double full_benefit =
        benefit_npv(target.revenue_rate, config) - benefit_npv(source.revenue_rate, config);
    for (std::size_t g = 0; g < grid.size(); ++g) {
        if (full_benefit != 0.0) {
            // Benefit accrues continuously up to the grid time.
            const double r = config.discount_rate;
            const double scale =
                r == 0.0 ? grid[g] / config.lifetime
                         : -std::expm1(-r * grid[g]) / -std::expm1(-r * config.lifetime);
            for (auto& sample : trajectory[g].samples) sample += full_benefit * scale;
        }
        trajectory[g].summary = summarize(trajectory[g].samples);
    }
    return trajectory;
}

TransitionDecision decide(const ValueDistribution& value, double risk_quantile, double threshold) {
    if (!(risk_quantile > 0.0 && risk_quantile < 1.0)) {
        throw std::invalid_argument("risk quantile must lie in (0, 1)");
    }
    TransitionDecision decision;
    decision.risk_quantile = risk_quantile;
    decision.threshold = threshold;
    decision.statistic = sample_quantile(value.samples, risk_quantile);
    decision.recommend = decision.statistic > threshold;
    std::ostringstream rule;
    rule << "recommend iff quantile(" << risk_quantile << ") of value > " << threshold << " k$";
    decision.criterion = rule.str();
    return decision;
}

} // namespace archval
