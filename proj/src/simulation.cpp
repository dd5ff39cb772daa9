#include "archval/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "archval/errors.hpp"
#include "archval/parallel.hpp"
#include "archval/rng.hpp"

namespace archval {

namespace {

// Stops runaway scenarios (e.g., a sub-hour replacement time against a
// multi-decade lifetime) before they exhaust memory.
constexpr std::size_t kMaxEventsPerFraction = 20'000'000;

std::uint64_t constituent_element(const std::string& component, bool obsolescence, int occurrence,
                                  const std::string& arch_salt) {
    std::string tag = component;
    tag += '\x1f';
    tag += obsolescence ? 'o' : 'f';
    tag += '\x1f';
    tag += std::to_string(occurrence);
    if (!arch_salt.empty()) {
        tag += '\x1f';
        tag += arch_salt;
    }
    return fnv1a64(tag);
}

void check_grid(const SimulationConfig& config) {
    if (config.trajectory_grid.empty()) {
        throw std::invalid_argument("trajectory grid must not be empty");
    }
    double prev = 0.0;
    for (double t : config.trajectory_grid) {
        if (!(t > prev)) throw std::invalid_argument("trajectory grid must be strictly increasing and positive");
        if (!(t <= config.lifetime)) throw std::invalid_argument("trajectory grid must lie within (0, lifetime]");
        prev = t;
    }
}

} // namespace

void validate_config(const SimulationConfig& config) {
    if (!(config.lifetime > 0.0)) throw std::invalid_argument("lifetime must be positive");
    if (!(config.discount_rate >= 0.0)) throw std::invalid_argument("discount rate must be nonnegative");
    if (!(config.launch_rate >= 0.0)) throw std::invalid_argument("launch rate must be nonnegative");
    if (config.runs < 1) throw std::invalid_argument("runs must be at least 1");
}

double discounted_cost(const std::vector<std::vector<double>>& deployments,
                       const std::vector<double>& fraction_costs, double rate) {
    if (!(rate >= 0.0)) throw std::invalid_argument("discount rate must be nonnegative");
    if (deployments.size() != fraction_costs.size()) {
        throw std::invalid_argument("deployments and fraction costs differ in fraction count");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < deployments.size(); ++j) {
        double discounted = 0.0;
        for (double t : deployments[j]) {
            discounted += rate == 0.0 ? 1.0 : std::exp(-rate * t);
        }
        total += fraction_costs[j] * discounted;
    }
    return total;
}

ArchitectureModel compile_architecture(const ArchitectureSpec& arch, const Catalog& catalog,
                                       const SimulationConfig& config) {
    validate_config(config);
    if (auto issues = validate(arch, catalog); !issues.empty()) {
        throw ValidationError(std::move(issues));
    }

    ArchitectureModel model;
    model.name = arch.name;
    model.revenue_rate = arch.revenue_rate;
    const std::string salt = config.common_random_numbers ? std::string() : arch.name;

    // Occurrence indices count same-name instances in declaration order
    // (fractions outer; components, bus, tech-package inner).
    std::map<std::string, int> occurrences;
    const auto add_constituent = [&](FractionModel& fraction, const ComponentSpec& spec) {
        const int occurrence = occurrences[spec.name]++;
        fraction.constituents.push_back(
            {spec.failure, constituent_element(spec.name, false, occurrence, salt)});
        if (spec.obsolescence) {
            fraction.constituents.push_back(
                {*spec.obsolescence, constituent_element(spec.name, true, occurrence, salt)});
        }
    };

    for (const auto& fraction : arch.fractions) {
        FractionModel compiled;
        compiled.cost = deployment_cost(fraction, catalog, config.launch_rate);
        for (const auto& name : fraction.components) add_constituent(compiled, catalog.at(name));
        add_constituent(compiled, catalog.at(fraction.bus));
        if (fraction.tech_package) add_constituent(compiled, catalog.at(*fraction.tech_package));
        model.fractions.push_back(std::move(compiled));
    }
    return model;
}

std::vector<std::vector<double>> simulate_events(const ArchitectureModel& model,
                                                 const SimulationConfig& config,
                                                 std::int64_t run_index) {
    const RngStream run_stream =
        RngStream(config.seed).child(static_cast<std::uint64_t>(run_index));

    std::vector<std::vector<double>> events(model.fractions.size());
    std::vector<RngStream> bases; // per constituent of the current fraction
    for (std::size_t j = 0; j < model.fractions.size(); ++j) {
        const auto& fraction = model.fractions[j];
        bases.clear();
        for (const auto& constituent : fraction.constituents) {
            bases.push_back(run_stream.child(constituent.stream_element));
        }

        auto& timeline = events[j];
        timeline.push_back(0.0);
        double now = 0.0;
        for (std::uint64_t renewal = 0;; ++renewal) {
            double delta = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < fraction.constituents.size(); ++c) {
                RngStream draw = bases[c].child(renewal);
                delta = std::min(delta, fraction.constituents[c].lifetime.sample(draw));
            }
            now += delta;
            if (now >= config.lifetime) break;
            timeline.push_back(now);
            if (timeline.size() > kMaxEventsPerFraction) {
                throw std::runtime_error("renewal event count exceeds limit; replacement times "
                                         "are implausibly short for the configured lifetime");
            }
        }
    }
    return events;
}

std::vector<double> cumulative_discounted_costs(
    const std::vector<std::vector<double>>& deployments, const std::vector<double>& fraction_costs,
    double rate, const std::vector<double>& grid) {
    if (!(rate >= 0.0)) throw std::invalid_argument("discount rate must be nonnegative");
    if (deployments.size() != fraction_costs.size()) {
        throw std::invalid_argument("deployments and fraction costs differ in fraction count");
    }
    std::vector<double> cumulative(grid.size(), 0.0);
    for (std::size_t j = 0; j < deployments.size(); ++j) {
        // Same accumulation order as discounted_cost: discount factors
        // first, one multiplication by the fraction cost at the end, so
        // the final grid point is bit-identical to the total.
        const double cost = fraction_costs[j];
        std::size_t g = 0;
        double acc = 0.0;
        for (double t : deployments[j]) {
            while (g < grid.size() && grid[g] <= t) cumulative[g++] += cost * acc;
            if (g == grid.size()) break;
            acc += rate == 0.0 ? 1.0 : std::exp(-rate * t);
        }
        while (g < grid.size()) cumulative[g++] += cost * acc;
    }
    return cumulative;
}

namespace {

std::vector<double> fraction_costs_of(const ArchitectureModel& model) {
    std::vector<double> costs;
    costs.reserve(model.fractions.size());
    for (const auto& fraction : model.fractions) costs.push_back(fraction.cost);
    return costs;
}

} // namespace

RunResult simulate_run(const ArchitectureSpec& arch, const Catalog& catalog,
                       const SimulationConfig& config, std::int64_t run_index) {
    if (run_index < 0 || run_index >= config.runs) {
        throw std::invalid_argument("run index out of range");
    }
    const ArchitectureModel model = compile_architecture(arch, catalog, config);
    RunResult result;
    result.deployments = simulate_events(model, config, run_index);
    result.discounted_cost =
        discounted_cost(result.deployments, fraction_costs_of(model), config.discount_rate);
    return result;
}

CostDistribution simulate_many(const ArchitectureSpec& arch, const Catalog& catalog,
                               const SimulationConfig& config) {
    const ArchitectureModel model = compile_architecture(arch, catalog, config);
    const std::vector<double> costs = fraction_costs_of(model);

    CostDistribution dist;
    dist.samples.resize(static_cast<std::size_t>(config.runs));
    parallel_for(config.runs, [&](std::int64_t run) {
        const auto events = simulate_events(model, config, run);
        dist.samples[static_cast<std::size_t>(run)] =
            discounted_cost(events, costs, config.discount_rate);
    });
    dist.summary = summarize(dist.samples);
    return dist;
}

std::vector<CostDistribution> cost_trajectory(const ArchitectureSpec& arch, const Catalog& catalog,
                                              const SimulationConfig& config) {
    check_grid(config);
    const ArchitectureModel model = compile_architecture(arch, catalog, config);
    const auto& grid = config.trajectory_grid;

    std::vector<CostDistribution> trajectory(grid.size());
    for (auto& point : trajectory) point.samples.resize(static_cast<std::size_t>(config.runs));

    const std::vector<double> costs = fraction_costs_of(model);
    parallel_for(config.runs, [&](std::int64_t run) {
        const auto events = simulate_events(model, config, run);
        const auto cumulative =
            cumulative_discounted_costs(events, costs, config.discount_rate, grid);
        for (std::size_t g = 0; g < grid.size(); ++g) {
            trajectory[g].samples[static_cast<std::size_t>(run)] = cumulative[g];
        }
    });

    for (auto& point : trajectory) point.summary = summarize(point.samples);
    return trajectory;
}

} // namespace archval
