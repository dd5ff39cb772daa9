#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "archval/architecture.hpp"
#include "archval/stats.hpp"

namespace archval {

struct SimulationConfig {
    double lifetime = 20.0;      // years (T)
    double discount_rate = 0.02; // 1/years (r), continuous exp(-r t)
    double launch_rate = 30.0;   // k$/kg
    std::int64_t runs = 10000;
    std::uint64_t seed = 0;
    std::vector<double> trajectory_grid; // years, strictly increasing, in (0, lifetime]
    // Couple compared architectures through shared substreams (variance
    // reduction; makes the zero identity exact). When false each
    // architecture draws from streams salted with its own name.
    bool common_random_numbers = true;
};

// Throws std::invalid_argument on an out-of-domain field. Grid checks
// apply only when the grid is used (see cost_trajectory).
void validate_config(const SimulationConfig& config);

struct RunResult {
    // Per fraction: deployment times in [0, lifetime), first element 0,
    // strictly increasing.
    std::vector<std::vector<double>> deployments;
    double discounted_cost = 0.0; // k$
};

struct CostDistribution {
    std::vector<double> samples; // k$, indexed by run
    SummaryStats summary;
};

// Sum over fractions j of cost_j * sum_i exp(-rate * t_ij).
// Throws std::invalid_argument on a negative rate or a fraction-count
// mismatch between the two lists.
double discounted_cost(const std::vector<std::vector<double>>& deployments,
                       const std::vector<double>& fraction_costs, double rate);

/**
 * Architecture resolved against a catalog for simulation: per-fraction
 * deployment costs and constituent lifetime models with their stream
 * identities. Constituent streams are keyed by (component name, role,
 * occurrence index), so the same component type in two compared
 * architectures sees the same draws until renewal histories diverge,
 * while repeated instances (one tech-package per fraction) stay
 * independent.
 */
struct ConstituentModel {
    LifetimeDistribution lifetime;
    std::uint64_t stream_element = 0;
};

struct FractionModel {
    double cost = 0.0; // k$ per deployment
    std::vector<ConstituentModel> constituents;
};

struct ArchitectureModel {
    std::string name;
    std::vector<FractionModel> fractions;
    double revenue_rate = 0.0;
};

// Validates (throws ValidationError listing every issue) and resolves.
ArchitectureModel compile_architecture(const ArchitectureSpec& arch, const Catalog& catalog,
                                       const SimulationConfig& config);

// Deployment times for one run: per fraction, i.i.d. renewals of the
// composed replacement time accumulated while the running sum stays
// below the lifetime. Pure function of (model, config, run_index).
std::vector<std::vector<double>> simulate_events(const ArchitectureModel& model,
                                                 const SimulationConfig& config,
                                                 std::int64_t run_index);

// Cumulative discounted cost of deployments at times strictly before
// each grid time (grid strictly increasing). One entry per grid time.
std::vector<double> cumulative_discounted_costs(const std::vector<std::vector<double>>& deployments,
                                                const std::vector<double>& fraction_costs,
                                                double rate, const std::vector<double>& grid);

RunResult simulate_run(const ArchitectureSpec& arch, const Catalog& catalog,
                       const SimulationConfig& config, std::int64_t run_index);

// Ensemble of independent runs; samples are ordered by run index and
// independent of execution order and thread count.
CostDistribution simulate_many(const ArchitectureSpec& arch, const Catalog& catalog,
                               const SimulationConfig& config);

// Distribution of cumulative discounted cost of deployments at times
// strictly before each grid time, from one event sequence per run.
// Throws std::invalid_argument when the grid is empty, unsorted, or
// outside (0, lifetime].
std::vector<CostDistribution> cost_trajectory(const ArchitectureSpec& arch,
                                              const Catalog& catalog,
                                              const SimulationConfig& config);

} // namespace archval
