#pragma once

#include <string>
#include <vector>

#include "archval/simulation.hpp"

namespace archval {

/// Per-run cost difference, source minus target: positive samples favor
/// making the transition (the target is cheaper over the lifetime).
struct ValueDistribution {
    std::vector<double> samples; // k$, indexed by run
    SummaryStats summary;
};

// Stage-transition operators along the modularity spectrum.
enum class TransitionKind {
    SameStage,
    Splitting,             // M1 -> M2, standard interfaces
    Fractionation,         // M2 -> M3, subsystems move to fractions
    DecentralizedSharing,  // M3 -> M4, dynamic resource sharing (not implemented)
    Other,                 // downward or multi-step
};

TransitionKind transition_kind(ModularityStage from, ModularityStage to);
const char* to_string(TransitionKind kind);

struct TransitionDecision {
    std::string criterion; // human-readable rule
    double risk_quantile = 0.5;
    double threshold = 0.0; // k$
    double statistic = 0.0; // evaluated quantile of the value, k$
    bool recommend = false; // statistic > threshold, strictly
};

// Value distribution of moving from `source` to `target`. Both
// architectures are simulated run-by-run; under common random numbers
// identical constituents share draws, making mplus_value(A, A) exactly
// zero in every sample. The M3 -> M4 valuation is not implemented and
// throws std::logic_error.
ValueDistribution mplus_value(const ArchitectureSpec& source, const ArchitectureSpec& target,
                              const Catalog& catalog, const SimulationConfig& config);

// Value distribution of the cumulative discounted cost difference up to
// each trajectory grid time.
std::vector<ValueDistribution> value_trajectory(const ArchitectureSpec& source,
                                                const ArchitectureSpec& target,
                                                const Catalog& catalog,
                                                const SimulationConfig& config);

// Recommend the transition iff the risk_quantile-quantile of the value
// exceeds the threshold (strictly). Quantile 0.5 is the median; lower
// levels encode risk aversion. Throws std::invalid_argument unless
// 0 < risk_quantile < 1.
TransitionDecision decide(const ValueDistribution& value, double risk_quantile, double threshold);

} // namespace archval
