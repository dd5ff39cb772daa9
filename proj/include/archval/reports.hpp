#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "archval/environment.hpp"
#include "archval/mplus.hpp"
#include "archval/sensitivity.hpp"
#include "archval/simulation.hpp"

namespace archval {

// Fixed 6-significant-digit formatting used by every CSV cell.
std::string format_number(double v);

// Write-temp-then-rename so readers never observe a partial file.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

// year,architecture,mean,sd,q05,q25,q50,q75,q95 — one row per grid time
// per architecture.
std::string trajectory_csv(const std::vector<double>& grid,
                           const std::vector<std::string>& architecture_names,
                           const std::vector<std::vector<CostDistribution>>& trajectories);

// year,mean,sd,q05,q25,q50,q75,q95.
std::string value_csv(const std::vector<double>& grid,
                      const std::vector<ValueDistribution>& trajectory);

// Axis columns, then mean,sd,q05,q95; the crossing comment is appended
// for effectively one-dimensional sweeps.
std::string sweep_csv(const SweepResult& result, bool with_crossing,
                      const std::optional<double>& crossing);

std::string decision_report(const std::string& source, const std::string& target,
                            TransitionKind kind, std::int64_t runs,
                            const SummaryStats& value_summary, const TransitionDecision& decision);

// State table (every state, required marker, first period) plus the
// heterogeneity score.
std::string environment_report(const EnvironmentModel& model);

} // namespace archval
