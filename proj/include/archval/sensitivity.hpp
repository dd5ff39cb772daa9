#pragma once

#include <optional>
#include <string>
#include <vector>

#include "archval/mplus.hpp"
#include "archval/scenario.hpp"

namespace archval {

struct SweepPoint {
    std::vector<double> axis; // primary [, secondary] value
    SummaryStats value;       // transition-value summary at this point
};

struct SweepResult {
    std::vector<std::string> axis_paths;
    std::vector<SweepPoint> points; // ordered by the given grids, primary outer
};

// Evaluates mplus_value(source, target) once per grid point of the
// modified scenario. Secondary-axis values are applied before primary
// ones, so a Weibull "mean" axis is interpreted at the point's shape.
// Substreams are keyed by the axis values (not indices): refining a grid
// leaves existing points unchanged. Throws ConfigError on an
// unresolvable path and std::invalid_argument on an empty value list.
SweepResult sweep(const Scenario& scenario, const std::string& source, const std::string& target,
                  const SweepAxis& axis, const std::optional<SweepAxis>& secondary = std::nullopt,
                  std::optional<std::int64_t> runs_override = std::nullopt);

// Axis value where the mean transition value first changes sign, by
// linear interpolation between adjacent points; a zero mean counts as a
// crossing at its grid point. Requires an effectively one-dimensional
// table (no secondary axis or a single-valued one) sorted by the primary
// axis, with at least two rows; std::invalid_argument otherwise.
// Returns nullopt when the mean never changes sign.
std::optional<double> find_zero_crossing(const SweepResult& result);

} // namespace archval
