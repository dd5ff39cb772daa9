#include "archval/sensitivity.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "archval/rng.hpp"

namespace archval {

namespace {

std::uint64_t value_bits(double v) {
    return std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v); // fold -0.0
}

} // namespace

SweepResult sweep(const Scenario& scenario, const std::string& source, const std::string& target,
                  const SweepAxis& axis, const std::optional<SweepAxis>& secondary,
                  std::optional<std::int64_t> runs_override) {
    if (axis.values.empty() || (secondary && secondary->values.empty())) {
        throw std::invalid_argument("sweep value lists must not be empty");
    }
    // Resolve names and paths up front for a clean error before any work.
    scenario.architecture(source);
    scenario.architecture(target);
    read_parameter(scenario, axis.path);
    if (secondary) read_parameter(scenario, secondary->path);

    SweepResult result;
    result.axis_paths.push_back(axis.path);
    if (secondary) result.axis_paths.push_back(secondary->path);

    const std::vector<double> inner =
        secondary ? secondary->values : std::vector<double>{std::nan("")};
    for (double primary : axis.values) {
        for (double secondary_value : inner) {
            Scenario point = scenario;
            if (runs_override) point.simulation.runs = *runs_override;
            // Secondary first: a Weibull mean axis then converts at the
            // point's shape rather than the base scenario's.
            RngStream seed_stream = RngStream(scenario.simulation.seed);
            if (secondary) {
                apply_parameter(point, secondary->path, secondary_value);
                seed_stream = seed_stream.child(value_bits(secondary_value));
            }
            apply_parameter(point, axis.path, primary);
            seed_stream = seed_stream.child(value_bits(primary));
            point.simulation.seed = seed_stream.key();

            const ValueDistribution value = mplus_value(
                point.architecture(source), point.architecture(target), point.catalog,
                point.simulation);

            SweepPoint row;
            row.axis.push_back(primary);
            if (secondary) row.axis.push_back(secondary_value);
            row.value = value.summary;
            result.points.push_back(std::move(row));
        }
    }
    return result;
}

std::optional<double> find_zero_crossing(const SweepResult& result) {
    if (result.axis_paths.size() > 1) {
        double first = result.points.empty() ? 0.0 : result.points.front().axis[1];
        for (const auto& point : result.points) {
            if (point.axis[1] != first) {
                throw std::invalid_argument(
                    "zero crossing is only defined for one-dimensional sweeps");
            }
        }
    }
    if (result.points.size() < 2) {
        throw std::invalid_argument("zero crossing needs at least two sweep rows");
    }
    double prev_axis = result.points.front().axis[0];
    for (std::size_t i = 1; i < result.points.size(); ++i) {
        if (!(result.points[i].axis[0] > prev_axis)) {
            throw std::invalid_argument("sweep rows must be sorted by the primary axis");
        }
        prev_axis = result.points[i].axis[0];
    }

    for (std::size_t i = 0; i < result.points.size(); ++i) {
        const double mean = result.points[i].value.mean;
        if (mean == 0.0) return result.points[i].axis[0];
        if (i + 1 < result.points.size()) {
            const double next = result.points[i + 1].value.mean;
            if (next == 0.0) return result.points[i + 1].axis[0];
            if ((mean < 0.0) != (next < 0.0)) {
                const double x0 = result.points[i].axis[0];
                const double x1 = result.points[i + 1].axis[0];
                return x0 + (x1 - x0) * (-mean / (next - mean));
            }
        }
    }
    return std::nullopt;
}

} // namespace archval
