#pragma once

#include <span>
#include <vector>

namespace archval {

struct SummaryStats {
    double mean = 0.0;
    double sd = 0.0;
    double q05 = 0.0;
    double q25 = 0.0;
    double q50 = 0.0;
    double q75 = 0.0;
    double q95 = 0.0;
};

// Linear-interpolation quantile (type 7) of a sorted, nonempty range.
double sorted_quantile(std::span<const double> sorted, double p);

// Quantile of unsorted samples (copies and sorts).
double sample_quantile(std::span<const double> samples, double p);

// Mean, sample standard deviation, and the 5/25/50/75/95% quantiles.
// Deterministic: accumulation order is the index order of `samples`.
SummaryStats summarize(std::span<const double> samples);

} // namespace archval
