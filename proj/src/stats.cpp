#include "archval/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace archval {

double sorted_quantile(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample set");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile level must lie in [0, 1]");
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double sample_quantile(std::span<const double> samples, double p) {
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted_quantile(sorted, p);
}

SummaryStats summarize(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("summary of an empty sample set");
    SummaryStats stats;
    double sum = 0.0;
    for (double x : samples) sum += x;
    stats.mean = sum / static_cast<double>(samples.size());
    if (samples.size() > 1) {
        double ss = 0.0;
        for (double x : samples) {
            const double d = x - stats.mean;
            ss += d * d;
        }
        stats.sd = std::sqrt(ss / static_cast<double>(samples.size() - 1));
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    stats.q05 = sorted_quantile(sorted, 0.05);
    stats.q25 = sorted_quantile(sorted, 0.25);
    stats.q50 = sorted_quantile(sorted, 0.50);
    stats.q75 = sorted_quantile(sorted, 0.75);
    stats.q95 = sorted_quantile(sorted, 0.95);
    return stats;
}

} // namespace archval
