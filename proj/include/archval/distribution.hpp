#pragma once

#include <variant>
#include <vector>

#include "archval/rng.hpp"

namespace archval {

enum class DistKind { Weibull, LognormalMoments, PointMass, ComposedMin };

/**
 * Nonnegative lifetime model: Weibull, lognormal (moment-parameterized),
 * point mass, or the minimum of independent constituents.
 *
 * Values are immutable after construction and safe to share across
 * threads. Times are in years. Sampling is inverse-transform for the
 * primitive kinds and min-of-draws for compositions, one uniform per
 * primitive sample, so stream accounting is exact.
 */
class LifetimeDistribution {
public:
    // CDF(t) = 1 - exp(-(t/scale)^shape). Throws std::invalid_argument
    // unless scale > 0 and shape > 0.
    static LifetimeDistribution weibull(double scale, double shape);

    // Lognormal whose actual mean and standard deviation equal the
    // arguments: sigma^2 = ln(1 + (sd/mean)^2), mu = ln(mean) - sigma^2/2.
    // A zero sd is rejected; use point_mass instead.
    static LifetimeDistribution lognormal_from_moments(double mean, double sd);

    // Degenerate distribution at time > 0.
    static LifetimeDistribution point_mass(double time);

    // Minimum of independent constituents; survival is the product of
    // constituent survivals. Throws std::invalid_argument on empty input.
    static LifetimeDistribution composed_min(std::vector<LifetimeDistribution> constituents);

    DistKind kind() const noexcept;

    // t < 0 throws std::domain_error for all of cdf/survival/pdf.
    double cdf(double t) const;
    double survival(double t) const;
    double pdf(double t) const;

    double mean() const;

    // Inverse CDF for u in (0, 1); solved numerically for compositions.
    double quantile(double u) const;

    double sample(RngStream& stream) const;

    // Kind-specific accessors; throw std::logic_error on a kind mismatch.
    double weibull_scale() const;
    double weibull_shape() const;
    double lognormal_mean() const;
    double lognormal_sd() const;
    double point_mass_time() const;
    const std::vector<LifetimeDistribution>& constituents() const;

private:
    struct WeibullParams {
        double scale;
        double shape;
    };
    struct LognormalParams {
        double mean;
        double sd;
        double log_mu;    // mean of ln T
        double log_sigma; // sd of ln T
    };
    struct PointMassParams {
        double time;
    };
    using Params = std::variant<WeibullParams, LognormalParams, PointMassParams,
                                std::vector<LifetimeDistribution>>;

    explicit LifetimeDistribution(Params params) : params_(std::move(params)) {}

    Params params_;
};

// Scale of the Weibull with the requested mean at the given shape:
// scale = mean / Gamma(1 + 1/shape). Inverse of the mean computation.
double weibull_scale_from_mean(double mean, double shape);

// Mean of a Weibull given scale and shape: scale * Gamma(1 + 1/shape).
double weibull_mean_from_scale(double scale, double shape);

// Quantile of the standard normal (AS241, double precision); u in (0, 1).
double standard_normal_quantile(double u);

} // namespace archval
