#include "archval/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace archval {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_time(double t) {
    if (!(t >= 0.0)) throw std::domain_error("time must be nonnegative, got " + std::to_string(t));
}

double weibull_survival(double t, double scale, double shape) {
    return std::exp(-std::pow(t / scale, shape));
}

double weibull_pdf(double t, double scale, double shape) {
    if (t == 0.0) {
        if (shape > 1.0) return 0.0;
        if (shape == 1.0) return 1.0 / scale;
        return std::numeric_limits<double>::infinity();
    }
    const double x = std::pow(t / scale, shape);
    return shape / scale * std::pow(t / scale, shape - 1.0) * std::exp(-x);
}

double lognormal_survival(double t, double mu, double sigma) {
    if (t == 0.0) return 1.0;
    const double z = (std::log(t) - mu) / sigma;
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

double lognormal_cdf(double t, double mu, double sigma) {
    if (t == 0.0) return 0.0;
    const double z = (std::log(t) - mu) / sigma;
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double lognormal_pdf(double t, double mu, double sigma) {
    if (t == 0.0) return 0.0;
    const double z = (std::log(t) - mu) / sigma;
    return std::exp(-0.5 * z * z) / (t * sigma * std::sqrt(2.0 * kPi));
}

// Adaptive Simpson quadrature with interval bisection.
double simpson(const auto& f, double a, double fa, double b, double fb, double fm, double tol,
               int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson(f, a, fa, m, fm, flm, 0.5 * tol, depth - 1) +
           simpson(f, m, fm, b, fb, frm, 0.5 * tol, depth - 1);
}

double integrate(const auto& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    return simpson(f, a, fa, b, fb, fm, tol, 48);
}

// Atoms of point-mass constituents, recursively; quadrature split points.
void collect_atoms(const std::vector<LifetimeDistribution>& parts, std::vector<double>& atoms) {
    for (const auto& part : parts) {
        if (part.kind() == DistKind::PointMass) {
            atoms.push_back(part.point_mass_time());
        } else if (part.kind() == DistKind::ComposedMin) {
            collect_atoms(part.constituents(), atoms);
        }
    }
}

} // namespace

LifetimeDistribution LifetimeDistribution::weibull(double scale, double shape) {
    require(std::isfinite(scale) && scale > 0.0, "weibull scale must be positive");
    require(std::isfinite(shape) && shape > 0.0, "weibull shape must be positive");
    return LifetimeDistribution(WeibullParams{scale, shape});
}

LifetimeDistribution LifetimeDistribution::lognormal_from_moments(double mean, double sd) {
    require(std::isfinite(mean) && mean > 0.0, "lognormal mean must be positive");
    require(std::isfinite(sd) && sd > 0.0,
            "lognormal sd must be positive (use point_mass for a degenerate lifetime)");
    const double ratio = sd / mean;
    const double sigma2 = std::log1p(ratio * ratio);
    const double mu = std::log(mean) - 0.5 * sigma2;
    return LifetimeDistribution(LognormalParams{mean, sd, mu, std::sqrt(sigma2)});
}

LifetimeDistribution LifetimeDistribution::point_mass(double time) {
    require(std::isfinite(time) && time > 0.0, "point mass time must be positive");
    return LifetimeDistribution(PointMassParams{time});
}

LifetimeDistribution LifetimeDistribution::composed_min(
    std::vector<LifetimeDistribution> constituents) {
    require(!constituents.empty(), "composed minimum needs at least one constituent");
    return LifetimeDistribution(Params(std::move(constituents)));
}

DistKind LifetimeDistribution::kind() const noexcept {
    switch (params_.index()) {
        case 0: return DistKind::Weibull;
        case 1: return DistKind::LognormalMoments;
        case 2: return DistKind::PointMass;
        default: return DistKind::ComposedMin;
    }
}

double LifetimeDistribution::survival(double t) const {
    check_time(t);
    if (const auto* w = std::get_if<WeibullParams>(&params_)) {
        return weibull_survival(t, w->scale, w->shape);
    }
    if (const auto* l = std::get_if<LognormalParams>(&params_)) {
        return lognormal_survival(t, l->log_mu, l->log_sigma);
    }
    if (const auto* p = std::get_if<PointMassParams>(&params_)) {
        return t < p->time ? 1.0 : 0.0;
    }
    double s = 1.0;
    for (const auto& part : constituents()) s *= part.survival(t);
    return s;
}

double LifetimeDistribution::cdf(double t) const {
    check_time(t);
    if (const auto* w = std::get_if<WeibullParams>(&params_)) {
        return -std::expm1(-std::pow(t / w->scale, w->shape));
    }
    if (const auto* l = std::get_if<LognormalParams>(&params_)) {
        return lognormal_cdf(t, l->log_mu, l->log_sigma);
    }
    if (const auto* p = std::get_if<PointMassParams>(&params_)) {
        return t < p->time ? 0.0 : 1.0;
    }
    return 1.0 - survival(t);
}

double LifetimeDistribution::pdf(double t) const {
    check_time(t);
    if (const auto* w = std::get_if<WeibullParams>(&params_)) {
        return weibull_pdf(t, w->scale, w->shape);
    }
    if (const auto* l = std::get_if<LognormalParams>(&params_)) {
        return lognormal_pdf(t, l->log_mu, l->log_sigma);
    }
    if (const auto* p = std::get_if<PointMassParams>(&params_)) {
        return t == p->time ? std::numeric_limits<double>::infinity() : 0.0;
    }
    // d/dt [1 - prod S_j] = sum_i f_i * prod_{j != i} S_j, over all
    // constituents (failure and obsolescence terms alike).
    const auto& parts = constituents();
    std::vector<double> surv(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) surv[i] = parts[i].survival(t);
    double density = 0.0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        double others = 1.0;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j != i) others *= surv[j];
        }
        density += parts[i].pdf(t) * others;
    }
    return density;
}

double LifetimeDistribution::mean() const {
    if (const auto* w = std::get_if<WeibullParams>(&params_)) {
        return weibull_mean_from_scale(w->scale, w->shape);
    }
    if (const auto* l = std::get_if<LognormalParams>(&params_)) {
        return l->mean;
    }
    if (const auto* p = std::get_if<PointMassParams>(&params_)) {
        return p->time;
    }

    // E[T] = integral of the survival function. Integrate the bulk piecewise
    // (split at point-mass atoms), then map the tail [hi, inf) to [0, 1).
    const auto survival_fn = [this](double t) { return survival(t); };

    double hi = 1.0;
    for (int i = 0; i < 80 && survival(hi) > 1e-8; ++i) hi *= 2.0;

    std::vector<double> cuts{0.0};
    collect_atoms(constituents(), cuts);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.erase(std::remove_if(cuts.begin(), cuts.end(), [hi](double c) { return c > hi; }),
               cuts.end());
    if (cuts.back() != hi) cuts.push_back(hi);

    const double tol = 1e-10 * std::max(hi, 1.0);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += integrate(survival_fn, cuts[i], cuts[i + 1], tol);
    }
    const auto tail = [&](double s) {
        if (s >= 1.0) return 0.0;
        const double onems = 1.0 - s;
        return survival(hi + s / onems) / (onems * onems);
    };
    total += integrate(tail, 0.0, 1.0, 1e-12 * std::max(total, 1.0));
    return total;
}

double LifetimeDistribution::quantile(double u) const {
    require(u > 0.0 && u < 1.0, "quantile level must lie in (0, 1)");
    if (const auto* w = std::get_if<WeibullParams>(&params_)) {
        return w->scale * std::pow(-std::log1p(-u), 1.0 / w->shape);
    }
    if (const auto* l = std::get_if<LognormalParams>(&params_)) {
        return std::exp(l->log_mu + l->log_sigma * standard_normal_quantile(u));
    }
    if (const auto* p = std::get_if<PointMassParams>(&params_)) {
        return p->time;
    }
    // Monotone bisection on the composed CDF; tolerates jump points.
    double hi = 1.0;
    for (int i = 0; i < 200 && cdf(hi) < u; ++i) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < u) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

double LifetimeDistribution::sample(RngStream& stream) const {
    if (const auto* parts = std::get_if<std::vector<LifetimeDistribution>>(&params_)) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& part : *parts) best = std::min(best, part.sample(stream));
        return best;
    }
    return quantile(stream.next_u01());
}

namespace {

[[noreturn]] void kind_mismatch(const char* wanted) {
    throw std::logic_error(std::string("distribution kind mismatch: expected ") + wanted);
}

} // namespace

double LifetimeDistribution::weibull_scale() const {
    if (const auto* w = std::get_if<WeibullParams>(&params_)) return w->scale;
    kind_mismatch("weibull");
}

double LifetimeDistribution::weibull_shape() const {
    if (const auto* w = std::get_if<WeibullParams>(&params_)) return w->shape;
    kind_mismatch("weibull");
}

double LifetimeDistribution::lognormal_mean() const {
    if (const auto* l = std::get_if<LognormalParams>(&params_)) return l->mean;
    kind_mismatch("lognormal_moments");
}

double LifetimeDistribution::lognormal_sd() const {
    if (const auto* l = std::get_if<LognormalParams>(&params_)) return l->sd;
    kind_mismatch("lognormal_moments");
}

double LifetimeDistribution::point_mass_time() const {
    if (const auto* p = std::get_if<PointMassParams>(&params_)) return p->time;
    kind_mismatch("point_mass");
}

const std::vector<LifetimeDistribution>& LifetimeDistribution::constituents() const {
    if (const auto* parts = std::get_if<std::vector<LifetimeDistribution>>(&params_)) {
        return *parts;
    }
    kind_mismatch("composed_min");
}

double weibull_mean_from_scale(double scale, double shape) {
    require(std::isfinite(scale) && scale > 0.0, "weibull scale must be positive");
    require(std::isfinite(shape) && shape > 0.0, "weibull shape must be positive");
    return scale * std::tgamma(1.0 + 1.0 / shape);
}

double weibull_scale_from_mean(double mean, double shape) {
    require(std::isfinite(mean) && mean > 0.0, "weibull mean must be positive");
    require(std::isfinite(shape) && shape > 0.0, "weibull shape must be positive");
    return mean / std::tgamma(1.0 + 1.0 / shape);
}

// Wichura's algorithm AS 241, PPND16.
double standard_normal_quantile(double u) {
    require(u > 0.0 && u < 1.0, "normal quantile level must lie in (0, 1)");
    const double q = u - 0.5;
    double r;
    if (std::abs(q) <= 0.425) {
        r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) *
                        r +
                    4.5921953931549871457e+4) *
                       r +
                   1.3731693765509461125e+4) *
                      r +
                  1.9715909503065514427e+3) *
                     r +
                 1.3314166789178437745e+2) *
                    r +
                3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) *
                        r +
                    2.1213794301586595867e+4) *
                       r +
                   5.3941960214247511077e+3) *
                      r +
                  6.8718700749205790830e+2) *
                     r +
                 4.2313330701600911252e+1) *
                    r +
                1.0);
    }
    r = q < 0.0 ? u : 1.0 - u;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                      2.41780725177450611770e-1) *
                         r +
                     1.27045825245236838258e+0) *
                        r +
                    3.64784832476320460504e+0) *
                       r +
                   5.76949722146069140550e+0) *
                      r +
                  4.63033784615654529590e+0) *
                     r +
                 1.42343711074968357734e+0) /
                (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                      1.51986665636164571966e-2) *
                         r +
                     1.48103976427480074590e-1) *
                        r +
                    6.89767334985100004550e-1) *
                       r +
                   1.67638483018380384940e+0) *
                      r +
                  2.05319162663775882187e+0) *
                     r +
                 1.0);
    } else {
        r -= 5.0;
        value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                      1.24266094738807843860e-3) *
                         r +
                     2.65321895265761230930e-2) *
                        r +
                    2.96560571828504891230e-1) *
                       r +
                   1.78482653991729133580e+0) *
                      r +
                  5.46378491116411436990e+0) *
                     r +
                 6.65790464350110377720e+0) /
                (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                      1.84631831751005468180e-5) *
                         r +
                     7.86869131145613259100e-4) *
                        r +
                    1.48753612908506148525e-2) *
                       r +
                   1.36929880922735805310e-1) *
                      r +
                  5.99832206555887937690e-1) *
                     r +
                 1.0);
    }
    return q < 0.0 ? -value : value;
}

} // namespace archval
