#include "archval/replacement.hpp"

namespace archval {

LifetimeDistribution min_of(std::vector<LifetimeDistribution> constituents) {
    return LifetimeDistribution::composed_min(std::move(constituents));
}

LifetimeDistribution replacement_distribution(const FractionSpec& fraction,
                                              const Catalog& catalog) {
    std::vector<LifetimeDistribution> parts;
    const auto add_constituent = [&parts](const ComponentSpec& spec) {
        parts.push_back(spec.failure);
        if (spec.obsolescence) parts.push_back(*spec.obsolescence);
    };
    for (const auto& name : fraction.components) add_constituent(catalog.at(name));
    add_constituent(catalog.at(fraction.bus));
    if (fraction.tech_package) add_constituent(catalog.at(*fraction.tech_package));
    return min_of(std::move(parts));
}

} // namespace archval
