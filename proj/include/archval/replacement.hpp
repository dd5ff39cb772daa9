#pragma once

#include <vector>

#include "archval/architecture.hpp"
#include "archval/distribution.hpp"

namespace archval {

// Distribution of the minimum of independent constituent lifetimes:
// CDF(t) = 1 - prod_i (1 - CDF_i(t)). Throws std::invalid_argument on an
// empty list.
LifetimeDistribution min_of(std::vector<LifetimeDistribution> constituents);

// Replacement time of one fraction: the minimum over every constituent's
// failure distribution (components, bus, tech-package when present) plus
// every declared obsolescence distribution. A fraction is replaced as
// soon as any constituent fails or its technology is obsolete; renewals
// are i.i.d. copies (all clocks reset on replacement).
LifetimeDistribution replacement_distribution(const FractionSpec& fraction,
                                              const Catalog& catalog);

} // namespace archval
