#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "archval/distribution.hpp"

namespace archval {

// Ordered M0 < M1 < M2 < M3 < M4, from fully integral through
// component-modular monolith (M2), static distributed (M3), to dynamic
// distributed resource sharing (M4).
enum class ModularityStage { M0 = 0, M1, M2, M3, M4 };

const char* to_string(ModularityStage stage);
std::optional<ModularityStage> stage_from_string(std::string_view name);

/// One catalog entry: a subsystem, bus, or tech-package type.
struct ComponentSpec {
    std::string name;
    double cost = 0.0; // k$
    double mass = 0.0; // kg
    LifetimeDistribution failure;
    std::optional<LifetimeDistribution> obsolescence;
};

enum class CatalogSection { Component, Bus, TechPackage };

/**
 * Name-unique registry of component types. Entries keep their insertion
 * order per section so scenario files round-trip unchanged.
 */
class Catalog {
public:
    // Throws std::invalid_argument on a duplicate name.
    void add(ComponentSpec spec, CatalogSection section);

    // Throws CatalogError when the name is unknown.
    const ComponentSpec& at(const std::string& name) const;
    ComponentSpec& at_mut(const std::string& name);

    const ComponentSpec* find(const std::string& name) const noexcept;
    CatalogSection section_of(const std::string& name) const;
    std::vector<const ComponentSpec*> entries(CatalogSection section) const;
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::vector<std::pair<ComponentSpec, CatalogSection>> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// A physically separate unit: subsystems plus a bus, optionally a
/// wireless tech-package.
struct FractionSpec {
    std::vector<std::string> components;
    std::string bus;
    std::optional<std::string> tech_package;
};

struct ArchitectureSpec {
    std::string name;
    std::vector<FractionSpec> fractions;
    // Stage annotation; when absent the stage follows from the fraction
    // count (see stage_of).
    std::optional<ModularityStage> stage;
    // Benefit-stream hook (k$/year); zero keeps valuation cost-only.
    double revenue_rate = 0.0;
};

// Build-plus-launch cost of one fraction deployment:
// component costs + bus + tech-package + launch_rate * total mass.
double deployment_cost(const FractionSpec& fraction, const Catalog& catalog, double launch_rate);

// Human-readable issues; empty iff the architecture is internally
// consistent over the catalog. `required_subsystems`, when nonempty,
// must be covered by the union of the fractions' component lists.
std::vector<std::string> validate(const ArchitectureSpec& arch, const Catalog& catalog,
                                  const std::vector<std::string>& required_subsystems = {});

// Annotation if present; otherwise one fraction classifies as M2
// (component-modular monolith) and two or more as M3 (static
// allocation). M4 is reserved for dynamic-sharing systems and is only
// reachable by annotation.
ModularityStage stage_of(const ArchitectureSpec& arch);

} // namespace archval
