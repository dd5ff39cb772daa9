#include "archval/architecture.hpp"

#include <map>
#include <set>

#include "archval/errors.hpp"

namespace archval {

const char* to_string(ModularityStage stage) {
    switch (stage) {
        case ModularityStage::M0: return "M0";
        case ModularityStage::M1: return "M1";
        case ModularityStage::M2: return "M2";
        case ModularityStage::M3: return "M3";
        case ModularityStage::M4: return "M4";
    }
    return "?";
}

std::optional<ModularityStage> stage_from_string(std::string_view name) {
    if (name == "M0") return ModularityStage::M0;
    if (name == "M1") return ModularityStage::M1;
    if (name == "M2") return ModularityStage::M2;
    if (name == "M3") return ModularityStage::M3;
    if (name == "M4") return ModularityStage::M4;
    return std::nullopt;
}

void Catalog::add(ComponentSpec spec, CatalogSection section) {
    if (index_.contains(spec.name)) {
        throw std::invalid_argument("duplicate catalog entry: " + spec.name);
    }
    index_.emplace(spec.name, entries_.size());
    entries_.emplace_back(std::move(spec), section);
}

const ComponentSpec& Catalog::at(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw CatalogError("unknown catalog entry: " + name);
    return entries_[it->second].first;
}

ComponentSpec& Catalog::at_mut(const std::string& name) {
    const auto it = index_.find(name);
    if (it == index_.end()) throw CatalogError("unknown catalog entry: " + name);
    return entries_[it->second].first;
}

const ComponentSpec* Catalog::find(const std::string& name) const noexcept {
    const auto it = index_.find(name);
    return it == index_.end() ? nullptr : &entries_[it->second].first;
}

CatalogSection Catalog::section_of(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw CatalogError("unknown catalog entry: " + name);
    return entries_[it->second].second;
}

std::vector<const ComponentSpec*> Catalog::entries(CatalogSection section) const {
    std::vector<const ComponentSpec*> out;
    for (const auto& [spec, sec] : entries_) {
        if (sec == section) out.push_back(&spec);
    }
    return out;
}

double deployment_cost(const FractionSpec& fraction, const Catalog& catalog, double launch_rate) {
    if (!(launch_rate >= 0.0)) throw std::invalid_argument("launch rate must be nonnegative");
    double build = 0.0;
    double mass = 0.0;
    for (const auto& name : fraction.components) {
        const auto& spec = catalog.at(name);
        build += spec.cost;
        mass += spec.mass;
    }
    const auto& bus = catalog.at(fraction.bus);
    build += bus.cost;
    mass += bus.mass;
    if (fraction.tech_package) {
        const auto& tp = catalog.at(*fraction.tech_package);
        build += tp.cost;
        mass += tp.mass;
    }
    return build + launch_rate * mass;
}

std::vector<std::string> validate(const ArchitectureSpec& arch, const Catalog& catalog,
                                  const std::vector<std::string>& required_subsystems) {
    std::vector<std::string> issues;
    const std::string prefix = "architecture " + arch.name + ": ";

    if (arch.fractions.empty()) {
        issues.push_back(prefix + "must declare at least one fraction");
    }

    std::map<std::string, int> component_uses;
    for (std::size_t i = 0; i < arch.fractions.size(); ++i) {
        const auto& fraction = arch.fractions[i];
        const std::string where = prefix + "fraction " + std::to_string(i) + ": ";
        if (fraction.components.empty()) {
            issues.push_back(where + "must carry at least one component");
        }
        for (const auto& name : fraction.components) {
            if (!catalog.find(name)) {
                issues.push_back(where + "unknown component \"" + name + "\"");
            }
            ++component_uses[name];
        }
        if (!catalog.find(fraction.bus)) {
            issues.push_back(where + "unknown bus \"" + fraction.bus + "\"");
        }
        if (fraction.tech_package && !catalog.find(*fraction.tech_package)) {
            issues.push_back(where + "unknown tech package \"" + *fraction.tech_package + "\"");
        }
    }

    for (const auto& [name, uses] : component_uses) {
        if (uses > 1) {
            issues.push_back(prefix + "component \"" + name + "\" appears in " +
                             std::to_string(uses) + " fractions");
        }
    }

    if (arch.stage) {
        const bool monolithic_stage = *arch.stage <= ModularityStage::M2;
        if (monolithic_stage && arch.fractions.size() != 1) {
            issues.push_back(prefix + "stage " + to_string(*arch.stage) +
                             " requires exactly one fraction");
        }
        if (!monolithic_stage && arch.fractions.size() < 2) {
            issues.push_back(prefix + "stage " + to_string(*arch.stage) +
                             " requires at least two fractions");
        }
    }

    for (const auto& needed : required_subsystems) {
        if (!component_uses.contains(needed)) {
            issues.push_back(prefix + "required subsystem \"" + needed + "\" is not covered");
        }
    }

    return issues;
}

ModularityStage stage_of(const ArchitectureSpec& arch) {
    if (arch.stage) return *arch.stage;
    return arch.fractions.size() <= 1 ? ModularityStage::M2 : ModularityStage::M3;
}

} // namespace archval
