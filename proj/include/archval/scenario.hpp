#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "archval/architecture.hpp"
#include "archval/environment.hpp"
#include "archval/simulation.hpp"

namespace archval {

struct SweepAxis {
    std::string path; // dotted parameter path, e.g. tech_packages.f6tp.failure.mean
    std::vector<double> values;
};

/// Stored sweep definition; runnable by name from the CLI.
struct SweepSpec {
    std::string name;
    std::string source;
    std::string target;
    SweepAxis axis;
    std::optional<SweepAxis> secondary;
};

struct Scenario {
    SimulationConfig simulation;
    Catalog catalog;
    // Subsystems every architecture must cover; empty disables the check
    // (the catalog may then carry unused alternates).
    std::vector<std::string> required_subsystems;
    std::vector<ArchitectureSpec> architectures;
    std::optional<EnvironmentModel> environment;
    std::vector<SweepSpec> sweeps;

    // Throws CatalogError when no architecture has that name.
    const ArchitectureSpec& architecture(const std::string& name) const;
    const SweepSpec* find_sweep(const std::string& name) const noexcept;
};

// Parses and fully validates scenario JSON. Throws ScenarioParseError on
// malformed JSON (with position) and ValidationError listing every
// schema or consistency issue at once; unknown keys are rejected.
Scenario parse_scenario(const std::string& json_text, const std::string& origin = "<string>");

Scenario load_scenario(const std::filesystem::path& path);

// Inverse of parse_scenario up to formatting; load(serialize(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

// Sets the numeric field addressed by a dotted path, e.g.
//   simulation.lifetime
//   components.payload.cost | .mass
//   tech_packages.f6tp.failure.scale | .shape | .mean
// where failure.mean on a Weibull adjusts the scale at the current
// shape. Throws ConfigError when the path does not resolve.
void apply_parameter(Scenario& scenario, const std::string& path, double value);

// Reads the numeric field addressed by a path (same grammar).
double read_parameter(const Scenario& scenario, const std::string& path);

// Bundled demo: the DARPA F6-style catalog (costs, masses, Weibull
// failure parameters, lognormal obsolescence on the four subsystems)
// with the monolithic and four-fraction architectures.
const std::string& f6_demo_json();
const Scenario& f6_demo();

} // namespace archval
