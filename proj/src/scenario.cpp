#include "archval/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "archval/errors.hpp"

namespace archval {

namespace {

using json = nlohmann::ordered_json;

struct Issues {
    std::vector<std::string> lines;

    void add(const std::string& where, const std::string& what) {
        lines.push_back(where.empty() ? what : where + ": " + what);
    }
    [[noreturn]] void raise() { throw ValidationError(std::move(lines)); }
};

bool check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed, Issues& issues) {
    if (!obj.is_object()) {
        issues.add(where, "expected an object");
        return false;
    }
    bool clean = true;
    for (const auto& item : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* key) {
                return item.key() == key;
            }) == allowed.end()) {
            issues.add(where, "unknown key \"" + item.key() + "\"");
            clean = false;
        }
    }
    return clean;
}

bool get_double(const json& obj, const std::string& where, const char* key, double& out,
                Issues& issues, bool required = true) {
    if (!obj.contains(key)) {
        if (required) issues.add(where, std::string("missing key \"") + key + "\"");
        return false;
    }
    if (!obj[key].is_number()) {
        issues.add(where, std::string("key \"") + key + "\" must be a number");
        return false;
    }
    out = obj[key].get<double>();
    return true;
}

bool get_string(const json& obj, const std::string& where, const char* key, std::string& out,
                Issues& issues, bool required = true) {
    if (!obj.contains(key)) {
        if (required) issues.add(where, std::string("missing key \"") + key + "\"");
        return false;
    }
    if (!obj[key].is_string()) {
        issues.add(where, std::string("key \"") + key + "\" must be a string");
        return false;
    }
    out = obj[key].get<std::string>();
    return true;
}

std::optional<LifetimeDistribution> parse_distribution(const json& obj, const std::string& where,
                                                       Issues& issues) {
    std::string kind;
    if (!obj.is_object() || !get_string(obj, where, "kind", kind, issues)) {
        if (!obj.is_object()) issues.add(where, "expected a distribution object");
        return std::nullopt;
    }
    try {
        if (kind == "weibull") {
            double scale = 0.0;
            double shape = 0.0;
            check_keys(obj, where, {"kind", "scale", "shape"}, issues);
            if (get_double(obj, where, "scale", scale, issues) &&
                get_double(obj, where, "shape", shape, issues)) {
                return LifetimeDistribution::weibull(scale, shape);
            }
        } else if (kind == "lognormal_moments") {
            double mean = 0.0;
            double sd = 0.0;
            check_keys(obj, where, {"kind", "mean", "sd"}, issues);
            if (get_double(obj, where, "mean", mean, issues) &&
                get_double(obj, where, "sd", sd, issues)) {
                return LifetimeDistribution::lognormal_from_moments(mean, sd);
            }
        } else if (kind == "point_mass") {
            double time = 0.0;
            check_keys(obj, where, {"kind", "time"}, issues);
            if (get_double(obj, where, "time", time, issues)) {
                return LifetimeDistribution::point_mass(time);
            }
        } else {
            issues.add(where, "unknown distribution kind \"" + kind + "\"");
        }
    } catch (const std::invalid_argument& error) {
        issues.add(where, error.what());
    }
    return std::nullopt;
}

void parse_catalog_section(const json& root, const char* section_key, CatalogSection section,
                           Catalog& catalog, Issues& issues) {
    if (!root.contains(section_key)) return;
    const json& list = root[section_key];
    if (!list.is_array()) {
        issues.add(section_key, "must be an array");
        return;
    }
    for (const json& entry : list) {
        std::string name;
        const std::string slot = std::string(section_key);
        if (!get_string(entry, slot, "name", name, issues)) continue;
        const std::string where = slot + "." + name;
        check_keys(entry, where, {"name", "cost", "mass", "failure", "obsolescence"}, issues);

        ComponentSpec spec{name, 0.0, 0.0, LifetimeDistribution::point_mass(1.0), std::nullopt};
        get_double(entry, where, "cost", spec.cost, issues);
        get_double(entry, where, "mass", spec.mass, issues);
        if (!(spec.cost >= 0.0)) issues.add(where, "cost must be nonnegative");
        if (!(spec.mass >= 0.0)) issues.add(where, "mass must be nonnegative");

        bool usable = true;
        if (entry.contains("failure")) {
            if (auto dist = parse_distribution(entry["failure"], where + ".failure", issues)) {
                spec.failure = *dist;
            } else {
                usable = false;
            }
        } else {
            issues.add(where, "missing key \"failure\"");
            usable = false;
        }
        if (entry.contains("obsolescence")) {
            if (auto dist =
                    parse_distribution(entry["obsolescence"], where + ".obsolescence", issues)) {
                spec.obsolescence = *dist;
            } else {
                usable = false;
            }
        }
        if (!usable) continue;
        try {
            catalog.add(std::move(spec), section);
        } catch (const std::invalid_argument& error) {
            issues.add(where, error.what());
        }
    }
}

void parse_simulation(const json& root, SimulationConfig& config, Issues& issues) {
    if (!root.contains("simulation")) {
        issues.add("", "missing key \"simulation\"");
        return;
    }
    const json& sim = root["simulation"];
    const std::string where = "simulation";
    if (!check_keys(sim, where,
                    {"lifetime", "discount_rate", "launch_rate", "runs", "seed",
                     "trajectory_grid", "common_random_numbers"},
                    issues)) {
        if (!sim.is_object()) return;
    }
    get_double(sim, where, "lifetime", config.lifetime, issues);
    get_double(sim, where, "discount_rate", config.discount_rate, issues);
    get_double(sim, where, "launch_rate", config.launch_rate, issues);
    if (sim.contains("runs")) {
        if (sim["runs"].is_number_integer()) {
            config.runs = sim["runs"].get<std::int64_t>();
        } else {
            issues.add(where, "key \"runs\" must be an integer");
        }
    } else {
        issues.add(where, "missing key \"runs\"");
    }
    if (sim.contains("seed")) {
        if (sim["seed"].is_number_integer() && sim["seed"].get<std::int64_t>() >= 0) {
            config.seed = sim["seed"].get<std::uint64_t>();
        } else if (sim["seed"].is_number_unsigned()) {
            config.seed = sim["seed"].get<std::uint64_t>();
        } else {
            issues.add(where, "key \"seed\" must be a nonnegative integer");
        }
    } else {
        issues.add(where, "missing key \"seed\"");
    }
    if (sim.contains("trajectory_grid")) {
        if (!sim["trajectory_grid"].is_array()) {
            issues.add(where, "key \"trajectory_grid\" must be an array of years");
        } else {
            for (const json& value : sim["trajectory_grid"]) {
                if (!value.is_number()) {
                    issues.add(where, "trajectory_grid entries must be numbers");
                    config.trajectory_grid.clear();
                    break;
                }
                config.trajectory_grid.push_back(value.get<double>());
            }
        }
    }
    if (sim.contains("common_random_numbers")) {
        if (sim["common_random_numbers"].is_boolean()) {
            config.common_random_numbers = sim["common_random_numbers"].get<bool>();
        } else {
            issues.add(where, "key \"common_random_numbers\" must be a boolean");
        }
    }

    try {
        validate_config(config);
    } catch (const std::invalid_argument& error) {
        issues.add(where, error.what());
    }
    double prev = 0.0;
    for (double t : config.trajectory_grid) {
        if (!(t > prev) || !(t <= config.lifetime)) {
            issues.add(where, "trajectory_grid must be strictly increasing within (0, lifetime]");
            break;
        }
        prev = t;
    }
}

void parse_architectures(const json& root, Scenario& scenario, Issues& issues) {
    if (!root.contains("architectures")) {
        issues.add("", "missing key \"architectures\"");
        return;
    }
    if (!root["architectures"].is_array()) {
        issues.add("architectures", "must be an array");
        return;
    }
    std::set<std::string> seen;
    for (const json& entry : root["architectures"]) {
        std::string name;
        if (!get_string(entry, "architectures", "name", name, issues)) continue;
        const std::string where = "architectures." + name;
        check_keys(entry, where, {"name", "stage", "fractions", "revenue_rate"}, issues);
        if (!seen.insert(name).second) {
            issues.add(where, "duplicate architecture name");
            continue;
        }

        ArchitectureSpec arch;
        arch.name = name;
        std::string stage_name;
        if (get_string(entry, where, "stage", stage_name, issues, /*required=*/false)) {
            if (auto stage = stage_from_string(stage_name)) {
                arch.stage = *stage;
            } else {
                issues.add(where, "unknown stage \"" + stage_name + "\" (expected M0..M4)");
            }
        }
        get_double(entry, where, "revenue_rate", arch.revenue_rate, issues, /*required=*/false);

        if (!entry.contains("fractions") || !entry["fractions"].is_array()) {
            issues.add(where, "missing or non-array key \"fractions\"");
            continue;
        }
        for (const json& fraction_json : entry["fractions"]) {
            const std::string fraction_where =
                where + ".fractions[" + std::to_string(arch.fractions.size()) + "]";
            check_keys(fraction_json, fraction_where, {"components", "bus", "tech_package"},
                       issues);
            FractionSpec fraction;
            if (fraction_json.contains("components") && fraction_json["components"].is_array()) {
                for (const json& component : fraction_json["components"]) {
                    if (component.is_string()) {
                        fraction.components.push_back(component.get<std::string>());
                    } else {
                        issues.add(fraction_where, "component references must be strings");
                    }
                }
            } else {
                issues.add(fraction_where, "missing or non-array key \"components\"");
            }
            get_string(fraction_json, fraction_where, "bus", fraction.bus, issues);
            std::string tech_package;
            if (get_string(fraction_json, fraction_where, "tech_package", tech_package, issues,
                           /*required=*/false)) {
                fraction.tech_package = tech_package;
            }
            arch.fractions.push_back(std::move(fraction));
        }
        scenario.architectures.push_back(std::move(arch));
    }
}

void parse_environment(const json& root, Scenario& scenario, Issues& issues) {
    if (!root.contains("environment")) return;
    const json& env = root["environment"];
    const std::string where = "environment";
    if (!check_keys(env, where, {"parameters", "stakeholders", "periods", "discount"}, issues)) {
        if (!env.is_object()) return;
    }

    EnvironmentModel model;
    if (env.contains("parameters") && env["parameters"].is_array()) {
        for (const json& parameter : env["parameters"]) {
            const std::string param_where = where + ".parameters";
            EnvironmentParameter spec;
            if (!get_string(parameter, param_where, "name", spec.name, issues)) continue;
            check_keys(parameter, param_where + "." + spec.name, {"name", "levels"}, issues);
            if (parameter.contains("levels") && parameter["levels"].is_array()) {
                for (const json& level : parameter["levels"]) {
                    if (level.is_string()) {
                        spec.levels.push_back(level.get<std::string>());
                    } else {
                        issues.add(param_where, "levels must be strings");
                    }
                }
            }
            if (spec.levels.empty()) {
                issues.add(param_where + "." + spec.name, "must declare at least one level");
            }
            model.parameters.push_back(std::move(spec));
        }
    } else {
        issues.add(where, "missing or non-array key \"parameters\"");
    }

    const auto parse_state = [&](const json& requirement, const std::string& req_where,
                                 EnvironmentState& state) {
        state.assignment.assign(model.parameters.size(), std::string());
        if (!requirement.is_object()) {
            issues.add(req_where, "a requirement must map parameter names to levels");
            return false;
        }
        bool ok = true;
        for (const auto& item : requirement.items()) {
            const auto param = std::find_if(model.parameters.begin(), model.parameters.end(),
                                            [&](const EnvironmentParameter& p) {
                                                return p.name == item.key();
                                            });
            if (param == model.parameters.end()) {
                issues.add(req_where, "unknown parameter \"" + item.key() + "\"");
                ok = false;
                continue;
            }
            if (!item.value().is_string()) {
                issues.add(req_where, "level for \"" + item.key() + "\" must be a string");
                ok = false;
                continue;
            }
            const std::string level = item.value().get<std::string>();
            if (std::find(param->levels.begin(), param->levels.end(), level) ==
                param->levels.end()) {
                issues.add(req_where, "level \"" + level + "\" is outside the domain of \"" +
                                          item.key() + "\"");
                ok = false;
                continue;
            }
            state.assignment[static_cast<std::size_t>(param - model.parameters.begin())] = level;
        }
        for (std::size_t p = 0; p < model.parameters.size(); ++p) {
            if (state.assignment[p].empty()) {
                issues.add(req_where,
                           "missing level for parameter \"" + model.parameters[p].name + "\"");
                ok = false;
            }
        }
        return ok;
    };

    if (env.contains("stakeholders") && env["stakeholders"].is_array()) {
        std::size_t stakeholder_index = 0;
        for (const json& stakeholder_json : env["stakeholders"]) {
            const std::string sh_where =
                where + ".stakeholders[" + std::to_string(stakeholder_index++) + "]";
            check_keys(stakeholder_json, sh_where, {"requirements"}, issues);
            StakeholderModel stakeholder;
            if (stakeholder_json.contains("requirements") &&
                stakeholder_json["requirements"].is_array()) {
                for (const json& period_json : stakeholder_json["requirements"]) {
                    std::vector<EnvironmentState> period;
                    if (!period_json.is_array()) {
                        issues.add(sh_where, "each period must be an array of requirements");
                        continue;
                    }
                    for (const json& requirement : period_json) {
                        EnvironmentState state;
                        if (parse_state(requirement, sh_where, state)) {
                            period.push_back(std::move(state));
                        }
                    }
                    stakeholder.requirements.push_back(std::move(period));
                }
            } else {
                issues.add(sh_where, "missing or non-array key \"requirements\"");
            }
            model.stakeholders.push_back(std::move(stakeholder));
        }
    } else {
        issues.add(where, "missing or non-array key \"stakeholders\"");
    }

    if (env.contains("discount")) {
        double discount = 1.0;
        if (get_double(env, where, "discount", discount, issues)) {
            if (!(discount > 0.0 && discount <= 1.0)) {
                issues.add(where, "discount must lie in (0, 1]");
            } else {
                model.discount = discount;
            }
        }
    }

    // Periods: declared, or inferred from the stakeholders' requirement
    // lists (which must then agree in length).
    std::size_t inferred = 0;
    for (const auto& stakeholder : model.stakeholders) {
        inferred = std::max(inferred, stakeholder.requirements.size());
    }
    if (env.contains("periods")) {
        if (env["periods"].is_number_integer() && env["periods"].get<std::int64_t>() >= 1) {
            model.periods = static_cast<int>(env["periods"].get<std::int64_t>());
        } else {
            issues.add(where, "periods must be a positive integer");
        }
    } else {
        model.periods = static_cast<int>(std::max<std::size_t>(inferred, 1));
    }
    for (std::size_t s = 0; s < model.stakeholders.size(); ++s) {
        if (model.stakeholders[s].requirements.size() !=
            static_cast<std::size_t>(model.periods)) {
            issues.add(where, "stakeholder " + std::to_string(s) + " declares " +
                                  std::to_string(model.stakeholders[s].requirements.size()) +
                                  " periods, expected " + std::to_string(model.periods));
        }
    }

    scenario.environment = std::move(model);
}

bool parse_axis_values(const json& entry, const std::string& where, const char* key,
                       std::vector<double>& out, Issues& issues) {
    if (!entry.contains(key) || !entry[key].is_array()) {
        issues.add(where, std::string("missing or non-array key \"") + key + "\"");
        return false;
    }
    for (const json& value : entry[key]) {
        if (!value.is_number()) {
            issues.add(where, std::string("entries of \"") + key + "\" must be numbers");
            return false;
        }
        out.push_back(value.get<double>());
    }
    if (out.empty()) {
        issues.add(where, std::string("\"") + key + "\" must not be empty");
        return false;
    }
    return true;
}

void parse_sweeps(const json& root, Scenario& scenario, Issues& issues) {
    if (!root.contains("sweeps")) return;
    if (!root["sweeps"].is_array()) {
        issues.add("sweeps", "must be an array");
        return;
    }
    std::set<std::string> seen;
    for (const json& entry : root["sweeps"]) {
        SweepSpec spec;
        if (!get_string(entry, "sweeps", "name", spec.name, issues)) continue;
        const std::string where = "sweeps." + spec.name;
        check_keys(entry, where, {"name", "from", "to", "param", "values", "param2", "values2"},
                   issues);
        if (!seen.insert(spec.name).second) {
            issues.add(where, "duplicate sweep name");
            continue;
        }
        get_string(entry, where, "from", spec.source, issues);
        get_string(entry, where, "to", spec.target, issues);
        bool ok = get_string(entry, where, "param", spec.axis.path, issues);
        ok = parse_axis_values(entry, where, "values", spec.axis.values, issues) && ok;
        const bool has_param2 = entry.contains("param2");
        const bool has_values2 = entry.contains("values2");
        if (has_param2 != has_values2) {
            issues.add(where, "param2 and values2 must be declared together");
        } else if (has_param2) {
            SweepAxis secondary;
            ok = get_string(entry, where, "param2", secondary.path, issues) && ok;
            ok = parse_axis_values(entry, where, "values2", secondary.values, issues) && ok;
            if (ok) spec.secondary = std::move(secondary);
        }
        if (ok) scenario.sweeps.push_back(std::move(spec));
    }
}

json distribution_to_json(const LifetimeDistribution& dist) {
    json out;
    switch (dist.kind()) {
        case DistKind::Weibull:
            out["kind"] = "weibull";
            out["scale"] = dist.weibull_scale();
            out["shape"] = dist.weibull_shape();
            break;
        case DistKind::LognormalMoments:
            out["kind"] = "lognormal_moments";
            out["mean"] = dist.lognormal_mean();
            out["sd"] = dist.lognormal_sd();
            break;
        case DistKind::PointMass:
            out["kind"] = "point_mass";
            out["time"] = dist.point_mass_time();
            break;
        case DistKind::ComposedMin:
            throw std::logic_error("composed distributions are not representable in scenarios");
    }
    // Keep exact integers as JSON integers.
    for (auto& item : out.items()) {
        if (item.value().is_number_float()) {
            const double v = item.value().get<double>();
            if (v == std::floor(v) && std::abs(v) < 9.0e15) {
                item.value() = static_cast<std::int64_t>(v);
            }
        }
    }
    return out;
}

json number_json(double v) {
    if (v == std::floor(v) && std::abs(v) < 9.0e15) return static_cast<std::int64_t>(v);
    return v;
}

} // namespace

const ArchitectureSpec& Scenario::architecture(const std::string& name) const {
    for (const auto& arch : architectures) {
        if (arch.name == name) return arch;
    }
    throw CatalogError("unknown architecture: " + name);
}

const SweepSpec* Scenario::find_sweep(const std::string& name) const noexcept {
    for (const auto& sweep : sweeps) {
        if (sweep.name == name) return &sweep;
    }
    return nullptr;
}

Scenario parse_scenario(const std::string& json_text, const std::string& origin) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& error) {
        throw ScenarioParseError(origin + ": " + error.what());
    }

    Issues issues;
    if (!root.is_object()) {
        issues.add(origin, "top level must be an object");
        issues.raise();
    }
    check_keys(root, origin,
               {"simulation", "components", "buses", "tech_packages", "required_subsystems",
                "architectures", "environment", "sweeps"},
               issues);

    Scenario scenario;
    parse_simulation(root, scenario.simulation, issues);
    if (!root.contains("components")) {
        issues.add(origin, "missing key \"components\"");
    }
    parse_catalog_section(root, "components", CatalogSection::Component, scenario.catalog, issues);
    parse_catalog_section(root, "buses", CatalogSection::Bus, scenario.catalog, issues);
    parse_catalog_section(root, "tech_packages", CatalogSection::TechPackage, scenario.catalog,
                          issues);

    if (root.contains("required_subsystems")) {
        if (!root["required_subsystems"].is_array()) {
            issues.add("required_subsystems", "must be an array of component names");
        } else {
            for (const json& name : root["required_subsystems"]) {
                if (!name.is_string()) {
                    issues.add("required_subsystems", "entries must be strings");
                    continue;
                }
                const std::string value = name.get<std::string>();
                if (!scenario.catalog.find(value)) {
                    issues.add("required_subsystems", "unknown component \"" + value + "\"");
                }
                scenario.required_subsystems.push_back(value);
            }
        }
    }

    parse_architectures(root, scenario, issues);
    for (const auto& arch : scenario.architectures) {
        for (const auto& issue :
             validate(arch, scenario.catalog, scenario.required_subsystems)) {
            issues.add("", issue);
        }
    }

    parse_environment(root, scenario, issues);
    parse_sweeps(root, scenario, issues);

    // Stored sweeps must reference real architectures and resolvable paths.
    if (issues.lines.empty()) {
        for (const auto& sweep : scenario.sweeps) {
            const std::string where = "sweeps." + sweep.name;
            for (const std::string* arch_name : {&sweep.source, &sweep.target}) {
                if (std::none_of(scenario.architectures.begin(), scenario.architectures.end(),
                                 [&](const ArchitectureSpec& arch) {
                                     return arch.name == *arch_name;
                                 })) {
                    issues.add(where, "unknown architecture \"" + *arch_name + "\"");
                }
            }
            for (const SweepAxis* axis :
                 sweep.secondary ? std::vector<const SweepAxis*>{&sweep.axis, &*sweep.secondary}
                                 : std::vector<const SweepAxis*>{&sweep.axis}) {
                try {
                    read_parameter(scenario, axis->path);
                } catch (const ConfigError& error) {
                    issues.add(where, error.what());
                }
            }
        }
    }

    if (!issues.lines.empty()) issues.raise();
    return scenario;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScenarioParseError("cannot open scenario file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), path.string());
}

std::string serialize_scenario(const Scenario& scenario) {
    json root;

    json sim;
    sim["lifetime"] = number_json(scenario.simulation.lifetime);
    sim["discount_rate"] = scenario.simulation.discount_rate;
    sim["launch_rate"] = number_json(scenario.simulation.launch_rate);
    sim["runs"] = scenario.simulation.runs;
    sim["seed"] = scenario.simulation.seed;
    if (!scenario.simulation.trajectory_grid.empty()) {
        json grid = json::array();
        for (double t : scenario.simulation.trajectory_grid) grid.push_back(number_json(t));
        sim["trajectory_grid"] = std::move(grid);
    }
    sim["common_random_numbers"] = scenario.simulation.common_random_numbers;
    root["simulation"] = std::move(sim);

    const auto emit_section = [&root, &scenario](const char* key, CatalogSection section) {
        const auto entries = scenario.catalog.entries(section);
        if (entries.empty() && section != CatalogSection::Component) return;
        json list = json::array();
        for (const ComponentSpec* spec : entries) {
            json entry;
            entry["name"] = spec->name;
            entry["cost"] = number_json(spec->cost);
            entry["mass"] = number_json(spec->mass);
            entry["failure"] = distribution_to_json(spec->failure);
            if (spec->obsolescence) {
                entry["obsolescence"] = distribution_to_json(*spec->obsolescence);
            }
            list.push_back(std::move(entry));
        }
        root[key] = std::move(list);
    };
    emit_section("components", CatalogSection::Component);
    emit_section("buses", CatalogSection::Bus);
    emit_section("tech_packages", CatalogSection::TechPackage);

    if (!scenario.required_subsystems.empty()) {
        root["required_subsystems"] = scenario.required_subsystems;
    }

    json architectures = json::array();
    for (const auto& arch : scenario.architectures) {
        json entry;
        entry["name"] = arch.name;
        if (arch.stage) entry["stage"] = to_string(*arch.stage);
        if (arch.revenue_rate != 0.0) entry["revenue_rate"] = number_json(arch.revenue_rate);
        json fractions = json::array();
        for (const auto& fraction : arch.fractions) {
            json fraction_json;
            fraction_json["components"] = fraction.components;
            fraction_json["bus"] = fraction.bus;
            if (fraction.tech_package) fraction_json["tech_package"] = *fraction.tech_package;
            fractions.push_back(std::move(fraction_json));
        }
        entry["fractions"] = std::move(fractions);
        architectures.push_back(std::move(entry));
    }
    root["architectures"] = std::move(architectures);

    if (scenario.environment) {
        const auto& model = *scenario.environment;
        json env;
        json parameters = json::array();
        for (const auto& parameter : model.parameters) {
            json p;
            p["name"] = parameter.name;
            p["levels"] = parameter.levels;
            parameters.push_back(std::move(p));
        }
        env["parameters"] = std::move(parameters);
        json stakeholders = json::array();
        for (const auto& stakeholder : model.stakeholders) {
            json periods = json::array();
            for (const auto& period : stakeholder.requirements) {
                json requirements = json::array();
                for (const auto& state : period) {
                    json requirement;
                    for (std::size_t p = 0; p < model.parameters.size(); ++p) {
                        requirement[model.parameters[p].name] = state.assignment[p];
                    }
                    requirements.push_back(std::move(requirement));
                }
                periods.push_back(std::move(requirements));
            }
            json sh;
            sh["requirements"] = std::move(periods);
            stakeholders.push_back(std::move(sh));
        }
        env["stakeholders"] = std::move(stakeholders);
        env["periods"] = model.periods;
        env["discount"] = number_json(model.discount);
        root["environment"] = std::move(env);
    }

    if (!scenario.sweeps.empty()) {
        json sweeps = json::array();
        for (const auto& sweep : scenario.sweeps) {
            json entry;
            entry["name"] = sweep.name;
            entry["from"] = sweep.source;
            entry["to"] = sweep.target;
            entry["param"] = sweep.axis.path;
            json values = json::array();
            for (double v : sweep.axis.values) values.push_back(number_json(v));
            entry["values"] = std::move(values);
            if (sweep.secondary) {
                entry["param2"] = sweep.secondary->path;
                json values2 = json::array();
                for (double v : sweep.secondary->values) values2.push_back(number_json(v));
                entry["values2"] = std::move(values2);
            }
            sweeps.push_back(std::move(entry));
        }
        root["sweeps"] = std::move(sweeps);
    }

    return root.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> tokens;
    std::string token;
    std::istringstream in(path);
    while (std::getline(in, token, '.')) tokens.push_back(token);
    return tokens;
}

[[noreturn]] void bad_path(const std::string& path, const std::string& why) {
    throw ConfigError("parameter path \"" + path + "\" does not resolve: " + why);
}

struct ResolvedField {
    double* simulation_field = nullptr;
    ComponentSpec* component = nullptr;
    enum class Field { Cost, Mass, DistParam } field = Field::Cost;
    bool obsolescence = false;
    std::string dist_param;
};

ResolvedField resolve(Scenario& scenario, const std::string& path) {
    const auto tokens = split_path(path);
    if (tokens.size() < 2) bad_path(path, "expected at least section and field");
    ResolvedField out;

    if (tokens[0] == "simulation") {
        if (tokens.size() != 2) bad_path(path, "simulation paths take one field");
        if (tokens[1] == "lifetime") {
            out.simulation_field = &scenario.simulation.lifetime;
        } else if (tokens[1] == "discount_rate") {
            out.simulation_field = &scenario.simulation.discount_rate;
        } else if (tokens[1] == "launch_rate") {
            out.simulation_field = &scenario.simulation.launch_rate;
        } else {
            bad_path(path, "unknown simulation field \"" + tokens[1] + "\"");
        }
        return out;
    }

    CatalogSection section;
    if (tokens[0] == "components") {
        section = CatalogSection::Component;
    } else if (tokens[0] == "buses") {
        section = CatalogSection::Bus;
    } else if (tokens[0] == "tech_packages") {
        section = CatalogSection::TechPackage;
    } else {
        bad_path(path, "unknown section \"" + tokens[0] + "\"");
    }

    if (tokens.size() < 3) bad_path(path, "expected a component field");
    if (!scenario.catalog.find(tokens[1])) bad_path(path, "unknown entry \"" + tokens[1] + "\"");
    if (scenario.catalog.section_of(tokens[1]) != section) {
        bad_path(path, "\"" + tokens[1] + "\" is not in section \"" + tokens[0] + "\"");
    }
    out.component = &scenario.catalog.at_mut(tokens[1]);

    if (tokens[2] == "cost" || tokens[2] == "mass") {
        if (tokens.size() != 3) bad_path(path, "cost/mass paths take no further field");
        out.field = tokens[2] == "cost" ? ResolvedField::Field::Cost : ResolvedField::Field::Mass;
        return out;
    }
    if (tokens[2] != "failure" && tokens[2] != "obsolescence") {
        bad_path(path, "unknown field \"" + tokens[2] + "\"");
    }
    if (tokens.size() != 4) bad_path(path, "distribution paths take a parameter name");
    out.field = ResolvedField::Field::DistParam;
    out.obsolescence = tokens[2] == "obsolescence";
    if (out.obsolescence && !out.component->obsolescence) {
        bad_path(path, "\"" + tokens[1] + "\" declares no obsolescence");
    }
    out.dist_param = tokens[3];

    const LifetimeDistribution& dist =
        out.obsolescence ? *out.component->obsolescence : out.component->failure;
    const auto supported = [&]() -> bool {
        switch (dist.kind()) {
            case DistKind::Weibull:
                return out.dist_param == "scale" || out.dist_param == "shape" ||
                       out.dist_param == "mean";
            case DistKind::LognormalMoments:
                return out.dist_param == "mean" || out.dist_param == "sd";
            case DistKind::PointMass: return out.dist_param == "time";
            case DistKind::ComposedMin: return false;
        }
        return false;
    };
    if (!supported()) {
        bad_path(path, "distribution has no parameter \"" + out.dist_param + "\"");
    }
    return out;
}

} // namespace

void apply_parameter(Scenario& scenario, const std::string& path, double value) {
    const ResolvedField target = resolve(scenario, path);
    if (target.simulation_field) {
        *target.simulation_field = value;
        validate_config(scenario.simulation);
        return;
    }
    switch (target.field) {
        case ResolvedField::Field::Cost:
            if (!(value >= 0.0)) throw ConfigError("cost must be nonnegative");
            target.component->cost = value;
            return;
        case ResolvedField::Field::Mass:
            if (!(value >= 0.0)) throw ConfigError("mass must be nonnegative");
            target.component->mass = value;
            return;
        case ResolvedField::Field::DistParam: break;
    }

    LifetimeDistribution& dist =
        target.obsolescence ? *target.component->obsolescence : target.component->failure;
    try {
        switch (dist.kind()) {
            case DistKind::Weibull: {
                const double shape = dist.weibull_shape();
                if (target.dist_param == "scale") {
                    dist = LifetimeDistribution::weibull(value, shape);
                } else if (target.dist_param == "shape") {
                    dist = LifetimeDistribution::weibull(dist.weibull_scale(), value);
                } else { // mean, converted to scale at the current shape
                    dist = LifetimeDistribution::weibull(weibull_scale_from_mean(value, shape),
                                                         shape);
                }
                return;
            }
            case DistKind::LognormalMoments: {
                const double mean = target.dist_param == "mean" ? value : dist.lognormal_mean();
                const double sd = target.dist_param == "sd" ? value : dist.lognormal_sd();
                dist = LifetimeDistribution::lognormal_from_moments(mean, sd);
                return;
            }
            case DistKind::PointMass: dist = LifetimeDistribution::point_mass(value); return;
            case DistKind::ComposedMin: break;
        }
    } catch (const std::invalid_argument& error) {
        throw ConfigError(std::string("cannot set \"") + path + "\": " + error.what());
    }
    throw ConfigError("cannot set \"" + path + "\"");
}

double read_parameter(const Scenario& scenario, const std::string& path) {
    // resolve() needs mutable access structurally; reading never writes.
    const ResolvedField target = resolve(const_cast<Scenario&>(scenario), path);
    if (target.simulation_field) return *target.simulation_field;
    switch (target.field) {
        case ResolvedField::Field::Cost: return target.component->cost;
        case ResolvedField::Field::Mass: return target.component->mass;
        case ResolvedField::Field::DistParam: break;
    }
    const LifetimeDistribution& dist =
        target.obsolescence ? *target.component->obsolescence : target.component->failure;
    switch (dist.kind()) {
        case DistKind::Weibull:
            if (target.dist_param == "scale") return dist.weibull_scale();
            if (target.dist_param == "shape") return dist.weibull_shape();
            return weibull_mean_from_scale(dist.weibull_scale(), dist.weibull_shape());
        case DistKind::LognormalMoments:
            return target.dist_param == "mean" ? dist.lognormal_mean() : dist.lognormal_sd();
        case DistKind::PointMass: return dist.point_mass_time();
        case DistKind::ComposedMin: break;
    }
    throw ConfigError("cannot read \"" + path + "\"");
}

namespace {

const char* kF6DemoJson = R"json({
  "simulation": {
    "lifetime": 20,
    "discount_rate": 0.02,
    "launch_rate": 30,
    "runs": 10000,
    "seed": 42,
    "trajectory_grid": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20],
    "common_random_numbers": true
  },
  "components": [
    {
      "name": "payload",
      "cost": 27000,
      "mass": 50,
      "failure": {"kind": "weibull", "scale": 15, "shape": 1.7},
      "obsolescence": {"kind": "lognormal_moments", "mean": 1, "sd": 3}
    },
    {
      "name": "payload_1",
      "cost": 1600,
      "mass": 25,
      "failure": {"kind": "weibull", "scale": 15, "shape": 1.7},
      "obsolescence": {"kind": "lognormal_moments", "mean": 1, "sd": 3}
    },
    {
      "name": "payload_2",
      "cost": 11600,
      "mass": 350,
      "failure": {"kind": "weibull", "scale": 15, "shape": 1.7},
      "obsolescence": {"kind": "lognormal_moments", "mean": 1, "sd": 3}
    },
    {
      "name": "communication",
      "cost": 35000,
      "mass": 70,
      "failure": {"kind": "weibull", "scale": 870, "shape": 1.7},
      "obsolescence": {"kind": "lognormal_moments", "mean": 1, "sd": 3}
    },
    {
      "name": "downlink",
      "cost": 40000,
      "mass": 10,
      "failure": {"kind": "weibull", "scale": 190, "shape": 1.7},
      "obsolescence": {"kind": "lognormal_moments", "mean": 1, "sd": 3}
    },
    {
      "name": "processor",
      "cost": 30000,
      "mass": 20,
      "failure": {"kind": "weibull", "scale": 90, "shape": 1.7},
      "obsolescence": {"kind": "lognormal_moments", "mean": 1, "sd": 3}
    }
  ],
  "buses": [
    {
      "name": "bus_monolithic",
      "cost": 34000,
      "mass": 260,
      "failure": {"kind": "weibull", "scale": 108, "shape": 1.7}
    },
    {
      "name": "bus_payload",
      "cost": 28000,
      "mass": 180,
      "failure": {"kind": "weibull", "scale": 108, "shape": 1.7}
    },
    {
      "name": "bus_communication",
      "cost": 29000,
      "mass": 200,
      "failure": {"kind": "weibull", "scale": 108, "shape": 1.7}
    },
    {
      "name": "bus_downlink",
      "cost": 25000,
      "mass": 150,
      "failure": {"kind": "weibull", "scale": 108, "shape": 1.7}
    },
    {
      "name": "bus_processor",
      "cost": 26000,
      "mass": 160,
      "failure": {"kind": "weibull", "scale": 108, "shape": 1.7}
    }
  ],
  "tech_packages": [
    {
      "name": "f6tp",
      "cost": 2000,
      "mass": 5,
      "failure": {"kind": "weibull", "scale": 600, "shape": 1.7}
    }
  ],
  "required_subsystems": ["payload", "communication", "downlink", "processor"],
  "architectures": [
    {
      "name": "monolithic",
      "stage": "M2",
      "fractions": [
        {
          "components": ["payload", "communication", "downlink", "processor"],
          "bus": "bus_monolithic"
        }
      ]
    },
    {
      "name": "fractionated",
      "stage": "M3",
      "fractions": [
        {"components": ["payload"], "bus": "bus_payload", "tech_package": "f6tp"},
        {"components": ["communication"], "bus": "bus_communication", "tech_package": "f6tp"},
        {"components": ["downlink"], "bus": "bus_downlink", "tech_package": "f6tp"},
        {"components": ["processor"], "bus": "bus_processor", "tech_package": "f6tp"}
      ]
    }
  ],
  "sweeps": [
    {
      "name": "f6tp_reliability",
      "from": "monolithic",
      "to": "fractionated",
      "param": "tech_packages.f6tp.failure.mean",
      "values": [5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60, 65, 70, 75, 80, 85, 90, 95, 100],
      "param2": "tech_packages.f6tp.failure.shape",
      "values2": [5]
    }
  ]
}
)json";

} // namespace

const std::string& f6_demo_json() {
    static const std::string text = kF6DemoJson;
    return text;
}

const Scenario& f6_demo() {
    static const Scenario scenario = parse_scenario(f6_demo_json(), "f6_demo");
    return scenario;
}

} // namespace archval
