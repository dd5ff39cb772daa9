#include "archval/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "archval/errors.hpp"
#include "archval/mplus.hpp"
#include "archval/reports.hpp"
#include "archval/scenario.hpp"
#include "archval/sensitivity.hpp"
#include "archval/simulation.hpp"

namespace archval {

namespace {

std::vector<double> parse_value_list(const std::string& text, const std::string& flag) {
    std::vector<double> values;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ConfigError(flag + ": cannot parse number \"" + token + "\"");
        }
    }
    if (values.empty()) throw ConfigError(flag + ": empty value list");
    return values;
}

struct CommonOptions {
    std::string scenario_path;
    std::optional<std::int64_t> runs;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonOptions& common, bool with_runs_seed = true) {
    cmd->add_option("-s,--scenario", common.scenario_path, "Scenario JSON file")
        ->required();
    if (with_runs_seed) {
        cmd->add_option_function<std::int64_t>(
               "--runs", [&common](std::int64_t n) { common.runs = n; },
               "Override the scenario's run count");
        cmd->add_option_function<std::uint64_t>(
               "--seed", [&common](std::uint64_t s) { common.seed = s; },
               "Override the scenario's master seed");
    }
}

Scenario load_with_overrides(const CommonOptions& common) {
    Scenario scenario = load_scenario(common.scenario_path);
    if (common.runs) scenario.simulation.runs = *common.runs;
    if (common.seed) scenario.simulation.seed = *common.seed;
    validate_config(scenario.simulation);
    return scenario;
}

std::vector<double> effective_grid(const Scenario& scenario,
                                   const std::optional<std::string>& grid_years) {
    if (grid_years) return parse_value_list(*grid_years, "--grid-years");
    if (!scenario.simulation.trajectory_grid.empty()) return scenario.simulation.trajectory_grid;
    return {scenario.simulation.lifetime};
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Renewal-process valuation of architecture modularity transitions"};
    app.require_subcommand(1);

    // validate
    CommonOptions validate_opts;
    CLI::App* validate_cmd = app.add_subcommand("validate", "Parse and validate a scenario file");
    add_common(validate_cmd, validate_opts, /*with_runs_seed=*/false);

    // simulate
    CommonOptions simulate_opts;
    std::vector<std::string> simulate_archs;
    std::optional<std::string> simulate_grid;
    std::string simulate_out;
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Cost trajectory of one or more architectures");
    add_common(simulate_cmd, simulate_opts);
    simulate_cmd->add_option("-a,--architecture", simulate_archs, "Architecture name (repeatable)")
        ->required();
    simulate_cmd->add_option_function<std::string>(
        "--grid-years", [&simulate_grid](std::string s) { simulate_grid = std::move(s); },
        "Comma-separated trajectory years (defaults to the scenario grid)");
    simulate_cmd->add_option("-o,--out", simulate_out, "Output directory")->required();

    // value
    CommonOptions value_opts;
    std::string value_from;
    std::string value_to;
    std::optional<std::string> value_grid;
    double risk_quantile = 0.5;
    double threshold = 0.0;
    std::string value_out;
    CLI::App* value_cmd =
        app.add_subcommand("value", "Transition value distribution and recommendation");
    add_common(value_cmd, value_opts);
    value_cmd->add_option("--from", value_from, "Source architecture")->required();
    value_cmd->add_option("--to", value_to, "Target architecture")->required();
    value_cmd->add_option("--risk-quantile", risk_quantile,
                          "Quantile the decision evaluates (default 0.5)");
    value_cmd->add_option("--threshold", threshold, "Decision threshold in k$ (default 0)");
    value_cmd->add_option_function<std::string>(
        "--grid-years", [&value_grid](std::string s) { value_grid = std::move(s); },
        "Comma-separated trajectory years (defaults to the scenario grid)");
    value_cmd->add_option("-o,--out", value_out, "Output directory")->required();

    // sweep
    CommonOptions sweep_opts;
    std::string sweep_param;
    std::string sweep_values;
    std::string sweep_param2;
    std::string sweep_values2;
    std::string sweep_name;
    std::string sweep_from;
    std::string sweep_to;
    std::string sweep_out;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Transition value across a parameter grid");
    add_common(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--param", sweep_param, "Parameter path, e.g. tech_packages.f6tp.failure.mean");
    sweep_cmd->add_option("--values", sweep_values, "Comma-separated axis values");
    sweep_cmd->add_option("--param2", sweep_param2, "Secondary parameter path");
    sweep_cmd->add_option("--values2", sweep_values2, "Comma-separated secondary values");
    sweep_cmd->add_option("--name", sweep_name, "Run a sweep stored in the scenario");
    sweep_cmd->add_option("--from", sweep_from, "Source architecture");
    sweep_cmd->add_option("--to", sweep_to, "Target architecture");
    sweep_cmd->add_option("-o,--out", sweep_out, "Output directory")->required();

    // env-states
    CommonOptions env_opts;
    CLI::App* env_cmd =
        app.add_subcommand("env-states", "Environment state table and heterogeneity score");
    add_common(env_cmd, env_opts, /*with_runs_seed=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        if (error.get_exit_code() == 0) return app.exit(error); // --help and friends
        std::cerr << error.what() << '\n';
        return 2;
    }

    try {
        if (validate_cmd->parsed()) {
            load_scenario(validate_opts.scenario_path);
            std::cout << validate_opts.scenario_path << ": ok\n";
            return 0;
        }

        if (simulate_cmd->parsed()) {
            Scenario scenario = load_with_overrides(simulate_opts);
            scenario.simulation.trajectory_grid = effective_grid(scenario, simulate_grid);
            std::vector<std::vector<CostDistribution>> trajectories;
            for (const auto& name : simulate_archs) {
                trajectories.push_back(cost_trajectory(scenario.architecture(name),
                                                       scenario.catalog, scenario.simulation));
            }
            const auto path = std::filesystem::path(simulate_out) / "trajectory.csv";
            write_text_atomic(path, trajectory_csv(scenario.simulation.trajectory_grid,
                                                   simulate_archs, trajectories));
            std::cout << "wrote " << path.string() << '\n';
            return 0;
        }

        if (value_cmd->parsed()) {
            Scenario scenario = load_with_overrides(value_opts);
            scenario.simulation.trajectory_grid = effective_grid(scenario, value_grid);
            const ArchitectureSpec& source = scenario.architecture(value_from);
            const ArchitectureSpec& target = scenario.architecture(value_to);

            const auto trajectory =
                value_trajectory(source, target, scenario.catalog, scenario.simulation);
            const ValueDistribution total =
                mplus_value(source, target, scenario.catalog, scenario.simulation);
            const TransitionDecision decision = decide(total, risk_quantile, threshold);
            const TransitionKind kind = transition_kind(stage_of(source), stage_of(target));

            const auto csv_path = std::filesystem::path(value_out) / "value.csv";
            write_text_atomic(csv_path,
                              value_csv(scenario.simulation.trajectory_grid, trajectory));
            const auto report_path = std::filesystem::path(value_out) / "decision.txt";
            const std::string report = decision_report(value_from, value_to, kind,
                                                       scenario.simulation.runs, total.summary,
                                                       decision);
            write_text_atomic(report_path, report);
            std::cout << report;
            std::cout << "wrote " << csv_path.string() << '\n';
            std::cout << "wrote " << report_path.string() << '\n';
            return 0;
        }

        if (sweep_cmd->parsed()) {
            Scenario scenario = load_with_overrides(sweep_opts);
            SweepAxis axis;
            std::optional<SweepAxis> secondary;
            std::string source = sweep_from;
            std::string target = sweep_to;
            if (!sweep_name.empty()) {
                const SweepSpec* spec = scenario.find_sweep(sweep_name);
                if (!spec) throw ConfigError("scenario stores no sweep named \"" + sweep_name + "\"");
                axis = spec->axis;
                secondary = spec->secondary;
                if (source.empty()) source = spec->source;
                if (target.empty()) target = spec->target;
            }
            if (!sweep_param.empty()) {
                axis.path = sweep_param;
                axis.values = parse_value_list(sweep_values, "--values");
            }
            if (!sweep_param2.empty()) {
                secondary = SweepAxis{sweep_param2, parse_value_list(sweep_values2, "--values2")};
            }
            if (axis.path.empty()) throw ConfigError("sweep needs --param/--values or --name");
            if (source.empty() || target.empty()) {
                throw ConfigError("sweep needs --from and --to architectures");
            }

            const SweepResult result =
                sweep(scenario, source, target, axis, secondary, sweep_opts.runs);
            bool one_dimensional = !secondary || secondary->values.size() == 1;
            std::optional<double> crossing;
            if (one_dimensional && result.points.size() >= 2) {
                crossing = find_zero_crossing(result);
            }
            const auto path = std::filesystem::path(sweep_out) / "sweep.csv";
            write_text_atomic(path, sweep_csv(result, one_dimensional && result.points.size() >= 2,
                                              crossing));
            std::cout << "wrote " << path.string() << '\n';
            return 0;
        }

        if (env_cmd->parsed()) {
            const Scenario scenario = load_scenario(env_opts.scenario_path);
            if (!scenario.environment) {
                std::cerr << env_opts.scenario_path << ": scenario declares no environment model\n";
                return 1;
            }
            std::cout << environment_report(*scenario.environment);
            return 0;
        }
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace archval
