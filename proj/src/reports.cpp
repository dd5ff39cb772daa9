#include "archval/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace archval {

std::string format_number(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.6g", v);
    return buffer;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    const std::filesystem::path temp = path.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file: " + temp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed: " + temp.string());
    }
    std::filesystem::rename(temp, path);
}

namespace {

void append_summary(std::ostringstream& out, const SummaryStats& s) {
    out << format_number(s.mean) << ',' << format_number(s.sd) << ',' << format_number(s.q05)
        << ',' << format_number(s.q25) << ',' << format_number(s.q50) << ','
        << format_number(s.q75) << ',' << format_number(s.q95);
}

} // namespace

std::string trajectory_csv(const std::vector<double>& grid,
                           const std::vector<std::string>& architecture_names,
                           const std::vector<std::vector<CostDistribution>>& trajectories) {
    std::ostringstream out;
    out << "year,architecture,mean,sd,q05,q25,q50,q75,q95\n";
    for (std::size_t a = 0; a < architecture_names.size(); ++a) {
        for (std::size_t g = 0; g < grid.size(); ++g) {
            out << format_number(grid[g]) << ',' << architecture_names[a] << ',';
            append_summary(out, trajectories[a][g].summary);
            out << '\n';
        }
    }
    return out.str();
}

std::string value_csv(const std::vector<double>& grid,
                      const std::vector<ValueDistribution>& trajectory) {
    std::ostringstream out;
    out << "year,mean,sd,q05,q25,q50,q75,q95\n";
    for (std::size_t g = 0; g < grid.size(); ++g) {
        out << format_number(grid[g]) << ',';
        append_summary(out, trajectory[g].summary);
        out << '\n';
    }
    return out.str();
}

std::string sweep_csv(const SweepResult& result, bool with_crossing,
                      const std::optional<double>& crossing) {
    std::ostringstream out;
    for (const auto& path : result.axis_paths) out << path << ',';
    out << "mean,sd,q05,q95\n";
    for (const auto& point : result.points) {
        for (double v : point.axis) out << format_number(v) << ',';
        out << format_number(point.value.mean) << ',' << format_number(point.value.sd) << ','
            << format_number(point.value.q05) << ',' << format_number(point.value.q95) << '\n';
    }
    if (with_crossing) {
        out << "# zero_crossing=" << (crossing ? format_number(*crossing) : "none") << '\n';
    }
    return out.str();
}

std::string decision_report(const std::string& source, const std::string& target,
                            TransitionKind kind, std::int64_t runs,
                            const SummaryStats& value_summary,
                            const TransitionDecision& decision) {
    std::ostringstream out;
    out << "transition: " << source << " -> " << target << '\n';
    out << "kind: " << to_string(kind) << '\n';
    out << "runs: " << runs << '\n';
    out << "value mean: " << format_number(value_summary.mean) << " k$\n";
    out << "value sd: " << format_number(value_summary.sd) << " k$\n";
    out << "value q05/q50/q95: " << format_number(value_summary.q05) << " / "
        << format_number(value_summary.q50) << " / " << format_number(value_summary.q95)
        << " k$\n";
    out << "criterion: " << decision.criterion << '\n';
    out << "statistic: " << format_number(decision.statistic) << " k$\n";
    out << "recommend: " << (decision.recommend ? "yes" : "no") << '\n';
    return out.str();
}

std::string environment_report(const EnvironmentModel& model) {
    const auto states = enumerate_states(model);
    const auto required = required_states(model);

    std::ostringstream out;
    out << "state";
    for (const auto& parameter : model.parameters) out << ',' << parameter.name;
    out << ",required,first_period\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
        out << 'S' << (i + 1);
        for (const auto& level : states[i].assignment) out << ',' << level;
        const auto hit = std::find_if(required.begin(), required.end(),
                                      [&](const RequiredState& r) { return r.state == states[i]; });
        if (hit != required.end()) {
            out << ",yes," << hit->first_period;
        } else {
            out << ",no,";
        }
        out << '\n';
    }
    out << "required_states: " << required.size() << '\n';
    out << "heterogeneity_score: " << format_number(heterogeneity_score(model)) << '\n';
    return out.str();
}

} // namespace archval
