#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace archval {

// Dangling catalog reference (unknown component/bus/tech-package name).
class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scenario or architecture validation failure; carries every issue found.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string out = "scenario validation failed:";
        for (const auto& issue : issues) {
            out += "\n  - ";
            out += issue;
        }
        return out;
    }

    std::vector<std::string> issues_;
};

// Malformed scenario file (syntax level, with position information).
class ScenarioParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unresolvable sweep parameter path or similar configuration mistake.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace archval
