#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sctl {

// Numerically unusable input: singular correlation matrix, zero variance, ...
class degenerate_data_error : public std::runtime_error {
public:
    explicit degenerate_data_error(const std::string& what) : std::runtime_error(what) {}
};

// Too few rows for the requested statistic.
class insufficient_sample_error : public std::runtime_error {
public:
    explicit insufficient_sample_error(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive search was refused because it exceeds its configured cap.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Structural validation failure; carries one message per violated constraint,
// each prefixed with the field path it refers to.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& vs) {
        std::string out = "validation failed:";
        for (const auto& v : vs) {
            out += "\n  - " + v;
        }
        return out;
    }

    std::vector<std::string> violations_;
};

}  // namespace sctl
