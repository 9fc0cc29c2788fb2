#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rss/instance.hpp"
#include "rss/policy.hpp"

namespace rss {

/// Malformed or inconsistent input file.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Output file or directory that cannot be written.
class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance document:
///   {"T", "K", "W", "h", "b", "I0", "beta", "demand": [{"kind", "mean", "cv"}], "label"}
/// "beta" defaults to 1 and "label" is optional; unknown keys are rejected.
Instance instance_from_json(const nlohmann::json& doc);
nlohmann::ordered_json to_json(const Instance& instance);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const Instance& instance);

/// Policy document: {"reviews": [{"t", "R", "s", "S"}], "expected_cost"}.
struct PolicyDocument {
    Policy policy;
    std::optional<double> expected_cost;
};

PolicyDocument policy_from_json(const nlohmann::json& doc);
nlohmann::ordered_json to_json(const Policy& policy, double expected_cost);

PolicyDocument read_policy(const std::filesystem::path& path);

}  // namespace rss
