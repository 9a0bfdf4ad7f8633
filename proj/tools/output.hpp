#pragma once

#include "rmtsf/gue/quadrature.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace cli {

using nlohmann::json;

/// Exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2 };

struct Settings {
    int precision = 17;  // significant digits of numeric output
    double tol = 1e-12;
    std::string output;  // empty: stdout
    std::vector<std::string> argv;
    std::string command;
    json inputs = json::object();

    rmtsf::gue::AccuracyPolicy policy() const;
    /// v rounded to `precision` significant digits; non-finite values become null.
    json number(double v) const;
    std::string format(double v) const;
};

/// Inputs, versions and tolerances of a run. No clock or host data, so
/// identical commands give identical manifests.
json manifest(const Settings& s);

/// Writes a JSON document (with the manifest embedded) to the output path or stdout.
void emit_json(const Settings& s, json result);
/// Writes CSV text; the manifest goes to <output>.manifest.json, or stderr when
/// the CSV goes to stdout.
void emit_csv(const Settings& s, const std::string& csv);

}  // namespace cli
