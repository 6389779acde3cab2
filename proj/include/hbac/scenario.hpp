#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hbac {

enum class Scenario { ppa, noe, solomon, compare };

enum class ReportFormat { json, csv };

struct SolomonScenario {
    double rho1 = 1.0;
    double rho2 = 1.0;
    double sigma = 0.5;
    double s1_eq = 1.0;
    double s2_eq = 1.0;
    double s1_0 = 0.0;
    double s2_0 = 0.0;
    double t_end = 30.0;
    double dt = 0.01;
    bool saturated = true;
};

/// Fully resolved, validated scenario description.
///
/// For ppa/noe/compare, `eps_points` holds the bath polarizations to run
/// (the sweep list, or the single eps_b); qubits 1..n-1 act as reset qubits
/// in the PPA and qubit 1 is the driven qubit of the cross-relaxation
/// protocol. The solomon scenario ignores the qubit/bath fields.
struct ScenarioConfig {
    Scenario scenario = Scenario::ppa;
    int qubits = 2;
    std::vector<double> eps_points;
    double tol = 1e-12;
    std::int64_t max_iters = 1'000'000;
    SolomonScenario solomon;
    std::string out = "-";
    ReportFormat format = ReportFormat::json;
};

/// One optional per config key; flags layered over a config file merge drafts.
struct ConfigDraft {
    std::optional<std::string> scenario;
    std::optional<int> qubits;
    std::optional<double> eps_b;
    std::optional<std::vector<double>> sweep;
    std::optional<double> tol;
    std::optional<std::int64_t> max_iters;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<double> rho1, rho2, sigma, s1_eq, s2_eq, s1_0, s2_0, t_end, dt;
    std::optional<bool> saturated;
};

/// Parses `key = value` lines ('#' comments, blank lines allowed). Unknown or
/// duplicate keys and malformed values raise ConfigError with the line number.
ConfigDraft parse_config_text(const std::string& text);

/// Fills defaults and validates; raises ConfigError listing every violated
/// invariant.
ScenarioConfig finalize_config(const ConfigDraft& draft);

ScenarioConfig parse_config(const std::string& text);

/// Report text in the configured format; byte-identical for identical inputs
/// (fixed field order, floats at 17 significant digits). Sets *all_converged
/// when provided.
std::string scenario_report_text(const ScenarioConfig& cfg, bool* all_converged = nullptr);

/// Runs the scenario and writes the report to cfg.out ("-" = stdout).
/// Exit status: 0 on success, 2 if any run failed to converge (the report is
/// still written), 3 on file I/O failure.
int run_scenario(const ScenarioConfig& cfg);

}  // namespace hbac
