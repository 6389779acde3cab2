// hbac: heat-bath algorithmic cooling scenario runner.
//
// Exit codes: 0 success, 1 parse/validation error, 2 non-convergence
// (report still written), 3 file I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hbac/errors.hpp"
#include "hbac/scenario.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    int qubits = 0;
    double bath_polarization = 0.0;
    std::vector<double> sweep;
    double tol = 0.0;
    std::int64_t max_iters = 0;
    std::string out;
    std::string format;
    // solomon parameters
    double rho1 = 0.0, rho2 = 0.0, sigma = 0.0;
    double s1_eq = 0.0, s2_eq = 0.0, s1_0 = 0.0, s2_0 = 0.0;
    double t_end = 0.0, dt = 0.0;
    bool saturated = true;
};

void add_common_options(CLI::App* sub, CliOptions& opt) {
    sub->add_option("--config", opt.config_path, "Config file (key = value lines)");
    sub->add_option("--qubits", opt.qubits, "Register size n (target = qubit 0)");
    sub->add_option("--bath-polarization", opt.bath_polarization, "Bath polarization eps_b in [0, 1)");
    sub->add_option("--sweep", opt.sweep, "Comma-separated eps_b sweep list")->delimiter(',');
    sub->add_option("--tol", opt.tol, "L1 convergence tolerance");
    sub->add_option("--max-iters", opt.max_iters, "Iteration cap");
    sub->add_option("--out", opt.out, "Report path ('-' = stdout)");
    sub->add_option("--format", opt.format, "Report format: json or csv");
}

void add_solomon_options(CLI::App* sub, CliOptions& opt) {
    sub->add_option("--rho1", opt.rho1, "Relaxation rate of spin 1");
    sub->add_option("--rho2", opt.rho2, "Relaxation rate of spin 2");
    sub->add_option("--sigma", opt.sigma, "Cross-relaxation rate");
    sub->add_option("--s1-eq", opt.s1_eq, "Equilibrium <S_z^1>");
    sub->add_option("--s2-eq", opt.s2_eq, "Equilibrium <S_z^2>");
    sub->add_option("--s1-0", opt.s1_0, "Initial <S_z^1>");
    sub->add_option("--s2-0", opt.s2_0, "Initial <S_z^2>");
    sub->add_option("--t-end", opt.t_end, "Integration horizon");
    sub->add_option("--dt", opt.dt, "Integration step");
    sub->add_flag("--saturated,!--free", opt.saturated, "Clamp spin 2 to zero (default) or evolve freely");
}

hbac::ConfigDraft build_draft(const CLI::App& sub, const CliOptions& opt, const std::string& scenario) {
    hbac::ConfigDraft draft;
    if (!opt.config_path.empty()) {
        std::ifstream file(opt.config_path);
        if (!file) {
            throw hbac::ConfigError("cannot read config file '" + opt.config_path + "'");
        }
        std::ostringstream text;
        text << file.rdbuf();
        draft = hbac::parse_config_text(text.str());
    }
    draft.scenario = scenario;  // the subcommand always wins
    if (sub.count("--qubits")) draft.qubits = opt.qubits;
    if (sub.count("--bath-polarization")) draft.eps_b = opt.bath_polarization;
    if (sub.count("--sweep")) draft.sweep = opt.sweep;
    if (sub.count("--tol")) draft.tol = opt.tol;
    if (sub.count("--max-iters")) draft.max_iters = opt.max_iters;
    if (sub.count("--out")) draft.out = opt.out;
    if (sub.count("--format")) draft.format = opt.format;
    if (scenario == "solomon") {
        if (sub.count("--rho1")) draft.rho1 = opt.rho1;
        if (sub.count("--rho2")) draft.rho2 = opt.rho2;
        if (sub.count("--sigma")) draft.sigma = opt.sigma;
        if (sub.count("--s1-eq")) draft.s1_eq = opt.s1_eq;
        if (sub.count("--s2-eq")) draft.s2_eq = opt.s2_eq;
        if (sub.count("--s1-0")) draft.s1_0 = opt.s1_0;
        if (sub.count("--s2-0")) draft.s2_0 = opt.s2_0;
        if (sub.count("--t-end")) draft.t_end = opt.t_end;
        if (sub.count("--dt")) draft.dt = opt.dt;
        if (sub.count("--saturated") || sub.count("--free")) draft.saturated = opt.saturated;
    }
    return draft;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heat-bath algorithmic cooling simulator"};
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* ppa = app.add_subcommand("ppa", "Partner Pairing Algorithm from the maximally mixed state");
    CLI::App* noe = app.add_subcommand("noe", "Cross-relaxation (state reset + saturation) protocol");
    CLI::App* compare = app.add_subcommand("compare", "PPA vs cross-relaxation steady states");
    CLI::App* solomon = app.add_subcommand("solomon", "Two-spin relaxation trajectory and steady state");
    for (CLI::App* sub : {ppa, noe, compare, solomon}) {
        add_common_options(sub, opt);
    }
    add_solomon_options(solomon, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        const CLI::App* sub = app.get_subcommands().front();
        const hbac::ConfigDraft draft = build_draft(*sub, opt, sub->get_name());
        const hbac::ScenarioConfig cfg = hbac::finalize_config(draft);
        return hbac::run_scenario(cfg);
    } catch (const hbac::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
