#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hbac/errors.hpp"
#include "hbac/scenario.hpp"

using namespace hbac;
using nlohmann::json;

namespace {

std::string error_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream out;
    out << file.rdbuf();
    return out.str();
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name)
        : path(std::filesystem::temp_directory_path() / name) {}
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
};

}  // namespace

TEST_SUITE_BEGIN("scenario");

TEST_CASE("minimal config gets documented defaults") {
    const auto cfg = parse_config("scenario = ppa\nn = 2\neps_b = 0.1\n");
    CHECK(cfg.scenario == Scenario::ppa);
    CHECK(cfg.qubits == 2);
    CHECK(cfg.eps_points == std::vector<double>{0.1});
    CHECK(cfg.tol == 1e-12);
    CHECK(cfg.max_iters == 1'000'000);
    CHECK(cfg.out == "-");
    CHECK(cfg.format == ReportFormat::json);
}

TEST_CASE("comments, blank lines and inline comments are ignored") {
    const auto cfg = parse_config(
        "# cooling run\n"
        "\n"
        "scenario = noe   # protocol choice\n"
        "eps_b = 0.25\n");
    CHECK(cfg.scenario == Scenario::noe);
    CHECK(cfg.eps_points == std::vector<double>{0.25});
}

TEST_CASE("sweep values keep their order") {
    const auto cfg = parse_config("scenario = compare\nsweep = 0.001, 0.01, 0.1\n");
    CHECK(cfg.eps_points == std::vector<double>{0.001, 0.01, 0.1});
}

TEST_CASE("solomon block keys") {
    const auto cfg = parse_config(
        "scenario = solomon\n"
        "solomon.rho1 = 2.0\n"
        "solomon.sigma = 0.25\n"
        "solomon.t_end = 10\n"
        "solomon.dt = 0.005\n"
        "solomon.saturated = false\n");
    CHECK(cfg.solomon.rho1 == 2.0);
    CHECK(cfg.solomon.rho2 == 1.0);
    CHECK(cfg.solomon.sigma == 0.25);
    CHECK(cfg.solomon.t_end == 10.0);
    CHECK(cfg.solomon.dt == 0.005);
    CHECK_FALSE(cfg.solomon.saturated);
}

TEST_CASE("parse failures carry line and key diagnostics") {
    auto msg = error_message([] { parse_config("scenario = ppa\nbogus_key = 1\n"); });
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("bogus_key") != std::string::npos);

    msg = error_message([] { parse_config("scenario = ppa\n\nno equals sign\n"); });
    CHECK(msg.find("line 3") != std::string::npos);

    msg = error_message([] { parse_config("eps_b = zero\n"); });
    CHECK(msg.find("line 1") != std::string::npos);
    CHECK(msg.find("eps_b") != std::string::npos);

    msg = error_message([] { parse_config("eps_b = 0.1\neps_b = 0.2\n"); });
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("duplicate") != std::string::npos);

    msg = error_message([] { parse_config("solomon.saturated = yes\n"); });
    CHECK(msg.find("true or false") != std::string::npos);

    CHECK_THROWS_AS(parse_config("scenario = ppa\nsweep = 0.1,,0.2\n"), ConfigError);
}

TEST_CASE("validation lists the violated invariants") {
    auto msg = error_message([] { parse_config("scenario = ppa\neps_b = 1.0\n"); });
    CHECK(msg.find("eps_b") != std::string::npos);
    CHECK(msg.find("[0, 1)") != std::string::npos);

    // several violations are reported together
    msg = error_message([] { parse_config("scenario = ppa\neps_b = 1.0\nn = 1\ntol = -1\n"); });
    CHECK(msg.find("eps_b") != std::string::npos);
    CHECK(msg.find("n must be >= 2") != std::string::npos);
    CHECK(msg.find("tol") != std::string::npos);

    CHECK_THROWS_AS(parse_config("eps_b = 0.1\n"), ConfigError);            // scenario missing
    CHECK_THROWS_AS(parse_config("scenario = warp\neps_b = 0.1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("scenario = ppa\n"), ConfigError);         // eps_b missing
    CHECK_THROWS_AS(parse_config("scenario = ppa\neps_b = 0.1\nformat = xml\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("scenario = ppa\neps_b = 0.1\nmax_iters = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("scenario = solomon\nsolomon.dt = 0.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("scenario = solomon\nsolomon.sigma = 1.5\n"), ConfigError);
}

TEST_CASE("compare report carries the enhancement record") {
    const auto cfg = parse_config("scenario = compare\nn = 2\neps_b = 0.1\n");
    const std::string text = scenario_report_text(cfg);
    const json report = json::parse(text);

    CHECK(report["schema_version"] == 1);
    CHECK(report["scenario"] == "compare");
    REQUIRE(report["results"].size() == 1);
    const auto& result = report["results"][0];
    CHECK(result["ppa"]["converged"] == true);
    CHECK(result["noe"]["converged"] == true);
    CHECK(std::abs(result["enhancement"]["eps_ppa"].get<double>() - 0.1) <= 1e-14);
    CHECK(std::abs(result["enhancement"]["eps_noe"].get<double>() - 0.19802) <= 1e-5);
    CHECK(std::abs(result["enhancement"]["excess"].get<double>() - 0.09802) <= 1e-5);
}

TEST_CASE("solomon report reproduces the driven steady state") {
    const auto cfg = parse_config("scenario = solomon\n");
    const json report = json::parse(scenario_report_text(cfg));
    CHECK(report["steady_state_saturated"] == 1.5);
    CHECK(std::abs(report["terminal_s1"].get<double>() - 1.5) <= 1e-6);
    CHECK(report["terminal_s2"] == 0.0);
    CHECK(report["samples"] == 3001);
}

TEST_CASE("ppa scenario with an unpolarized bath reports zero polarizations") {
    TempFile tmp("hbac_scenario_ppa_zero.json");
    auto cfg = parse_config("scenario = ppa\neps_b = 0\nout = " + tmp.path.string() + "\n");
    CHECK(run_scenario(cfg) == 0);
    const json report = json::parse(slurp(tmp.path));
    CHECK(report["results"][0]["converged"] == true);
    for (const auto& pol : report["results"][0]["final_polarizations"]) {
        CHECK(pol == 0.0);
    }
}

TEST_CASE("sweep results keep the input order") {
    const auto cfg = parse_config("scenario = compare\nsweep = 0.1, 0.001, 0.01\n");
    const json report = json::parse(scenario_report_text(cfg));
    REQUIRE(report["results"].size() == 3);
    CHECK(std::abs(report["results"][0]["eps_b"].get<double>() - 0.1) <= 1e-15);
    CHECK(std::abs(report["results"][1]["eps_b"].get<double>() - 0.001) <= 1e-15);
    CHECK(std::abs(report["results"][2]["eps_b"].get<double>() - 0.01) <= 1e-15);
}

TEST_CASE("identical configs produce byte-identical reports") {
    const auto cfg = parse_config("scenario = compare\nsweep = 0.001, 0.01, 0.1\n");
    CHECK(scenario_report_text(cfg) == scenario_report_text(cfg));

    const auto csv_cfg = parse_config("scenario = compare\nsweep = 0.001, 0.01\nformat = csv\n");
    CHECK(scenario_report_text(csv_cfg) == scenario_report_text(csv_cfg));
}

TEST_CASE("written report matches the rendered text") {
    TempFile tmp("hbac_scenario_written.json");
    auto cfg = parse_config("scenario = noe\neps_b = 0.2\nout = " + tmp.path.string() + "\n");
    CHECK(run_scenario(cfg) == 0);
    CHECK(slurp(tmp.path) == scenario_report_text(cfg));
}

TEST_CASE("non-convergence yields exit status 2 and a complete report") {
    TempFile tmp("hbac_scenario_capped.json");
    auto cfg = parse_config("scenario = compare\neps_b = 0.1\nmax_iters = 1\nout = " +
                            tmp.path.string() + "\n");
    CHECK(run_scenario(cfg) == 2);
    const json report = json::parse(slurp(tmp.path));
    CHECK(report["results"][0]["noe"]["converged"] == false);
    CHECK(report["results"][0]["enhancement"].is_null());
}

TEST_CASE("unwritable output path yields exit status 3") {
    auto cfg = parse_config("scenario = ppa\neps_b = 0.1\n");
    cfg.out = "/nonexistent-dir/report.json";
    CHECK(run_scenario(cfg) == 3);
}

TEST_CASE("csv trajectory export") {
    const auto solomon_cfg = parse_config(
        "scenario = solomon\nformat = csv\nsolomon.t_end = 0.1\nsolomon.dt = 0.01\n");
    const std::string csv = scenario_report_text(solomon_cfg);
    CHECK(csv.rfind("t,s1,s2\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);  // header + 11 samples

    const auto ppa_cfg = parse_config("scenario = ppa\neps_b = 0.1\nformat = csv\n");
    const std::string ppa_csv = scenario_report_text(ppa_cfg);
    CHECK(ppa_csv.rfind("eps_b,iteration,pol_q0,pol_q1\n", 0) == 0);
    CHECK(std::count(ppa_csv.begin(), ppa_csv.end(), '\n') == 4);  // header + 3 trajectory rows

    const auto cmp_cfg = parse_config("scenario = compare\nsweep = 0.01, 0.1\nformat = csv\n");
    const std::string cmp_csv = scenario_report_text(cmp_cfg);
    CHECK(std::count(cmp_csv.begin(), cmp_csv.end(), '\n') == 3);
}

TEST_SUITE_END();
