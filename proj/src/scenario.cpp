#include "hbac/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include "hbac/errors.hpp"
#include "hbac/noe.hpp"
#include "hbac/ppa.hpp"
#include "hbac/solomon.hpp"

namespace hbac {

namespace {

// ---------------------------------------------------------------------------
// config text parsing

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void fail_line(int line, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(std::string_view v, int line, const std::string& key) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        fail_line(line, "invalid value '" + std::string(v) + "' for key '" + key +
                            "' (expected a number)");
    }
    return out;
}

std::int64_t parse_int(std::string_view v, int line, const std::string& key) {
    std::int64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        fail_line(line, "invalid value '" + std::string(v) + "' for key '" + key +
                            "' (expected an integer)");
    }
    return out;
}

bool parse_bool(std::string_view v, int line, const std::string& key) {
    if (v == "true") return true;
    if (v == "false") return false;
    fail_line(line, "invalid value '" + std::string(v) + "' for key '" + key +
                        "' (expected true or false)");
}

std::vector<double> parse_double_list(std::string_view v, int line, const std::string& key) {
    std::vector<double> out;
    while (true) {
        const std::size_t comma = v.find(',');
        const std::string_view item = trim(v.substr(0, comma));
        if (item.empty()) {
            fail_line(line, "empty element in list value for key '" + key + "'");
        }
        out.push_back(parse_double(item, line, key));
        if (comma == std::string_view::npos) break;
        v.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

ConfigDraft parse_config_text(const std::string& text) {
    ConfigDraft draft;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        std::string_view line(text.data() + start,
                              (nl == std::string::npos ? text.size() : nl) - start);
        start = (nl == std::string::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail_line(line_no, "expected 'key = value'");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) fail_line(line_no, "missing key before '='");
        if (value.empty()) fail_line(line_no, "empty value for key '" + key + "'");

        const auto set = [&](auto& slot, auto parsed) {
            if (slot.has_value()) fail_line(line_no, "duplicate key '" + key + "'");
            slot = std::move(parsed);
        };
        if (key == "scenario") {
            set(draft.scenario, std::string(value));
        } else if (key == "n") {
            set(draft.qubits, static_cast<int>(parse_int(value, line_no, key)));
        } else if (key == "eps_b") {
            set(draft.eps_b, parse_double(value, line_no, key));
        } else if (key == "sweep") {
            set(draft.sweep, parse_double_list(value, line_no, key));
        } else if (key == "tol") {
            set(draft.tol, parse_double(value, line_no, key));
        } else if (key == "max_iters") {
            set(draft.max_iters, parse_int(value, line_no, key));
        } else if (key == "out") {
            set(draft.out, std::string(value));
        } else if (key == "format") {
            set(draft.format, std::string(value));
        } else if (key == "solomon.rho1") {
            set(draft.rho1, parse_double(value, line_no, key));
        } else if (key == "solomon.rho2") {
            set(draft.rho2, parse_double(value, line_no, key));
        } else if (key == "solomon.sigma") {
            set(draft.sigma, parse_double(value, line_no, key));
        } else if (key == "solomon.s1_eq") {
            set(draft.s1_eq, parse_double(value, line_no, key));
        } else if (key == "solomon.s2_eq") {
            set(draft.s2_eq, parse_double(value, line_no, key));
        } else if (key == "solomon.s1_0") {
            set(draft.s1_0, parse_double(value, line_no, key));
        } else if (key == "solomon.s2_0") {
            set(draft.s2_0, parse_double(value, line_no, key));
        } else if (key == "solomon.t_end") {
            set(draft.t_end, parse_double(value, line_no, key));
        } else if (key == "solomon.dt") {
            set(draft.dt, parse_double(value, line_no, key));
        } else if (key == "solomon.saturated") {
            set(draft.saturated, parse_bool(value, line_no, key));
        } else {
            fail_line(line_no, "unknown key '" + key + "'");
        }
    }
    return draft;
}

namespace {

// ---------------------------------------------------------------------------
// validation

void validate_solomon(const ScenarioConfig& cfg, std::vector<std::string>& violations) {
    const SolomonScenario& s = cfg.solomon;
    try {
        const SolomonParams params(s.rho1, s.rho2, s.sigma, s.s1_eq, s.s2_eq);
        const double guard = 0.1 / std::max({params.rho1(), params.rho2(), std::abs(params.sigma())});
        if (!(s.dt > 0.0) || !std::isfinite(s.dt)) {
            violations.push_back("solomon.dt must be positive and finite");
        } else if (s.dt > guard) {
            violations.push_back("solomon.dt exceeds the stability guard 0.1 / max rate = " +
                                 std::to_string(guard));
        }
        if (!(s.t_end >= s.dt) || !std::isfinite(s.t_end)) {
            violations.push_back("solomon.t_end must be >= solomon.dt and finite");
        }
    } catch (const std::exception& e) {
        violations.push_back(e.what());
    }
    if (!(std::abs(s.s1_0) <= 1.0) || !(std::abs(s.s2_0) <= 1.0)) {
        violations.push_back("solomon initial expectations must be in [-1, 1]");
    }
}

}  // namespace

ScenarioConfig finalize_config(const ConfigDraft& draft) {
    std::vector<std::string> violations;
    ScenarioConfig cfg;

    if (!draft.scenario.has_value()) {
        violations.push_back("scenario is required (one of ppa, noe, solomon, compare)");
    } else if (*draft.scenario == "ppa") {
        cfg.scenario = Scenario::ppa;
    } else if (*draft.scenario == "noe") {
        cfg.scenario = Scenario::noe;
    } else if (*draft.scenario == "solomon") {
        cfg.scenario = Scenario::solomon;
    } else if (*draft.scenario == "compare") {
        cfg.scenario = Scenario::compare;
    } else {
        violations.push_back("unknown scenario '" + *draft.scenario +
                             "' (expected ppa, noe, solomon or compare)");
    }

    cfg.qubits = draft.qubits.value_or(2);
    cfg.tol = draft.tol.value_or(1e-12);
    cfg.max_iters = draft.max_iters.value_or(1'000'000);
    cfg.out = draft.out.value_or("-");

    const std::string format = draft.format.value_or("json");
    if (format == "json") {
        cfg.format = ReportFormat::json;
    } else if (format == "csv") {
        cfg.format = ReportFormat::csv;
    } else {
        violations.push_back("format must be json or csv (got '" + format + "')");
    }

    cfg.solomon.rho1 = draft.rho1.value_or(cfg.solomon.rho1);
    cfg.solomon.rho2 = draft.rho2.value_or(cfg.solomon.rho2);
    cfg.solomon.sigma = draft.sigma.value_or(cfg.solomon.sigma);
    cfg.solomon.s1_eq = draft.s1_eq.value_or(cfg.solomon.s1_eq);
    cfg.solomon.s2_eq = draft.s2_eq.value_or(cfg.solomon.s2_eq);
    cfg.solomon.s1_0 = draft.s1_0.value_or(cfg.solomon.s1_0);
    cfg.solomon.s2_0 = draft.s2_0.value_or(cfg.solomon.s2_0);
    cfg.solomon.t_end = draft.t_end.value_or(cfg.solomon.t_end);
    cfg.solomon.dt = draft.dt.value_or(cfg.solomon.dt);
    cfg.solomon.saturated = draft.saturated.value_or(cfg.solomon.saturated);

    const bool wants_bath = draft.scenario.has_value() && *draft.scenario != "solomon";
    if (wants_bath) {
        if (cfg.qubits < 2) {
            violations.push_back("n must be >= 2 (a target plus at least one reset qubit)");
        } else if (cfg.qubits > kMaxQubits) {
            violations.push_back("n must be <= " + std::to_string(kMaxQubits));
        }
        if (draft.sweep.has_value()) {
            cfg.eps_points = *draft.sweep;  // sweep takes precedence over eps_b
        } else if (draft.eps_b.has_value()) {
            cfg.eps_points = {*draft.eps_b};
        } else {
            violations.push_back("eps_b (or sweep) is required for this scenario");
        }
        for (double eps : cfg.eps_points) {
            if (!(eps >= 0.0) || !(eps < 1.0)) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%g", eps);
                violations.push_back("eps_b must be in [0, 1) (got " + std::string(buf) + ")");
                break;
            }
        }
        if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
            violations.push_back("tol must be positive and finite");
        }
        if (cfg.max_iters < 1) {
            violations.push_back("max_iters must be >= 1");
        }
    }
    if (draft.scenario.has_value() && *draft.scenario == "solomon") {
        validate_solomon(cfg, violations);
    }

    if (!violations.empty()) {
        std::string msg = "invalid config: ";
        for (std::size_t i = 0; i < violations.size(); ++i) {
            if (i > 0) msg += "; ";
            msg += violations[i];
        }
        throw ConfigError(msg);
    }
    return cfg;
}

ScenarioConfig parse_config(const std::string& text) {
    return finalize_config(parse_config_text(text));
}

namespace {

// ---------------------------------------------------------------------------
// report rendering

std::string fmt_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Append-only JSON emitter with a fixed field order and 17-significant-digit
// floats, so identical inputs serialize to identical bytes.
class JsonWriter {
public:
    void begin_object() { prefix(); out_ += '{'; levels_.push_back({false}); }
    void end_object() { close('}'); }
    void begin_array() { prefix(); out_ += '['; levels_.push_back({false}); }
    void end_array() { close(']'); }

    void key(std::string_view k) {
        prefix();
        out_ += '"';
        out_ += k;
        out_ += "\": ";
        after_key_ = true;
    }
    void number(double v) { prefix(); out_ += fmt_double(v); }
    void integer(std::int64_t v) { prefix(); out_ += std::to_string(v); }
    void boolean(bool v) { prefix(); out_ += v ? "true" : "false"; }
    void text(std::string_view s) {
        prefix();
        out_ += '"';
        out_ += s;  // report strings are plain identifiers, nothing to escape
        out_ += '"';
    }
    void null() { prefix(); out_ += "null"; }

    std::string take() {
        out_ += '\n';
        return std::move(out_);
    }

private:
    struct Level {
        bool has_items;
    };

    void prefix() {
        if (after_key_) {
            after_key_ = false;
            return;
        }
        if (levels_.empty()) return;
        if (levels_.back().has_items) out_ += ',';
        levels_.back().has_items = true;
        out_ += '\n';
        out_.append(2 * levels_.size(), ' ');
    }

    void close(char c) {
        const bool had_items = levels_.back().has_items;
        levels_.pop_back();
        if (had_items) {
            out_ += '\n';
            out_.append(2 * levels_.size(), ' ');
        }
        out_ += c;
    }

    std::string out_;
    std::vector<Level> levels_;
    bool after_key_ = false;
};

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::ppa: return "ppa";
        case Scenario::noe: return "noe";
        case Scenario::solomon: return "solomon";
        case Scenario::compare: return "compare";
    }
    return "?";
}

void write_run_fields(JsonWriter& w, const RunReport& run) {
    w.key("converged");
    w.boolean(run.converged);
    w.key("iterations");
    w.integer(run.iterations);
    w.key("final_polarizations");
    w.begin_array();
    for (double p : run.final_polarizations) w.number(p);
    w.end_array();
}

void write_header(JsonWriter& w, const ScenarioConfig& cfg) {
    w.key("schema_version");
    w.integer(1);
    w.key("scenario");
    w.text(scenario_name(cfg.scenario));
}

// ---------------------------------------------------------------------------
// scenario evaluation

RunReport eval_ppa_point(const ScenarioConfig& cfg, double eps) {
    std::vector<int> resets;
    for (int q = 1; q < cfg.qubits; ++q) resets.push_back(q);
    const PpaConfig pc{std::move(resets), BathSpec(eps), cfg.tol, cfg.max_iters};
    return run_ppa(DiagonalState::maximally_mixed(cfg.qubits), pc);
}

RunReport eval_noe_point(const ScenarioConfig& cfg, double eps) {
    NoeConfig nc{BathSpec(eps), 1, std::nullopt, std::nullopt, cfg.tol, cfg.max_iters};
    return run_noe(DiagonalState::maximally_mixed(cfg.qubits), nc);
}

std::string single_protocol_report(const ScenarioConfig& cfg, bool& all_converged) {
    std::vector<RunReport> runs;
    runs.reserve(cfg.eps_points.size());
    for (double eps : cfg.eps_points) {
        runs.push_back(cfg.scenario == Scenario::ppa ? eval_ppa_point(cfg, eps)
                                                     : eval_noe_point(cfg, eps));
        all_converged = all_converged && runs.back().converged;
    }

    if (cfg.format == ReportFormat::csv) {
        std::string out = "eps_b,iteration";
        for (int q = 0; q < cfg.qubits; ++q) {
            out += ",pol_q" + std::to_string(q);
        }
        out += '\n';
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const auto& traj = runs[i].trajectory;
            for (std::size_t it = 0; it < traj.size(); ++it) {
                out += fmt_double(cfg.eps_points[i]);
                out += ',' + std::to_string(it);
                for (double p : traj[it]) {
                    out += ',';
                    out += fmt_double(p);
                }
                out += '\n';
            }
        }
        return out;
    }

    JsonWriter w;
    w.begin_object();
    write_header(w, cfg);
    w.key("qubits");
    w.integer(cfg.qubits);
    w.key("tol");
    w.number(cfg.tol);
    w.key("max_iters");
    w.integer(cfg.max_iters);
    w.key("results");
    w.begin_array();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        w.begin_object();
        w.key("eps_b");
        w.number(cfg.eps_points[i]);
        if (cfg.scenario == Scenario::noe) {
            w.key("reset_ratio");
            w.number(std::exp(4.0 * BathSpec(cfg.eps_points[i]).delta()));
        }
        write_run_fields(w, runs[i]);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.take();
}

std::string compare_report(const ScenarioConfig& cfg, bool& all_converged) {
    struct Point {
        RunReport ppa;
        RunReport noe;
    };
    std::vector<Point> points;
    points.reserve(cfg.eps_points.size());
    for (double eps : cfg.eps_points) {
        points.push_back({eval_ppa_point(cfg, eps), eval_noe_point(cfg, eps)});
        all_converged = all_converged && points.back().ppa.converged && points.back().noe.converged;
    }

    if (cfg.format == ReportFormat::csv) {
        std::string out =
            "eps_b,eps_ppa,eps_noe,ratio,excess,ppa_iterations,noe_iterations,"
            "ppa_converged,noe_converged\n";
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& pt = points[i];
            const bool ok = pt.ppa.converged && pt.noe.converged;
            const double nan = std::nan("");
            const EnhancementReport enh =
                ok ? enhancement_report(pt.ppa, pt.noe)
                   : EnhancementReport{pt.ppa.final_polarizations[0],
                                       pt.noe.final_polarizations[0], nan, nan};
            out += fmt_double(cfg.eps_points[i]);
            out += ',';
            out += fmt_double(enh.eps_ppa);
            out += ',';
            out += fmt_double(enh.eps_noe);
            out += ',';
            out += ok ? fmt_double(enh.ratio) : "nan";
            out += ',';
            out += ok ? fmt_double(enh.excess) : "nan";
            out += ',' + std::to_string(pt.ppa.iterations);
            out += ',' + std::to_string(pt.noe.iterations);
            out += pt.ppa.converged ? ",true" : ",false";
            out += pt.noe.converged ? ",true\n" : ",false\n";
        }
        return out;
    }

    JsonWriter w;
    w.begin_object();
    write_header(w, cfg);
    w.key("qubits");
    w.integer(cfg.qubits);
    w.key("tol");
    w.number(cfg.tol);
    w.key("max_iters");
    w.integer(cfg.max_iters);
    w.key("results");
    w.begin_array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        w.begin_object();
        w.key("eps_b");
        w.number(cfg.eps_points[i]);
        w.key("ppa");
        w.begin_object();
        write_run_fields(w, pt.ppa);
        w.end_object();
        w.key("noe");
        w.begin_object();
        w.key("reset_ratio");
        w.number(std::exp(4.0 * BathSpec(cfg.eps_points[i]).delta()));
        write_run_fields(w, pt.noe);
        w.end_object();
        w.key("enhancement");
        if (pt.ppa.converged && pt.noe.converged) {
            const EnhancementReport enh = enhancement_report(pt.ppa, pt.noe);
            w.begin_object();
            w.key("eps_ppa");
            w.number(enh.eps_ppa);
            w.key("eps_noe");
            w.number(enh.eps_noe);
            w.key("ratio");
            w.number(enh.ratio);
            w.key("excess");
            w.number(enh.excess);
            w.end_object();
        } else {
            w.null();
        }
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.take();
}

std::string solomon_report(const ScenarioConfig& cfg) {
    const SolomonScenario& s = cfg.solomon;
    const SolomonParams params(s.rho1, s.rho2, s.sigma, s.s1_eq, s.s2_eq);
    const SpinTrajectory traj = integrate(params, s.s1_0, s.s2_0, s.t_end, s.dt, s.saturated);

    if (cfg.format == ReportFormat::csv) {
        std::string out = "t,s1,s2\n";
        for (std::size_t i = 0; i < traj.t.size(); ++i) {
            out += fmt_double(traj.t[i]);
            out += ',';
            out += fmt_double(traj.s1[i]);
            out += ',';
            out += fmt_double(traj.s2[i]);
            out += '\n';
        }
        return out;
    }

    JsonWriter w;
    w.begin_object();
    write_header(w, cfg);
    w.key("params");
    w.begin_object();
    w.key("rho1");
    w.number(s.rho1);
    w.key("rho2");
    w.number(s.rho2);
    w.key("sigma");
    w.number(s.sigma);
    w.key("s1_eq");
    w.number(s.s1_eq);
    w.key("s2_eq");
    w.number(s.s2_eq);
    w.key("s1_0");
    w.number(s.s1_0);
    w.key("s2_0");
    w.number(s.s2_0);
    w.key("t_end");
    w.number(s.t_end);
    w.key("dt");
    w.number(s.dt);
    w.key("saturated");
    w.boolean(s.saturated);
    w.end_object();
    w.key("steady_state_saturated");
    w.number(steady_state_saturated(params));
    w.key("terminal_t");
    w.number(traj.t.back());
    w.key("terminal_s1");
    w.number(traj.s1.back());
    w.key("terminal_s2");
    w.number(traj.s2.back());
    w.key("samples");
    w.integer(static_cast<std::int64_t>(traj.t.size()));
    w.end_object();
    return w.take();
}

}  // namespace

std::string scenario_report_text(const ScenarioConfig& cfg, bool* all_converged) {
    bool converged = true;
    std::string text;
    switch (cfg.scenario) {
        case Scenario::ppa:
        case Scenario::noe:
            text = single_protocol_report(cfg, converged);
            break;
        case Scenario::compare:
            text = compare_report(cfg, converged);
            break;
        case Scenario::solomon:
            text = solomon_report(cfg);
            break;
    }
    if (all_converged) *all_converged = converged;
    return text;
}

int run_scenario(const ScenarioConfig& cfg) {
    bool all_converged = true;
    const std::string text = scenario_report_text(cfg, &all_converged);

    if (cfg.out == "-") {
        std::cout << text;
        std::cout.flush();
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << cfg.out << "' for writing\n";
            return 3;
        }
        file << text;
        file.close();
        if (!file) {
            std::cerr << "error: failed writing report to '" << cfg.out << "'\n";
            return 3;
        }
    }
    return all_converged ? 0 : 2;
}

}  // namespace hbac
