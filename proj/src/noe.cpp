#include "hbac/noe.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hbac/channels.hpp"

namespace hbac {

namespace {

std::pair<std::size_t, std::size_t> resolve_pair(const DiagonalState& s, const NoeConfig& cfg) {
    if (s.qubit_count() < 2) {
        throw std::invalid_argument("noe_round: protocol requires at least 2 qubits");
    }
    const std::pair<std::size_t, std::size_t> pair =
        cfg.active_pair.value_or(std::pair<std::size_t, std::size_t>{0, s.dim() - 1});
    if (pair.first == pair.second) {
        throw std::invalid_argument("NoeConfig: active pair indices must be distinct");
    }
    if (pair.first >= s.dim() || pair.second >= s.dim()) {
        throw std::out_of_range("NoeConfig: active pair index out of range");
    }
    return pair;
}

}  // namespace

double noe_ratio(const NoeConfig& cfg) {
    const double ratio = cfg.ratio_override.value_or(std::exp(4.0 * cfg.bath.delta()));
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw std::invalid_argument("NoeConfig: ratio must be positive and finite");
    }
    return ratio;
}

DiagonalState noe_round(const DiagonalState& s, const NoeConfig& cfg) {
    const auto [lo, hi] = resolve_pair(s, cfg);
    return saturate(state_reset(s, lo, hi, noe_ratio(cfg)), cfg.driven_qubit);
}

RunReport run_noe(const DiagonalState& s0, const NoeConfig& cfg) {
    resolve_pair(s0, cfg);
    noe_ratio(cfg);
    return run_to_fixed_point(
        s0, [&cfg](const DiagonalState& s) { return noe_round(s, cfg); }, cfg.tol, cfg.max_iters,
        cfg.bath.eps_b());
}

EnhancementReport enhancement_report(const RunReport& ppa, const RunReport& noe) {
    if (!ppa.converged || !noe.converged) {
        throw std::invalid_argument("enhancement_report: both runs must have converged");
    }
    if (ppa.final_state.qubit_count() != noe.final_state.qubit_count()) {
        throw std::invalid_argument("enhancement_report: qubit count mismatch");
    }
    if (ppa.bath_eps != noe.bath_eps) {
        throw std::invalid_argument("enhancement_report: bath polarization mismatch");
    }
    const double eps_ppa = ppa.final_polarizations.at(0);
    const double eps_noe = noe.final_polarizations.at(0);
    // Both polarizations vanish at eps_b = 0; report no enhancement there.
    const double ratio = (eps_ppa == 0.0 && eps_noe == 0.0) ? 1.0 : eps_noe / eps_ppa;
    return EnhancementReport{eps_ppa, eps_noe, ratio, eps_noe - eps_ppa};
}

}  // namespace hbac
