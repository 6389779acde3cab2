#include "hbac/ppa.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "hbac/channels.hpp"

namespace hbac {

namespace {

void validate(const DiagonalState& s, const PpaConfig& cfg) {
    if (cfg.reset_qubits.empty()) {
        throw std::invalid_argument("PpaConfig: reset_qubits must not be empty");
    }
    std::vector<char> seen(static_cast<std::size_t>(s.qubit_count()), 0);
    for (int q : cfg.reset_qubits) {
        if (q < 0 || q >= s.qubit_count()) {
            throw std::out_of_range("PpaConfig: reset qubit " + std::to_string(q) +
                                    " out of range for " + std::to_string(s.qubit_count()) +
                                    " qubits");
        }
        if (seen[static_cast<std::size_t>(q)]) {
            throw std::invalid_argument("PpaConfig: duplicate reset qubit " + std::to_string(q));
        }
        seen[static_cast<std::size_t>(q)] = 1;
    }
}

}  // namespace

DiagonalState ppa_round(const DiagonalState& s, const PpaConfig& cfg) {
    validate(s, cfg);
    DiagonalState cur = cfg.order == PpaRoundOrder::sort_then_refresh ? sort_step(s) : s;
    for (int q : cfg.reset_qubits) {
        cur = refresh_reset(cur, q, cfg.bath);
    }
    return cfg.order == PpaRoundOrder::refresh_then_sort ? sort_step(cur) : cur;
}

RunReport run_ppa(const DiagonalState& s0, const PpaConfig& cfg) {
    validate(s0, cfg);
    return run_to_fixed_point(
        s0, [&cfg](const DiagonalState& s) { return ppa_round(s, cfg); }, cfg.tol, cfg.max_iters,
        cfg.bath.eps_b());
}

}  // namespace hbac
