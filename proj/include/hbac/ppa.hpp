#pragma once

#include <cstdint>
#include <vector>

#include "hbac/report.hpp"
#include "hbac/state.hpp"

namespace hbac {

enum class PpaRoundOrder { refresh_then_sort, sort_then_refresh };

/// Partner Pairing Algorithm: rounds of bath refresh on the reset qubits
/// followed by SORT entropy compression. The reversed round order is
/// available for experimentation; both reach the same fixed point in the
/// tested scenarios.
struct PpaConfig {
    std::vector<int> reset_qubits;
    BathSpec bath;
    double tol = 1e-12;
    std::int64_t max_iters = 1'000'000;
    PpaRoundOrder order = PpaRoundOrder::refresh_then_sort;
};

/// One round: refresh every reset qubit (in the listed order), then SORT.
DiagonalState ppa_round(const DiagonalState& s, const PpaConfig& cfg);

/// Iterates ppa_round to an L1 fixed point. From the maximally mixed state the
/// qubit-0 polarization trajectory is non-decreasing.
RunReport run_ppa(const DiagonalState& s0, const PpaConfig& cfg);

}  // namespace hbac
