#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "hbac/report.hpp"
#include "hbac/state.hpp"

namespace hbac {

/// Cross-relaxation cooling protocol: equilibrate the |0...0> / |1...1>
/// populations to a Boltzmann ratio, then saturate the driven qubit.
///
/// The default ratio e^{4 delta} is the Boltzmann factor of the doubled
/// energy gap between the active pair at equal qubit frequencies; overriding
/// it with e^{2 delta} makes the protocol merely reproduce the bath.
struct NoeConfig {
    BathSpec bath;
    int driven_qubit = 1;
    /// Basis indices equilibrated by the state reset; defaults to
    /// (0, 2^n - 1) resolved against the state.
    std::optional<std::pair<std::size_t, std::size_t>> active_pair;
    std::optional<double> ratio_override;
    double tol = 1e-12;
    std::int64_t max_iters = 1'000'000;
};

/// Equilibration ratio the round uses: ratio_override or e^{4 delta}.
double noe_ratio(const NoeConfig& cfg);

/// One round: state reset on the active pair, then saturation of the driven
/// qubit. Requires n >= 2.
DiagonalState noe_round(const DiagonalState& s, const NoeConfig& cfg);

/// Iterates noe_round to an L1 fixed point. For the default two-qubit
/// protocol the fixed-point qubit-0 polarization is tanh(2 delta)
/// = 2 eps_b / (1 + eps_b^2), strictly above eps_b for 0 < eps_b < 1.
RunReport run_noe(const DiagonalState& s0, const NoeConfig& cfg);

/// Side-by-side comparison of two converged runs over the same bath.
struct EnhancementReport {
    double eps_ppa;
    double eps_noe;
    double ratio;
    double excess;
};

EnhancementReport enhancement_report(const RunReport& ppa, const RunReport& noe);

}  // namespace hbac
