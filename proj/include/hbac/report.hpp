#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hbac/state.hpp"

namespace hbac {

/// Outcome of iterating a protocol round map to an L1 fixed point.
///
/// `iterations` counts the rounds that moved the state; the final confirming
/// application (which leaves the state within tol) is neither counted nor
/// recorded, so `trajectory` has exactly iterations + 1 entries with entry 0
/// describing the initial state.
struct RunReport {
    std::int64_t iterations;
    bool converged;
    std::vector<PolarizationVector> trajectory;
    DiagonalState final_state;
    PolarizationVector final_polarizations;
    double bath_eps;
};

using RoundMap = std::function<DiagonalState(const DiagonalState&)>;

/// Applies `round` until one more application would move the state by at most
/// `tol` in L1 distance, or until `max_iters` state-changing rounds have run.
/// Non-convergence is flagged in the report, never thrown.
RunReport run_to_fixed_point(const DiagonalState& s0, const RoundMap& round, double tol,
                             std::int64_t max_iters, double bath_eps);

}  // namespace hbac
