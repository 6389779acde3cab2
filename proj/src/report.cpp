#include "hbac/report.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hbac {

RunReport run_to_fixed_point(const DiagonalState& s0, const RoundMap& round, double tol,
                             std::int64_t max_iters, double bath_eps) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::invalid_argument("run_to_fixed_point: tol must be positive and finite");
    }
    if (max_iters < 1) {
        throw std::invalid_argument("run_to_fixed_point: max_iters must be >= 1");
    }

    DiagonalState current = s0;
    std::vector<PolarizationVector> trajectory;
    trajectory.push_back(all_polarizations(current));

    std::int64_t iterations = 0;
    bool converged = false;
    while (iterations < max_iters) {
        DiagonalState next = round(current);
        if (l1_distance(current, next) <= tol) {
            converged = true;
            break;
        }
        current = std::move(next);
        ++iterations;
        trajectory.push_back(all_polarizations(current));
    }

    PolarizationVector final_polarizations = all_polarizations(current);
    return RunReport{iterations,        converged, std::move(trajectory),
                     std::move(current), std::move(final_polarizations), bath_eps};
}

}  // namespace hbac
