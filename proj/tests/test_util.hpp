#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "hbac/state.hpp"

namespace testutil {

/// Uniform random population vector, normalized. With `sparse`, roughly a
/// third of the entries are zeroed first to exercise ties and empty fibers.
inline hbac::DiagonalState random_state(std::mt19937_64& rng, int n, bool sparse = false) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> p(std::size_t{1} << n);
    double sum = 0.0;
    for (auto& x : p) {
        x = uniform(rng);
        if (sparse && uniform(rng) < 1.0 / 3.0) {
            x = 0.0;
        }
        sum += x;
    }
    if (sum == 0.0) {
        p[0] = 1.0;
        sum = 1.0;
    }
    for (auto& x : p) {
        x /= sum;
    }
    return hbac::DiagonalState(n, std::move(p));
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
        if (d > m) m = d;
    }
    return m;
}

}  // namespace testutil
