#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "hbac/state.hpp"

namespace hbac {

// Channel toolbox. Every channel maps diagonal states to diagonal states and
// preserves the population sum.

struct Sort {};

struct Reset {
    std::vector<int> qubits;
    BathSpec bath;
};

struct StateReset {
    std::size_t i;
    std::size_t j;
    double ratio;
};

struct Saturate {
    int qubit;
};

struct Permute {
    std::vector<std::size_t> perm;
};

using ProtocolStep = std::variant<Sort, Reset, StateReset, Saturate, Permute>;

/// p'[perm[k]] = p[k]; perm must be a bijection on {0, ..., 2^n - 1}.
DiagonalState apply_permutation(const DiagonalState& s, const std::vector<std::size_t>& perm);

/// SORT compression: populations in non-increasing order. Of all permutations
/// this maximizes the polarization of qubit 0 (the most significant bit).
DiagonalState sort_step(const DiagonalState& s);

/// Thermal refresh of one qubit: trace it out, tensor in thermal_qubit(bath)
/// at the same position. Destroys all correlations with the refreshed qubit.
DiagonalState refresh_reset(const DiagonalState& s, int qubit, const BathSpec& bath);

/// Equilibrates the populations of two basis states to p'[i]/p'[j] = ratio,
/// leaving every other entry untouched. A zero pair sum stays zero.
DiagonalState state_reset(const DiagonalState& s, std::size_t i, std::size_t j, double ratio);

/// Strong drive on one qubit: each pair of populations differing only in that
/// qubit's bit is replaced by its average, so the qubit's polarization is 0.
DiagonalState saturate(const DiagonalState& s, int qubit);

DiagonalState apply_step(const DiagonalState& s, const ProtocolStep& step);

}  // namespace hbac
