#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hbac {

// Diagonal states are stored as plain probability vectors; registers are
// capped at 2^20 populations (desk-scale simulations, n <= 20 qubits).
inline constexpr int kMaxQubits = 20;
inline constexpr std::size_t kMaxPopulations = std::size_t{1} << kMaxQubits;

/// Per-qubit Pauli-Z expectations, indexed by qubit.
using PolarizationVector = std::vector<double>;

/// Heat bath described by its equilibrium polarization eps_b = tanh(delta),
/// with delta the dimensionless inverse-temperature parameter.
class BathSpec {
public:
    explicit BathSpec(double eps_b);

    double eps_b() const { return eps_b_; }
    double delta() const { return delta_; }

private:
    double eps_b_;
    double delta_;
};

/// Diagonal n-qubit state: a probability vector over the 2^n computational
/// basis states. Basis index k encodes qubit values with qubit 0 (the target,
/// first spin) as the most significant bit; qubit n-1 is the least significant
/// bit. Construction validates normalization and clamps negative populations
/// within 1e-15 of zero; anything more negative is rejected.
class DiagonalState {
public:
    DiagonalState(int qubit_count, std::vector<double> populations);

    static DiagonalState maximally_mixed(int qubit_count);

    int qubit_count() const { return n_; }
    std::size_t dim() const { return p_.size(); }
    const std::vector<double>& populations() const { return p_; }

    /// Value of qubit q (0 or 1) within basis index k.
    int qubit_bit(std::size_t k, int q) const {
        return static_cast<int>((k >> (n_ - 1 - q)) & std::size_t{1});
    }

private:
    int n_;
    std::vector<double> p_;
};

/// Single qubit in thermal equilibrium with the bath:
/// p = [(1+eps_b)/2, (1-eps_b)/2].
DiagonalState thermal_qubit(const BathSpec& bath);

/// Product state with a's qubits in front: p[(i << b.n) | j] = a.p[i] * b.p[j].
DiagonalState tensor(const DiagonalState& a, const DiagonalState& b);

/// <S_z> of one qubit: sum_k p[k] * (-1)^{bit_q(k)}.
double qubit_polarization(const DiagonalState& s, int qubit);

PolarizationVector all_polarizations(const DiagonalState& s);

/// Marginal over one qubit; the surviving qubits keep their indices' order.
DiagonalState trace_out(const DiagonalState& s, int qubit);

/// L1 distance between population vectors of two equally sized states.
double l1_distance(const DiagonalState& a, const DiagonalState& b);

}  // namespace hbac
