#include "hbac/channels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace hbac {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int bit_position(const DiagonalState& s, int qubit, const char* who) {
    if (qubit < 0 || qubit >= s.qubit_count()) {
        throw std::out_of_range(std::string(who) + ": qubit index " + std::to_string(qubit) +
                                " out of range for " + std::to_string(s.qubit_count()) + " qubits");
    }
    return s.qubit_count() - 1 - qubit;
}

}  // namespace

DiagonalState apply_permutation(const DiagonalState& s, const std::vector<std::size_t>& perm) {
    if (perm.size() != s.dim()) {
        throw std::invalid_argument("apply_permutation: permutation size " +
                                    std::to_string(perm.size()) + " does not match dimension " +
                                    std::to_string(s.dim()));
    }
    std::vector<char> seen(s.dim(), 0);
    for (std::size_t t : perm) {
        if (t >= s.dim() || seen[t]) {
            throw std::invalid_argument("apply_permutation: not a bijection on the basis indices");
        }
        seen[t] = 1;
    }
    std::vector<double> out(s.dim());
    for (std::size_t k = 0; k < s.dim(); ++k) {
        out[perm[k]] = s.populations()[k];
    }
    return DiagonalState(s.qubit_count(), std::move(out));
}

DiagonalState sort_step(const DiagonalState& s) {
    std::vector<double> out = s.populations();
    std::sort(out.begin(), out.end(), std::greater<double>());
    return DiagonalState(s.qubit_count(), std::move(out));
}

DiagonalState refresh_reset(const DiagonalState& s, int qubit, const BathSpec& bath) {
    const int pos = bit_position(s, qubit, "refresh_reset");
    const DiagonalState th = thermal_qubit(bath);
    if (s.qubit_count() == 1) {
        return th;
    }
    const DiagonalState marginal = trace_out(s, qubit);
    const std::size_t low_mask = (std::size_t{1} << pos) - 1;
    std::vector<double> out(s.dim());
    for (std::size_t k = 0; k < s.dim(); ++k) {
        const std::size_t m = ((k >> (pos + 1)) << pos) | (k & low_mask);
        out[k] = marginal.populations()[m] * th.populations()[(k >> pos) & 1];
    }
    return DiagonalState(s.qubit_count(), std::move(out));
}

DiagonalState state_reset(const DiagonalState& s, std::size_t i, std::size_t j, double ratio) {
    if (i == j) {
        throw std::invalid_argument("state_reset: pair indices must be distinct");
    }
    if (i >= s.dim() || j >= s.dim()) {
        throw std::out_of_range("state_reset: basis index out of range");
    }
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw std::invalid_argument("state_reset: ratio must be positive and finite, got " +
                                    std::to_string(ratio));
    }
    std::vector<double> out = s.populations();
    const double pair_sum = out[i] + out[j];
    out[i] = pair_sum * ratio / (1.0 + ratio);
    out[j] = pair_sum / (1.0 + ratio);
    return DiagonalState(s.qubit_count(), std::move(out));
}

DiagonalState saturate(const DiagonalState& s, int qubit) {
    const int pos = bit_position(s, qubit, "saturate");
    const std::size_t bit = std::size_t{1} << pos;
    std::vector<double> out = s.populations();
    for (std::size_t k = 0; k < s.dim(); ++k) {
        if ((k & bit) == 0) {
            const double mean = 0.5 * (out[k] + out[k | bit]);
            out[k] = mean;
            out[k | bit] = mean;
        }
    }
    return DiagonalState(s.qubit_count(), std::move(out));
}

DiagonalState apply_step(const DiagonalState& s, const ProtocolStep& step) {
    return std::visit(
        overloaded{
            [&](const Sort&) { return sort_step(s); },
            [&](const Reset& r) {
                DiagonalState cur = s;
                for (int q : r.qubits) {
                    cur = refresh_reset(cur, q, r.bath);
                }
                return cur;
            },
            [&](const StateReset& r) { return state_reset(s, r.i, r.j, r.ratio); },
            [&](const Saturate& r) { return saturate(s, r.qubit); },
            [&](const Permute& r) { return apply_permutation(s, r.perm); },
        },
        step);
}

}  // namespace hbac
