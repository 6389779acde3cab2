#include "hbac/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hbac/errors.hpp"

namespace hbac {

namespace {

constexpr double kNegativityTol = 1e-15;
constexpr double kSumTol = 1e-12;

void check_qubit_index(const DiagonalState& s, int q, const char* who) {
    if (q < 0 || q >= s.qubit_count()) {
        throw std::out_of_range(std::string(who) + ": qubit index " + std::to_string(q) +
                                " out of range for " + std::to_string(s.qubit_count()) + " qubits");
    }
}

}  // namespace

BathSpec::BathSpec(double eps_b) : eps_b_(eps_b), delta_(0.0) {
    if (!(eps_b >= 0.0) || !(eps_b < 1.0)) {
        throw std::invalid_argument("BathSpec: eps_b must satisfy 0 <= eps_b < 1, got " +
                                    std::to_string(eps_b));
    }
    delta_ = std::atanh(eps_b);
}

DiagonalState::DiagonalState(int qubit_count, std::vector<double> populations)
    : n_(qubit_count), p_(std::move(populations)) {
    if (n_ < 1) {
        throw std::invalid_argument("DiagonalState: qubit count must be >= 1");
    }
    if (n_ > kMaxQubits) {
        throw SizeError("DiagonalState: " + std::to_string(n_) + " qubits exceed the register cap of " +
                        std::to_string(kMaxQubits));
    }
    const std::size_t dim = std::size_t{1} << n_;
    if (p_.size() != dim) {
        throw std::invalid_argument("DiagonalState: expected " + std::to_string(dim) +
                                    " populations, got " + std::to_string(p_.size()));
    }
    double sum = 0.0;
    for (double& x : p_) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("DiagonalState: population is not finite");
        }
        if (x < 0.0) {
            if (x < -kNegativityTol) {
                throw std::invalid_argument("DiagonalState: population " + std::to_string(x) +
                                            " is negative beyond tolerance");
            }
            x = 0.0;
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kSumTol) {
        throw std::invalid_argument("DiagonalState: populations sum to " + std::to_string(sum) +
                                    ", expected 1");
    }
}

DiagonalState DiagonalState::maximally_mixed(int qubit_count) {
    if (qubit_count < 1) {
        throw std::invalid_argument("maximally_mixed: qubit count must be >= 1");
    }
    if (qubit_count > kMaxQubits) {
        throw SizeError("maximally_mixed: " + std::to_string(qubit_count) +
                        " qubits exceed the register cap of " + std::to_string(kMaxQubits));
    }
    const std::size_t dim = std::size_t{1} << qubit_count;
    return DiagonalState(qubit_count, std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

DiagonalState thermal_qubit(const BathSpec& bath) {
    // p0 = 1 - p1 keeps the pair summing to exactly 1 after rounding.
    const double p1 = (1.0 - bath.eps_b()) / 2.0;
    return DiagonalState(1, {1.0 - p1, p1});
}

DiagonalState tensor(const DiagonalState& a, const DiagonalState& b) {
    const int n = a.qubit_count() + b.qubit_count();
    if (n > kMaxQubits) {
        throw SizeError("tensor: combined register of " + std::to_string(n) +
                        " qubits exceeds the cap of " + std::to_string(kMaxQubits));
    }
    std::vector<double> out(a.dim() * b.dim());
    const std::size_t bdim = b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double ai = a.populations()[i];
        for (std::size_t j = 0; j < bdim; ++j) {
            out[(i << b.qubit_count()) | j] = ai * b.populations()[j];
        }
    }
    return DiagonalState(n, std::move(out));
}

double qubit_polarization(const DiagonalState& s, int qubit) {
    check_qubit_index(s, qubit, "qubit_polarization");
    // Accumulate the two fibers separately so that states with identical
    // fibers (e.g. right after saturation) report exactly zero.
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t k = 0; k < s.dim(); ++k) {
        if (s.qubit_bit(k, qubit) == 0) {
            plus += s.populations()[k];
        } else {
            minus += s.populations()[k];
        }
    }
    return plus - minus;
}

PolarizationVector all_polarizations(const DiagonalState& s) {
    PolarizationVector out(static_cast<std::size_t>(s.qubit_count()));
    for (int q = 0; q < s.qubit_count(); ++q) {
        out[static_cast<std::size_t>(q)] = qubit_polarization(s, q);
    }
    return out;
}

DiagonalState trace_out(const DiagonalState& s, int qubit) {
    if (s.qubit_count() < 2) {
        throw std::invalid_argument("trace_out: cannot trace out the only qubit");
    }
    check_qubit_index(s, qubit, "trace_out");
    const int pos = s.qubit_count() - 1 - qubit;
    const std::size_t low_mask = (std::size_t{1} << pos) - 1;
    std::vector<double> out(s.dim() / 2, 0.0);
    for (std::size_t k = 0; k < s.dim(); ++k) {
        const std::size_t m = ((k >> (pos + 1)) << pos) | (k & low_mask);
        out[m] += s.populations()[k];
    }
    return DiagonalState(s.qubit_count() - 1, std::move(out));
}

double l1_distance(const DiagonalState& a, const DiagonalState& b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw std::invalid_argument("l1_distance: qubit counts differ");
    }
    double d = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        d += std::abs(a.populations()[k] - b.populations()[k]);
    }
    return d;
}

}  // namespace hbac
