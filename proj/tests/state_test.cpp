#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "hbac/errors.hpp"
#include "hbac/state.hpp"
#include "test_util.hpp"

using namespace hbac;
using testutil::random_state;

TEST_SUITE_BEGIN("state");

TEST_CASE("bath spec derives the inverse-temperature parameter") {
    const BathSpec bath(0.1);
    CHECK(bath.eps_b() == 0.1);
    CHECK(bath.delta() == std::atanh(0.1));
    CHECK(BathSpec(0.0).delta() == 0.0);
}

TEST_CASE("bath spec rejects out-of-range polarizations") {
    CHECK_THROWS_AS(BathSpec(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(BathSpec(1.0), std::invalid_argument);
    CHECK_THROWS_AS(BathSpec(1.5), std::invalid_argument);
    CHECK_THROWS_AS(BathSpec(std::nan("")), std::invalid_argument);
}

TEST_CASE("tanh/atanh round trip stays within 1e-14") {
    for (double eps : {0.0, 1e-6, 0.01, 0.1, 0.5, 0.9, 0.999999}) {
        CHECK(std::abs(std::tanh(BathSpec(eps).delta()) - eps) <= 1e-14);
    }
}

TEST_CASE("state construction validates length, sign and normalization") {
    CHECK_THROWS_AS(DiagonalState(0, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(DiagonalState(2, {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(DiagonalState(1, {0.6, 0.3}), std::invalid_argument);
    CHECK_THROWS_AS(DiagonalState(1, {1.5, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(DiagonalState(1, {1.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(DiagonalState(21, std::vector<double>(std::size_t{1} << 21, 0.0)), SizeError);

    // negativity within 1e-15 is clamped, beyond is an error
    const DiagonalState clamped(1, {1.0, -1e-16});
    CHECK(clamped.populations()[1] == 0.0);
    CHECK_THROWS_AS(DiagonalState(1, {1.0, -1e-13}), std::invalid_argument);
}

TEST_CASE("thermal qubit populations") {
    const auto infinite_temperature = thermal_qubit(BathSpec(0.0));
    CHECK(infinite_temperature.populations()[0] == 0.5);
    CHECK(infinite_temperature.populations()[1] == 0.5);

    const auto warm = thermal_qubit(BathSpec(0.1));
    CHECK(std::abs(warm.populations()[0] - 0.55) <= 1e-15);
    CHECK(std::abs(warm.populations()[1] - 0.45) <= 1e-15);
    CHECK(std::abs(qubit_polarization(warm, 0) - 0.1) <= 1e-15);
}

TEST_CASE("thermal qubit in the near-pure limit") {
    const auto s = thermal_qubit(BathSpec(1.0 - 1e-9));
    CHECK(s.populations()[0] >= 1.0 - 5e-10);
    CHECK(s.populations()[1] <= 5e-10);
    CHECK(s.populations()[0] + s.populations()[1] == 1.0);
}

TEST_CASE("tensor product layout and values") {
    const DiagonalState pure(1, {1.0, 0.0});
    const DiagonalState mixed = DiagonalState::maximally_mixed(1);

    const auto a = tensor(pure, mixed);
    CHECK(a.populations() == std::vector<double>{0.5, 0.5, 0.0, 0.0});

    const auto b = tensor(thermal_qubit(BathSpec(0.1)), thermal_qubit(BathSpec(0.1)));
    const std::vector<double> expected_b{0.3025, 0.2475, 0.2475, 0.2025};
    CHECK(testutil::max_abs_diff(b.populations(), expected_b) <= 1e-15);

    // the pre-compression two-qubit state: fresh reset qubit behind a mixed target
    const auto c = tensor(mixed, thermal_qubit(BathSpec(0.1)));
    const std::vector<double> expected_c{0.275, 0.225, 0.275, 0.225};
    CHECK(testutil::max_abs_diff(c.populations(), expected_c) <= 1e-15);
}

TEST_CASE("tensor preserves the factors' polarizations") {
    std::mt19937_64 rng(87231);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_state(rng, 2);
        const auto b = random_state(rng, 3);
        const auto ab = tensor(a, b);
        for (int q = 0; q < 2; ++q) {
            CHECK(std::abs(qubit_polarization(ab, q) - qubit_polarization(a, q)) <= 1e-14);
        }
        for (int q = 0; q < 3; ++q) {
            CHECK(std::abs(qubit_polarization(ab, 2 + q) - qubit_polarization(b, q)) <= 1e-14);
        }
    }
}

TEST_CASE("tensor rejects registers beyond the cap") {
    const auto big = DiagonalState::maximally_mixed(11);
    const auto medium = DiagonalState::maximally_mixed(10);
    CHECK_THROWS_AS(tensor(big, medium), SizeError);
    CHECK(tensor(medium, DiagonalState::maximally_mixed(10)).qubit_count() == 20);
}

TEST_CASE("qubit polarization reads the Z expectation per qubit") {
    const auto mixed = DiagonalState::maximally_mixed(3);
    for (int q = 0; q < 3; ++q) {
        CHECK(qubit_polarization(mixed, q) == 0.0);
    }

    // the post-compression state from the two-qubit cooling narrative
    const DiagonalState compressed(2, {0.275, 0.275, 0.225, 0.225});
    CHECK(std::abs(qubit_polarization(compressed, 0) - 0.1) <= 1e-15);
    CHECK(qubit_polarization(compressed, 1) == 0.0);

    CHECK_THROWS_AS(qubit_polarization(compressed, -1), std::out_of_range);
    CHECK_THROWS_AS(qubit_polarization(compressed, 2), std::out_of_range);
}

TEST_CASE("trace out sums the two fibers of the traced qubit") {
    const DiagonalState product(2, {0.3025, 0.2475, 0.2475, 0.2025});
    const auto marginal = trace_out(product, 1);
    CHECK(marginal.qubit_count() == 1);
    CHECK(std::abs(marginal.populations()[0] - 0.55) <= 1e-15);
    CHECK(std::abs(marginal.populations()[1] - 0.45) <= 1e-15);

    const DiagonalState correlated(2, {0.5, 0.0, 0.0, 0.5});
    const auto rest = trace_out(correlated, 0);
    CHECK(rest.populations() == std::vector<double>{0.5, 0.5});

    CHECK_THROWS_AS(trace_out(rest, 0), std::invalid_argument);
    CHECK_THROWS_AS(trace_out(product, 5), std::out_of_range);
}

TEST_CASE("trace out matches a direct summation oracle") {
    std::mt19937_64 rng(55102);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = random_state(rng, 3);
        for (int q = 0; q < 3; ++q) {
            const auto marginal = trace_out(s, q);
            const int pos = 3 - 1 - q;
            for (std::size_t m = 0; m < marginal.dim(); ++m) {
                const std::size_t low = m & ((std::size_t{1} << pos) - 1);
                const std::size_t high = (m >> pos) << (pos + 1);
                const double expected = s.populations()[high | low] +
                                        s.populations()[high | (std::size_t{1} << pos) | low];
                CHECK(std::abs(marginal.populations()[m] - expected) <= 1e-16);
            }
        }
    }
}

TEST_CASE("trace out commutes with polarization on the survivors") {
    std::mt19937_64 rng(99173);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);  // 2..6
        const auto s = random_state(rng, n);
        const int traced = static_cast<int>(rng() % static_cast<std::size_t>(n));
        const auto marginal = trace_out(s, traced);
        int out_q = 0;
        for (int q = 0; q < n; ++q) {
            if (q == traced) continue;
            CHECK(std::abs(qubit_polarization(marginal, out_q) - qubit_polarization(s, q)) <= 1e-14);
            ++out_q;
        }
    }
}

TEST_CASE("population sum is preserved by state-level operations") {
    std::mt19937_64 rng(31977);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_state(rng, 2, true);
        const auto b = random_state(rng, 2, true);
        const auto product = tensor(a, b);
        double sum = 0.0;
        for (double x : product.populations()) sum += x;
        CHECK(std::abs(sum - 1.0) <= 1e-12);
        const auto marginal = trace_out(a, 0);
        double msum = 0.0;
        for (double x : marginal.populations()) msum += x;
        CHECK(std::abs(msum - 1.0) <= 1e-12);
    }
}

TEST_SUITE_END();
