// Copyright 2026 The qnn-cancer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qnn/qsim.hpp"
#include "support/helpers.hpp"

#include <catch2/catch.hpp>

#include <numbers>

using namespace qnn;
using qsim::Complex;
using qsim::Gate;
using qsim::StateVector;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double pi = std::numbers::pi;

void require_amplitudes(const StateVector &s, const std::vector<Complex> &expected,
                        double tol = 1e-12) {
    REQUIRE(s.amplitudes().size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        INFO("amplitude " << i);
        CHECK(std::abs(s.amplitudes()[i] - expected[i]) < tol);
    }
}
} // namespace

TEST_CASE("zero state", "[qsim]") {
    require_amplitudes(qsim::new_zero_state(1), {1.0, 0.0});
    require_amplitudes(qsim::new_zero_state(2), {1.0, 0.0, 0.0, 0.0});

    const auto s10 = qsim::new_zero_state(10);
    REQUIRE(s10.amplitudes().size() == 1024);
    CHECK(s10.amplitudes()[0] == Complex{1.0});
    CHECK(s10.norm_squared() == 1.0);

    CHECK_THROWS_AS(qsim::new_zero_state(0), std::invalid_argument);
    CHECK_THROWS_AS(qsim::new_zero_state(21), std::invalid_argument);
    CHECK_NOTHROW(qsim::new_zero_state(20));
}

TEST_CASE("gate matrices follow the U3 convention", "[qsim]") {
    const double h = 1.0 / std::sqrt(2.0);
    // U3(pi/2, pi/2, pi) = [[h, h], [i h, -i h]]
    const auto m = qsim::single_qubit_matrix(Gate::u3(0, pi / 2, pi / 2, pi));
    CHECK(std::abs(m[0] - Complex{h, 0}) < 1e-15);
    CHECK(std::abs(m[1] - Complex{h, 0}) < 1e-15);
    CHECK(std::abs(m[2] - Complex{0, h}) < 1e-15);
    CHECK(std::abs(m[3] - Complex{0, -h}) < 1e-15);

    const auto rz = qsim::single_qubit_matrix(Gate::rz(0, 0.7));
    CHECK(rz[0] == Complex{1.0});
    CHECK(rz[1] == Complex{0.0});
    CHECK(rz[2] == Complex{0.0});
    CHECK(std::abs(rz[3] - std::polar(1.0, 0.7)) < 1e-15);

    CHECK_THROWS_AS(qsim::single_qubit_matrix(Gate::cx(0, 1)), std::invalid_argument);
}

TEST_CASE("every gate matrix is unitary", "[qsim][property]") {
    std::mt19937_64 rng{11};
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = testing::random_gate(rng, 1, false);
        const auto m = qsim::single_qubit_matrix(g);
        // (U U^dagger)_{rc} = sum_k U_{rk} conj(U_{ck})
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                const Complex v = m[2 * r] * std::conj(m[2 * c]) +
                                  m[2 * r + 1] * std::conj(m[2 * c + 1]);
                CHECK(std::abs(v - Complex{r == c ? 1.0 : 0.0}) < 1e-12);
            }
        }
    }
}

TEST_CASE("apply_gate examples", "[qsim]") {
    SECTION("RY(pi) flips |0> to |1>") {
        const auto s = qsim::apply_gate(qsim::new_zero_state(1), Gate::ry(0, pi));
        require_amplitudes(s, {0.0, 1.0});
    }
    SECTION("CX with control set flips the target") {
        // qubit 0 is the least-significant bit: |q1 q0> = |0 1> is index 1.
        auto s = StateVector::from_amplitudes({0.0, 1.0, 0.0, 0.0});
        s.apply(Gate::cx(0, 1));
        require_amplitudes(s, {0.0, 0.0, 0.0, 1.0});
    }
    SECTION("CX with control clear does nothing") {
        auto s = StateVector::from_amplitudes({0.0, 0.0, 1.0, 0.0});
        s.apply(Gate::cx(0, 1));
        require_amplitudes(s, {0.0, 0.0, 1.0, 0.0});
    }
    SECTION("bad indices") {
        auto s = qsim::new_zero_state(2);
        CHECK_THROWS_AS(s.apply(Gate::ry(2, 0.1)), std::out_of_range);
        CHECK_THROWS_AS(s.apply(Gate::cx(0, 5)), std::out_of_range);
        CHECK_THROWS_AS(s.apply(Gate::cx(5, 0)), std::out_of_range);
        CHECK_THROWS_AS(Gate::cx(1, 1), std::invalid_argument);
    }
}

TEST_CASE("prob_one", "[qsim]") {
    CHECK(qsim::prob_one(qsim::new_zero_state(1), 0) == 0.0);
    const auto half = qsim::apply_gate(qsim::new_zero_state(1), Gate::ry(0, pi / 2));
    CHECK_THAT(qsim::prob_one(half, 0), WithinAbs(0.5, 1e-15));
    for (double theta : {0.3, 1.1, 2.7}) {
        const auto s = qsim::apply_gate(qsim::new_zero_state(1), Gate::ry(0, theta));
        const double expected = std::pow(std::sin(theta / 2), 2);
        CHECK_THAT(qsim::prob_one(s, 0), WithinAbs(expected, 1e-14));
    }
    CHECK_THROWS_AS(qsim::prob_one(qsim::new_zero_state(3), 3), std::out_of_range);
}

TEST_CASE("dense oracle examples", "[qsim][oracle]") {
    const std::vector<Gate> flip{Gate::ry(0, pi)};
    require_amplitudes(qsim::dense_oracle(1, flip), {0.0, 1.0});

    const std::vector<Gate> bell_like{Gate::ry(0, pi), Gate::cx(0, 1)};
    require_amplitudes(qsim::dense_oracle(2, bell_like), {0.0, 0.0, 0.0, 1.0});

    CHECK_THROWS_AS(qsim::dense_oracle(5, flip), std::invalid_argument);
    const std::vector<Gate> outside{Gate::ry(3, 0.2)};
    CHECK_THROWS_AS(qsim::dense_oracle(2, outside), std::out_of_range);
}

TEST_CASE("apply pipeline matches the dense Kronecker oracle", "[qsim][oracle][property]") {
    std::mt19937_64 rng{2024};
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        const auto gates = testing::random_circuit(rng, n, 30);
        StateVector fast{n};
        fast.apply(gates);
        worst = std::max(worst, testing::max_deviation(fast, qsim::dense_oracle(n, gates)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("oracle agrees on a 4-qubit register", "[qsim][oracle]") {
    std::mt19937_64 rng{7};
    const auto gates = testing::random_circuit(rng, 4, 40);
    StateVector fast{4};
    fast.apply(gates);
    CHECK(testing::max_deviation(fast, qsim::dense_oracle(4, gates)) < 1e-10);
}

TEST_CASE("norm is preserved", "[qsim][property]") {
    std::mt19937_64 rng{99};
    auto s = testing::random_state(rng, 6);
    for (int i = 0; i < 1000; ++i) {
        s.apply(testing::random_gate(rng, 6));
        REQUIRE(std::abs(s.norm_squared() - 1.0) < 1e-12);
    }
}

TEST_CASE("U3(theta, 0, 0) equals RY(theta)", "[qsim][property]") {
    std::mt19937_64 rng{5};
    std::uniform_real_distribution<double> angle{-pi, pi};
    for (int i = 0; i < 20; ++i) {
        const double theta = angle(rng);
        auto a = testing::random_state(rng, 3);
        auto b = a;
        a.apply(Gate::u3(1, theta, 0.0, 0.0));
        b.apply(Gate::ry(1, theta));
        CHECK(testing::max_deviation(a, b) < 1e-12);
    }
}

TEST_CASE("CX is an involution", "[qsim][property]") {
    std::mt19937_64 rng{3};
    for (int i = 0; i < 20; ++i) {
        const auto original = testing::random_state(rng, 4);
        auto s = original;
        s.apply(Gate::cx(3, 1));
        s.apply(Gate::cx(3, 1));
        CHECK(testing::max_deviation(s, original) < 1e-12);
    }
}

TEST_CASE("gates do not disturb qubits outside their support", "[qsim][property]") {
    std::mt19937_64 rng{17};
    const std::size_t n = 5;
    for (int trial = 0; trial < 50; ++trial) {
        StateVector s{n};
        for (std::size_t q = 0; q < n; ++q) {
            auto g = testing::random_gate(rng, 1, false);
            g.target = q;
            s.apply(g);
        }
        std::vector<double> before;
        for (std::size_t q = 0; q < n; ++q) {
            before.push_back(s.prob_one(q));
        }
        const auto g = testing::random_gate(rng, n);
        s.apply(g);
        for (std::size_t q = 0; q < n; ++q) {
            const bool in_support = q == g.target || (g.is_two_qubit() && q == g.control);
            if (!in_support) {
                CHECK(std::abs(s.prob_one(q) - before[q]) < 1e-12);
            }
        }
    }
}

TEST_CASE("shot sampling is seeded and follows the exact distribution", "[qsim]") {
    const auto one = qsim::apply_gate(qsim::new_zero_state(2), Gate::ry(1, pi));
    for (auto idx : one.sample(50, 1)) {
        CHECK(idx == 2);
    }
    const auto half = qsim::apply_gate(qsim::new_zero_state(1), Gate::ry(0, pi / 2));
    CHECK(half.sample(100, 42) == half.sample(100, 42));
    const auto shots = half.sample(4000, 42);
    const auto ones = std::count(shots.begin(), shots.end(), std::size_t{1});
    CHECK(ones > 1800);
    CHECK(ones < 2200);
}
