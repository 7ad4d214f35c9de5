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
/**
 * @file
 * Exact statevector simulation for small registers.
 *
 * Qubit 0 is the least-significant bit of the basis-state index. Gate
 * matrices follow the usual U3 convention:
 *
 *   U3(t, p, l) = [[cos(t/2),          -e^{il} sin(t/2)],
 *                  [e^{ip} sin(t/2),  e^{i(p+l)} cos(t/2)]]
 *
 * with RY(t) = U3(t, 0, 0) and RZ(p) = diag(1, e^{ip}).
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qnn::qsim {

using Complex = std::complex<double>;

/// Largest register the simulator will allocate (2^20 amplitudes).
inline constexpr std::size_t kMaxQubits = 20;

enum class GateKind { RY, RZ, U3, CX };

/// Row-major 2x2 matrix.
using Matrix2 = std::array<Complex, 4>;

struct Gate {
    GateKind kind{GateKind::RY};
    std::size_t target{0};
    std::size_t control{0}; ///< only meaningful for CX
    std::array<double, 3> angles{}; ///< theta, phi, lambda (unused slots are 0)

    static Gate ry(std::size_t qubit, double theta);
    static Gate rz(std::size_t qubit, double phi);
    static Gate u3(std::size_t qubit, double theta, double phi, double lambda);
    /// Throws std::invalid_argument if control == target.
    static Gate cx(std::size_t control, std::size_t target);

    [[nodiscard]] bool is_two_qubit() const { return kind == GateKind::CX; }
    /// Highest qubit index the gate touches.
    [[nodiscard]] std::size_t max_qubit() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

std::string to_string(const Gate &gate);

/// 2x2 unitary of a single-qubit gate. Throws for CX.
Matrix2 single_qubit_matrix(const Gate &gate);

class StateVector {
  public:
    /// |0...0> on n_qubits qubits; throws std::invalid_argument outside 1..=20.
    explicit StateVector(std::size_t n_qubits);

    /// Wraps existing amplitudes; size must be a power of two in range.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }

    /// Applies gate in place. Throws std::out_of_range on bad indices.
    void apply(const Gate &gate);
    void apply(std::span<const Gate> gates);

    /// Resets to |0...0> without reallocating.
    void reset();

    [[nodiscard]] double norm_squared() const;

    /// Born probability of reading 1 on qubit.
    [[nodiscard]] double prob_one(std::size_t qubit) const;

    /// Draws basis-state indices from the exact distribution. Demonstration
    /// only; training always uses exact probabilities.
    [[nodiscard]] std::vector<std::size_t> sample(std::size_t shots,
                                                  std::uint64_t seed) const;

  private:
    StateVector() = default;
    void check_qubit(std::size_t qubit) const;
    void apply_single(std::size_t qubit, const Matrix2 &m);
    void apply_cx(std::size_t control, std::size_t target);

    std::size_t n_qubits_{0};
    std::vector<Complex> amplitudes_;
};

StateVector new_zero_state(std::size_t n_qubits);
StateVector apply_gate(StateVector state, const Gate &gate);
double prob_one(const StateVector &state, std::size_t qubit);

/// Largest register accepted by dense_oracle.
inline constexpr std::size_t kMaxOracleQubits = 4;

/**
 * Reference simulation: expands every gate to its full 2^n x 2^n matrix by
 * Kronecker products and multiplies them onto |0...0>. O(4^n) memory; only
 * intended for cross-checking StateVector::apply.
 */
StateVector dense_oracle(std::size_t n_qubits, std::span<const Gate> gates);

} // namespace qnn::qsim
