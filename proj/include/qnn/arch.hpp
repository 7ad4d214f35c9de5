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
 * Circuit templates for the quantum classifier and its forward pass.
 *
 * Every template starts with an encoding layer, RY(angle_i) on qubit i, and
 * reads out the Born probability of |1> on the last qubit.
 *
 * PartialChain layer:    RY(p) on every qubit, then CX(i, i+1) for i = 0..n-2.
 *                        n parameters per layer.
 * FullyEntangled layer:  for each ordered pair (i, j), i != j, in
 *                        lexicographic order: CX(i, j) then U3(p1, p2, p3) on j.
 *                        3 n (n - 1) parameters per layer.
 *
 * Parameters are consumed layer-major, then in qubit / pair order.
 */
#pragma once

#include "qnn/qsim.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qnn::arch {

enum class Topology { PartialChain, FullyEntangled };

std::string_view to_string(Topology topology);
/// Accepts "partial-chain" / "fully-entangled" (also "partial" / "full").
Topology parse_topology(std::string_view name);

class Architecture {
  public:
    /// Throws std::invalid_argument on zero layers or a bad qubit count.
    Architecture(Topology topology, std::size_t n_qubits, std::size_t n_layers);

    [[nodiscard]] Topology topology() const { return topology_; }
    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t n_layers() const { return n_layers_; }
    [[nodiscard]] std::size_t params_per_layer() const;
    [[nodiscard]] std::size_t param_count() const;
    /// Index of the measured qubit (always the last one).
    [[nodiscard]] std::size_t readout_qubit() const { return n_qubits_ - 1; }

    friend bool operator==(const Architecture &, const Architecture &) = default;

  private:
    Topology topology_;
    std::size_t n_qubits_;
    std::size_t n_layers_;
};

std::size_t param_count(const Architecture &arch);

/// Trainable rotation angles (radians), sized for one architecture.
class ParamVector {
  public:
    /// Throws std::invalid_argument when values.size() != expected_len.
    ParamVector(std::vector<double> values, std::size_t expected_len);
    ParamVector(const Architecture &arch, std::vector<double> values);

    static ParamVector zeros(const Architecture &arch);

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const { return values_; }
    [[nodiscard]] double operator[](std::size_t k) const { return values_[k]; }

    /// Copy with component k shifted by delta.
    [[nodiscard]] ParamVector shifted(std::size_t k, double delta) const;

    friend bool operator==(const ParamVector &, const ParamVector &) = default;

  private:
    std::vector<double> values_;
};

/// Encoded input: one RY angle in [0, pi] per qubit.
class InputAngles {
  public:
    /// Throws std::invalid_argument if any angle is outside [0, pi] or NaN.
    explicit InputAngles(std::vector<double> angles);

    [[nodiscard]] std::size_t size() const { return angles_.size(); }
    [[nodiscard]] std::span<const double> angles() const { return angles_; }
    [[nodiscard]] double operator[](std::size_t i) const { return angles_[i]; }

    friend bool operator==(const InputAngles &, const InputAngles &) = default;

  private:
    std::vector<double> angles_;
};

/// Expands the template into a flat gate list. Throws on length mismatch.
std::vector<qsim::Gate> build_circuit(const Architecture &arch,
                                      const InputAngles &input,
                                      const ParamVector &params);

/// Predicted label l' = P(last qubit = 1) after simulating from |0...0>.
double forward(const Architecture &arch, const InputAngles &input,
               const ParamVector &params);

/**
 * Reusable forward evaluator: keeps the gate buffer and the statevector
 * between calls. Not thread-safe; use one per worker.
 */
class ForwardWorkspace {
  public:
    explicit ForwardWorkspace(const Architecture &arch);
    double operator()(const InputAngles &input, const ParamVector &params);

  private:
    Architecture arch_;
    std::vector<qsim::Gate> gates_;
    qsim::StateVector state_;
};

} // namespace qnn::arch
