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
#include "qnn/arch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qnn::arch {

std::string_view to_string(Topology topology) {
    switch (topology) {
    case Topology::PartialChain:
        return "partial-chain";
    case Topology::FullyEntangled:
        return "fully-entangled";
    }
    return "unknown";
}

Topology parse_topology(std::string_view name) {
    if (name == "partial-chain" || name == "partial") {
        return Topology::PartialChain;
    }
    if (name == "fully-entangled" || name == "full") {
        return Topology::FullyEntangled;
    }
    throw std::invalid_argument("unknown topology '" + std::string{name} +
                                "' (expected partial-chain or fully-entangled)");
}

Architecture::Architecture(Topology topology, std::size_t n_qubits,
                           std::size_t n_layers)
    : topology_{topology}, n_qubits_{n_qubits}, n_layers_{n_layers} {
    if (n_qubits < 1 || n_qubits > qsim::kMaxQubits) {
        throw std::invalid_argument("architecture qubit count must be within 1.." +
                                    std::to_string(qsim::kMaxQubits) + ", got " +
                                    std::to_string(n_qubits));
    }
    if (n_layers < 1) {
        throw std::invalid_argument("architecture needs at least one layer");
    }
}

std::size_t Architecture::params_per_layer() const {
    switch (topology_) {
    case Topology::PartialChain:
        return n_qubits_;
    case Topology::FullyEntangled:
        return 3 * n_qubits_ * (n_qubits_ - 1);
    }
    return 0;
}

std::size_t Architecture::param_count() const {
    return params_per_layer() * n_layers_;
}

std::size_t param_count(const Architecture &arch) { return arch.param_count(); }

ParamVector::ParamVector(std::vector<double> values, std::size_t expected_len)
    : values_{std::move(values)} {
    if (values_.size() != expected_len) {
        throw std::invalid_argument("parameter vector has length " +
                                    std::to_string(values_.size()) +
                                    ", architecture expects " +
                                    std::to_string(expected_len));
    }
}

ParamVector::ParamVector(const Architecture &arch, std::vector<double> values)
    : ParamVector(std::move(values), arch.param_count()) {}

ParamVector ParamVector::zeros(const Architecture &arch) {
    return ParamVector{arch, std::vector<double>(arch.param_count(), 0.0)};
}

ParamVector ParamVector::shifted(std::size_t k, double delta) const {
    ParamVector out = *this;
    out.values_.at(k) += delta;
    return out;
}

InputAngles::InputAngles(std::vector<double> angles) : angles_{std::move(angles)} {
    for (std::size_t i = 0; i < angles_.size(); ++i) {
        const double a = angles_[i];
        if (!(a >= 0.0 && a <= std::numbers::pi)) {
            throw std::invalid_argument("input angle " + std::to_string(i) + " = " +
                                        std::to_string(a) + " outside [0, pi]");
        }
    }
}

namespace {

void check_lengths(const Architecture &arch, const InputAngles &input,
                   const ParamVector &params) {
    if (input.size() != arch.n_qubits()) {
        throw std::invalid_argument("input has " + std::to_string(input.size()) +
                                    " angles, architecture has " +
                                    std::to_string(arch.n_qubits()) + " qubits");
    }
    if (params.size() != arch.param_count()) {
        throw std::invalid_argument("parameter vector has length " +
                                    std::to_string(params.size()) +
                                    ", architecture expects " +
                                    std::to_string(arch.param_count()));
    }
}

void emit_circuit(const Architecture &arch, const InputAngles &input,
                  const ParamVector &params, std::vector<qsim::Gate> &out) {
    using qsim::Gate;
    const std::size_t n = arch.n_qubits();
    out.clear();
    for (std::size_t q = 0; q < n; ++q) {
        out.push_back(Gate::ry(q, input[q]));
    }
    std::size_t k = 0;
    for (std::size_t layer = 0; layer < arch.n_layers(); ++layer) {
        if (arch.topology() == Topology::PartialChain) {
            for (std::size_t q = 0; q < n; ++q) {
                out.push_back(Gate::ry(q, params[k++]));
            }
            for (std::size_t q = 0; q + 1 < n; ++q) {
                out.push_back(Gate::cx(q, q + 1));
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j) {
                        continue;
                    }
                    out.push_back(Gate::cx(i, j));
                    out.push_back(Gate::u3(j, params[k], params[k + 1], params[k + 2]));
                    k += 3;
                }
            }
        }
    }
}

} // namespace

std::vector<qsim::Gate> build_circuit(const Architecture &arch,
                                      const InputAngles &input,
                                      const ParamVector &params) {
    check_lengths(arch, input, params);
    std::vector<qsim::Gate> gates;
    emit_circuit(arch, input, params, gates);
    return gates;
}

double forward(const Architecture &arch, const InputAngles &input,
               const ParamVector &params) {
    ForwardWorkspace ws{arch};
    return ws(input, params);
}

ForwardWorkspace::ForwardWorkspace(const Architecture &arch)
    : arch_{arch}, state_{arch.n_qubits()} {}

double ForwardWorkspace::operator()(const InputAngles &input,
                                    const ParamVector &params) {
    check_lengths(arch_, input, params);
    emit_circuit(arch_, input, params, gates_);
    state_.reset();
    state_.apply(gates_);
    return state_.prob_one(arch_.readout_qubit());
}

} // namespace qnn::arch
