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

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qnn::qsim {

Gate Gate::ry(std::size_t qubit, double theta) {
    return Gate{GateKind::RY, qubit, 0, {theta, 0.0, 0.0}};
}

Gate Gate::rz(std::size_t qubit, double phi) {
    return Gate{GateKind::RZ, qubit, 0, {phi, 0.0, 0.0}};
}

Gate Gate::u3(std::size_t qubit, double theta, double phi, double lambda) {
    return Gate{GateKind::U3, qubit, 0, {theta, phi, lambda}};
}

Gate Gate::cx(std::size_t control, std::size_t target) {
    if (control == target) {
        throw std::invalid_argument("CX control and target must differ (both " +
                                    std::to_string(target) + ")");
    }
    return Gate{GateKind::CX, target, control, {0.0, 0.0, 0.0}};
}

std::size_t Gate::max_qubit() const {
    return is_two_qubit() ? std::max(control, target) : target;
}

std::string to_string(const Gate &gate) {
    std::ostringstream os;
    switch (gate.kind) {
    case GateKind::RY:
        os << "RY(" << gate.angles[0] << ")@" << gate.target;
        break;
    case GateKind::RZ:
        os << "RZ(" << gate.angles[0] << ")@" << gate.target;
        break;
    case GateKind::U3:
        os << "U3(" << gate.angles[0] << "," << gate.angles[1] << ","
           << gate.angles[2] << ")@" << gate.target;
        break;
    case GateKind::CX:
        os << "CX(" << gate.control << "," << gate.target << ")";
        break;
    }
    return os.str();
}

Matrix2 single_qubit_matrix(const Gate &gate) {
    using namespace std::complex_literals;
    switch (gate.kind) {
    case GateKind::RY: {
        const double c = std::cos(gate.angles[0] / 2);
        const double s = std::sin(gate.angles[0] / 2);
        return {Complex{c}, Complex{-s}, Complex{s}, Complex{c}};
    }
    case GateKind::RZ:
        return {Complex{1.0}, Complex{0.0}, Complex{0.0},
                std::exp(1i * gate.angles[0])};
    case GateKind::U3: {
        const auto [theta, phi, lambda] = gate.angles;
        const double c = std::cos(theta / 2);
        const double s = std::sin(theta / 2);
        return {Complex{c}, -std::exp(1i * lambda) * s, std::exp(1i * phi) * s,
                std::exp(1i * (phi + lambda)) * c};
    }
    case GateKind::CX:
        break;
    }
    throw std::invalid_argument("CX has no single-qubit matrix");
}

namespace {

void check_register_size(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("register size must be within 1.." +
                                    std::to_string(kMaxQubits) + " qubits, got " +
                                    std::to_string(n_qubits));
    }
}

} // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_{n_qubits} {
    check_register_size(n_qubits);
    amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    check_register_size(n);
    StateVector sv;
    sv.n_qubits_ = n;
    sv.amplitudes_ = std::move(amplitudes);
    return sv;
}

void StateVector::reset() {
    std::fill(amplitudes_.begin(), amplitudes_.end(), Complex{0.0});
    amplitudes_[0] = 1.0;
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " out of range for " + std::to_string(n_qubits_) +
                                "-qubit register");
    }
}

void StateVector::apply_single(std::size_t qubit, const Matrix2 &m) {
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t dim = amplitudes_.size();
    // Complex products are expanded by hand: the std::complex operator*
    // carries an Annex G NaN-recovery path that dominates the inner loop.
    const double m0r = m[0].real(), m0i = m[0].imag();
    const double m1r = m[1].real(), m1i = m[1].imag();
    const double m2r = m[2].real(), m2i = m[2].imag();
    const double m3r = m[3].real(), m3i = m[3].imag();
    // Visit each pair (i, i | stride) with bit `qubit` clear in i.
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const double a0r = amplitudes_[i].real(), a0i = amplitudes_[i].imag();
            const double a1r = amplitudes_[i + stride].real();
            const double a1i = amplitudes_[i + stride].imag();
            amplitudes_[i] = Complex{m0r * a0r - m0i * a0i + m1r * a1r - m1i * a1i,
                                     m0r * a0i + m0i * a0r + m1r * a1i + m1i * a1r};
            amplitudes_[i + stride] =
                Complex{m2r * a0r - m2i * a0i + m3r * a1r - m3i * a1i,
                        m2r * a0i + m2i * a0r + m3r * a1i + m3i * a1r};
        }
    }
}

void StateVector::apply_cx(std::size_t control, std::size_t target) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t i = cmask; i < amplitudes_.size(); i = (i + 1) | cmask) {
        if ((i & tmask) == 0) {
            std::swap(amplitudes_[i], amplitudes_[i | tmask]);
        }
    }
}

void StateVector::apply(const Gate &gate) {
    check_qubit(gate.target);
    if (gate.kind == GateKind::CX) {
        check_qubit(gate.control);
        if (gate.control == gate.target) {
            throw std::invalid_argument("CX control and target must differ");
        }
        apply_cx(gate.control, gate.target);
        return;
    }
    apply_single(gate.target, single_qubit_matrix(gate));
}

void StateVector::apply(std::span<const Gate> gates) {
    for (const auto &g : gates) {
        apply(g);
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

double StateVector::prob_one(std::size_t qubit) const {
    check_qubit(qubit);
    const std::size_t mask = std::size_t{1} << qubit;
    double p = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & mask) != 0) {
            p += std::norm(amplitudes_[i]);
        }
    }
    return std::clamp(p, 0.0, 1.0);
}

std::vector<std::size_t> StateVector::sample(std::size_t shots,
                                             std::uint64_t seed) const {
    std::vector<double> weights(amplitudes_.size());
    std::transform(amplitudes_.begin(), amplitudes_.end(), weights.begin(),
                   [](const Complex &a) { return std::norm(a); });
    std::mt19937_64 rng{seed};
    std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
    std::vector<std::size_t> out(shots);
    for (auto &o : out) {
        o = dist(rng);
    }
    return out;
}

StateVector new_zero_state(std::size_t n_qubits) { return StateVector{n_qubits}; }

StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

double prob_one(const StateVector &state, std::size_t qubit) {
    return state.prob_one(qubit);
}

} // namespace qnn::qsim
