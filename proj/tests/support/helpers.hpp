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
// Test-only generators and reference formulas.
#pragma once

#include "qnn/qsim.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qnn::testing {

inline qsim::Gate random_gate(std::mt19937_64 &rng, std::size_t n_qubits,
                              bool allow_cx = true) {
    std::uniform_real_distribution<double> angle{-2 * std::numbers::pi,
                                                 2 * std::numbers::pi};
    std::uniform_int_distribution<std::size_t> qubit{0, n_qubits - 1};
    std::uniform_int_distribution<int> kind{0, (allow_cx && n_qubits > 1) ? 3 : 2};
    const std::size_t q = qubit(rng);
    switch (kind(rng)) {
    case 0:
        return qsim::Gate::ry(q, angle(rng));
    case 1:
        return qsim::Gate::rz(q, angle(rng));
    case 2:
        return qsim::Gate::u3(q, angle(rng), angle(rng), angle(rng));
    default: {
        std::size_t t = qubit(rng);
        while (t == q) {
            t = qubit(rng);
        }
        return qsim::Gate::cx(q, t);
    }
    }
}

inline std::vector<qsim::Gate> random_circuit(std::mt19937_64 &rng,
                                              std::size_t n_qubits,
                                              std::size_t max_gates) {
    std::uniform_int_distribution<std::size_t> len{1, max_gates};
    std::vector<qsim::Gate> gates(len(rng));
    for (auto &g : gates) {
        g = random_gate(rng, n_qubits);
    }
    return gates;
}

inline qsim::StateVector random_state(std::mt19937_64 &rng, std::size_t n_qubits) {
    std::normal_distribution<double> gauss;
    std::vector<qsim::Complex> amps(std::size_t{1} << n_qubits);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {gauss(rng), gauss(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return qsim::StateVector::from_amplitudes(std::move(amps));
}

inline double max_deviation(const qsim::StateVector &a, const qsim::StateVector &b) {
    double worst = 0.0;
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        worst = std::max(worst, std::abs(x[i] - y[i]));
    }
    return worst;
}

/// Single-qubit network RY(0) RY(theta), read out on the same qubit:
/// loss for label 1 is -ln(sin^2(theta/2)), derivative -cot(theta/2).
inline double one_qubit_label1_loss(double theta) {
    const double s = std::sin(theta / 2);
    return -std::log(s * s);
}
inline double one_qubit_label1_dloss(double theta) { return -1.0 / std::tan(theta / 2); }

inline std::filesystem::path scratch_dir(const std::string &name) {
    const auto dir = std::filesystem::path{QNN_TEST_TMP} / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string slurp(const std::filesystem::path &path) {
    std::ifstream in{path, std::ios::binary};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::vector<std::string>> read_csv(const std::filesystem::path &path) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in{path};
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss{line};
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') {
            cells.emplace_back();
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

inline std::string wdbc_path() { return std::string{QNN_DATA_DIR} + "/wdbc.data"; }

} // namespace qnn::testing
