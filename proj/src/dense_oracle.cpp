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

#include <stdexcept>
#include <string>

namespace qnn::qsim {

namespace {

// Dense square matrix, row-major.
struct Dense {
    std::size_t dim{0};
    std::vector<Complex> data;

    explicit Dense(std::size_t d) : dim{d}, data(d * d, Complex{0.0}) {}

    static Dense identity(std::size_t d) {
        Dense m{d};
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static Dense from2(const Matrix2 &m) {
        Dense d{2};
        d.data.assign(m.begin(), m.end());
        return d;
    }

    Complex &operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data[r * dim + c];
    }
};

Dense kron(const Dense &a, const Dense &b) {
    Dense out{a.dim * b.dim};
    for (std::size_t ar = 0; ar < a.dim; ++ar) {
        for (std::size_t ac = 0; ac < a.dim; ++ac) {
            for (std::size_t br = 0; br < b.dim; ++br) {
                for (std::size_t bc = 0; bc < b.dim; ++bc) {
                    out(ar * b.dim + br, ac * b.dim + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

Dense add(const Dense &a, const Dense &b) {
    Dense out{a.dim};
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        out.data[i] = a.data[i] + b.data[i];
    }
    return out;
}

// Kronecker product over all qubits, highest index leftmost so that qubit 0
// ends up as the least-significant bit of the row/column index.
Dense expand(std::size_t n_qubits, const std::vector<Dense> &per_qubit) {
    Dense out = per_qubit[n_qubits - 1];
    for (std::size_t q = n_qubits - 1; q-- > 0;) {
        out = kron(out, per_qubit[q]);
    }
    return out;
}

Dense full_matrix(std::size_t n_qubits, const Gate &gate) {
    const Dense id2 = Dense::identity(2);
    if (gate.kind != GateKind::CX) {
        std::vector<Dense> factors(n_qubits, id2);
        factors[gate.target] = Dense::from2(single_qubit_matrix(gate));
        return expand(n_qubits, factors);
    }
    // CX = |0><0|_c (x) I + |1><1|_c (x) X_t
    Dense p0{2};
    p0(0, 0) = 1.0;
    Dense p1{2};
    p1(1, 1) = 1.0;
    Dense x{2};
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;

    std::vector<Dense> idle(n_qubits, id2);
    idle[gate.control] = p0;
    std::vector<Dense> flip(n_qubits, id2);
    flip[gate.control] = p1;
    flip[gate.target] = x;
    return add(expand(n_qubits, idle), expand(n_qubits, flip));
}

std::vector<Complex> matvec(const Dense &m, const std::vector<Complex> &v) {
    std::vector<Complex> out(m.dim, Complex{0.0});
    for (std::size_t r = 0; r < m.dim; ++r) {
        for (std::size_t c = 0; c < m.dim; ++c) {
            out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

} // namespace

StateVector dense_oracle(std::size_t n_qubits, std::span<const Gate> gates) {
    if (n_qubits < 1 || n_qubits > kMaxOracleQubits) {
        throw std::invalid_argument("dense oracle supports 1.." +
                                    std::to_string(kMaxOracleQubits) +
                                    " qubits, got " + std::to_string(n_qubits));
    }
    std::vector<Complex> psi(std::size_t{1} << n_qubits, Complex{0.0});
    psi[0] = 1.0;
    for (const auto &g : gates) {
        if (g.max_qubit() >= n_qubits) {
            throw std::out_of_range("gate " + to_string(g) + " exceeds " +
                                    std::to_string(n_qubits) + "-qubit register");
        }
        if (g.kind == GateKind::CX && g.control == g.target) {
            throw std::invalid_argument("CX control and target must differ");
        }
        psi = matvec(full_matrix(n_qubits, g), psi);
    }
    return StateVector::from_amplitudes(std::move(psi));
}

} // namespace qnn::qsim
