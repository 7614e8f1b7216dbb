// Copyright 2026 The drbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense-matrix reference implementations used as independent oracles in tests.
// Everything here works on explicit 2^n x 2^n complex matrices and only
// makes sense for very small n.

#ifndef DRBENCH_TESTS_DENSE_ORACLE_H
#define DRBENCH_TESTS_DENSE_ORACLE_H

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "drbench/circuit.h"
#include "drbench/pauli.h"

namespace dense {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cd = std::complex<double>;

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); i++) {
        for (int j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Mat pauli_1q(char c) {
    Mat m(2, 2);
    switch (c) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m = Mat::Identity(2, 2);
    }
    return m;
}

inline Mat h_gate() {
    Mat m(2, 2);
    double s = 1 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

inline Mat p_gate() {
    Mat m(2, 2);
    m << 1, 0, 0, cd(0, 1);
    return m;
}

/// Qubit q is bit q of the basis index (little endian).
inline Mat on_qubit(const Mat &g, int q, int n) {
    Mat out = Mat::Identity(1, 1);
    for (int k = n - 1; k >= 0; k--) {
        out = kron(out, k == q ? g : Mat::Identity(2, 2));
    }
    return out;
}

inline Mat cnot(int c, int t, int n) {
    int dim = 1 << n;
    Mat m = Mat::Zero(dim, dim);
    for (int b = 0; b < dim; b++) {
        int out = ((b >> c) & 1) ? b ^ (1 << t) : b;
        m(out, b) = 1;
    }
    return m;
}

/// Explicit matrix of i^phase X^x Z^z.
inline Mat pauli(const drbench::PauliOp &p) {
    int n = static_cast<int>(p.num_qubits());
    Mat xs = Mat::Identity(1 << n, 1 << n);
    Mat zs = Mat::Identity(1 << n, 1 << n);
    for (int q = 0; q < n; q++) {
        if (p.x.get(q)) {
            xs = on_qubit(pauli_1q('X'), q, n) * xs;
        }
        if (p.z.get(q)) {
            zs = on_qubit(pauli_1q('Z'), q, n) * zs;
        }
    }
    static const cd ipow[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    return ipow[p.phase & 3] * xs * zs;
}

/// Unitary of a one-qubit gate built from its shortest H/P word.
inline Mat one_qubit_unitary(const std::vector<char> &word) {
    Mat u = Mat::Identity(2, 2);
    for (char c : word) {
        u = (c == 'H' ? h_gate() : p_gate()) * u;
    }
    return u;
}

inline Mat gate_unitary(const drbench::Gate &g, int n);

/// Unitary of a circuit, up to global phase.
inline Mat circuit_unitary(const drbench::Circuit &c);

/// True if a == e^{i theta} b for some theta.
inline bool equal_up_to_phase(const Mat &a, const Mat &b, double tol = 1e-9) {
    int r = 0, col = 0;
    a.cwiseAbs().maxCoeff(&r, &col);
    if (std::abs(b(r, col)) < tol) {
        return false;
    }
    cd phase = a(r, col) / b(r, col);
    return (a - phase * b).norm() < tol * a.rows();
}

}  // namespace dense

#include "drbench/gates.h"

namespace dense {

inline Mat gate_unitary(const drbench::Gate &g, int n) {
    if (g.is_cnot()) {
        return cnot(g.qubits[0], g.qubits[1], n);
    }
    return on_qubit(one_qubit_unitary(drbench::one_qubit_word(g.clifford)), g.qubits[0], n);
}

inline Mat circuit_unitary(const drbench::Circuit &c) {
    Mat u = Mat::Identity(1 << c.n, 1 << c.n);
    for (const auto &layer : c.layers) {
        for (const auto &g : layer.gates) {
            u = gate_unitary(g, c.n) * u;
        }
    }
    return u;
}

}  // namespace dense

#endif
