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

#include "drbench/pauli.h"

#include <stdexcept>

#include "drbench/gates.h"

namespace drbench {

PauliOp::PauliOp(BitVector xs, BitVector zs, uint8_t phase_exp) : x(std::move(xs)), z(std::move(zs)), phase(phase_exp & 3) {
    if (x.size() != z.size()) {
        throw std::invalid_argument("PauliOp x/z size mismatch");
    }
}

PauliOp PauliOp::from_str(const std::string &text) {
    size_t k = 0;
    uint8_t sign = 0;
    if (k < text.size() && text[k] == '+') {
        k++;
    } else if (k < text.size() && text[k] == '-') {
        sign = 2;
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        sign += 1;
        k++;
    }
    size_t n = text.size() - k;
    PauliOp out(n);
    uint8_t ys = 0;
    for (size_t q = 0; q < n; q++) {
        switch (text[k + q]) {
            case '_':
            case 'I':
                break;
            case 'X':
                out.x.set(q, true);
                break;
            case 'Y':
                out.x.set(q, true);
                out.z.set(q, true);
                ys++;
                break;
            case 'Z':
                out.z.set(q, true);
                break;
            default:
                throw std::invalid_argument("bad Pauli character in '" + text + "'");
        }
    }
    out.phase = (sign + ys) & 3;
    return out;
}

PauliOp PauliOp::single(size_t n, size_t qubit, int kind) {
    PauliOp out(n);
    if (kind == 1 || kind == 2) {
        out.x.set(qubit, true);
    }
    if (kind == 2 || kind == 3) {
        out.z.set(qubit, true);
    }
    out.phase = kind == 2 ? 1 : 0;
    return out;
}

size_t PauliOp::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < x.num_words(); k++) {
        w += std::popcount(x.data()[k] | z.data()[k]);
    }
    return w;
}

bool PauliOp::commutes(const PauliOp &other) const { return x.dot(other.z) == z.dot(other.x); }

uint8_t PauliOp::sign_exponent() const { return (phase - static_cast<uint8_t>((x & z).popcount() & 3)) & 3; }

PauliOp PauliOp::operator*(const PauliOp &other) const {
    PauliOp out = *this;
    out *= other;
    return out;
}

PauliOp &PauliOp::operator*=(const PauliOp &other) {
    if (num_qubits() != other.num_qubits()) {
        throw std::invalid_argument("PauliOp product dimension mismatch");
    }
    // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}
    uint8_t swap_sign = z.dot(other.x) ? 2 : 0;
    phase = (phase + other.phase + swap_sign) & 3;
    x ^= other.x;
    z ^= other.z;
    return *this;
}

void PauliOp::conjugate_1q(size_t qubit, const OneQubitClifford &gate) {
    bool a = x.get(qubit);
    bool b = z.get(qubit);
    conjugate_1q_bits(gate, a, b, phase);
    x.set(qubit, a);
    z.set(qubit, b);
}

void PauliOp::conjugate_cnot(size_t control, size_t target) {
    if (x.get(control)) {
        x.flip(target);
    }
    if (z.get(target)) {
        z.flip(control);
    }
}

std::string PauliOp::str() const {
    static const char *signs[] = {"+", "i", "-", "-i"};
    std::string out = signs[sign_exponent()];
    for (size_t q = 0; q < num_qubits(); q++) {
        out += "_XYZ"[kind_at(q)];
    }
    return out;
}

}  // namespace drbench
