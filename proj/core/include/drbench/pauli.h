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

#ifndef DRBENCH_PAULI_H
#define DRBENCH_PAULI_H

#include <cstdint>
#include <string>

#include "drbench/bits.h"

namespace drbench {

struct OneQubitClifford;

/// An n-qubit Pauli operator i^phase * X^x * Z^z.
///
/// The X factors are written to the left of the Z factors, so the Hermitian
/// single-qubit Y is stored as x=1, z=1, phase=1. Phase is kept mod 4.
struct PauliOp {
    BitVector x;
    BitVector z;
    uint8_t phase = 0;

    PauliOp() = default;
    explicit PauliOp(size_t n) : x(n), z(n) {}
    PauliOp(BitVector xs, BitVector zs, uint8_t phase_exp);

    static PauliOp identity(size_t n) { return PauliOp(n); }
    /// Parses "+XYZ_I", "-ZZ", "iX" and so on. '_' and 'I' both mean identity.
    static PauliOp from_str(const std::string &text);
    /// Hermitian single-qubit Pauli: kind is 0=I, 1=X, 2=Y, 3=Z.
    static PauliOp single(size_t n, size_t qubit, int kind);

    size_t num_qubits() const { return x.size(); }
    /// Number of qubits acted on non-trivially.
    size_t weight() const;
    /// True when every tensor factor is the identity (any phase allowed).
    bool is_identity() const { return x.none() && z.none(); }
    /// 0=I, 1=X, 2=Y, 3=Z on the given qubit.
    int kind_at(size_t qubit) const { return (x.get(qubit) ? 1 : 0) + (z.get(qubit) ? (x.get(qubit) ? 1 : 3) : 0); }

    bool commutes(const PauliOp &other) const;
    /// Phase of the operator once every Y factor is written as the Hermitian Y.
    /// A Hermitian Pauli has sign_exponent() in {0, 2}.
    uint8_t sign_exponent() const;
    bool is_hermitian() const { return (sign_exponent() & 1) == 0; }

    /// Operator product this * other.
    PauliOp operator*(const PauliOp &other) const;
    /// In-place right multiplication: *this = *this * other.
    PauliOp &operator*=(const PauliOp &other);

    /// Conjugates by a single-qubit Clifford acting on `qubit`.
    void conjugate_1q(size_t qubit, const OneQubitClifford &gate);
    /// Conjugates by CNOT(control -> target). Phase-free in this representation.
    void conjugate_cnot(size_t control, size_t target);

    bool equal_up_to_phase(const PauliOp &other) const { return x == other.x && z == other.z; }
    bool operator==(const PauliOp &other) const = default;

    std::string str() const;
};

}  // namespace drbench

#endif
