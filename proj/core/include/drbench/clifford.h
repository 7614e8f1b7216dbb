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

#ifndef DRBENCH_CLIFFORD_H
#define DRBENCH_CLIFFORD_H

#include <cstdint>
#include <string>
#include <vector>

#include "drbench/bits.h"
#include "drbench/pauli.h"

namespace drbench {

/// An n-qubit Clifford operation, modulo global phase, in the symplectic
/// representation (s, v).
///
/// Basis Paulis are ordered X_0..X_{n-1}, Z_0..Z_{n-1}. Column k of the
/// 2n x 2n matrix s holds the (x | z) bits of C P_k C^dag and v[k] is its
/// phase exponent in the i^v X^x Z^z form, so C P_k C^dag = i^{v_k} X^{s_x} Z^{s_z}.
/// A pair (s, v) is valid iff s is symplectic and v_k = |x_k & z_k| mod 2.
///
/// Storage keeps the x and z halves of every image as packed rows, so
/// conjugation is a sequence of word-level xors.
class CliffordOp {
   public:
    CliffordOp() = default;
    explicit CliffordOp(size_t n);  // identity

    static CliffordOp identity(size_t n) { return CliffordOp(n); }
    /// Builds from (s, v); throws std::invalid_argument when the pair is invalid.
    static CliffordOp from_symplectic(const BitMatrix &s, const std::vector<uint8_t> &v);
    /// Builds from the 2n conjugated basis Paulis (phases included).
    static CliffordOp from_images(const std::vector<PauliOp> &images);
    /// Phase vector validity predicate for a given symplectic s.
    static bool is_valid_phase_vector(const BitMatrix &s, const std::vector<uint8_t> &v);

    size_t num_qubits() const { return n_; }
    /// The symplectic matrix s (column k = image of basis Pauli k).
    BitMatrix s() const;
    const std::vector<uint8_t> &v() const { return v_; }
    /// Image of basis Pauli k as a PauliOp.
    PauliOp image(size_t k) const;

    bool is_symplectic() const;
    bool is_valid() const;
    /// True iff the operation is the identity up to global phase.
    bool is_identity() const;

    /// Left-multiplies by a one-qubit gate: *this = g o *this.
    void prepend_1q(size_t qubit, const OneQubitClifford &gate);
    /// Left-multiplies by CNOT(control -> target).
    void prepend_cnot(size_t control, size_t target);

    /// Equality of the (s, v) pair, i.e. equality as operations modulo
    /// global phase.
    bool operator==(const CliffordOp &other) const {
        return n_ == other.n_ && img_x_ == other.img_x_ && img_z_ == other.img_z_ && v_ == other.v_;
    }

    std::string str() const;

   private:
    size_t n_ = 0;
    BitMatrix img_x_;         // 2n rows of n bits
    BitMatrix img_z_;         // 2n rows of n bits
    std::vector<uint8_t> v_;  // phase exponents, mod 4

    friend PauliOp conjugate_pauli(const CliffordOp &c, const PauliOp &p);
};

/// c p c^dag, including the phase.
PauliOp conjugate_pauli(const CliffordOp &c, const PauliOp &p);
/// The operation "b then a", i.e. a o b.
CliffordOp compose(const CliffordOp &a, const CliffordOp &b);
CliffordOp invert(const CliffordOp &c);
/// Equality modulo global phase. Identical to operator== since (s, v) does
/// not carry a global phase; kept as a named predicate for call sites that
/// want to be explicit about it.
inline bool equal_up_to_global_phase(const CliffordOp &a, const CliffordOp &b) { return a == b; }

}  // namespace drbench

#endif
