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

#ifndef DRBENCH_STABILIZER_H
#define DRBENCH_STABILIZER_H

#include <optional>
#include <string>
#include <vector>

#include "drbench/clifford.h"
#include "drbench/pauli.h"

namespace drbench {

/// An n-qubit stabilizer state given by n independent, commuting, Hermitian
/// generators. Constructors and operations return states in canonical form
/// (reduced row echelon over the (x | z) columns, signs tracked), so two
/// states are equal iff their generator lists are equal.
class StabilizerState {
   public:
    StabilizerState() = default;
    /// Throws std::invalid_argument if the generators are not a valid state.
    explicit StabilizerState(std::vector<PauliOp> generators);

    /// |0...0>
    static StabilizerState zero(size_t n);
    /// |bits>
    static StabilizerState basis(const BitVector &bits);
    /// c |0...0>
    static StabilizerState from_clifford(const CliffordOp &c);

    size_t num_qubits() const { return n_; }
    const std::vector<PauliOp> &generators() const { return gens_; }
    bool canonical() const { return true; }

    /// If the state is a computational basis state, its bitstring.
    std::optional<BitVector> basis_bits() const;
    /// +1 / -1 when +-p is in the stabilizer group, nullopt otherwise.
    std::optional<int> stabilizer_sign(const PauliOp &p) const;

    bool operator==(const StabilizerState &other) const = default;
    std::string str() const;

   private:
    size_t n_ = 0;
    std::vector<PauliOp> gens_;

    void canonicalize();
};

/// True iff p, up to phase, lies in the stabilizer group of the state, i.e.
/// the state is an eigenstate of p.
bool is_eigenstate(const StabilizerState &state, const PauliOp &p);

/// Tableau of c |psi>.
StabilizerState apply_clifford(const CliffordOp &c, const StabilizerState &state);

/// Completes a state to a Clifford C with C|0...0> = state. The returned
/// operation maps Z_j to the j-th canonical generator.
CliffordOp clifford_preparing(const StabilizerState &state);

}  // namespace drbench

#endif
