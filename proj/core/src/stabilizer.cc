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

#include "drbench/stabilizer.h"

#include <stdexcept>

namespace drbench {

namespace {

bool column_bit(const PauliOp &p, size_t col, size_t n) { return col < n ? p.x.get(col) : p.z.get(col - n); }

/// Row-reduces in place; returns the rank. Rows are multiplied as Paulis.
size_t row_reduce(std::vector<PauliOp> &rows, size_t n) {
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < rows.size(); col++) {
        size_t pivot = rank;
        while (pivot < rows.size() && !column_bit(rows[pivot], col, n)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && column_bit(rows[r], col, n)) {
                rows[r] *= rows[rank];
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace

StabilizerState::StabilizerState(std::vector<PauliOp> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) {
        throw std::invalid_argument("a stabilizer state needs at least one generator");
    }
    n_ = gens_[0].num_qubits();
    if (gens_.size() != n_) {
        throw std::invalid_argument("a stabilizer state needs exactly n generators");
    }
    for (size_t a = 0; a < n_; a++) {
        if (gens_[a].num_qubits() != n_) {
            throw std::invalid_argument("generator dimension mismatch");
        }
        if (!gens_[a].is_hermitian()) {
            throw std::invalid_argument("generator " + gens_[a].str() + " is not Hermitian");
        }
        for (size_t b = 0; b < a; b++) {
            if (!gens_[a].commutes(gens_[b])) {
                throw std::invalid_argument("generators do not commute");
            }
        }
    }
    canonicalize();
}

void StabilizerState::canonicalize() {
    if (row_reduce(gens_, n_) != n_) {
        throw std::invalid_argument("generators are not independent");
    }
    for (const auto &g : gens_) {
        if (g.sign_exponent() != 0 && g.sign_exponent() != 2) {
            throw std::logic_error("non-Hermitian generator after reduction");
        }
        if (g.is_identity()) {
            throw std::invalid_argument("-I in stabilizer group");
        }
    }
}

StabilizerState StabilizerState::zero(size_t n) { return basis(BitVector(n)); }

StabilizerState StabilizerState::basis(const BitVector &bits) {
    size_t n = bits.size();
    std::vector<PauliOp> gens;
    for (size_t q = 0; q < n; q++) {
        PauliOp z = PauliOp::single(n, q, 3);
        if (bits.get(q)) {
            z.phase = 2;
        }
        gens.push_back(std::move(z));
    }
    return StabilizerState(std::move(gens));
}

StabilizerState StabilizerState::from_clifford(const CliffordOp &c) {
    size_t n = c.num_qubits();
    std::vector<PauliOp> gens;
    for (size_t q = 0; q < n; q++) {
        gens.push_back(c.image(n + q));
    }
    return StabilizerState(std::move(gens));
}

std::optional<BitVector> StabilizerState::basis_bits() const {
    // The canonical form of a basis state is exactly +-Z_0, ..., +-Z_{n-1}.
    BitVector bits(n_);
    for (size_t q = 0; q < n_; q++) {
        const PauliOp &g = gens_[q];
        if (g.x.any() || g.z.popcount() != 1 || !g.z.get(q)) {
            return std::nullopt;
        }
        bits.set(q, g.sign_exponent() == 2);
    }
    return bits;
}

std::optional<int> StabilizerState::stabilizer_sign(const PauliOp &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("stabilizer_sign dimension mismatch");
    }
    for (const auto &g : gens_) {
        if (!g.commutes(p)) {
            return std::nullopt;
        }
    }
    // Express p as a product of canonical generators by walking pivots.
    PauliOp acc(n_);
    PauliOp rest = p;
    rest.phase = 0;
    for (const auto &g : gens_) {
        size_t pivot = 0;
        while (!column_bit(g, pivot, n_)) {
            pivot++;
        }
        if (column_bit(rest, pivot, n_)) {
            rest *= g;
            acc *= g;
        }
    }
    if (!rest.is_identity()) {
        throw std::logic_error("commuting Pauli not in the stabilizer group");
    }
    // acc equals p up to phase; compare Hermitian signs.
    uint8_t diff = (acc.sign_exponent() - p.sign_exponent()) & 3;
    if (diff == 0) {
        return 1;
    }
    if (diff == 2) {
        return -1;
    }
    return std::nullopt;
}

std::string StabilizerState::str() const {
    std::string out;
    for (const auto &g : gens_) {
        out += g.str();
        out += '\n';
    }
    return out;
}

bool is_eigenstate(const StabilizerState &state, const PauliOp &p) {
    if (p.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("is_eigenstate dimension mismatch");
    }
    // The stabilizer group is maximal abelian: commuting with every generator
    // means membership up to phase.
    for (const auto &g : state.generators()) {
        if (!g.commutes(p)) {
            return false;
        }
    }
    return true;
}

StabilizerState apply_clifford(const CliffordOp &c, const StabilizerState &state) {
    if (c.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("apply_clifford dimension mismatch");
    }
    std::vector<PauliOp> gens;
    gens.reserve(state.num_qubits());
    for (const auto &g : state.generators()) {
        gens.push_back(conjugate_pauli(c, g));
    }
    return StabilizerState(std::move(gens));
}

CliffordOp clifford_preparing(const StabilizerState &state) {
    size_t n = state.num_qubits();
    const auto &gens = state.generators();
    // Solve <d_j, g_k> = delta_jk. The symplectic product with g_k is the dot
    // product with g_k's halves swapped, so row-reduce [swapped(g) | I].
    std::vector<BitVector> rows(n, BitVector(2 * n + n));
    for (size_t k = 0; k < n; k++) {
        for (size_t q = 0; q < n; q++) {
            rows[k].set(q, gens[k].z.get(q));
            rows[k].set(n + q, gens[k].x.get(q));
        }
        rows[k].set(2 * n + k, true);
    }
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < n; col++) {
        size_t p = rank;
        while (p < n && !rows[p].get(col)) {
            p++;
        }
        if (p == n) {
            continue;
        }
        std::swap(rows[rank], rows[p]);
        for (size_t r = 0; r < n; r++) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
            }
        }
        pivots.push_back(col);
        rank++;
    }
    std::vector<PauliOp> destab;
    for (size_t j = 0; j < n; j++) {
        // Particular solution: set pivot variables from the augmented column j.
        PauliOp d(n);
        for (size_t r = 0; r < n; r++) {
            if (rows[r].get(2 * n + j)) {
                size_t col = pivots[r];
                if (col < n) {
                    d.x.set(col, true);
                } else {
                    d.z.set(col - n, true);
                }
            }
        }
        d.phase = static_cast<uint8_t>((d.x & d.z).popcount() & 3);
        for (size_t k = 0; k < j; k++) {
            if (!d.commutes(destab[k])) {
                d *= gens[k];
            }
        }
        destab.push_back(std::move(d));
    }
    std::vector<PauliOp> images = destab;
    for (const auto &g : gens) {
        images.push_back(g);
    }
    return CliffordOp::from_images(images);
}

}  // namespace drbench
