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

#include <gtest/gtest.h>

#include "dense_oracle.h"
#include "drbench/circuit.h"
#include "drbench/random.h"
#include "drbench/sampling.h"
#include "drbench/stabilizer.h"

using namespace drbench;

namespace {

Circuit random_circuit(int n, int gates, Rng &rng) {
    Circuit c;
    c.n = n;
    for (int k = 0; k < gates; k++) {
        Layer layer;
        if (n >= 2 && rng.coin()) {
            int a = static_cast<int>(rng.uniform(n));
            int b = static_cast<int>(rng.uniform(n - 1));
            layer.gates.push_back(Gate::cnot(a, b + (b >= a)));
        } else {
            layer.gates.push_back(Gate::one_qubit(static_cast<int>(rng.uniform(24)), static_cast<int>(rng.uniform(n))));
        }
        c.layers.push_back(layer);
    }
    return c;
}

}  // namespace

TEST(StabilizerState, GeneratorsStabilizeDenseState) {
    Rng rng(5);
    for (int n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 30; trial++) {
            Circuit circ = random_circuit(n, 15, rng);
            dense::Vec zero = dense::Vec::Zero(1 << n);
            zero(0) = 1;
            dense::Vec psi = dense::circuit_unitary(circ) * zero;
            StabilizerState st = StabilizerState::from_clifford(circuit_clifford(circ));
            ASSERT_EQ(st.generators().size(), static_cast<size_t>(n));
            for (const auto &g : st.generators()) {
                EXPECT_LT((dense::pauli(g) * psi - psi).norm(), 1e-9) << g.str();
            }
        }
    }
}

TEST(StabilizerState, CanonicalFormIsUnique) {
    Rng rng(6);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng.uniform(6);
        StabilizerState s = sample_stabilizer_state_uniform(n, rng);
        // Re-derive the same state from a scrambled generator list.
        std::vector<PauliOp> gens = s.generators();
        for (size_t k = 0; k < 3 * n; k++) {
            size_t a = rng.uniform(n), b = rng.uniform(n);
            if (a != b) {
                gens[a] = gens[a] * gens[b];
            }
        }
        rng.shuffle(gens);
        EXPECT_EQ(StabilizerState(gens), s);
    }
}

TEST(StabilizerState, PreparingCliffordRoundTrip) {
    Rng rng(7);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng.uniform(8);
        StabilizerState s = sample_stabilizer_state_uniform(n, rng);
        CliffordOp c = clifford_preparing(s);
        ASSERT_TRUE(c.is_valid());
        EXPECT_EQ(StabilizerState::from_clifford(c), s);
        EXPECT_EQ(apply_clifford(c, StabilizerState::zero(n)), s);
        EXPECT_EQ(apply_clifford(invert(c), s), StabilizerState::zero(n));
    }
}

TEST(StabilizerState, BasisStatesAndSigns) {
    BitVector bits = BitVector::from_string("1011");
    StabilizerState s = StabilizerState::basis(bits);
    ASSERT_TRUE(s.basis_bits().has_value());
    EXPECT_EQ(*s.basis_bits(), bits);
    EXPECT_EQ(s.stabilizer_sign(PauliOp::from_str("ZIII")), -1);
    EXPECT_EQ(s.stabilizer_sign(PauliOp::from_str("IZII")), 1);
    EXPECT_EQ(s.stabilizer_sign(PauliOp::from_str("ZZII")), -1);
    EXPECT_FALSE(s.stabilizer_sign(PauliOp::from_str("XIII")).has_value());
    EXPECT_TRUE(is_eigenstate(s, PauliOp::from_str("ZIZZ")));
    EXPECT_FALSE(is_eigenstate(s, PauliOp::from_str("YIZZ")));
    StabilizerState plus({PauliOp::from_str("XI"), PauliOp::from_str("IZ")});
    EXPECT_FALSE(plus.basis_bits().has_value());
}

TEST(StabilizerState, RejectsInvalidGenerators) {
    EXPECT_THROW(StabilizerState({PauliOp::from_str("XI"), PauliOp::from_str("ZI")}), std::invalid_argument);
    EXPECT_THROW(StabilizerState({PauliOp::from_str("ZI"), PauliOp::from_str("ZI")}), std::invalid_argument);
    EXPECT_THROW(StabilizerState({PauliOp::from_str("iZI"), PauliOp::from_str("IZ")}), std::invalid_argument);
    EXPECT_THROW(StabilizerState({PauliOp::from_str("ZI")}), std::invalid_argument);
}
