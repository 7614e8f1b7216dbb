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

#include <set>

#include "dense_oracle.h"
#include "drbench/circuit.h"
#include "drbench/clifford.h"
#include "drbench/gates.h"
#include "drbench/random.h"

using namespace drbench;

namespace {

Circuit random_circuit(int n, int gates, Rng &rng) {
    Circuit c;
    c.n = n;
    for (int k = 0; k < gates; k++) {
        Layer layer;
        if (n >= 2 && rng.uniform(3) == 0) {
            int a = static_cast<int>(rng.uniform(n));
            int b = static_cast<int>(rng.uniform(n - 1));
            b += b >= a;
            layer.gates.push_back(Gate::cnot(a, b));
        } else {
            layer.gates.push_back(Gate::one_qubit(static_cast<int>(rng.uniform(24)), static_cast<int>(rng.uniform(n))));
        }
        c.layers.push_back(layer);
    }
    return c;
}

PauliOp random_pauli(int n, Rng &rng) {
    PauliOp p(n);
    for (int q = 0; q < n; q++) {
        p.x.set(q, rng.coin());
        p.z.set(q, rng.coin());
    }
    p.phase = static_cast<uint8_t>(rng.uniform(4));
    return p;
}

// Checks U P U^dag == conjugate_pauli(C, P) exactly, phases included.
void expect_conjugation_matches(const CliffordOp &c, const dense::Mat &u, const PauliOp &p) {
    PauliOp img = conjugate_pauli(c, p);
    dense::Mat want = u * dense::pauli(p) * u.adjoint();
    EXPECT_LT((dense::pauli(img) - want).norm(), 1e-9) << "P=" << p.str() << " image=" << img.str();
}

}  // namespace

TEST(OneQubitTable, WordsMatchTableEntries) {
    for (int k = 0; k < kNumOneQubitCliffords; k++) {
        CliffordOp c = standard_gate(one_qubit_name(k), {0}, 1);
        dense::Mat u = dense::one_qubit_unitary(one_qubit_word(k));
        expect_conjugation_matches(c, u, PauliOp::from_str("X"));
        expect_conjugation_matches(c, u, PauliOp::from_str("Z"));
        expect_conjugation_matches(c, u, PauliOp::from_str("Y"));
    }
}

TEST(OneQubitTable, NamedGatesAndGroupStructure) {
    const auto &t = one_qubit_cliffords();
    EXPECT_EQ(t[c1::identity()], (OneQubitClifford{{{1, 0}, {0, 1}}, {0, 0}}));
    EXPECT_EQ(t[c1::h()], (OneQubitClifford{{{0, 1}, {1, 0}}, {0, 0}}));
    EXPECT_EQ(t[c1::p()], (OneQubitClifford{{{1, 0}, {1, 1}}, {1, 0}}));
    EXPECT_EQ(t[c1::x()], (OneQubitClifford{{{1, 0}, {0, 1}}, {0, 2}}));
    EXPECT_EQ(t[c1::y()], (OneQubitClifford{{{1, 0}, {0, 1}}, {2, 2}}));
    EXPECT_EQ(t[c1::z()], (OneQubitClifford{{{1, 0}, {0, 1}}, {2, 0}}));
    std::set<std::vector<char>> words;
    for (int a = 0; a < kNumOneQubitCliffords; a++) {
        EXPECT_EQ(one_qubit_compose(a, one_qubit_inverse(a)), c1::identity());
        words.insert(one_qubit_word(a));
        for (int b = 0; b < kNumOneQubitCliffords; b++) {
            dense::Mat ua = dense::one_qubit_unitary(one_qubit_word(a));
            dense::Mat ub = dense::one_qubit_unitary(one_qubit_word(b));
            dense::Mat uc = dense::one_qubit_unitary(one_qubit_word(one_qubit_compose(a, b)));
            EXPECT_TRUE(dense::equal_up_to_phase(ua * ub, uc));
        }
    }
    EXPECT_EQ(words.size(), 24u);
    EXPECT_TRUE(one_qubit_word(c1::identity()).empty());
}

TEST(CliffordOp, ConjugationMatchesDenseUnitary) {
    Rng rng(101);
    for (int n = 1; n <= 2; n++) {
        for (int trial = 0; trial < 40; trial++) {
            Circuit circ = random_circuit(n, 12, rng);
            CliffordOp c = circuit_clifford(circ);
            ASSERT_TRUE(c.is_valid());
            dense::Mat u = dense::circuit_unitary(circ);
            for (int k = 0; k < 2 * n; k++) {
                PauliOp basis(n);
                if (k < n) {
                    basis.x.set(k, true);
                } else {
                    basis.z.set(k - n, true);
                }
                expect_conjugation_matches(c, u, basis);
            }
            for (int r = 0; r < 5; r++) {
                expect_conjugation_matches(c, u, random_pauli(n, rng));
            }
        }
    }
}

TEST(CliffordOp, ComposeAndInvertMatchDense) {
    Rng rng(202);
    for (int n = 1; n <= 2; n++) {
        for (int trial = 0; trial < 30; trial++) {
            Circuit ca = random_circuit(n, 10, rng);
            Circuit cb = random_circuit(n, 10, rng);
            CliffordOp a = circuit_clifford(ca);
            CliffordOp b = circuit_clifford(cb);
            dense::Mat ab = dense::circuit_unitary(ca) * dense::circuit_unitary(cb);
            CliffordOp c = compose(a, b);
            for (int r = 0; r < 6; r++) {
                expect_conjugation_matches(c, ab, random_pauli(n, rng));
            }
            CliffordOp ia = invert(a);
            dense::Mat uia = dense::circuit_unitary(ca).adjoint();
            for (int r = 0; r < 6; r++) {
                expect_conjugation_matches(ia, uia, random_pauli(n, rng));
            }
            EXPECT_TRUE(compose(a, ia).is_identity());
            EXPECT_TRUE(compose(ia, a).is_identity());
        }
    }
}

TEST(CliffordOp, LargerCompositionProperties) {
    Rng rng(303);
    for (int n : {3, 5, 9, 70}) {
        Circuit ca = random_circuit(n, 200, rng);
        Circuit cb = random_circuit(n, 200, rng);
        Circuit cc = random_circuit(n, 200, rng);
        CliffordOp a = circuit_clifford(ca), b = circuit_clifford(cb), c = circuit_clifford(cc);
        EXPECT_TRUE(a.is_valid());
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        EXPECT_TRUE(compose(a, invert(a)).is_identity());
        EXPECT_EQ(invert(invert(a)), a);
        // Conjugation is a homomorphism on products.
        PauliOp p = random_pauli(n, rng), q = random_pauli(n, rng);
        EXPECT_EQ(conjugate_pauli(a, p * q), conjugate_pauli(a, p) * conjugate_pauli(a, q));
        EXPECT_EQ(conjugate_pauli(compose(a, b), p), conjugate_pauli(a, conjugate_pauli(b, p)));
        // Round trip through (s, v).
        EXPECT_EQ(CliffordOp::from_symplectic(a.s(), a.v()), a);
    }
}

TEST(CliffordOp, ValidityCountsByEnumeration) {
    // n = 1: 16 binary 2x2 matrices, 16 phase vectors each.
    int symplectic = 0;
    int valid_pairs = 0;
    for (int bits = 0; bits < 16; bits++) {
        BitMatrix s(2, 2);
        for (int k = 0; k < 4; k++) {
            s.set(k / 2, k % 2, (bits >> k) & 1);
        }
        bool symp = (s.transposed() * BitMatrix::symplectic_form(1) * s) == BitMatrix::symplectic_form(1);
        symplectic += symp;
        int valid_here = 0;
        for (int v0 = 0; v0 < 4; v0++) {
            for (int v1 = 0; v1 < 4; v1++) {
                bool ok = symp && CliffordOp::is_valid_phase_vector(s, {uint8_t(v0), uint8_t(v1)});
                valid_here += ok;
            }
        }
        if (symp) {
            // A quarter of all phase vectors are valid for each symplectic s.
            EXPECT_EQ(valid_here, 4);
        }
        valid_pairs += valid_here;
    }
    EXPECT_EQ(symplectic, 6);
    EXPECT_EQ(valid_pairs, 24);

    // n = 2: the symplectic group has 720 elements.
    int count2 = 0;
    BitMatrix omega = BitMatrix::symplectic_form(2);
    for (int bits = 0; bits < (1 << 16); bits++) {
        BitMatrix s(4, 4);
        for (int k = 0; k < 16; k++) {
            s.set(k / 4, k % 4, (bits >> k) & 1);
        }
        count2 += (s.transposed() * omega * s) == omega;
    }
    EXPECT_EQ(count2, 720);
}

TEST(CliffordOp, RejectsInvalidInput) {
    BitMatrix s = BitMatrix::identity(2);
    EXPECT_THROW(CliffordOp::from_symplectic(s, {1, 0}), std::invalid_argument);
    BitMatrix bad(2, 2);
    bad.set(0, 0, true);
    EXPECT_THROW(CliffordOp::from_symplectic(bad, {0, 0}), std::invalid_argument);
    EXPECT_THROW(standard_gate("CNOT", {0, 0}, 2), std::invalid_argument);
    EXPECT_THROW(standard_gate("FOO", {0}, 2), std::invalid_argument);
    EXPECT_THROW(standard_gate("H", {3}, 2), std::invalid_argument);
}
