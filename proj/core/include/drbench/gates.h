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

#ifndef DRBENCH_GATES_H
#define DRBENCH_GATES_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drbench/clifford.h"

namespace drbench {

/// A one-qubit Clifford as a 2x2 symplectic matrix plus phase pair, using the
/// same conventions as CliffordOp: column 0 is the image of X, column 1 the
/// image of Z, s[0][*] are x bits and s[1][*] are z bits.
struct OneQubitClifford {
    uint8_t s[2][2];
    uint8_t v[2];

    bool operator==(const OneQubitClifford &other) const = default;
};

/// Conjugates the single-qubit factor X^a Z^b (with running phase exponent)
/// by `gate`, in place.
inline void conjugate_1q_bits(const OneQubitClifford &gate, bool &a, bool &b, uint8_t &phase) {
    if (!a && !b) {
        return;
    }
    // U X^a Z^b U^dag = (i^{v0} X^{s00} Z^{s10})^a (i^{v1} X^{s01} Z^{s11})^b
    uint8_t ph = 0;
    bool nx = false;
    bool nz = false;
    if (a) {
        ph += gate.v[0];
        nx ^= gate.s[0][0];
        nz ^= gate.s[1][0];
    }
    if (b) {
        ph += gate.v[1];
        if (a && gate.s[1][0] && gate.s[0][1]) {
            ph += 2;
        }
        nx ^= gate.s[0][1];
        nz ^= gate.s[1][1];
    }
    phase = (phase + ph) & 3;
    a = nx;
    b = nz;
}

constexpr int kNumOneQubitCliffords = 24;

/// The 24 one-qubit Cliffords in canonical order: lexicographic over
/// (s00, s01, s10, s11, v0, v1). Gate "Ckk" is entry kk of this table.
const std::array<OneQubitClifford, kNumOneQubitCliffords> &one_qubit_cliffords();
int one_qubit_index(const OneQubitClifford &c);
/// Index of "after o before".
int one_qubit_compose(int after, int before);
int one_qubit_inverse(int k);
/// Shortest word over {H, P} implementing entry k, in time order.
const std::vector<char> &one_qubit_word(int k);
/// Canonical gate name "Ckk" for table entry k.
std::string one_qubit_name(int k);

namespace c1 {
int identity();
int h();
int p();
int x();
int y();
int z();
}  // namespace c1

/// Static description of a named gate.
struct GateInfo {
    int arity = 1;
    /// Index into one_qubit_cliffords() for one-qubit gates, -1 for CNOT.
    int clifford = -1;
};

/// Known names: I, H, P, X, Y, Z, C00..C23, CNOT.
std::optional<GateInfo> lookup_gate(std::string_view name);

/// n-qubit CliffordOp for a named gate on the given targets.
/// Throws std::invalid_argument on unknown names, out-of-range or duplicate targets.
CliffordOp standard_gate(std::string_view name, const std::vector<int> &targets, size_t n);

}  // namespace drbench

#endif
