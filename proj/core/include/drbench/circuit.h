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

#ifndef DRBENCH_CIRCUIT_H
#define DRBENCH_CIRCUIT_H

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "drbench/bits.h"
#include "drbench/clifford.h"
#include "drbench/device.h"

namespace drbench {

/// One gate application. `clifford` caches the table index for one-qubit
/// gates (-1 for CNOT).
struct Gate {
    std::string name;
    std::vector<int> qubits;
    int clifford = -1;

    static Gate one_qubit(const std::string &name, int qubit);
    static Gate one_qubit(int table_index, int qubit);
    static Gate cnot(int control, int target);
    bool is_cnot() const { return clifford < 0; }

    bool operator==(const Gate &other) const = default;
};

enum class Stage { Prep, Core, Meas };

std::string to_string(Stage s);
Stage stage_from_string(const std::string &text);

/// A set of gates acting on disjoint qubits.
struct Layer {
    std::vector<Gate> gates;
    Stage stage = Stage::Core;

    bool operator==(const Layer &other) const = default;
};

/// A layered circuit plus the metadata carried in its text header.
struct Circuit {
    int n = 0;
    int m = 0;
    BitVector target;
    uint64_t seed = 0;
    std::string id;
    std::vector<Layer> layers;

    size_t cnot_count() const;
    size_t depth() const { return layers.size(); }
    size_t stage_depth(Stage s) const;

    bool operator==(const Circuit &other) const = default;
};

/// Overall operation of a layer on n qubits.
CliffordOp layer_clifford(const Layer &layer, size_t n);
/// Overall operation of the circuit (layers applied in order).
CliffordOp circuit_clifford(const Circuit &circuit);

/// Throws std::invalid_argument if a gate uses undeclared qubits, overlaps
/// within a layer, is not in the device gate set, or applies CNOT along an
/// absent edge.
void check_against_device(const Circuit &circuit, const DeviceSpec &device);

/// Text format: '#'-prefixed header lines (n, m, target, seed, id) followed
/// by one line per layer, "NAME q[,q]; NAME q; ...". A "# stage=..." line
/// sets the stage for the layers that follow it. An idle layer is written "-".
void write_circuit(std::ostream &out, const Circuit &circuit);
std::string circuit_to_text(const Circuit &circuit);
Circuit read_circuit(std::istream &in);
Circuit circuit_from_text(const std::string &text);

}  // namespace drbench

#endif
