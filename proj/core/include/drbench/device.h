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

#ifndef DRBENCH_DEVICE_H
#define DRBENCH_DEVICE_H

#include <string>
#include <utility>
#include <vector>

namespace drbench {

/// Native one-qubit gate vocabulary of a device. Both include CNOT.
enum class GateSet {
    HPI,  ///< {I, H, P}
    C24,  ///< all 24 one-qubit Cliffords C00..C23 (H, P, I accepted as aliases)
};

std::string to_string(GateSet g);
GateSet gate_set_from_string(const std::string &name);

using Edge = std::pair<int, int>;  ///< (control, target)

/// Qubit count, names, available CNOT orientations, and gate set.
struct DeviceSpec {
    int n = 0;
    std::vector<std::string> qubit_names;
    std::vector<Edge> edges;
    GateSet gate_set = GateSet::HPI;

    static DeviceSpec all_to_all(int n, GateSet gates = GateSet::HPI);
    /// Directed ring 0->1->...->n-1->0.
    static DeviceSpec ring(int n, GateSet gates = GateSet::HPI);
    /// Directed line 0->1->...->n-1.
    static DeviceSpec line(int n, GateSet gates = GateSet::HPI);
    /// Outer ring 0->1->2->3->0 with centre qubit 4 controlling every ring qubit.
    static DeviceSpec ring_with_center5(GateSet gates = GateSet::HPI);

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    bool has_edge(int control, int target) const;
    bool connected() const;
    /// Undirected shortest path from a to b (inclusive); empty if unreachable.
    std::vector<int> shortest_path(int a, int b) const;
    /// Undirected hop distance matrix; -1 for unreachable pairs.
    std::vector<std::vector<int>> distances() const;
    /// Qubits sorted by nondecreasing eccentricity, ties by index.
    std::vector<int> eccentricity_order() const;
    /// True if the named gate is part of this device's gate set.
    bool declares(const std::string &gate_name) const;

    bool operator==(const DeviceSpec &other) const = default;
};

}  // namespace drbench

#endif
