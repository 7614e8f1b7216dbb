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

#ifndef DRBENCH_COMPILATION_H
#define DRBENCH_COMPILATION_H

#include <cstdint>
#include <vector>

#include "drbench/bits.h"
#include "drbench/circuit.h"
#include "drbench/clifford.h"
#include "drbench/device.h"
#include "drbench/stabilizer.h"

namespace drbench {

enum class CostMetric { CnotCount, Depth };

struct CompileOptions {
    /// Randomized qubit-ordering trials; the cheapest result wins.
    int trials = 10;
    /// Only use declared CNOT orientations (reverse edges via H conjugation,
    /// distant pairs via a CNOT cascade along a shortest path).
    bool respect_connectivity = true;
    /// Trial 0 eliminates qubits in nondecreasing eccentricity order instead
    /// of index order.
    bool heuristic = true;
    CostMetric cost = CostMetric::CnotCount;
    /// Seed for the randomized trials.
    uint64_t seed = 0;

    void validate() const;
};

struct CompileStats {
    size_t cnots = 0;
    size_t gates = 0;
    size_t depth = 0;
};

CompileStats compute_stats(const Circuit &circuit);

/// Running totals over many compiled objects.
struct CompileSummary {
    size_t count = 0;
    size_t cnots = 0;
    size_t gates = 0;
    size_t depth = 0;

    void add(const CompileStats &s);
    /// Mean CNOTs per compiled object (alpha), 0 when empty.
    double mean_cnots() const;
    double mean_gates() const;
    double mean_depth() const;
};

/// CNOT-only circuit whose action x -> m x on Pauli x-parts equals m.
/// Throws std::invalid_argument when m is singular or a needed path is missing.
Circuit compile_cnot_circuit(const BitMatrix &m, const DeviceSpec &device, const CompileOptions &opts = {});

/// Native-gate circuit equal to c up to global phase.
Circuit compile_clifford(const CliffordOp &c, const DeviceSpec &device, const CompileOptions &opts = {});

/// Circuit of the form one-qubit layer, CNOT circuit, one-qubit layer with
/// circuit |0...0> = state up to global phase.
Circuit compile_stabilizer_prep(const StabilizerState &state, const DeviceSpec &device,
                                const CompileOptions &opts = {});

struct MeasurementCompilation {
    Circuit circuit;
    BitVector target;
};

/// Circuit V and bitstring s with V |state> = |s> up to global phase.
MeasurementCompilation compile_stabilizer_meas(const StabilizerState &state, const DeviceSpec &device,
                                               const CompileOptions &opts = {});

/// Builds layers from a time-ordered gate list: CNOTs are lowered onto the
/// device when requested, runs of one-qubit gates on a qubit are merged and
/// re-expressed in the device gate set, and gates are packed as early as
/// possible. All layers get `stage`.
Circuit emit_circuit(const std::vector<Gate> &gates, const DeviceSpec &device, bool respect_connectivity,
                     Stage stage = Stage::Core);

}  // namespace drbench

#endif
