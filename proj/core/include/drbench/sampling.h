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

#ifndef DRBENCH_SAMPLING_H
#define DRBENCH_SAMPLING_H

#include <cstdint>
#include <string>
#include <vector>

#include "drbench/bits.h"
#include "drbench/circuit.h"
#include "drbench/clifford.h"
#include "drbench/device.h"
#include "drbench/random.h"
#include "drbench/stabilizer.h"

namespace drbench {

/// Uniformly random element of Sp(2n, 2) (column k = image of basis Pauli k).
BitMatrix sample_symplectic_uniform(size_t n, Rng &rng);
/// Uniformly random Clifford modulo global phase.
CliffordOp sample_clifford_uniform(size_t n, Rng &rng);
/// Uniformly random stabilizer state, C|0...0> for a uniform Clifford C.
StabilizerState sample_stabilizer_state_uniform(size_t n, Rng &rng);

enum class SamplerType { PCnot, CategoryV, Pairing };

/// Layer-sampling distribution.
///
/// PCnot: with probability p_cnot one uniformly chosen device CNOT, every
/// other qubit gets a uniform pool gate.
/// CategoryV: category k is drawn with probability v[k]; a category with no
/// edges is an all-one-qubit layer, otherwise one of its CNOTs is chosen
/// uniformly and the other qubits get pool gates.
/// Pairing: qubits are paired by a uniformly random permutation
/// (pi0 -> pi1, pi2 -> pi3, ...); each pair independently gets a CNOT with
/// probability p_cnot; all other qubits, including the odd one out, get pool
/// gates. Requires every ordered pair to be a device edge.
struct SamplerSpec {
    SamplerType type = SamplerType::PCnot;
    double p_cnot = 0.0;
    std::vector<double> v;
    std::vector<std::vector<Edge>> categories;
    GateSet pool = GateSet::HPI;

    static SamplerSpec pcnot(double p, GateSet pool = GateSet::HPI);
    static SamplerSpec pairing(double p, GateSet pool = GateSet::HPI);
    static SamplerSpec category(std::vector<double> v, std::vector<std::vector<Edge>> categories,
                                GateSet pool = GateSet::HPI);

    /// Throws std::invalid_argument if inconsistent with itself or the device.
    void validate(const DeviceSpec &device) const;

    bool operator==(const SamplerSpec &other) const = default;
};

std::string to_string(SamplerType t);
SamplerType sampler_type_from_string(const std::string &name);

/// Table indices of the one-qubit gates in a pool.
const std::vector<int> &pool_gates(GateSet pool);
/// Gate name used in layers: "I", "H", "P" for HPI, "Ckk" for C24.
std::string pool_gate_name(GateSet pool, int index);

/// One core layer. Every qubit is covered: CNOT pairs first, then one-qubit
/// gates in qubit order (identities included).
Layer sample_layer(const SamplerSpec &spec, const DeviceSpec &device, Rng &rng);

/// Exact probability of `layer` under `spec` (zero when unreachable).
/// Throws std::invalid_argument when the layer is malformed for the device.
double layer_probability(const SamplerSpec &spec, const DeviceSpec &device, const Layer &layer);

/// Mean number of CNOTs per sampled layer.
double expected_cnots_per_layer(const SamplerSpec &spec, const DeviceSpec &device);

struct SpreadingProfile {
    /// weight_distribution[d][w]: fraction of trials with Pauli weight w after d+1 layers.
    std::vector<std::vector<double>> weight_distribution;
    std::vector<double> mean_weight;
    /// Fraction of independent trial pairs whose propagated Paulis agree up to phase.
    double collision_rate = 0.0;
    size_t trials = 0;
};

/// Propagates random weight-1 Paulis through `depth` random layers.
SpreadingProfile estimate_error_spreading(const SamplerSpec &spec, const DeviceSpec &device, size_t trials,
                                          size_t depth, Rng &rng);
/// Same, with uniformly random n-qubit Cliffords as layers.
SpreadingProfile estimate_error_spreading_uniform(size_t n, size_t trials, size_t depth, Rng &rng);

}  // namespace drbench

#endif
