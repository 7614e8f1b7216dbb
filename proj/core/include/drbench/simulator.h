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

#ifndef DRBENCH_SIMULATOR_H
#define DRBENCH_SIMULATOR_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "drbench/bits.h"
#include "drbench/circuit.h"
#include "drbench/error_model.h"
#include "drbench/pauli.h"
#include "drbench/random.h"

namespace drbench {

constexpr size_t kHistogramCap = 64;

struct SimulationResult {
    uint64_t shots = 0;
    uint64_t successes = 0;
    /// Most frequent outcomes, by count then bitstring, at most kHistogramCap.
    std::vector<std::pair<BitVector, uint64_t>> histogram;
};

/// Monte Carlo over Pauli frames: after each gate its error is drawn and the
/// running frame is pushed through the remaining gates. The measured bits
/// are target xor the frame's X part, then readout flips are applied.
SimulationResult simulate_circuit(const Circuit &circuit, const ErrorModel &model, uint64_t shots, Rng &rng,
                                  bool keep_histogram = true);

/// A Pauli inserted right after gate `gate` of layer `layer`.
struct InjectedError {
    size_t layer = 0;
    size_t gate = 0;
    PauliOp error;
};

/// Outcome of the circuit with the given errors and no other noise.
BitVector propagate_outcome(const Circuit &circuit, const std::vector<InjectedError> &errors);

struct DatasetRow {
    std::string id;
    int m = 0;
    BitVector target;
    uint64_t shots = 0;
    uint64_t successes = 0;
    std::vector<std::pair<BitVector, uint64_t>> histogram;

    double success_probability() const { return shots ? static_cast<double>(successes) / shots : 0.0; }
    bool operator==(const DatasetRow &other) const = default;
};

struct Provenance {
    std::string design_hash;
    std::string model_hash;
    uint64_t seed = 0;

    bool operator==(const Provenance &other) const = default;
};

struct Dataset {
    std::vector<DatasetRow> rows;
    Provenance provenance;

    bool operator==(const Dataset &other) const = default;
};

/// One row per circuit, in input order. Circuit c uses the seed
/// derive_seed(master_seed, c.id); the result is independent of `threads`.
Dataset run_experiment(const std::vector<Circuit> &circuits, const ErrorModel &model, uint64_t shots,
                       uint64_t master_seed, int threads = 1, bool keep_histogram = true);

}  // namespace drbench

#endif
