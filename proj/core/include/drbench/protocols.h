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

#ifndef DRBENCH_PROTOCOLS_H
#define DRBENCH_PROTOCOLS_H

#include <cstdint>
#include <string>
#include <vector>

#include "drbench/circuit.h"
#include "drbench/compilation.h"
#include "drbench/device.h"
#include "drbench/random.h"
#include "drbench/sampling.h"

namespace drbench {

enum class Protocol { DRB, CRB };

std::string to_string(Protocol p);
Protocol protocol_from_string(const std::string &name);

struct ExperimentDesign {
    Protocol protocol = Protocol::DRB;
    DeviceSpec device;
    SamplerSpec sampler;  ///< DRB only
    std::vector<int> lengths = {0, 5, 10, 15, 20, 25, 30};
    int circuits_per_length = 28;
    int shots = 1024;
    uint64_t seed = 0;
    /// DRB only: follow every core layer with a uniformly random Pauli layer.
    bool frame_randomization = false;
    /// With frame randomization, emit the Pauli layers as gates instead of
    /// folding the frame into the measurement stage.
    bool emit_frame_physically = false;
    CompileOptions compile;

    /// Throws std::invalid_argument on inconsistent fields.
    void validate() const;
};

/// Seed of circuit `index` at length `m`.
uint64_t circuit_seed(uint64_t master, int m, int index);
std::string circuit_id(int m, int index);

/// A DRB circuit: prep, m core layers (plus Pauli layers when emitted), meas.
/// Throws std::logic_error if the noiseless circuit does not map |0...0> to |target>.
Circuit generate_drb_circuit(const ExperimentDesign &design, int m, Rng &rng,
                             CompileSummary *prep_meas_stats = nullptr);

/// A CRB circuit: m uniform Cliffords and their inverse, each compiled.
Circuit generate_crb_circuit(const ExperimentDesign &design, int m, Rng &rng,
                             CompileSummary *clifford_stats = nullptr);

struct Experiment {
    ExperimentDesign design;
    /// Ordered by length, then index.
    std::vector<Circuit> circuits;
    /// CRB: per compiled Clifford. DRB: per compiled prep or meas stage.
    CompileSummary compile_stats;
};

/// All k_m circuits per length. Work is spread over `threads` workers; the
/// result does not depend on the thread count.
Experiment generate_experiment(const ExperimentDesign &design, int threads = 1);

/// Throws std::logic_error unless circuit |0...0> = |target> noiselessly.
void verify_composition(const Circuit &circuit);

}  // namespace drbench

#endif
