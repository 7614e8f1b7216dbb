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

#ifndef DRBENCH_ERROR_MODEL_H
#define DRBENCH_ERROR_MODEL_H

#include <map>
#include <string>
#include <vector>

#include "drbench/circuit.h"
#include "drbench/device.h"
#include "drbench/pauli.h"

namespace drbench {

/// One stochastic Pauli error source attached to a gate.
struct PauliTerm {
    enum class Kind {
        PerQubit,  ///< each qubit independently: uniform non-identity Pauli with probability p
        Joint,     ///< with probability p, a uniform non-identity Pauli on all qubits jointly
        Fixed,     ///< with probability p, the given Pauli
    };
    Kind kind = Kind::PerQubit;
    /// Absolute qubit indices; empty means the gate's own targets.
    std::vector<int> qubits;
    double p = 0.0;
    /// Fixed only: one of I/X/Y/Z per qubit, same length as the resolved qubits.
    std::string pauli;

    bool operator==(const PauliTerm &other) const = default;
};

std::string to_string(PauliTerm::Kind k);
PauliTerm::Kind pauli_term_kind_from_string(const std::string &name);

struct GateChannel {
    std::vector<PauliTerm> terms;

    bool operator==(const GateChannel &other) const = default;
};

/// Per-gate Pauli channels (errors act after the ideal gate), per-qubit
/// readout bit flips, and an optional uniform n-qubit Pauli applied after
/// every core layer with probability `core_depolarization`.
///
/// Channels are looked up by label, most specific first: "NAME:t0,t1",
/// "NAME", then "1Q:q" / "2Q:c,t", then "1Q" / "2Q".
class ErrorModel {
   public:
    ErrorModel() = default;
    explicit ErrorModel(int n) : n_(n), readout_(n, 0.0) {}

    int num_qubits() const { return n_; }
    std::map<std::string, GateChannel> &channels() { return channels_; }
    const std::map<std::string, GateChannel> &channels() const { return channels_; }
    std::vector<double> &readout() { return readout_; }
    const std::vector<double> &readout() const { return readout_; }
    double core_depolarization() const { return core_depolarization_; }
    void set_core_depolarization(double d) { core_depolarization_ = d; }

    void set_channel(const std::string &label, GateChannel channel) { channels_[label] = std::move(channel); }
    /// nullptr when no label matches.
    const GateChannel *channel_for(const Gate &gate) const;
    /// Throws std::invalid_argument naming the first uncovered gate.
    void check_covers(const Circuit &circuit) const;
    /// Throws std::invalid_argument on out-of-range probabilities or qubits.
    void validate() const;

    /// Probability that the gate's error is not the identity.
    double gate_error_rate(const Gate &gate) const;
    /// Probability that the combined error of a layer (gate channels, plus
    /// core depolarization when `core` is set) is not the identity.
    /// Overlapping supports are convolved exactly.
    double layer_error_rate(const Layer &layer, bool core = false) const;
    /// Same, where each qubit in `random_slots` holds a one-qubit gate drawn
    /// uniformly from `pool_names` (the slot's error channel is the pool average).
    double layer_error_rate_with_pool(const Layer &fixed, const std::vector<int> &random_slots,
                                      const std::vector<std::string> &pool_names, bool core = false) const;

    bool operator==(const ErrorModel &other) const = default;

   private:
    int n_ = 0;
    std::map<std::string, GateChannel> channels_;
    std::vector<double> readout_;
    double core_depolarization_ = 0.0;
};

/// Noiseless model on n qubits covering every gate.
ErrorModel build_model_zero(int n);
/// 0.05% per-qubit error on one-qubit gates, 0.25% on each CNOT qubit, perfect SSPAM.
ErrorModel build_model_main_sim(int n);
/// Five-qubit ring-plus-centre model with CNOT crosstalk and 2% readout flips.
ErrorModel build_model_crosstalk5();
/// Noiseless gates plus a uniform n-qubit Pauli after each core layer with
/// probability 1 - lambda.
ErrorModel build_model_layer_depolarizing(int n, double lambda);

struct CalibrationData {
    std::vector<double> one_qubit;  ///< per qubit
    std::map<Edge, double> cnot;    ///< per directed edge
    std::vector<double> readout;    ///< per qubit
};

/// Crosstalk-free model: every gate is followed by a uniform non-identity
/// Pauli on its qubits with the calibrated probability. Throws
/// std::invalid_argument when a qubit or device edge has no entry.
ErrorModel build_model_from_calibration(const DeviceSpec &device, const CalibrationData &data);

}  // namespace drbench

#endif
