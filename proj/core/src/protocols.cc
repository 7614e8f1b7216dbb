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

#include "drbench/protocols.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "drbench/gates.h"

namespace drbench {

std::string to_string(Protocol p) { return p == Protocol::DRB ? "DRB" : "CRB"; }

Protocol protocol_from_string(const std::string &name) {
    if (name == "DRB" || name == "drb") {
        return Protocol::DRB;
    }
    if (name == "CRB" || name == "crb") {
        return Protocol::CRB;
    }
    throw std::invalid_argument("unknown protocol '" + name + "' (expected DRB or CRB)");
}

void ExperimentDesign::validate() const {
    device.validate();
    if (lengths.empty()) {
        throw std::invalid_argument("lengths must not be empty");
    }
    for (size_t k = 0; k < lengths.size(); k++) {
        if (lengths[k] < 0) {
            throw std::invalid_argument("lengths must be nonnegative");
        }
        if (k > 0 && lengths[k] <= lengths[k - 1]) {
            throw std::invalid_argument("lengths must be strictly increasing");
        }
    }
    if (circuits_per_length < 1) {
        throw std::invalid_argument("circuits_per_length must be >= 1");
    }
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    compile.validate();
    if (protocol == Protocol::DRB) {
        sampler.validate(device);
    } else if (frame_randomization) {
        throw std::invalid_argument("frame_randomization applies to DRB only");
    }
}

uint64_t circuit_seed(uint64_t master, int m, int index) {
    return derive_seed(derive_seed(master, static_cast<uint64_t>(m)), static_cast<uint64_t>(index));
}

std::string circuit_id(int m, int index) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "m%d-%04d", m, index);
    return buf;
}

void verify_composition(const Circuit &circuit) {
    StabilizerState out = apply_clifford(circuit_clifford(circuit), StabilizerState::zero(circuit.n));
    if (!(out == StabilizerState::basis(circuit.target))) {
        throw std::logic_error("circuit " + circuit.id + " does not map |0...0> to its target");
    }
}

namespace {

void append_layers(Circuit &dst, const Circuit &src, Stage stage) {
    for (auto layer : src.layers) {
        layer.stage = stage;
        dst.layers.push_back(std::move(layer));
    }
}

StabilizerState apply_pauli(const StabilizerState &state, const PauliOp &q) {
    std::vector<PauliOp> gens = state.generators();
    for (auto &g : gens) {
        if (!g.commutes(q)) {
            g.phase = (g.phase + 2) & 3;
        }
    }
    return StabilizerState(gens);
}

}  // namespace

Circuit generate_drb_circuit(const ExperimentDesign &design, int m, Rng &rng, CompileSummary *prep_meas_stats) {
    const DeviceSpec &device = design.device;
    const int n = device.n;
    CompileOptions copts = design.compile;
    copts.seed = rng.next();

    Circuit out;
    out.n = n;
    out.m = m;
    StabilizerState psi = sample_stabilizer_state_uniform(n, rng);
    Circuit prep = compile_stabilizer_prep(psi, device, copts);
    append_layers(out, prep, Stage::Prep);

    // Heisenberg-tracked frame that was sampled but not emitted.
    PauliOp folded(n);
    bool fold = design.frame_randomization && !design.emit_frame_physically;
    for (int l = 0; l < m; l++) {
        Layer layer = sample_layer(design.sampler, device, rng);
        for (const auto &g : layer.gates) {
            if (g.is_cnot()) {
                folded.conjugate_cnot(g.qubits[0], g.qubits[1]);
            } else {
                folded.conjugate_1q(g.qubits[0], one_qubit_cliffords()[g.clifford]);
            }
        }
        out.layers.push_back(std::move(layer));
        if (!design.frame_randomization) {
            continue;
        }
        std::vector<Gate> paulis;
        PauliOp p(n);
        for (int q = 0; q < n; q++) {
            int kind = static_cast<int>(rng.uniform(4));
            if (kind == 0) {
                continue;
            }
            p = p * PauliOp::single(n, q, kind);
            int idx = kind == 1 ? c1::x() : (kind == 2 ? c1::y() : c1::z());
            paulis.push_back(Gate::one_qubit(idx, q));
        }
        if (fold) {
            folded = p * folded;
        } else if (!paulis.empty()) {
            append_layers(out, emit_circuit(paulis, device, copts.respect_connectivity), Stage::Core);
        }
    }

    StabilizerState actual = apply_clifford(circuit_clifford(out), StabilizerState::zero(n));
    MeasurementCompilation meas;
    if (fold) {
        // Measure as if the frame had been applied, then undo its effect on
        // the expected outcome: V Q^dag maps the actual state to |s xor x(V Q V^dag)>.
        meas = compile_stabilizer_meas(apply_pauli(actual, folded), device, copts);
        PauliOp pushed = conjugate_pauli(circuit_clifford(meas.circuit), folded);
        meas.target ^= pushed.x;
    } else {
        meas = compile_stabilizer_meas(actual, device, copts);
    }
    append_layers(out, meas.circuit, Stage::Meas);
    out.target = meas.target;
    if (prep_meas_stats) {
        prep_meas_stats->add(compute_stats(prep));
        prep_meas_stats->add(compute_stats(meas.circuit));
    }
    verify_composition(out);
    return out;
}

Circuit generate_crb_circuit(const ExperimentDesign &design, int m, Rng &rng, CompileSummary *clifford_stats) {
    const DeviceSpec &device = design.device;
    const int n = device.n;
    CompileOptions copts = design.compile;
    Circuit out;
    out.n = n;
    out.m = m;
    out.target = BitVector(n);
    CliffordOp total(n);
    auto add = [&](const CliffordOp &c) {
        copts.seed = rng.next();
        Circuit compiled = compile_clifford(c, device, copts);
        if (clifford_stats) {
            clifford_stats->add(compute_stats(compiled));
        }
        append_layers(out, compiled, Stage::Core);
    };
    for (int k = 0; k < m; k++) {
        CliffordOp c = sample_clifford_uniform(n, rng);
        total = compose(c, total);
        add(c);
    }
    add(invert(total));
    verify_composition(out);
    return out;
}

Experiment generate_experiment(const ExperimentDesign &design, int threads) {
    design.validate();
    struct Task {
        int m;
        int index;
    };
    std::vector<Task> tasks;
    for (int m : design.lengths) {
        for (int i = 0; i < design.circuits_per_length; i++) {
            tasks.push_back({m, i});
        }
    }
    Experiment exp;
    exp.design = design;
    exp.circuits.resize(tasks.size());
    std::vector<CompileSummary> stats(tasks.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        while (!failed) {
            size_t t = next++;
            if (t >= tasks.size()) {
                return;
            }
            try {
                uint64_t seed = circuit_seed(design.seed, tasks[t].m, tasks[t].index);
                Rng rng(seed);
                Circuit c = design.protocol == Protocol::DRB ? generate_drb_circuit(design, tasks[t].m, rng, &stats[t])
                                                             : generate_crb_circuit(design, tasks[t].m, rng, &stats[t]);
                c.seed = seed;
                c.id = circuit_id(tasks[t].m, tasks[t].index);
                exp.circuits[t] = std::move(c);
            } catch (...) {
                if (!failed.exchange(true)) {
                    failure = std::current_exception();
                }
                return;
            }
        }
    };
    int workers = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; w++) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    for (const auto &s : stats) {
        exp.compile_stats.count += s.count;
        exp.compile_stats.cnots += s.cnots;
        exp.compile_stats.gates += s.gates;
        exp.compile_stats.depth += s.depth;
    }
    return exp;
}

}  // namespace drbench
