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

#include "drbench/simulator.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "drbench/gates.h"

namespace drbench {

namespace {

struct Term {
    PauliTerm::Kind kind;
    std::vector<int> qubits;
    double p;
    std::vector<int> fixed;  // per qubit: 0=I, 1=X, 2=Y, 3=Z
};

struct Op {
    bool cnot = false;
    int a = 0;
    int b = 0;
    int clifford = -1;
    std::vector<Term> terms;
    bool depolarize = false;  // uniform n-qubit Pauli after the op, probability model.core_depolarization()
};

int kind_of(char c) { return c == 'X' ? 1 : (c == 'Y' ? 2 : (c == 'Z' ? 3 : 0)); }

std::vector<Op> plan(const Circuit &circuit, const ErrorModel &model) {
    model.check_covers(circuit);
    std::vector<Op> ops;
    for (const auto &layer : circuit.layers) {
        for (const auto &g : layer.gates) {
            Op op;
            op.cnot = g.is_cnot();
            op.a = g.qubits[0];
            op.b = op.cnot ? g.qubits[1] : -1;
            op.clifford = g.clifford;
            for (const auto &t : model.channel_for(g)->terms) {
                if (t.p <= 0) {
                    continue;
                }
                Term term{t.kind, t.qubits.empty() ? g.qubits : t.qubits, t.p, {}};
                if (t.kind == PauliTerm::Kind::Fixed) {
                    if (t.pauli.size() != term.qubits.size()) {
                        throw std::invalid_argument("fixed error has the wrong length for gate " + g.name);
                    }
                    for (char c : t.pauli) {
                        term.fixed.push_back(kind_of(c));
                    }
                }
                op.terms.push_back(std::move(term));
            }
            ops.push_back(std::move(op));
        }
        if (layer.stage == Stage::Core && model.core_depolarization() > 0 && !ops.empty()) {
            ops.back().depolarize = true;
        }
    }
    return ops;
}

struct Frame {
    BitVector x;
    BitVector z;

    void apply_kind(int q, int kind) {
        if (kind == 1 || kind == 2) {
            x.flip(q);
        }
        if (kind == 2 || kind == 3) {
            z.flip(q);
        }
    }

    void conjugate(const Op &op) {
        if (op.cnot) {
            if (x.get(op.a)) {
                x.flip(op.b);
            }
            if (z.get(op.b)) {
                z.flip(op.a);
            }
            return;
        }
        bool a = x.get(op.a);
        bool b = z.get(op.a);
        uint8_t ph = 0;
        conjugate_1q_bits(one_qubit_cliffords()[op.clifford], a, b, ph);
        x.set(op.a, a);
        z.set(op.a, b);
    }
};

void draw_errors(const Op &op, Frame &f, Rng &rng) {
    for (const auto &t : op.terms) {
        switch (t.kind) {
            case PauliTerm::Kind::PerQubit:
                for (int q : t.qubits) {
                    if (rng.uniform01() < t.p) {
                        f.apply_kind(q, 1 + static_cast<int>(rng.uniform(3)));
                    }
                }
                break;
            case PauliTerm::Kind::Joint:
                if (rng.uniform01() < t.p) {
                    uint64_t dim = uint64_t{1} << (2 * t.qubits.size());
                    uint64_t idx = 1 + rng.uniform(dim - 1);
                    for (size_t i = 0; i < t.qubits.size(); i++) {
                        int code = static_cast<int>((idx >> (2 * i)) & 3);
                        f.apply_kind(t.qubits[i], code);
                    }
                }
                break;
            case PauliTerm::Kind::Fixed:
                if (rng.uniform01() < t.p) {
                    for (size_t i = 0; i < t.qubits.size(); i++) {
                        f.apply_kind(t.qubits[i], t.fixed[i]);
                    }
                }
                break;
        }
    }
}

}  // namespace

SimulationResult simulate_circuit(const Circuit &circuit, const ErrorModel &model, uint64_t shots, Rng &rng,
                                  bool keep_histogram) {
    if (static_cast<int>(circuit.target.size()) != circuit.n) {
        throw std::invalid_argument("circuit target length does not match n");
    }
    std::vector<Op> ops = plan(circuit, model);
    const int n = circuit.n;
    const double depol = model.core_depolarization();
    SimulationResult result;
    result.shots = shots;
    std::map<BitVector, uint64_t> counts;
    Frame f{BitVector(n), BitVector(n)};
    for (uint64_t s = 0; s < shots; s++) {
        f.x.clear();
        f.z.clear();
        for (const auto &op : ops) {
            f.conjugate(op);
            draw_errors(op, f, rng);
            if (op.depolarize && rng.uniform01() < depol) {
                for (int q = 0; q < n; q++) {
                    f.apply_kind(q, static_cast<int>(rng.uniform(4)));
                }
            }
        }
        BitVector outcome = circuit.target ^ f.x;
        for (int q = 0; q < n; q++) {
            double r = model.readout()[q];
            if (r > 0 && rng.uniform01() < r) {
                outcome.flip(q);
            }
        }
        result.successes += outcome == circuit.target;
        if (keep_histogram) {
            counts[outcome]++;
        }
    }
    if (keep_histogram) {
        std::vector<std::pair<BitVector, uint64_t>> all(counts.begin(), counts.end());
        std::stable_sort(all.begin(), all.end(), [](const auto &a, const auto &b) { return a.second > b.second; });
        if (all.size() > kHistogramCap) {
            all.resize(kHistogramCap);
        }
        result.histogram = std::move(all);
    }
    return result;
}

BitVector propagate_outcome(const Circuit &circuit, const std::vector<InjectedError> &errors) {
    Frame f{BitVector(circuit.n), BitVector(circuit.n)};
    for (size_t l = 0; l < circuit.layers.size(); l++) {
        const auto &layer = circuit.layers[l];
        for (size_t k = 0; k < layer.gates.size(); k++) {
            const Gate &g = layer.gates[k];
            Op op;
            op.cnot = g.is_cnot();
            op.a = g.qubits[0];
            op.b = op.cnot ? g.qubits[1] : -1;
            op.clifford = g.clifford;
            f.conjugate(op);
            for (const auto &e : errors) {
                if (e.layer == l && e.gate == k) {
                    f.x ^= e.error.x;
                    f.z ^= e.error.z;
                }
            }
        }
    }
    return circuit.target ^ f.x;
}

Dataset run_experiment(const std::vector<Circuit> &circuits, const ErrorModel &model, uint64_t shots,
                       uint64_t master_seed, int threads, bool keep_histogram) {
    model.validate();
    Dataset data;
    data.rows.resize(circuits.size());
    data.provenance.seed = master_seed;
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr failure;
    auto worker = [&] {
        while (!failed) {
            size_t i = next++;
            if (i >= circuits.size()) {
                return;
            }
            try {
                const Circuit &c = circuits[i];
                Rng rng(derive_seed(master_seed, c.id));
                SimulationResult r = simulate_circuit(c, model, shots, rng, keep_histogram);
                data.rows[i] = DatasetRow{c.id, c.m, c.target, r.shots, r.successes, std::move(r.histogram)};
            } catch (...) {
                if (!failed.exchange(true)) {
                    failure = std::current_exception();
                }
                return;
            }
        }
    };
    int workers = std::max(1, std::min<int>(threads, static_cast<int>(circuits.size())));
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
    return data;
}

}  // namespace drbench
