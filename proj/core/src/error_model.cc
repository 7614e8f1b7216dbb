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

#include "drbench/error_model.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace drbench {

std::string to_string(PauliTerm::Kind k) {
    switch (k) {
        case PauliTerm::Kind::PerQubit:
            return "per_qubit";
        case PauliTerm::Kind::Joint:
            return "joint";
        case PauliTerm::Kind::Fixed:
            return "fixed";
    }
    return "per_qubit";
}

PauliTerm::Kind pauli_term_kind_from_string(const std::string &name) {
    if (name == "per_qubit") {
        return PauliTerm::Kind::PerQubit;
    }
    if (name == "joint") {
        return PauliTerm::Kind::Joint;
    }
    if (name == "fixed") {
        return PauliTerm::Kind::Fixed;
    }
    throw std::invalid_argument("unknown error term kind '" + name + "' (expected per_qubit, joint or fixed)");
}

namespace {

std::string join_qubits(const std::vector<int> &qs) {
    std::string out;
    for (size_t k = 0; k < qs.size(); k++) {
        out += (k ? "," : "") + std::to_string(qs[k]);
    }
    return out;
}

}  // namespace

const GateChannel *ErrorModel::channel_for(const Gate &gate) const {
    std::string targets = join_qubits(gate.qubits);
    std::string arity = gate.is_cnot() ? "2Q" : "1Q";
    for (const std::string &label : {gate.name + ":" + targets, gate.name, arity + ":" + targets, arity}) {
        auto it = channels_.find(label);
        if (it != channels_.end()) {
            return &it->second;
        }
    }
    return nullptr;
}

void ErrorModel::check_covers(const Circuit &circuit) const {
    if (circuit.n != n_) {
        throw std::invalid_argument("error model has " + std::to_string(n_) + " qubits but circuit has " +
                                    std::to_string(circuit.n));
    }
    for (const auto &layer : circuit.layers) {
        for (const auto &g : layer.gates) {
            if (!channel_for(g)) {
                throw std::invalid_argument("error model has no channel for gate " + g.name + " " +
                                            join_qubits(g.qubits));
            }
        }
    }
}

void ErrorModel::validate() const {
    auto check_p = [](double p, const std::string &what) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument(what + " must lie in [0, 1]");
        }
    };
    if (static_cast<int>(readout_.size()) != n_) {
        throw std::invalid_argument("error model readout list must have one entry per qubit");
    }
    for (double r : readout_) {
        check_p(r, "readout error");
    }
    check_p(core_depolarization_, "core_layer_depolarization");
    for (const auto &[label, ch] : channels_) {
        for (const auto &t : ch.terms) {
            check_p(t.p, "error probability for '" + label + "'");
            for (int q : t.qubits) {
                if (q < 0 || q >= n_) {
                    throw std::invalid_argument("error term for '" + label + "' references qubit " +
                                                std::to_string(q));
                }
            }
            if (t.kind == PauliTerm::Kind::Fixed) {
                if (t.pauli.find_first_not_of("IXYZ_") != std::string::npos) {
                    throw std::invalid_argument("fixed error for '" + label + "' must be a string over IXYZ");
                }
                if (!t.qubits.empty() && t.pauli.size() != t.qubits.size()) {
                    throw std::invalid_argument("fixed error for '" + label + "' has the wrong length");
                }
            }
        }
    }
}

namespace {

// A Pauli distribution over `support`; index bit i is the x bit of
// support[i], bit k+i its z bit.
struct Source {
    std::vector<int> support;
    std::vector<double> dist;
};

int pauli_index_of(char c) { return c == 'X' ? 1 : (c == 'Y' ? 3 : (c == 'Z' ? 2 : 0)); }

std::vector<Source> term_sources(const PauliTerm &t, const std::vector<int> &targets) {
    const std::vector<int> &qs = t.qubits.empty() ? targets : t.qubits;
    std::vector<Source> out;
    if (t.kind == PauliTerm::Kind::PerQubit) {
        for (int q : qs) {
            out.push_back({{q}, {1 - t.p, t.p / 3, t.p / 3, t.p / 3}});
        }
        return out;
    }
    size_t k = qs.size();
    size_t dim = size_t{1} << (2 * k);
    Source s{qs, std::vector<double>(dim, 0.0)};
    s.dist[0] = 1 - t.p;
    if (t.kind == PauliTerm::Kind::Joint) {
        for (size_t i = 1; i < dim; i++) {
            s.dist[i] = t.p / static_cast<double>(dim - 1);
        }
    } else {
        size_t idx = 0;
        for (size_t i = 0; i < k; i++) {
            int code = pauli_index_of(t.pauli[i]);
            idx |= static_cast<size_t>(code & 1) << i;
            idx |= static_cast<size_t>(code >> 1) << (k + i);
        }
        s.dist[idx] += t.p;
    }
    out.push_back(std::move(s));
    return out;
}

// Convolves sources into one distribution over `group` (sorted qubits).
std::vector<double> convolve(const std::vector<const Source *> &sources, const std::vector<int> &group) {
    size_t g = group.size();
    std::vector<double> dist(size_t{1} << (2 * g), 0.0);
    dist[0] = 1.0;
    for (const Source *s : sources) {
        size_t k = s->support.size();
        std::vector<size_t> embed(s->dist.size(), 0);
        for (size_t idx = 0; idx < s->dist.size(); idx++) {
            size_t e = 0;
            for (size_t i = 0; i < k; i++) {
                size_t pos = std::lower_bound(group.begin(), group.end(), s->support[i]) - group.begin();
                e |= ((idx >> i) & 1) << pos;
                e |= ((idx >> (k + i)) & 1) << (g + pos);
            }
            embed[idx] = e;
        }
        std::vector<double> next(dist.size(), 0.0);
        for (size_t a = 0; a < dist.size(); a++) {
            if (dist[a] == 0.0) {
                continue;
            }
            for (size_t idx = 0; idx < s->dist.size(); idx++) {
                if (s->dist[idx] != 0.0) {
                    next[a ^ embed[idx]] += dist[a] * s->dist[idx];
                }
            }
        }
        dist = std::move(next);
    }
    return dist;
}

Source gate_source(const GateChannel &ch, const std::vector<int> &targets) {
    std::vector<Source> parts;
    for (const auto &t : ch.terms) {
        for (auto &s : term_sources(t, targets)) {
            parts.push_back(std::move(s));
        }
    }
    std::vector<int> support;
    for (const auto &s : parts) {
        support.insert(support.end(), s.support.begin(), s.support.end());
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::vector<const Source *> ptrs;
    for (const auto &s : parts) {
        ptrs.push_back(&s);
    }
    return {support, convolve(ptrs, support)};
}

// Re-expresses a source over a larger sorted support.
Source widen(const Source &s, const std::vector<int> &support) {
    std::vector<const Source *> one = {&s};
    return {support, convolve(one, support)};
}

constexpr size_t kMaxExactGroup = 12;

double identity_probability(const std::vector<Source> &sources, int n) {
    // Union-find over qubits touched by a common source.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (const auto &s : sources) {
        for (size_t i = 1; i < s.support.size(); i++) {
            parent[find(s.support[i])] = find(s.support[0]);
        }
    }
    std::map<int, std::vector<const Source *>> groups;
    for (const auto &s : sources) {
        if (!s.support.empty()) {
            groups[find(s.support[0])].push_back(&s);
        }
    }
    double p_identity = 1.0;
    for (const auto &[root, members] : groups) {
        std::vector<int> qubits;
        for (int q = 0; q < n; q++) {
            if (find(q) == root) {
                qubits.push_back(q);
            }
        }
        if (qubits.size() > kMaxExactGroup) {
            // Too large to convolve; ignore cancellations between sources.
            for (const Source *s : members) {
                p_identity *= s->dist[0];
            }
            continue;
        }
        p_identity *= convolve(members, qubits)[0];
    }
    return p_identity;
}

}  // namespace

double ErrorModel::gate_error_rate(const Gate &gate) const {
    const GateChannel *ch = channel_for(gate);
    if (!ch) {
        throw std::invalid_argument("error model has no channel for gate " + gate.name);
    }
    return 1.0 - gate_source(*ch, gate.qubits).dist[0];
}

double ErrorModel::layer_error_rate_with_pool(const Layer &fixed, const std::vector<int> &random_slots,
                                              const std::vector<std::string> &pool_names, bool core) const {
    std::vector<Source> sources;
    for (const auto &g : fixed.gates) {
        const GateChannel *ch = channel_for(g);
        if (!ch) {
            throw std::invalid_argument("error model has no channel for gate " + g.name + " " +
                                        join_qubits(g.qubits));
        }
        sources.push_back(gate_source(*ch, g.qubits));
    }
    for (int q : random_slots) {
        std::vector<Source> options;
        std::vector<int> support;
        for (const auto &name : pool_names) {
            Gate g = Gate::one_qubit(name, q);
            const GateChannel *ch = channel_for(g);
            if (!ch) {
                throw std::invalid_argument("error model has no channel for gate " + name + " " + std::to_string(q));
            }
            options.push_back(gate_source(*ch, g.qubits));
            support.insert(support.end(), options.back().support.begin(), options.back().support.end());
        }
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        Source avg{support, std::vector<double>(size_t{1} << (2 * support.size()), 0.0)};
        for (const auto &o : options) {
            Source w = widen(o, support);
            for (size_t i = 0; i < w.dist.size(); i++) {
                avg.dist[i] += w.dist[i] / static_cast<double>(options.size());
            }
        }
        sources.push_back(std::move(avg));
    }
    double p_identity = identity_probability(sources, n_);
    if (core && core_depolarization_ > 0) {
        p_identity = (1 - core_depolarization_) * p_identity + core_depolarization_ * std::pow(4.0, -n_);
    }
    return 1.0 - p_identity;
}

double ErrorModel::layer_error_rate(const Layer &layer, bool core) const {
    return layer_error_rate_with_pool(layer, {}, {}, core);
}

namespace {

GateChannel per_qubit_on_targets(double p) { return GateChannel{{PauliTerm{PauliTerm::Kind::PerQubit, {}, p, ""}}}; }

}  // namespace

ErrorModel build_model_zero(int n) {
    ErrorModel m(n);
    m.set_channel("1Q", GateChannel{});
    m.set_channel("2Q", GateChannel{});
    return m;
}

ErrorModel build_model_main_sim(int n) {
    ErrorModel m(n);
    m.set_channel("1Q", per_qubit_on_targets(0.0005));
    m.set_channel("2Q", per_qubit_on_targets(0.0025));
    return m;
}

ErrorModel build_model_crosstalk5() {
    ErrorModel m(5);
    m.set_channel("1Q", per_qubit_on_targets(0.001));
    double ring = 1 - std::sqrt(0.96);
    for (auto [c, t] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}) {
        m.set_channel("2Q:" + std::to_string(c) + "," + std::to_string(t), per_qubit_on_targets(ring));
    }
    double spectator = 1 - std::pow(0.92 / 0.96, 0.25);
    for (int t = 0; t < 4; t++) {
        GateChannel ch;
        ch.terms.push_back(PauliTerm{PauliTerm::Kind::PerQubit, {4}, 0.04, ""});
        ch.terms.push_back(PauliTerm{PauliTerm::Kind::PerQubit, {0, 1, 2, 3}, spectator, ""});
        m.set_channel("2Q:4," + std::to_string(t), ch);
    }
    m.readout().assign(5, 0.02);
    return m;
}

ErrorModel build_model_layer_depolarizing(int n, double lambda) {
    ErrorModel m = build_model_zero(n);
    m.set_core_depolarization(1 - lambda);
    return m;
}

ErrorModel build_model_from_calibration(const DeviceSpec &device, const CalibrationData &data) {
    if (static_cast<int>(data.one_qubit.size()) != device.n) {
        throw std::invalid_argument("calibration data needs a one-qubit rate for every qubit");
    }
    if (static_cast<int>(data.readout.size()) != device.n) {
        throw std::invalid_argument("calibration data needs a readout rate for every qubit");
    }
    ErrorModel m(device.n);
    for (int q = 0; q < device.n; q++) {
        m.set_channel("1Q:" + std::to_string(q),
                      GateChannel{{PauliTerm{PauliTerm::Kind::Joint, {}, data.one_qubit[q], ""}}});
    }
    for (const auto &e : device.edges) {
        auto it = data.cnot.find(e);
        if (it == data.cnot.end()) {
            throw std::invalid_argument("calibration data has no CNOT rate for edge " + std::to_string(e.first) + "," +
                                        std::to_string(e.second));
        }
        m.set_channel("2Q:" + std::to_string(e.first) + "," + std::to_string(e.second),
                      GateChannel{{PauliTerm{PauliTerm::Kind::Joint, {}, it->second, ""}}});
    }
    m.readout() = data.readout;
    m.validate();
    return m;
}

}  // namespace drbench
