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

#include "drbench/sampling.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "drbench/gates.h"

namespace drbench {

namespace {

// Vectors of length 2n: x bits in [0, n), z bits in [n, 2n).
bool symplectic_product(const BitVector &a, const BitVector &b, size_t n) {
    bool acc = false;
    for (size_t q = 0; q < n; q++) {
        acc ^= (a.get(q) && b.get(n + q)) != (a.get(n + q) && b.get(q));
    }
    return acc;
}

BitVector random_combination(const std::vector<BitVector> &basis, Rng &rng) {
    BitVector out(basis[0].size());
    for (const auto &b : basis) {
        if (rng.coin()) {
            out ^= b;
        }
    }
    return out;
}

// Keeps a maximal independent subset of the span, in elimination form.
std::vector<BitVector> independent_basis(std::vector<BitVector> vecs) {
    std::vector<BitVector> basis;
    std::vector<size_t> pivots;
    for (auto &v : vecs) {
        for (size_t k = 0; k < basis.size(); k++) {
            if (v.get(pivots[k])) {
                v ^= basis[k];
            }
        }
        if (v.none()) {
            continue;
        }
        size_t p = v.find_next(0);
        for (size_t k = 0; k < basis.size(); k++) {
            if (basis[k].get(p)) {
                basis[k] ^= v;
            }
        }
        basis.push_back(v);
        pivots.push_back(p);
    }
    return basis;
}

}  // namespace

BitMatrix sample_symplectic_uniform(size_t n, Rng &rng) {
    if (n == 0) {
        throw std::invalid_argument("sample_symplectic_uniform needs n >= 1");
    }
    // Builds the columns as successive hyperbolic pairs (v, w): v is uniform
    // over the nonzero vectors of the remaining symplectic subspace and w is
    // uniform over the vectors in it pairing to 1 with v. The number of
    // choices at every step does not depend on earlier choices, so the result
    // is uniform over the group.
    std::vector<BitVector> basis;
    for (size_t k = 0; k < 2 * n; k++) {
        basis.push_back(BitVector::unit(2 * n, k));
    }
    BitMatrix s(2 * n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        BitVector v;
        do {
            v = random_combination(basis, rng);
        } while (v.none());
        BitVector w;
        do {
            w = random_combination(basis, rng);
        } while (!symplectic_product(v, w, n));
        for (size_t r = 0; r < 2 * n; r++) {
            s.set(r, i, v.get(r));
            s.set(r, n + i, w.get(r));
        }
        for (auto &b : basis) {
            bool bw = symplectic_product(b, w, n);
            bool bv = symplectic_product(b, v, n);
            if (bw) {
                b ^= v;
            }
            if (bv) {
                b ^= w;
            }
        }
        basis = independent_basis(std::move(basis));
    }
    return s;
}

CliffordOp sample_clifford_uniform(size_t n, Rng &rng) {
    BitMatrix s = sample_symplectic_uniform(n, rng);
    std::vector<uint8_t> v(2 * n);
    for (size_t k = 0; k < 2 * n; k++) {
        bool y_parity = false;
        for (size_t q = 0; q < n; q++) {
            y_parity ^= s.get(q, k) && s.get(n + q, k);
        }
        v[k] = static_cast<uint8_t>(y_parity + (rng.coin() ? 2 : 0));
    }
    return CliffordOp::from_symplectic(s, v);
}

StabilizerState sample_stabilizer_state_uniform(size_t n, Rng &rng) {
    return StabilizerState::from_clifford(sample_clifford_uniform(n, rng));
}

SamplerSpec SamplerSpec::pcnot(double p, GateSet pool) {
    SamplerSpec s;
    s.type = SamplerType::PCnot;
    s.p_cnot = p;
    s.pool = pool;
    return s;
}

SamplerSpec SamplerSpec::pairing(double p, GateSet pool) {
    SamplerSpec s;
    s.type = SamplerType::Pairing;
    s.p_cnot = p;
    s.pool = pool;
    return s;
}

SamplerSpec SamplerSpec::category(std::vector<double> v, std::vector<std::vector<Edge>> categories, GateSet pool) {
    SamplerSpec s;
    s.type = SamplerType::CategoryV;
    s.v = std::move(v);
    s.categories = std::move(categories);
    s.pool = pool;
    return s;
}

std::string to_string(SamplerType t) {
    switch (t) {
        case SamplerType::PCnot:
            return "pcnot";
        case SamplerType::CategoryV:
            return "category";
        case SamplerType::Pairing:
            return "pairing";
    }
    return "pcnot";
}

SamplerType sampler_type_from_string(const std::string &name) {
    if (name == "pcnot") {
        return SamplerType::PCnot;
    }
    if (name == "category") {
        return SamplerType::CategoryV;
    }
    if (name == "pairing") {
        return SamplerType::Pairing;
    }
    throw std::invalid_argument("unknown sampler type '" + name + "' (expected pcnot, category or pairing)");
}

void SamplerSpec::validate(const DeviceSpec &device) const {
    auto check_p = [](double p, const char *what) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
        }
    };
    switch (type) {
        case SamplerType::PCnot:
            check_p(p_cnot, "sampler.p_cnot");
            if (p_cnot > 0 && device.edges.empty()) {
                throw std::invalid_argument("sampler.p_cnot > 0 but device.edges is empty");
            }
            break;
        case SamplerType::Pairing:
            check_p(p_cnot, "sampler.p_cnot");
            if (p_cnot > 0) {
                for (int a = 0; a < device.n; a++) {
                    for (int b = 0; b < device.n; b++) {
                        if (a != b && !device.has_edge(a, b)) {
                            throw std::invalid_argument(
                                "pairing sampler needs every ordered qubit pair in device.edges; missing " +
                                std::to_string(a) + "," + std::to_string(b));
                        }
                    }
                }
            }
            break;
        case SamplerType::CategoryV: {
            if (v.empty() || v.size() != categories.size()) {
                throw std::invalid_argument("sampler.v and sampler.categories must have the same nonzero length");
            }
            double total = 0;
            for (double p : v) {
                check_p(p, "sampler.v entries");
                total += p;
            }
            if (std::abs(total - 1.0) > 1e-9) {
                throw std::invalid_argument("sampler.v must sum to 1");
            }
            for (const auto &cat : categories) {
                for (const auto &e : cat) {
                    if (!device.has_edge(e.first, e.second)) {
                        throw std::invalid_argument("sampler category references edge " + std::to_string(e.first) +
                                                    "," + std::to_string(e.second) + " missing from device.edges");
                    }
                }
            }
            break;
        }
    }
}

const std::vector<int> &pool_gates(GateSet pool) {
    static const std::vector<int> hpi = {c1::identity(), c1::h(), c1::p()};
    static const std::vector<int> c24 = [] {
        std::vector<int> all(kNumOneQubitCliffords);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }();
    return pool == GateSet::HPI ? hpi : c24;
}

std::string pool_gate_name(GateSet pool, int index) {
    if (pool == GateSet::HPI) {
        if (index == c1::identity()) {
            return "I";
        }
        return index == c1::h() ? "H" : "P";
    }
    return one_qubit_name(index);
}

namespace {

void fill_one_qubit(Layer &layer, const std::vector<bool> &busy, GateSet pool, Rng &rng) {
    const auto &gates = pool_gates(pool);
    for (size_t q = 0; q < busy.size(); q++) {
        if (!busy[q]) {
            int g = gates[rng.uniform(gates.size())];
            layer.gates.push_back(Gate{pool_gate_name(pool, g), {static_cast<int>(q)}, g});
        }
    }
}

void add_cnot(Layer &layer, std::vector<bool> &busy, const Edge &e) {
    layer.gates.push_back(Gate::cnot(e.first, e.second));
    busy[e.first] = true;
    busy[e.second] = true;
}

}  // namespace

Layer sample_layer(const SamplerSpec &spec, const DeviceSpec &device, Rng &rng) {
    Layer layer;
    layer.stage = Stage::Core;
    std::vector<bool> busy(device.n, false);
    switch (spec.type) {
        case SamplerType::PCnot:
            if (!device.edges.empty() && rng.bernoulli(spec.p_cnot)) {
                add_cnot(layer, busy, device.edges[rng.uniform(device.edges.size())]);
            }
            break;
        case SamplerType::CategoryV: {
            double u = rng.uniform01();
            size_t k = 0;
            double acc = 0;
            for (; k + 1 < spec.v.size(); k++) {
                acc += spec.v[k];
                if (u < acc) {
                    break;
                }
            }
            const auto &cat = spec.categories[k];
            if (!cat.empty()) {
                add_cnot(layer, busy, cat[rng.uniform(cat.size())]);
            }
            break;
        }
        case SamplerType::Pairing: {
            std::vector<int> perm = rng.permutation(device.n);
            for (int i = 0; i + 1 < device.n; i += 2) {
                if (rng.bernoulli(spec.p_cnot)) {
                    add_cnot(layer, busy, {perm[i], perm[i + 1]});
                }
            }
            break;
        }
    }
    fill_one_qubit(layer, busy, spec.pool, rng);
    return layer;
}

namespace {

double factorial(int k) {
    double f = 1;
    for (int j = 2; j <= k; j++) {
        f *= j;
    }
    return f;
}

}  // namespace

double layer_probability(const SamplerSpec &spec, const DeviceSpec &device, const Layer &layer) {
    std::vector<bool> covered(device.n, false);
    std::vector<Edge> cnots;
    const auto &gates = pool_gates(spec.pool);
    bool in_pool = true;
    for (const auto &g : layer.gates) {
        for (int q : g.qubits) {
            if (q < 0 || q >= device.n) {
                throw std::invalid_argument("layer uses undeclared qubit " + std::to_string(q));
            }
            if (covered[q]) {
                throw std::invalid_argument("layer uses qubit " + std::to_string(q) + " twice");
            }
            covered[q] = true;
        }
        if (g.is_cnot()) {
            if (!device.has_edge(g.qubits[0], g.qubits[1])) {
                return 0.0;
            }
            cnots.emplace_back(g.qubits[0], g.qubits[1]);
        } else if (std::find(gates.begin(), gates.end(), g.clifford) == gates.end()) {
            in_pool = false;
        }
    }
    if (!in_pool || std::find(covered.begin(), covered.end(), false) != covered.end()) {
        return 0.0;
    }
    int k = static_cast<int>(cnots.size());
    int rest = device.n - 2 * k;
    double g_rest = std::pow(static_cast<double>(gates.size()), -rest);
    switch (spec.type) {
        case SamplerType::PCnot:
            if (k == 0) {
                return (device.edges.empty() ? 1.0 : 1.0 - spec.p_cnot) * g_rest;
            }
            if (k == 1) {
                return spec.p_cnot / static_cast<double>(device.edges.size()) * g_rest;
            }
            return 0.0;
        case SamplerType::CategoryV: {
            if (k > 1) {
                return 0.0;
            }
            double total = 0;
            for (size_t c = 0; c < spec.v.size(); c++) {
                const auto &cat = spec.categories[c];
                if (k == 0 && cat.empty()) {
                    total += spec.v[c];
                } else if (k == 1 && std::find(cat.begin(), cat.end(), cnots[0]) != cat.end()) {
                    total += spec.v[c] / static_cast<double>(cat.size());
                }
            }
            return total * g_rest;
        }
        case SamplerType::Pairing: {
            int pairs = device.n / 2;
            // Directed matchings consistent with the layer, each produced by
            // pairs! of the n! permutations.
            double matchings = factorial(rest) / factorial(rest / 2);
            double per_matching = factorial(pairs) / factorial(device.n);
            return matchings * per_matching * std::pow(spec.p_cnot, k) * std::pow(1.0 - spec.p_cnot, pairs - k) *
                   g_rest;
        }
    }
    return 0.0;
}

double expected_cnots_per_layer(const SamplerSpec &spec, const DeviceSpec &device) {
    switch (spec.type) {
        case SamplerType::PCnot:
            return device.edges.empty() ? 0.0 : spec.p_cnot;
        case SamplerType::CategoryV: {
            double total = 0;
            for (size_t c = 0; c < spec.v.size(); c++) {
                total += spec.categories[c].empty() ? 0.0 : spec.v[c];
            }
            return total;
        }
        case SamplerType::Pairing:
            return spec.p_cnot * (device.n / 2);
    }
    return 0.0;
}

namespace {

PauliOp random_weight_one(size_t n, Rng &rng) {
    return PauliOp::single(n, rng.uniform(n), 1 + static_cast<int>(rng.uniform(3)));
}

template <typename Step>
SpreadingProfile spread(size_t n, size_t trials, size_t depth, Rng &rng, Step step) {
    if (depth == 0) {
        throw std::invalid_argument("estimate_error_spreading needs depth >= 1");
    }
    SpreadingProfile out;
    out.trials = trials;
    out.weight_distribution.assign(depth, std::vector<double>(n + 1, 0.0));
    out.mean_weight.assign(depth, 0.0);
    std::vector<PauliOp> finals;
    finals.reserve(trials);
    for (size_t t = 0; t < trials; t++) {
        PauliOp p = random_weight_one(n, rng);
        for (size_t d = 0; d < depth; d++) {
            step(p);
            size_t w = p.weight();
            out.weight_distribution[d][w] += 1.0;
            out.mean_weight[d] += static_cast<double>(w);
        }
        finals.push_back(std::move(p));
    }
    if (trials > 0) {
        for (size_t d = 0; d < depth; d++) {
            for (auto &x : out.weight_distribution[d]) {
                x /= static_cast<double>(trials);
            }
            out.mean_weight[d] /= static_cast<double>(trials);
        }
    }
    size_t pairs = 0;
    size_t hits = 0;
    for (size_t t = 0; t + 1 < finals.size(); t += 2) {
        pairs++;
        hits += finals[t].equal_up_to_phase(finals[t + 1]);
    }
    out.collision_rate = pairs ? static_cast<double>(hits) / static_cast<double>(pairs) : 0.0;
    return out;
}

}  // namespace

SpreadingProfile estimate_error_spreading(const SamplerSpec &spec, const DeviceSpec &device, size_t trials,
                                          size_t depth, Rng &rng) {
    return spread(device.n, trials, depth, rng, [&](PauliOp &p) {
        Layer layer = sample_layer(spec, device, rng);
        for (const auto &g : layer.gates) {
            if (g.is_cnot()) {
                p.conjugate_cnot(g.qubits[0], g.qubits[1]);
            } else {
                p.conjugate_1q(g.qubits[0], one_qubit_cliffords()[g.clifford]);
            }
        }
    });
}

SpreadingProfile estimate_error_spreading_uniform(size_t n, size_t trials, size_t depth, Rng &rng) {
    return spread(n, trials, depth, rng, [&](PauliOp &p) { p = conjugate_pauli(sample_clifford_uniform(n, rng), p); });
}

}  // namespace drbench
