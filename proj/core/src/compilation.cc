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

#include "drbench/compilation.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "drbench/gates.h"
#include "drbench/random.h"

namespace drbench {

void CompileOptions::validate() const {
    if (trials < 1) {
        throw std::invalid_argument("compile.trials must be >= 1");
    }
}

CompileStats compute_stats(const Circuit &circuit) {
    CompileStats s;
    for (const auto &layer : circuit.layers) {
        for (const auto &g : layer.gates) {
            s.gates++;
            s.cnots += g.is_cnot();
        }
    }
    s.depth = circuit.layers.size();
    return s;
}

void CompileSummary::add(const CompileStats &s) {
    count++;
    cnots += s.cnots;
    gates += s.gates;
    depth += s.depth;
}

double CompileSummary::mean_cnots() const { return count ? static_cast<double>(cnots) / count : 0.0; }
double CompileSummary::mean_gates() const { return count ? static_cast<double>(gates) / count : 0.0; }
double CompileSummary::mean_depth() const { return count ? static_cast<double>(depth) / count : 0.0; }

namespace {

const OneQubitClifford &table(int k) { return one_qubit_cliffords()[k]; }

// Kind codes follow PauliOp::kind_at: 1=X, 2=Y, 3=Z.
int conjugated_kind(int gate, int kind) {
    bool a = kind == 1 || kind == 2;
    bool b = kind == 2 || kind == 3;
    uint8_t ph = 0;
    conjugate_1q_bits(table(gate), a, b, ph);
    return a ? (b ? 2 : 1) : (b ? 3 : 0);
}

// Shortest-word gate sending kind `from` to +-`to` and, when `keep` is set,
// kind `keep` to +-`keep`.
int find_1q(int from, int to, int keep = 0) {
    int best = -1;
    for (int g = 0; g < kNumOneQubitCliffords; g++) {
        if (conjugated_kind(g, from) != to || (keep && conjugated_kind(g, keep) != keep)) {
            continue;
        }
        if (best < 0 || one_qubit_word(g).size() < one_qubit_word(best).size()) {
            best = g;
        }
    }
    return best;
}

void push_lowered_cnot(std::vector<Gate> &out, int c, int t, const DeviceSpec &device, bool respect) {
    if (!respect || device.has_edge(c, t)) {
        out.push_back(Gate::cnot(c, t));
        return;
    }
    if (device.has_edge(t, c)) {
        int h = c1::h();
        out.push_back(Gate::one_qubit(h, c));
        out.push_back(Gate::one_qubit(h, t));
        out.push_back(Gate::cnot(t, c));
        out.push_back(Gate::one_qubit(h, c));
        out.push_back(Gate::one_qubit(h, t));
        return;
    }
    std::vector<int> path = device.shortest_path(c, t);
    if (path.empty()) {
        throw std::invalid_argument("no path between qubits " + std::to_string(c) + " and " + std::to_string(t) +
                                    ": device connectivity graph is disconnected");
    }
    int k = static_cast<int>(path.size()) - 1;
    auto hop = [&](int i) { push_lowered_cnot(out, path[i], path[i + 1], device, respect); };
    for (int i = k - 1; i >= 0; i--) {
        hop(i);
    }
    for (int i = 1; i <= k - 1; i++) {
        hop(i);
    }
    for (int i = k - 2; i >= 0; i--) {
        hop(i);
    }
    for (int i = 1; i <= k - 2; i++) {
        hop(i);
    }
}

}  // namespace

Circuit emit_circuit(const std::vector<Gate> &gates, const DeviceSpec &device, bool respect_connectivity,
                     Stage stage) {
    std::vector<Gate> lowered;
    for (const auto &g : gates) {
        if (g.is_cnot()) {
            push_lowered_cnot(lowered, g.qubits[0], g.qubits[1], device, respect_connectivity);
        } else {
            lowered.push_back(g);
        }
    }

    std::vector<Gate> merged;
    std::vector<int> pending(device.n, c1::identity());
    auto flush = [&](int q) {
        int k = pending[q];
        pending[q] = c1::identity();
        if (k == c1::identity()) {
            return;
        }
        if (device.gate_set == GateSet::C24) {
            merged.push_back(Gate::one_qubit(k, q));
            return;
        }
        for (char w : one_qubit_word(k)) {
            merged.push_back(w == 'H' ? Gate{"H", {q}, c1::h()} : Gate{"P", {q}, c1::p()});
        }
    };
    for (const auto &g : lowered) {
        if (g.is_cnot()) {
            flush(g.qubits[0]);
            flush(g.qubits[1]);
            merged.push_back(g);
        } else {
            pending[g.qubits[0]] = one_qubit_compose(g.clifford, pending[g.qubits[0]]);
        }
    }
    for (int q = 0; q < device.n; q++) {
        flush(q);
    }

    Circuit out;
    out.n = device.n;
    out.target = BitVector(device.n);
    std::vector<size_t> next_free(device.n, 0);
    for (auto &g : merged) {
        size_t l = 0;
        for (int q : g.qubits) {
            l = std::max(l, next_free[q]);
        }
        if (l == out.layers.size()) {
            out.layers.push_back(Layer{{}, stage});
        }
        for (int q : g.qubits) {
            next_free[q] = l + 1;
        }
        out.layers[l].gates.push_back(std::move(g));
    }
    return out;
}

namespace {

double cost_of(const Circuit &c, CostMetric metric) {
    return metric == CostMetric::Depth ? static_cast<double>(c.depth()) : static_cast<double>(c.cnot_count());
}

std::vector<int> trial_order(const DeviceSpec &device, const CompileOptions &opts, int trial) {
    if (trial == 0) {
        if (opts.heuristic) {
            return device.eccentricity_order();
        }
        std::vector<int> order(device.n);
        std::iota(order.begin(), order.end(), 0);
        return order;
    }
    Rng rng(derive_seed(opts.seed, static_cast<uint64_t>(trial)));
    return rng.permutation(device.n);
}

// Runs every trial, returns the raw gate list whose emitted circuit is cheapest.
template <typename Builder>
std::vector<Gate> best_of_trials(const DeviceSpec &device, const CompileOptions &opts, Builder build) {
    opts.validate();
    std::vector<Gate> best;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int t = 0; t < opts.trials; t++) {
        std::vector<Gate> gates = build(trial_order(device, opts, t));
        double cost = cost_of(emit_circuit(gates, device, opts.respect_connectivity), opts.cost);
        if (cost < best_cost) {
            best_cost = cost;
            best = std::move(gates);
        }
    }
    return best;
}

int distance(const std::vector<std::vector<int>> &dist, int a, int b) {
    int d = dist[a][b];
    return d < 0 ? std::numeric_limits<int>::max() : d;
}

std::vector<Gate> cnot_gates_for_order(BitMatrix m, const std::vector<int> &order,
                                       const std::vector<std::vector<int>> &dist, bool respect) {
    size_t n = m.rows();
    std::vector<bool> done(n, false);
    std::vector<std::pair<int, int>> ops;  // (c, t): row_t ^= row_c
    auto row_op = [&](int c, int t) {
        m.row_xor(t, c);
        ops.emplace_back(c, t);
    };
    for (int q : order) {
        if (!m.get(q, q)) {
            int pick = -1;
            for (size_t r = 0; r < n; r++) {
                if (done[r] || static_cast<int>(r) == q || !m.get(r, q)) {
                    continue;
                }
                if (pick < 0 || (respect && distance(dist, q, r) < distance(dist, q, pick))) {
                    pick = static_cast<int>(r);
                }
            }
            if (pick < 0) {
                throw std::invalid_argument("compile_cnot_circuit: matrix is singular");
            }
            row_op(pick, q);
        }
        for (size_t r = 0; r < n; r++) {
            if (static_cast<int>(r) != q && m.get(r, q)) {
                row_op(q, static_cast<int>(r));
            }
        }
        done[q] = true;
    }
    std::vector<Gate> gates;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        gates.push_back(Gate::cnot(it->first, it->second));
    }
    return gates;
}

std::vector<Gate> cnot_gate_list(const BitMatrix &m, const DeviceSpec &device, const CompileOptions &opts) {
    if (static_cast<int>(m.rows()) != device.n || m.cols() != m.rows()) {
        throw std::invalid_argument("compile_cnot_circuit: matrix must be n x n for the device");
    }
    if (!m.is_invertible()) {
        throw std::invalid_argument("compile_cnot_circuit: matrix is singular");
    }
    auto dist = device.distances();
    return best_of_trials(device, opts, [&](const std::vector<int> &order) {
        return cnot_gates_for_order(m, order, dist, opts.respect_connectivity);
    });
}

std::vector<Gate> clifford_gates_for_order(const CliffordOp &c, const std::vector<int> &order,
                                           const std::vector<std::vector<int>> &dist, bool respect) {
    const int n = static_cast<int>(c.num_qubits());
    static const int y_to_x = find_1q(2, 1);
    static const int y_to_z_keep_x = find_1q(2, 3, 1);
    static const int y_to_z = find_1q(2, 3);
    // Reduce e = c^-1 to the identity by prepending gates g_1, g_2, ...; then
    // g_L ... g_1 = c, so the gates in recorded order implement c.
    CliffordOp e = invert(c);
    std::vector<Gate> ops;
    auto g1 = [&](int q, int k) {
        if (k == c1::identity()) {
            return;
        }
        e.prepend_1q(q, table(k));
        ops.push_back(Gate::one_qubit(k, q));
    };
    auto cx = [&](int a, int b) {
        e.prepend_cnot(a, b);
        ops.push_back(Gate::cnot(a, b));
    };
    for (int q : order) {
        PauliOp a = e.image(q);
        for (int j = 0; j < n; j++) {
            int kind = a.kind_at(j);
            if (kind == 3) {
                g1(j, c1::h());
            } else if (kind == 2) {
                g1(j, y_to_x);
            }
        }
        a = e.image(q);
        if (!a.x.get(q)) {
            int pick = -1;
            for (int j = 0; j < n; j++) {
                if (a.x.get(j) && (pick < 0 || (respect && distance(dist, q, j) < distance(dist, q, pick)))) {
                    pick = j;
                }
            }
            cx(pick, q);
        }
        a = e.image(q);
        for (int j = 0; j < n; j++) {
            if (j != q && a.x.get(j)) {
                cx(q, j);
            }
        }
        PauliOp b = e.image(n + q);
        if (b.kind_at(q) == 2) {
            g1(q, y_to_z_keep_x);
        }
        b = e.image(n + q);
        for (int j = 0; j < n; j++) {
            int kind = b.kind_at(j);
            if (j == q || kind == 0) {
                continue;
            }
            if (kind == 1) {
                g1(j, c1::h());
            } else if (kind == 2) {
                g1(j, y_to_z);
            }
            cx(j, q);
        }
    }
    for (int q = 0; q < n; q++) {
        if (e.image(q).sign_exponent() == 2) {
            g1(q, c1::z());
        }
        if (e.image(n + q).sign_exponent() == 2) {
            g1(q, c1::x());
        }
    }
    if (!e.is_identity()) {
        throw std::logic_error("compile_clifford: reduction did not reach the identity");
    }
    return ops;
}

}  // namespace

Circuit compile_cnot_circuit(const BitMatrix &m, const DeviceSpec &device, const CompileOptions &opts) {
    return emit_circuit(cnot_gate_list(m, device, opts), device, opts.respect_connectivity);
}

Circuit compile_clifford(const CliffordOp &c, const DeviceSpec &device, const CompileOptions &opts) {
    if (static_cast<int>(c.num_qubits()) != device.n) {
        throw std::invalid_argument("compile_clifford: Clifford and device qubit counts differ");
    }
    auto dist = device.distances();
    auto gates = best_of_trials(device, opts, [&](const std::vector<int> &order) {
        return clifford_gates_for_order(c, order, dist, opts.respect_connectivity);
    });
    return emit_circuit(gates, device, opts.respect_connectivity);
}

namespace {

// Row-reduces on x-parts; returns k such that rows [0, k) have independent
// x-parts and rows [k, n) are pure Z.
size_t reduce_x(std::vector<PauliOp> &rows) {
    size_t n = rows.size();
    size_t k = 0;
    for (size_t col = 0; col < n && k < n; col++) {
        size_t r = k;
        while (r < n && !rows[r].x.get(col)) {
            r++;
        }
        if (r == n) {
            continue;
        }
        std::swap(rows[k], rows[r]);
        for (size_t i = 0; i < n; i++) {
            if (i != k && rows[i].x.get(col)) {
                rows[i] = rows[i] * rows[k];
            }
        }
        k++;
    }
    return k;
}

// Congruence-diagonalizes G[i][j] = z_i . x_j over rows [0, k) using only
// products of rows. Requires G to be zero or to have a nonzero diagonal.
void diagonalize(std::vector<PauliOp> &rows, size_t k) {
    auto gram = [&](size_t i, size_t j) { return rows[i].z.dot(rows[j].x); };
    auto mul = [&](size_t dst, size_t src) { rows[dst] = rows[dst] * rows[src]; };
    int done_diag = -1;
    for (size_t t = 0; t < k; t++) {
        size_t found = k;
        for (size_t i = t; i < k; i++) {
            if (gram(i, i)) {
                found = i;
                break;
            }
        }
        if (found == k) {
            size_t a = k, b = k;
            for (size_t i = t; i < k && a == k; i++) {
                for (size_t j = i + 1; j < k; j++) {
                    if (gram(i, j)) {
                        a = i;
                        b = j;
                        break;
                    }
                }
            }
            if (a == k) {
                return;
            }
            if (done_diag < 0) {
                throw std::logic_error("diagonalize: alternating form");
            }
            // With u done (G_uu = 1) and a hyperbolic pair (a, b):
            // u+a+b, u+a, u+b are mutually orthogonal with unit diagonal.
            size_t u = static_cast<size_t>(done_diag);
            PauliOp pu = rows[u], pa = rows[a], pb = rows[b];
            rows[u] = pu * pa * pb;
            rows[a] = pu * pa;
            rows[b] = pu * pb;
            for (size_t c = t; c < k; c++) {
                if (c != a && c != b && gram(c, u)) {
                    mul(c, u);
                }
            }
            found = a;
        }
        std::swap(rows[t], rows[found]);
        for (size_t i = t + 1; i < k; i++) {
            if (gram(i, t)) {
                mul(i, t);
            }
        }
        done_diag = static_cast<int>(t);
    }
}

struct MeasPlan {
    std::vector<Gate> gates;
    BitVector target;
};

// Gates V (time order) with V |state> = |target>. With to_plus_z the final
// layer maps every qubit to +Z, so target is all zeros.
MeasPlan plan_measurement(const StabilizerState &state, const DeviceSpec &device, const CompileOptions &opts,
                          bool to_plus_z) {
    const size_t n = state.num_qubits();
    if (static_cast<int>(n) != device.n) {
        throw std::invalid_argument("stabilizer compilation: state and device qubit counts differ");
    }
    MeasPlan plan;
    plan.target = BitVector(n);
    std::vector<PauliOp> rows = state.generators();
    size_t k = reduce_x(rows);

    bool alternating = true;
    bool nonzero = false;
    for (size_t i = 0; i < k; i++) {
        alternating = alternating && !rows[i].z.dot(rows[i].x);
        for (size_t j = 0; j < k; j++) {
            nonzero = nonzero || rows[i].z.dot(rows[j].x);
        }
    }
    if (alternating && nonzero) {
        // Local layer giving the first generator a single Y factor, which
        // makes the form non-alternating.
        bool first = true;
        for (size_t q = 0; q < n; q++) {
            int kind = rows[0].kind_at(q);
            if (kind == 0) {
                continue;
            }
            int want = first ? 2 : 1;
            first = false;
            int g = find_1q(kind, want);
            if (g != c1::identity()) {
                plan.gates.push_back(Gate::one_qubit(g, static_cast<int>(q)));
                for (auto &r : rows) {
                    r.conjugate_1q(q, table(g));
                }
            }
        }
        k = reduce_x(rows);
    }
    diagonalize(rows, k);

    // Pick a pivot qubit for every x-row (forward elimination without swaps)
    // and build W with x_i in column p_i and unit vectors elsewhere.
    std::vector<size_t> pivots;
    std::vector<BitVector> reduced;
    for (size_t i = 0; i < k; i++) {
        BitVector v = rows[i].x;
        for (size_t j = 0; j < reduced.size(); j++) {
            if (v.get(pivots[j])) {
                v ^= reduced[j];
            }
        }
        size_t p = n;
        for (size_t q = v.find_next(0); q < n; q = v.find_next(q + 1)) {
            if (rows[i].x.get(q)) {
                p = q;
                break;
            }
        }
        if (p == n) {
            p = v.find_next(0);
        }
        reduced.push_back(v);
        pivots.push_back(p);
    }
    BitMatrix w = BitMatrix::identity(n);
    for (size_t i = 0; i < k; i++) {
        for (size_t r = 0; r < n; r++) {
            w.set(r, pivots[i], rows[i].x.get(r));
        }
    }
    std::vector<Gate> cnots = cnot_gate_list(w.inverse(), device, opts);
    for (const auto &g : cnots) {
        for (auto &r : rows) {
            r.conjugate_cnot(g.qubits[0], g.qubits[1]);
        }
    }
    plan.gates.insert(plan.gates.end(), cnots.begin(), cnots.end());

    StabilizerState product(rows);
    for (const auto &g : product.generators()) {
        if (g.weight() != 1) {
            throw std::logic_error("stabilizer compilation: state is not a product state after the CNOT stage");
        }
        size_t q = g.x.any() ? g.x.find_next(0) : g.z.find_next(0);
        int kind = g.kind_at(q);
        bool negative = g.sign_exponent() == 2;
        int best = -1;
        bool best_negative = false;
        for (int c = 0; c < kNumOneQubitCliffords; c++) {
            if (conjugated_kind(c, kind) != 3) {
                continue;
            }
            PauliOp single = PauliOp::single(1, 0, kind);
            if (negative) {
                single.phase = (single.phase + 2) & 3;
            }
            single.conjugate_1q(0, table(c));
            bool out_negative = single.sign_exponent() == 2;
            if (to_plus_z && out_negative) {
                continue;
            }
            if (best < 0 || one_qubit_word(c).size() < one_qubit_word(best).size()) {
                best = c;
                best_negative = out_negative;
            }
        }
        if (best != c1::identity()) {
            plan.gates.push_back(Gate::one_qubit(best, static_cast<int>(q)));
        }
        plan.target.set(q, best_negative);
    }
    return plan;
}

}  // namespace

MeasurementCompilation compile_stabilizer_meas(const StabilizerState &state, const DeviceSpec &device,
                                               const CompileOptions &opts) {
    MeasPlan plan = plan_measurement(state, device, opts, false);
    return {emit_circuit(plan.gates, device, opts.respect_connectivity, Stage::Meas), plan.target};
}

Circuit compile_stabilizer_prep(const StabilizerState &state, const DeviceSpec &device, const CompileOptions &opts) {
    MeasPlan plan = plan_measurement(state, device, opts, true);
    std::vector<Gate> inverse;
    for (auto it = plan.gates.rbegin(); it != plan.gates.rend(); ++it) {
        inverse.push_back(it->is_cnot() ? *it : Gate::one_qubit(one_qubit_inverse(it->clifford), it->qubits[0]));
    }
    return emit_circuit(inverse, device, opts.respect_connectivity, Stage::Prep);
}

}  // namespace drbench
