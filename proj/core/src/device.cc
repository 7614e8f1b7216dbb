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

#include "drbench/device.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "drbench/gates.h"

namespace drbench {

std::string to_string(GateSet g) { return g == GateSet::HPI ? "HPI" : "C24"; }

GateSet gate_set_from_string(const std::string &name) {
    if (name == "HPI") {
        return GateSet::HPI;
    }
    if (name == "C24") {
        return GateSet::C24;
    }
    throw std::invalid_argument("unknown gate set '" + name + "' (expected HPI or C24)");
}

namespace {

DeviceSpec make(int n, GateSet gates) {
    DeviceSpec d;
    d.n = n;
    d.gate_set = gates;
    for (int q = 0; q < n; q++) {
        d.qubit_names.push_back("Q" + std::to_string(q));
    }
    return d;
}

}  // namespace

DeviceSpec DeviceSpec::all_to_all(int n, GateSet gates) {
    DeviceSpec d = make(n, gates);
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            if (a != b) {
                d.edges.emplace_back(a, b);
            }
        }
    }
    return d;
}

DeviceSpec DeviceSpec::ring(int n, GateSet gates) {
    DeviceSpec d = make(n, gates);
    if (n == 2) {
        d.edges.emplace_back(0, 1);
    } else if (n > 2) {
        for (int q = 0; q < n; q++) {
            d.edges.emplace_back(q, (q + 1) % n);
        }
    }
    return d;
}

DeviceSpec DeviceSpec::line(int n, GateSet gates) {
    DeviceSpec d = make(n, gates);
    for (int q = 0; q + 1 < n; q++) {
        d.edges.emplace_back(q, q + 1);
    }
    return d;
}

DeviceSpec DeviceSpec::ring_with_center5(GateSet gates) {
    DeviceSpec d = make(5, gates);
    d.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
    return d;
}

void DeviceSpec::validate() const {
    if (n < 1) {
        throw std::invalid_argument("device.n must be >= 1");
    }
    if (!qubit_names.empty() && static_cast<int>(qubit_names.size()) != n) {
        throw std::invalid_argument("device.qubits must list exactly n names");
    }
    for (const auto &[c, t] : edges) {
        if (c < 0 || t < 0 || c >= n || t >= n) {
            throw std::invalid_argument("device.edges references an undeclared qubit");
        }
        if (c == t) {
            throw std::invalid_argument("device.edges contains a self-edge");
        }
    }
}

bool DeviceSpec::has_edge(int control, int target) const {
    return std::find(edges.begin(), edges.end(), Edge{control, target}) != edges.end();
}

std::vector<std::vector<int>> DeviceSpec::distances() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto &[c, t] : edges) {
        adj[c].push_back(t);
        adj[t].push_back(c);
    }
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; s++) {
        std::deque<int> queue{s};
        dist[s][s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u]) {
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return dist;
}

bool DeviceSpec::connected() const {
    auto dist = distances();
    for (int q = 0; q < n; q++) {
        if (dist[0][q] < 0) {
            return false;
        }
    }
    return true;
}

std::vector<int> DeviceSpec::shortest_path(int a, int b) const {
    std::vector<std::vector<int>> adj(n);
    for (const auto &[c, t] : edges) {
        adj[c].push_back(t);
        adj[t].push_back(c);
    }
    for (auto &row : adj) {
        std::sort(row.begin(), row.end());
    }
    std::vector<int> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::deque<int> queue{a};
    seen[a] = true;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == b) {
            break;
        }
        for (int w : adj[u]) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if (!seen[b]) {
        return {};
    }
    std::vector<int> path;
    for (int v = b; v != -1; v = parent[v]) {
        path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> DeviceSpec::eccentricity_order() const {
    auto dist = distances();
    std::vector<int> ecc(n, 0);
    for (int q = 0; q < n; q++) {
        for (int r = 0; r < n; r++) {
            ecc[q] = std::max(ecc[q], dist[q][r] < 0 ? n : dist[q][r]);
        }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ecc[a] < ecc[b]; });
    return order;
}

bool DeviceSpec::declares(const std::string &gate_name) const {
    if (gate_name == "CNOT" || gate_name == "I" || gate_name == "H" || gate_name == "P") {
        return true;
    }
    if (gate_set == GateSet::HPI) {
        return false;
    }
    auto info = lookup_gate(gate_name);
    return info.has_value() && info->arity == 1;
}

}  // namespace drbench
