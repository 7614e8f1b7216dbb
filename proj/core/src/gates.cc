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

#include "drbench/gates.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <deque>
#include <stdexcept>
#include <tuple>

namespace drbench {

namespace {

struct OneQubitTables {
    std::array<OneQubitClifford, kNumOneQubitCliffords> table{};
    std::array<std::array<int, kNumOneQubitCliffords>, kNumOneQubitCliffords> product{};
    std::array<int, kNumOneQubitCliffords> inverse{};
    std::array<std::vector<char>, kNumOneQubitCliffords> words{};
    int identity = -1, h = -1, p = -1, x = -1, y = -1, z = -1;

    int index_of(const OneQubitClifford &c) const {
        for (int k = 0; k < kNumOneQubitCliffords; k++) {
            if (table[k] == c) {
                return k;
            }
        }
        throw std::logic_error("not a one-qubit Clifford");
    }
};

auto sort_key(const OneQubitClifford &c) { return std::make_tuple(c.s[0][0], c.s[0][1], c.s[1][0], c.s[1][1], c.v[0], c.v[1]); }

OneQubitClifford compose_1q(const OneQubitClifford &after, const OneQubitClifford &before) {
    OneQubitClifford out{};
    for (int col = 0; col < 2; col++) {
        bool a = before.s[0][col];
        bool b = before.s[1][col];
        uint8_t phase = before.v[col];
        conjugate_1q_bits(after, a, b, phase);
        out.s[0][col] = a;
        out.s[1][col] = b;
        out.v[col] = phase;
    }
    return out;
}

OneQubitTables build_tables() {
    OneQubitTables t;
    std::vector<OneQubitClifford> all;
    for (int bits = 0; bits < 16; bits++) {
        uint8_t s00 = bits >> 3 & 1, s01 = bits >> 2 & 1, s10 = bits >> 1 & 1, s11 = bits & 1;
        if (((s00 & s11) ^ (s01 & s10)) != 1) {
            continue;
        }
        for (uint8_t v0 = 0; v0 < 4; v0++) {
            for (uint8_t v1 = 0; v1 < 4; v1++) {
                if ((v0 & 1) != (s00 & s10) || (v1 & 1) != (s01 & s11)) {
                    continue;
                }
                all.push_back(OneQubitClifford{{{s00, s01}, {s10, s11}}, {v0, v1}});
            }
        }
    }
    std::sort(all.begin(), all.end(), [](const auto &a, const auto &b) { return sort_key(a) < sort_key(b); });
    if (all.size() != kNumOneQubitCliffords) {
        throw std::logic_error("one-qubit Clifford enumeration is broken");
    }
    std::copy(all.begin(), all.end(), t.table.begin());

    t.identity = t.index_of({{{1, 0}, {0, 1}}, {0, 0}});
    t.h = t.index_of({{{0, 1}, {1, 0}}, {0, 0}});
    t.p = t.index_of({{{1, 0}, {1, 1}}, {1, 0}});
    t.x = t.index_of({{{1, 0}, {0, 1}}, {0, 2}});
    t.y = t.index_of({{{1, 0}, {0, 1}}, {2, 2}});
    t.z = t.index_of({{{1, 0}, {0, 1}}, {2, 0}});

    for (int a = 0; a < kNumOneQubitCliffords; a++) {
        for (int b = 0; b < kNumOneQubitCliffords; b++) {
            t.product[a][b] = t.index_of(compose_1q(t.table[a], t.table[b]));
        }
    }
    for (int a = 0; a < kNumOneQubitCliffords; a++) {
        for (int b = 0; b < kNumOneQubitCliffords; b++) {
            if (t.product[a][b] == t.identity) {
                t.inverse[a] = b;
            }
        }
    }

    // Breadth-first over words in {H, P}; H tried before P so ties prefer H.
    std::array<bool, kNumOneQubitCliffords> seen{};
    std::deque<int> frontier{t.identity};
    seen[t.identity] = true;
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop_front();
        for (char g : {'H', 'P'}) {
            int next = t.product[g == 'H' ? t.h : t.p][cur];
            if (!seen[next]) {
                seen[next] = true;
                t.words[next] = t.words[cur];
                t.words[next].push_back(g);
                frontier.push_back(next);
            }
        }
    }
    return t;
}

const OneQubitTables &tables() {
    static const OneQubitTables t = build_tables();
    return t;
}

}  // namespace

const std::array<OneQubitClifford, kNumOneQubitCliffords> &one_qubit_cliffords() { return tables().table; }

int one_qubit_index(const OneQubitClifford &c) { return tables().index_of(c); }

int one_qubit_compose(int after, int before) { return tables().product[after][before]; }

int one_qubit_inverse(int k) { return tables().inverse[k]; }

const std::vector<char> &one_qubit_word(int k) { return tables().words[k]; }

std::string one_qubit_name(int k) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "C%02d", k);
    return buf;
}

namespace c1 {
int identity() { return tables().identity; }
int h() { return tables().h; }
int p() { return tables().p; }
int x() { return tables().x; }
int y() { return tables().y; }
int z() { return tables().z; }
}  // namespace c1

std::optional<GateInfo> lookup_gate(std::string_view name) {
    if (name == "CNOT") {
        return GateInfo{2, -1};
    }
    if (name == "I") {
        return GateInfo{1, c1::identity()};
    }
    if (name == "H") {
        return GateInfo{1, c1::h()};
    }
    if (name == "P") {
        return GateInfo{1, c1::p()};
    }
    if (name == "X") {
        return GateInfo{1, c1::x()};
    }
    if (name == "Y") {
        return GateInfo{1, c1::y()};
    }
    if (name == "Z") {
        return GateInfo{1, c1::z()};
    }
    if (name.size() == 3 && name[0] == 'C' && std::isdigit(static_cast<unsigned char>(name[1])) &&
        std::isdigit(static_cast<unsigned char>(name[2]))) {
        int k = (name[1] - '0') * 10 + (name[2] - '0');
        if (k < kNumOneQubitCliffords) {
            return GateInfo{1, k};
        }
    }
    return std::nullopt;
}

CliffordOp standard_gate(std::string_view name, const std::vector<int> &targets, size_t n) {
    auto info = lookup_gate(name);
    if (!info) {
        throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
    }
    if (targets.size() != static_cast<size_t>(info->arity)) {
        throw std::invalid_argument("gate '" + std::string(name) + "' expects " + std::to_string(info->arity) + " target(s)");
    }
    for (size_t a = 0; a < targets.size(); a++) {
        if (targets[a] < 0 || static_cast<size_t>(targets[a]) >= n) {
            throw std::invalid_argument("gate target " + std::to_string(targets[a]) + " out of range");
        }
        for (size_t b = 0; b < a; b++) {
            if (targets[a] == targets[b]) {
                throw std::invalid_argument("duplicate gate targets");
            }
        }
    }
    CliffordOp out(n);
    if (info->arity == 1) {
        out.prepend_1q(targets[0], one_qubit_cliffords()[info->clifford]);
    } else {
        out.prepend_cnot(targets[0], targets[1]);
    }
    return out;
}

}  // namespace drbench
