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

#include "drbench/circuit.h"

#include <sstream>
#include <stdexcept>

#include "drbench/gates.h"

namespace drbench {

Gate Gate::one_qubit(const std::string &name, int qubit) {
    auto info = lookup_gate(name);
    if (!info || info->arity != 1) {
        throw std::invalid_argument("unknown one-qubit gate '" + name + "'");
    }
    return Gate{name, {qubit}, info->clifford};
}

Gate Gate::one_qubit(int table_index, int qubit) { return Gate{one_qubit_name(table_index), {qubit}, table_index}; }

Gate Gate::cnot(int control, int target) { return Gate{"CNOT", {control, target}, -1}; }

std::string to_string(Stage s) {
    switch (s) {
        case Stage::Prep:
            return "prep";
        case Stage::Core:
            return "core";
        case Stage::Meas:
            return "meas";
    }
    return "core";
}

Stage stage_from_string(const std::string &text) {
    if (text == "prep") {
        return Stage::Prep;
    }
    if (text == "core") {
        return Stage::Core;
    }
    if (text == "meas") {
        return Stage::Meas;
    }
    throw std::invalid_argument("unknown stage '" + text + "'");
}

size_t Circuit::cnot_count() const {
    size_t total = 0;
    for (const auto &layer : layers) {
        for (const auto &g : layer.gates) {
            total += g.is_cnot();
        }
    }
    return total;
}

size_t Circuit::stage_depth(Stage s) const {
    size_t total = 0;
    for (const auto &layer : layers) {
        total += layer.stage == s;
    }
    return total;
}

namespace {

void apply_gate(CliffordOp &c, const Gate &g) {
    if (g.is_cnot()) {
        c.prepend_cnot(g.qubits[0], g.qubits[1]);
    } else {
        c.prepend_1q(g.qubits[0], one_qubit_cliffords()[g.clifford]);
    }
}

}  // namespace

CliffordOp layer_clifford(const Layer &layer, size_t n) {
    CliffordOp c(n);
    for (const auto &g : layer.gates) {
        apply_gate(c, g);
    }
    return c;
}

CliffordOp circuit_clifford(const Circuit &circuit) {
    CliffordOp c(circuit.n);
    for (const auto &layer : circuit.layers) {
        for (const auto &g : layer.gates) {
            apply_gate(c, g);
        }
    }
    return c;
}

void check_against_device(const Circuit &circuit, const DeviceSpec &device) {
    if (circuit.n != device.n) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.n) + " qubits but device has " +
                                    std::to_string(device.n));
    }
    for (size_t l = 0; l < circuit.layers.size(); l++) {
        std::vector<bool> used(device.n, false);
        for (const auto &g : circuit.layers[l].gates) {
            std::string where = "layer " + std::to_string(l) + ": ";
            for (int q : g.qubits) {
                if (q < 0 || q >= device.n) {
                    throw std::invalid_argument(where + "gate " + g.name + " uses undeclared qubit " +
                                                std::to_string(q));
                }
                if (used[q]) {
                    throw std::invalid_argument(where + "qubit " + std::to_string(q) + " is used twice");
                }
                used[q] = true;
            }
            if (!device.declares(g.name)) {
                throw std::invalid_argument(where + "gate " + g.name + " is not in the device gate set");
            }
            if (g.is_cnot() && !device.has_edge(g.qubits[0], g.qubits[1])) {
                throw std::invalid_argument(where + "CNOT " + std::to_string(g.qubits[0]) + "," +
                                            std::to_string(g.qubits[1]) + " is not a device edge");
            }
        }
    }
}

void write_circuit(std::ostream &out, const Circuit &circuit) {
    out << "# n=" << circuit.n << "\n";
    out << "# m=" << circuit.m << "\n";
    out << "# target=" << circuit.target.str() << "\n";
    out << "# seed=" << circuit.seed << "\n";
    out << "# id=" << circuit.id << "\n";
    bool first = true;
    Stage current = Stage::Core;
    for (const auto &layer : circuit.layers) {
        if (first || layer.stage != current) {
            out << "# stage=" << to_string(layer.stage) << "\n";
            current = layer.stage;
            first = false;
        }
        if (layer.gates.empty()) {
            out << "-\n";
            continue;
        }
        for (size_t k = 0; k < layer.gates.size(); k++) {
            const auto &g = layer.gates[k];
            if (k > 0) {
                out << "; ";
            }
            out << g.name << " ";
            for (size_t j = 0; j < g.qubits.size(); j++) {
                if (j > 0) {
                    out << ",";
                }
                out << g.qubits[j];
            }
        }
        out << "\n";
    }
}

std::string circuit_to_text(const Circuit &circuit) {
    std::ostringstream out;
    write_circuit(out, circuit);
    return out.str();
}

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Gate parse_gate(const std::string &text, int line_no) {
    std::string t = trim(text);
    size_t sp = t.find(' ');
    if (sp == std::string::npos) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": gate '" + t + "' has no targets");
    }
    std::string name = t.substr(0, sp);
    std::vector<int> qubits;
    std::stringstream targets(trim(t.substr(sp + 1)));
    std::string item;
    while (std::getline(targets, item, ',')) {
        try {
            size_t used = 0;
            int q = std::stoi(trim(item), &used);
            if (used != trim(item).size()) {
                throw std::invalid_argument("bad");
            }
            qubits.push_back(q);
        } catch (const std::exception &) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": bad qubit index '" + item + "'");
        }
    }
    auto info = lookup_gate(name);
    if (!info) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown gate '" + name + "'");
    }
    if (static_cast<int>(qubits.size()) != info->arity) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": gate " + name + " expects " +
                                    std::to_string(info->arity) + " target(s)");
    }
    return Gate{name, qubits, info->clifford};
}

}  // namespace

Circuit read_circuit(std::istream &in) {
    Circuit c;
    bool have_n = false;
    Stage stage = Stage::Core;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            std::string body = trim(line.substr(1));
            size_t eq = body.find('=');
            if (eq == std::string::npos) {
                continue;
            }
            std::string key = trim(body.substr(0, eq));
            std::string value = trim(body.substr(eq + 1));
            try {
                if (key == "n") {
                    c.n = std::stoi(value);
                    have_n = true;
                } else if (key == "m") {
                    c.m = std::stoi(value);
                } else if (key == "target") {
                    c.target = BitVector::from_string(value);
                } else if (key == "seed") {
                    c.seed = std::stoull(value);
                } else if (key == "id") {
                    c.id = value;
                } else if (key == "stage") {
                    stage = stage_from_string(value);
                }
            } catch (const std::invalid_argument &e) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": bad header '" + line + "'");
            }
            continue;
        }
        Layer layer;
        layer.stage = stage;
        if (line != "-") {
            std::stringstream parts(line);
            std::string item;
            while (std::getline(parts, item, ';')) {
                if (!trim(item).empty()) {
                    layer.gates.push_back(parse_gate(item, line_no));
                }
            }
        }
        c.layers.push_back(std::move(layer));
    }
    if (!have_n) {
        throw std::invalid_argument("circuit header is missing '# n='");
    }
    if (c.target.size() == 0) {
        c.target = BitVector(c.n);
    }
    if (static_cast<int>(c.target.size()) != c.n) {
        throw std::invalid_argument("circuit target length does not match n");
    }
    for (const auto &layer : c.layers) {
        for (const auto &g : layer.gates) {
            for (int q : g.qubits) {
                if (q < 0 || q >= c.n) {
                    throw std::invalid_argument("gate " + g.name + " uses undeclared qubit " + std::to_string(q));
                }
            }
        }
    }
    return c;
}

Circuit circuit_from_text(const std::string &text) {
    std::istringstream in(text);
    return read_circuit(in);
}

}  // namespace drbench
