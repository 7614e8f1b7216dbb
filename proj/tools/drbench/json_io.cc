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

#include "json_io.h"

#include <fstream>
#include <sstream>

namespace drbench::cli {

namespace {

template <typename T>
T field(const json &j, const std::string &key, const std::string &path) {
    if (!j.is_object() || !j.contains(key)) {
        throw ConfigError(path + key + ": missing");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ConfigError(path + key + ": " + e.what());
    }
}

template <typename T>
T field_or(const json &j, const std::string &key, const std::string &path, T fallback) {
    if (!j.is_object() || !j.contains(key)) {
        return fallback;
    }
    return field<T>(j, key, path);
}

std::vector<Edge> edges_from_json(const json &j, const std::string &path) {
    if (!j.is_array()) {
        throw ConfigError(path + ": expected a list of [control, target] pairs");
    }
    std::vector<Edge> edges;
    for (const auto &e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw ConfigError(path + ": expected a list of [control, target] pairs");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return edges;
}

json edges_to_json(const std::vector<Edge> &edges) {
    json out = json::array();
    for (const auto &[c, t] : edges) {
        out.push_back({c, t});
    }
    return out;
}

std::string cost_name(CostMetric c) { return c == CostMetric::CnotCount ? "cnot_count" : "depth"; }

}  // namespace

json device_to_json(const DeviceSpec &device) {
    json j;
    j["n"] = device.n;
    if (!device.qubit_names.empty()) {
        j["qubits"] = device.qubit_names;
    }
    j["edges"] = edges_to_json(device.edges);
    j["gate_set"] = to_string(device.gate_set);
    return j;
}

DeviceSpec device_from_json(const json &j) {
    int n = field<int>(j, "n", "device.");
    GateSet gates;
    try {
        gates = gate_set_from_string(field_or<std::string>(j, "gate_set", "device.", "HPI"));
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("device.gate_set: ") + e.what());
    }
    DeviceSpec d;
    if (j.contains("topology")) {
        auto topology = field<std::string>(j, "topology", "device.");
        if (topology == "all_to_all") {
            d = DeviceSpec::all_to_all(n, gates);
        } else if (topology == "ring") {
            d = DeviceSpec::ring(n, gates);
        } else if (topology == "line") {
            d = DeviceSpec::line(n, gates);
        } else if (topology == "ring_with_center5") {
            if (n != 5) {
                throw ConfigError("device.topology: ring_with_center5 needs n = 5");
            }
            d = DeviceSpec::ring_with_center5(gates);
        } else {
            throw ConfigError("device.topology: unknown topology '" + topology + "'");
        }
        if (j.contains("edges")) {
            throw ConfigError("device.edges: give either edges or topology, not both");
        }
    } else {
        d = DeviceSpec::all_to_all(std::max(n, 1), gates);
        d.n = n;
        if (j.contains("edges")) {
            d.edges = edges_from_json(j.at("edges"), "device.edges");
        } else if (n > 1) {
            throw ConfigError("device.edges: missing (list the directed CNOT pairs or set device.topology)");
        } else {
            d.edges.clear();
        }
    }
    if (j.contains("qubits")) {
        d.qubit_names = field<std::vector<std::string>>(j, "qubits", "device.");
    }
    try {
        d.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return d;
}

json sampler_to_json(const SamplerSpec &spec) {
    json j;
    j["type"] = to_string(spec.type);
    j["pool"] = to_string(spec.pool);
    if (spec.type == SamplerType::CategoryV) {
        j["v"] = spec.v;
        json cats = json::array();
        for (const auto &c : spec.categories) {
            cats.push_back(edges_to_json(c));
        }
        j["categories"] = cats;
    } else {
        j["p_cnot"] = spec.p_cnot;
    }
    return j;
}

SamplerSpec sampler_from_json(const json &j) {
    SamplerSpec s;
    try {
        s.type = sampler_type_from_string(field<std::string>(j, "type", "sampler."));
        s.pool = gate_set_from_string(field_or<std::string>(j, "pool", "sampler.", "HPI"));
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("sampler: ") + e.what());
    }
    if (s.type == SamplerType::CategoryV) {
        s.v = field<std::vector<double>>(j, "v", "sampler.");
        if (!j.contains("categories") || !j.at("categories").is_array()) {
            throw ConfigError("sampler.categories: missing");
        }
        for (const auto &c : j.at("categories")) {
            s.categories.push_back(edges_from_json(c, "sampler.categories"));
        }
    } else {
        s.p_cnot = field<double>(j, "p_cnot", "sampler.");
    }
    return s;
}

json compile_options_to_json(const CompileOptions &o) {
    return {{"trials", o.trials},
            {"respect_connectivity", o.respect_connectivity},
            {"heuristic", o.heuristic},
            {"cost", cost_name(o.cost)},
            {"seed", o.seed}};
}

CompileOptions compile_options_from_json(const json &j) {
    CompileOptions o;
    o.trials = field_or<int>(j, "trials", "compile.", o.trials);
    o.respect_connectivity = field_or<bool>(j, "respect_connectivity", "compile.", o.respect_connectivity);
    o.heuristic = field_or<bool>(j, "heuristic", "compile.", o.heuristic);
    o.seed = field_or<uint64_t>(j, "seed", "compile.", o.seed);
    auto cost = field_or<std::string>(j, "cost", "compile.", "cnot_count");
    if (cost == "cnot_count") {
        o.cost = CostMetric::CnotCount;
    } else if (cost == "depth") {
        o.cost = CostMetric::Depth;
    } else {
        throw ConfigError("compile.cost: expected cnot_count or depth, got '" + cost + "'");
    }
    return o;
}

json design_to_json(const ExperimentDesign &d) {
    json j;
    j["protocol"] = to_string(d.protocol);
    j["device"] = device_to_json(d.device);
    if (d.protocol == Protocol::DRB) {
        j["sampler"] = sampler_to_json(d.sampler);
        j["frame_randomization"] = d.frame_randomization;
        j["emit_frame_physically"] = d.emit_frame_physically;
    }
    j["lengths"] = d.lengths;
    j["circuits_per_length"] = d.circuits_per_length;
    j["shots"] = d.shots;
    j["seed"] = d.seed;
    j["compile"] = compile_options_to_json(d.compile);
    return j;
}

ExperimentDesign design_from_json(const json &j) {
    if (!j.is_object()) {
        throw ConfigError("config: expected a JSON object");
    }
    ExperimentDesign d;
    try {
        d.protocol = protocol_from_string(field_or<std::string>(j, "protocol", "", "DRB"));
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("protocol: ") + e.what());
    }
    if (!j.contains("device")) {
        throw ConfigError("device: missing");
    }
    d.device = device_from_json(j.at("device"));
    if (d.protocol == Protocol::DRB) {
        if (!j.contains("sampler")) {
            throw ConfigError("sampler: missing");
        }
        d.sampler = sampler_from_json(j.at("sampler"));
        d.frame_randomization = field_or<bool>(j, "frame_randomization", "", false);
        d.emit_frame_physically = field_or<bool>(j, "emit_frame_physically", "", false);
    }
    d.lengths = field_or<std::vector<int>>(j, "lengths", "", d.lengths);
    d.circuits_per_length = field_or<int>(j, "circuits_per_length", "", d.circuits_per_length);
    d.shots = field_or<int>(j, "shots", "", d.shots);
    d.seed = field_or<uint64_t>(j, "seed", "", d.seed);
    if (j.contains("compile")) {
        d.compile = compile_options_from_json(j.at("compile"));
    }
    try {
        d.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return d;
}

json error_model_to_json(const ErrorModel &model) {
    json channels = json::object();
    for (const auto &[label, channel] : model.channels()) {
        json terms = json::array();
        for (const auto &t : channel.terms) {
            json term{{"kind", to_string(t.kind)}, {"p", t.p}};
            if (!t.qubits.empty()) {
                term["qubits"] = t.qubits;
            }
            if (t.kind == PauliTerm::Kind::Fixed) {
                term["pauli"] = t.pauli;
            }
            terms.push_back(term);
        }
        channels[label] = terms;
    }
    return {{"n", model.num_qubits()},
            {"channels", channels},
            {"readout", model.readout()},
            {"core_depolarization", model.core_depolarization()}};
}

ErrorModel error_model_from_json(const json &j) {
    int n = field<int>(j, "n", "model.");
    if (n < 1) {
        throw ConfigError("model.n: must be >= 1");
    }
    ErrorModel m(n);
    if (j.contains("channels")) {
        const json &channels = j.at("channels");
        if (!channels.is_object()) {
            throw ConfigError("model.channels: expected an object keyed by gate label");
        }
        for (const auto &[label, terms] : channels.items()) {
            std::string path = "model.channels." + label;
            if (!terms.is_array()) {
                throw ConfigError(path + ": expected a list of terms");
            }
            GateChannel channel;
            for (const auto &t : terms) {
                PauliTerm term;
                try {
                    term.kind = pauli_term_kind_from_string(field<std::string>(t, "kind", path + "."));
                } catch (const std::invalid_argument &e) {
                    throw ConfigError(path + ".kind: " + e.what());
                }
                term.p = field<double>(t, "p", path + ".");
                term.qubits = field_or<std::vector<int>>(t, "qubits", path + ".", {});
                term.pauli = field_or<std::string>(t, "pauli", path + ".", "");
                channel.terms.push_back(term);
            }
            m.set_channel(label, channel);
        }
    }
    if (j.contains("readout")) {
        m.readout() = field<std::vector<double>>(j, "readout", "model.");
    }
    m.set_core_depolarization(field_or<double>(j, "core_depolarization", "model.", 0.0));
    try {
        m.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("model: ") + e.what());
    }
    return m;
}

json calibration_to_json(const CalibrationData &data) {
    json cnot = json::array();
    for (const auto &[e, p] : data.cnot) {
        cnot.push_back({e.first, e.second, p});
    }
    return {{"one_qubit", data.one_qubit}, {"cnot", cnot}, {"readout", data.readout}};
}

CalibrationData calibration_from_json(const json &j) {
    CalibrationData c;
    c.one_qubit = field<std::vector<double>>(j, "one_qubit", "calibration.");
    c.readout = field_or<std::vector<double>>(j, "readout", "calibration.", std::vector<double>(c.one_qubit.size()));
    if (!j.contains("cnot") || !j.at("cnot").is_array()) {
        throw ConfigError("calibration.cnot: expected a list of [control, target, rate]");
    }
    for (const auto &e : j.at("cnot")) {
        if (!e.is_array() || e.size() != 3) {
            throw ConfigError("calibration.cnot: expected a list of [control, target, rate]");
        }
        c.cnot[{e[0].get<int>(), e[1].get<int>()}] = e[2].get<double>();
    }
    return c;
}

json compile_summary_to_json(const CompileSummary &s) {
    return {{"count", s.count},
            {"cnots", s.cnots},
            {"gates", s.gates},
            {"depth", s.depth},
            {"mean_cnots", s.mean_cnots()},
            {"mean_gates", s.mean_gates()},
            {"mean_depth", s.mean_depth()}};
}

json dataset_row_to_json(const DatasetRow &row) {
    json hist = json::array();
    for (const auto &[bits, count] : row.histogram) {
        hist.push_back({bits.str(), count});
    }
    return {{"id", row.id},       {"m", row.m},
            {"target", row.target.str()}, {"shots", row.shots},
            {"successes", row.successes}, {"histogram", hist}};
}

DatasetRow dataset_row_from_json(const json &j) {
    DatasetRow row;
    row.id = field_or<std::string>(j, "id", "row.", "");
    row.m = field<int>(j, "m", "row.");
    row.target = BitVector::from_string(field_or<std::string>(j, "target", "row.", ""));
    row.shots = field<uint64_t>(j, "shots", "row.");
    row.successes = field<uint64_t>(j, "successes", "row.");
    if (row.successes > row.shots) {
        throw ConfigError("row.successes: exceeds shots in row '" + row.id + "'");
    }
    if (j.contains("histogram")) {
        for (const auto &h : j.at("histogram")) {
            if (!h.is_array() || h.size() != 2) {
                throw ConfigError("row.histogram: expected [bitstring, count] pairs");
            }
            row.histogram.emplace_back(BitVector::from_string(h[0].get<std::string>()), h[1].get<uint64_t>());
        }
    }
    return row;
}

std::string dataset_to_jsonl(const std::vector<DatasetRow> &rows) {
    std::string out;
    for (const auto &row : rows) {
        out += dataset_row_to_json(row).dump();
        out += '\n';
    }
    return out;
}

std::vector<DatasetRow> dataset_from_jsonl(const std::string &text) {
    std::vector<DatasetRow> rows;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        number++;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        try {
            rows.push_back(dataset_row_from_json(json::parse(line)));
        } catch (const json::exception &e) {
            throw ConfigError("dataset line " + std::to_string(number) + ": " + e.what());
        } catch (const ConfigError &e) {
            throw ConfigError("dataset line " + std::to_string(number) + ": " + e.what());
        }
    }
    return rows;
}

namespace {

json interval_to_json(const Interval &i) { return {{"sigma", i.sigma}, {"lower", i.lower}, {"upper", i.upper}}; }

}  // namespace

json fit_to_json(const DecayFit &fit, const std::string &protocol, const std::vector<int> &lengths) {
    const auto &d = fit.diagnostics;
    json j;
    j["protocol"] = protocol;
    j["n"] = fit.n;
    j["A"] = fit.A;
    j["B"] = fit.B;
    j["p"] = fit.p;
    j["r"] = fit.r;
    j["lengths"] = lengths;
    if (fit.has_intervals) {
        j["intervals"] = {{"A", interval_to_json(fit.A_interval)},
                          {"B", interval_to_json(fit.B_interval)},
                          {"p", interval_to_json(fit.p_interval)},
                          {"r", interval_to_json(fit.r_interval)}};
        j["bootstrap"] = {{"resamples", fit.bootstrap_resamples}, {"failures", fit.bootstrap_failures}};
    } else {
        j["intervals"] = nullptr;
    }
    j["diagnostics"] = {{"degenerate", d.degenerate}, {"fixed_asymptote", d.fixed_asymptote}, {"p_clamped", d.p_clamped},   {"converged", d.converged},
                        {"iterations", d.iterations}, {"chi2", d.chi2},             {"A0", d.A0},
                        {"B0", d.B0},                 {"p0", d.p0},                 {"min_length", d.min_length},
                        {"max_length", d.max_length}, {"residuals", d.residuals},   {"message", d.message}};
    return j;
}

json read_json_file(const std::string &path) {
    std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path + ": cannot open");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error(path + ": cannot write");
    }
    out << text;
    if (!out) {
        throw std::runtime_error(path + ": write failed");
    }
}

}  // namespace drbench::cli
