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

#include "commands.h"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>

#include "drbench/analysis.h"
#include "drbench/circuit.h"
#include "drbench/protocols.h"
#include "drbench/simulator.h"
#include "json_io.h"

#ifndef DRBENCH_VERSION
#define DRBENCH_VERSION "unknown"
#endif

namespace drbench::cli {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string &bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    static const char *hex = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < length; k++) {
        out += hex[digest[k] >> 4];
        out += hex[digest[k] & 15];
    }
    return out;
}

std::optional<uint64_t> seed_from_environment() {
    const char *value = std::getenv("DRBENCH_SEED");
    if (value == nullptr || *value == '\0') {
        return std::nullopt;
    }
    char *end = nullptr;
    unsigned long long seed = std::strtoull(value, &end, 10);
    if (*end != '\0') {
        throw ConfigError(std::string("DRBENCH_SEED: not an unsigned integer: ") + value);
    }
    return seed;
}

namespace {

class RuntimeFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class AnalysisFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

// Writes `text` to dir/name and records its digest in the manifest outputs.
void write_output(const fs::path &dir, const std::string &name, const std::string &text, json *outputs) {
    write_text_file((dir / name).string(), text);
    if (outputs != nullptr) {
        (*outputs)[name] = sha256_hex(text);
    }
}

int guarded(std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const AnalysisFailure &e) {
        err << "analysis error: " << e.what() << "\n";
        return kAnalysisError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

}  // namespace

int run_generate(const GenerateOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        ExperimentDesign design = design_from_json(read_json_file(options.config));
        if (auto seed = seed_from_environment()) {
            design.seed = *seed;
        }
        Experiment experiment;
        try {
            experiment = generate_experiment(design, options.threads);
        } catch (const std::exception &e) {
            throw RuntimeFailure(std::string("generation failed: ") + e.what());
        }
        fs::path dir(options.out);
        fs::create_directories(dir / "circuits");
        json outputs = json::object();
        json circuits = json::array();
        for (const auto &c : experiment.circuits) {
            std::string name = "circuits/" + c.id + ".txt";
            std::string text = circuit_to_text(c);
            write_output(dir, name, text, &outputs);
            circuits.push_back({{"id", c.id}, {"m", c.m}, {"file", name}, {"sha256", outputs[name]}});
        }
        json manifest;
        manifest["tool"] = "drbench";
        manifest["version"] = DRBENCH_VERSION;
        manifest["config"] = design_to_json(design);
        manifest["seed"] = design.seed;
        manifest["circuits"] = circuits;
        manifest["compile_stats"] = compile_summary_to_json(experiment.compile_stats);
        manifest["outputs"] = outputs;
        manifest["history"] = json::array(
            {{{"subcommand", "generate"}, {"timestamp", timestamp()}, {"config_file", options.config},
              {"config_sha256", sha256_hex(read_text_file(options.config))}}});
        write_text_file((dir / "manifest.json").string(), dump(manifest));
        out << "generated " << experiment.circuits.size() << " circuits in " << dir.string() << "\n";
        return kOk;
    });
}

namespace {

ErrorModel resolve_model(const std::string &id, const DeviceSpec &device, json &descriptor) {
    int n = device.n;
    descriptor = {{"id", id}};
    if (id == "zero") {
        return build_model_zero(n);
    }
    if (id == "main_sim") {
        return build_model_main_sim(n);
    }
    if (id == "crosstalk5") {
        if (n != 5) {
            throw ConfigError("model: crosstalk5 is a 5-qubit model, the run has n = " + std::to_string(n));
        }
        return build_model_crosstalk5();
    }
    const std::string prefix = "depolarizing:";
    if (id.rfind(prefix, 0) == 0) {
        char *end = nullptr;
        double lambda = std::strtod(id.c_str() + prefix.size(), &end);
        if (*end != '\0' || !(lambda >= 0 && lambda <= 1)) {
            throw ConfigError("model: depolarizing needs a survival probability in [0, 1]");
        }
        return build_model_layer_depolarizing(n, lambda);
    }
    std::string text = read_text_file(id);
    descriptor["sha256"] = sha256_hex(text);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw ConfigError(id + ": " + e.what());
    }
    ErrorModel model;
    if (j.contains("calibration")) {
        try {
            model = build_model_from_calibration(device, calibration_from_json(j.at("calibration")));
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("calibration: ") + e.what());
        }
    } else {
        model = error_model_from_json(j);
    }
    if (model.num_qubits() != n) {
        throw ConfigError("model.n: " + std::to_string(model.num_qubits()) + " does not match the run's " +
                          std::to_string(n) + " qubits");
    }
    return model;
}

json read_manifest(const fs::path &dir) {
    fs::path path = dir / "manifest.json";
    if (!fs::exists(path)) {
        throw ConfigError(path.string() + ": missing (run generate first)");
    }
    return read_json_file(path.string());
}

}  // namespace

int run_simulate(const SimulateOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        fs::path dir(options.run);
        json manifest = read_manifest(dir);
        ExperimentDesign design = design_from_json(manifest.at("config"));
        json descriptor;
        ErrorModel model = resolve_model(options.model, design.device, descriptor);
        std::vector<Circuit> circuits;
        for (const auto &entry : manifest.at("circuits")) {
            std::string file = entry.at("file").get<std::string>();
            std::string text = read_text_file((dir / file).string());
            if (sha256_hex(text) != entry.at("sha256").get<std::string>()) {
                throw RuntimeFailure(file + ": digest does not match the manifest");
            }
            circuits.push_back(circuit_from_text(text));
        }
        for (const auto &c : circuits) {
            try {
                model.check_covers(c);
            } catch (const std::invalid_argument &e) {
                throw RuntimeFailure(std::string("model does not cover circuit ") + c.id + ": " + e.what());
            }
        }
        uint64_t shots = options.shots.value_or(static_cast<uint64_t>(design.shots));
        uint64_t seed = manifest.value("seed", uint64_t{0});
        if (auto env = seed_from_environment()) {
            seed = *env;
        }
        if (options.seed) {
            seed = *options.seed;
        }
        Dataset data = run_experiment(circuits, model, shots, seed, options.threads);
        json &outputs = manifest["outputs"];
        write_output(dir, "dataset.jsonl", dataset_to_jsonl(data.rows), &outputs);
        descriptor["model_sha256"] = sha256_hex(error_model_to_json(model).dump());
        manifest["history"].push_back({{"subcommand", "simulate"},
                                       {"timestamp", timestamp()},
                                       {"model", descriptor},
                                       {"design_sha256", sha256_hex(manifest.at("config").dump())},
                                       {"shots", shots},
                                       {"seed", seed},
                                       {"dataset_sha256", outputs["dataset.jsonl"]}});
        write_text_file((dir / "manifest.json").string(), dump(manifest));
        out << "simulated " << data.rows.size() << " circuits x " << shots << " shots -> "
            << (dir / "dataset.jsonl").string() << "\n";
        return kOk;
    });
}

namespace {

std::vector<std::vector<double>> parse_matrix(const std::string &text) {
    std::vector<std::vector<double>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<double> values;
        std::stringstream rs(row);
        std::string cell;
        while (std::getline(rs, cell, ',')) {
            try {
                size_t used = 0;
                values.push_back(std::stod(cell, &used));
                if (cell.find_first_not_of(" \t", used) != std::string::npos) {
                    throw std::invalid_argument(cell);
                }
            } catch (const std::exception &) {
                throw ConfigError("--mixing-matrix: bad number '" + cell + "'");
            }
        }
        rows.push_back(values);
    }
    return rows;
}

std::string plot_csv(const std::vector<PlotRow> &rows) {
    std::string out = "m,P_m,q05,q25,q50,q75,q95,fitted\n";
    char buf[256];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", r.m, r.mean, r.q05, r.q25,
                      r.q50, r.q75, r.q95, r.fitted);
        out += buf;
    }
    return out;
}

struct RunAnalysis {
    json result;
    DecayFit fit;
    bool degenerate = false;
};

RunAnalysis analyze_one(const std::string &path, const AnalyzeOptions &options, uint64_t seed, std::string &csv) {
    std::vector<DatasetRow> rows = dataset_from_jsonl(read_text_file(path));
    if (rows.empty()) {
        throw ConfigError(path + ": no rows");
    }
    int n = options.n.value_or(static_cast<int>(rows[0].target.size()));
    if (n < 1) {
        throw ConfigError(path + ": rows carry no target; pass --n");
    }
    std::string protocol = "DRB";
    json compile_stats;
    fs::path manifest_path = fs::path(path).parent_path() / "manifest.json";
    if (fs::exists(manifest_path)) {
        json manifest = read_json_file(manifest_path.string());
        if (manifest.contains("config")) {
            protocol = manifest["config"].value("protocol", protocol);
        }
        if (manifest.contains("compile_stats")) {
            compile_stats = manifest["compile_stats"];
        }
    }
    auto summary = average_success(rows);
    std::vector<int> lengths;
    for (const auto &[m, s] : summary) {
        lengths.push_back(m);
    }
    RunAnalysis run;
    try {
        run.fit = analyze_dataset(rows, n, {options.resamples, seed, options.threads}, options.fix_asymptote);
    } catch (const std::invalid_argument &e) {
        throw AnalysisFailure(path + ": " + e.what());
    }
    run.result = fit_to_json(run.fit, protocol, lengths);
    run.result["dataset"] = path;
    run.result["dataset_sha256"] = sha256_hex(read_text_file(path));
    if (protocol == "CRB" && compile_stats.is_object() && !run.fit.diagnostics.degenerate && run.fit.r < 1) {
        double depth = compile_stats.value("mean_depth", 0.0), cnots = compile_stats.value("mean_cnots", 0.0);
        json rescaled = json::object();
        if (depth > 0) {
            rescaled["alpha_depth"] = depth;
            rescaled["r_rcrb_depth"] = crb_rescale(run.fit.r, depth);
        }
        if (cnots > 0) {
            rescaled["alpha_cnots"] = cnots;
            rescaled["r_rcrb_cnots"] = crb_rescale(run.fit.r, cnots);
        }
        run.result["rescaled"] = rescaled;
    }
    run.degenerate = run.fit.diagnostics.degenerate;
    csv = plot_csv(plot_rows(summary, run.fit));
    return run;
}

json solve_rates(const std::vector<RunAnalysis> &runs, const AnalyzeOptions &options) {
    RateSystem system;
    size_t local_index = 0;
    if (!options.mixing.empty()) {
        if (options.mixing.size() != runs.size()) {
            throw ConfigError("--mixing: give one p_cnot per dataset");
        }
        try {
            system.M = mixing_matrix(options.mixing);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("--mixing: ") + e.what());
        }
        local_index = options.local_index.value_or(1);
    } else {
        system.M = parse_matrix(options.mixing_matrix);
        if (system.M.size() != runs.size()) {
            throw ConfigError("--mixing-matrix: give one row per dataset");
        }
        local_index = options.local_index.value_or(0);
    }
    int n = runs[0].fit.n;
    for (const auto &run : runs) {
        if (run.fit.n != n) {
            throw ConfigError("rate solve needs datasets with equal qubit counts");
        }
        system.r.push_back(run.fit.r);
        system.r_sigma.push_back(run.fit.has_intervals ? run.fit.r_interval.sigma : 0.0);
    }
    CategoryRates rates;
    try {
        rates = solve_category_rates(system);
    } catch (const std::invalid_argument &e) {
        throw AnalysisFailure(std::string("rate solve: ") + e.what());
    }
    json j{{"M", system.M},           {"r", system.r},
           {"r_sigma", system.r_sigma}, {"epsilon", rates.epsilon},
           {"epsilon_sigma", rates.sigma}, {"local_index", local_index}};
    if (!options.mixing.empty() && rates.epsilon.size() == 2) {
        j["epsilon_A"] = rates.epsilon[0];
        j["epsilon_B"] = rates.epsilon[1];
    }
    if (n >= 2 && local_index < rates.epsilon.size()) {
        BuildingBlockRates b = extract_building_block_rates(rates, local_index, n);
        j["local"] = b.local;
        j["local_sigma"] = b.local_sigma;
        j["cnot_class"] = b.cnot_class;
        j["cnot_class_sigma"] = b.cnot_class_sigma;
        j["cnot"] = b.cnot;
        j["cnot_sigma"] = b.cnot_sigma;
        j["flagged"] = b.flagged;
    }
    return j;
}

}  // namespace

int run_analyze(const AnalyzeOptions &options, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (options.datasets.empty()) {
            throw ConfigError("analyze: no datasets given");
        }
        if (!options.mixing.empty() && !options.mixing_matrix.empty()) {
            throw ConfigError("--mixing and --mixing-matrix are exclusive");
        }
        bool solve = !options.mixing.empty() || !options.mixing_matrix.empty();
        if (solve && options.datasets.size() < 2) {
            throw ConfigError("rate solve needs at least two datasets");
        }
        uint64_t seed = 0;
        if (auto env = seed_from_environment()) {
            seed = *env;
        }
        if (options.seed) {
            seed = *options.seed;
        }
        fs::path dir = options.out.empty() ? fs::path(options.datasets[0]).parent_path() : fs::path(options.out);
        if (dir.empty()) {
            dir = ".";
        }
        fs::create_directories(dir);
        std::vector<RunAnalysis> runs;
        bool degenerate = false;
        char line[256];
        for (size_t k = 0; k < options.datasets.size(); k++) {
            std::string csv;
            runs.push_back(analyze_one(options.datasets[k], options, seed, csv));
            std::string name = options.datasets.size() == 1 ? "plot.csv" : "plot_" + std::to_string(k) + ".csv";
            write_text_file((dir / name).string(), csv);
            runs.back().result["plot"] = name;
            const DecayFit &f = runs.back().fit;
            degenerate = degenerate || runs.back().degenerate;
            std::snprintf(line, sizeof line, "%s: n=%d p=%.6f r=%.6f +/- %.6f%s\n", options.datasets[k].c_str(), f.n,
                          f.p, f.r, 2 * f.r_interval.sigma, runs.back().degenerate ? " (degenerate fit)" : "");
            out << line;
        }
        json results;
        if (runs.size() == 1) {
            results = runs[0].result;
        } else {
            results["runs"] = json::array();
            for (const auto &run : runs) {
                results["runs"].push_back(run.result);
            }
        }
        if (solve) {
            results["rates"] = solve_rates(runs, options);
            out << "epsilon = " << results["rates"]["epsilon"].dump() << "\n";
            if (results["rates"].contains("cnot")) {
                std::snprintf(line, sizeof line, "local = %.6f, cnot = %.6f +/- %.6f\n",
                              results["rates"]["local"].get<double>(), results["rates"]["cnot"].get<double>(),
                              2 * results["rates"]["cnot_sigma"].get<double>());
                out << line;
            }
        }
        write_text_file((dir / "results.json").string(), dump(results));
        if (degenerate) {
            err << "analysis error: degenerate fit (all P_m equal); p reported as 1, see diagnostics\n";
            return kAnalysisError;
        }
        return kOk;
    });
}

}  // namespace drbench::cli
