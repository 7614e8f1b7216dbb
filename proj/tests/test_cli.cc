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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "commands.h"
#include "json_io.h"

using namespace drbench;
using namespace drbench::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("drbench_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string write_config(const fs::path &dir, const json &config) {
    std::string path = (dir / "config.json").string();
    write_text_file(path, config.dump());
    return path;
}

json small_config(int n, double p_cnot, uint64_t seed) {
    return {{"protocol", "DRB"},
            {"device", {{"n", n}, {"topology", "all_to_all"}}},
            {"sampler", {{"type", "pcnot"}, {"p_cnot", p_cnot}}},
            {"lengths", {0, 4, 8, 12}},
            {"circuits_per_length", 6},
            {"shots", 100},
            {"seed", seed},
            {"compile", {{"trials", 2}}}};
}

json drb5_config() {
    return json::parse(read_text_file(DRBENCH_SOURCE_DIR "/configs/drb5.json"));
}

int generate(const fs::path &config, const fs::path &out, int threads = 1) {
    std::ostringstream o, e;
    return run_generate({config.string(), out.string(), threads}, o, e);
}

int simulate(const fs::path &run, const std::string &model, uint64_t shots, int threads = 1) {
    std::ostringstream o, e;
    SimulateOptions s;
    s.run = run.string();
    s.model = model;
    s.shots = shots;
    s.threads = threads;
    return run_simulate(s, o, e);
}

}  // namespace

TEST(Generate, DefaultDesignFileCountAndDeterminism) {
    fs::path dir = scratch("gen");
    std::string config = write_config(dir, drb5_config());
    ASSERT_EQ(generate(config, dir / "a"), kOk);
    ASSERT_EQ(generate(config, dir / "b", 3), kOk);
    size_t files = 0;
    for (const auto &entry : fs::directory_iterator(dir / "a" / "circuits")) {
        (void)entry;
        files++;
    }
    EXPECT_EQ(files, 84u);
    json a = read_json_file((dir / "a" / "manifest.json").string());
    json b = read_json_file((dir / "b" / "manifest.json").string());
    EXPECT_EQ(a["circuits"], b["circuits"]);
    EXPECT_EQ(a["outputs"], b["outputs"]);
    EXPECT_EQ(a["circuits"].size(), 84u);
    EXPECT_TRUE(a["history"][0].contains("timestamp"));
}

TEST(Generate, EnvironmentSeedOverridesConfig) {
    fs::path dir = scratch("env");
    std::string config = write_config(dir, small_config(2, 0.5, 1));
    ASSERT_EQ(generate(config, dir / "a"), kOk);
    setenv("DRBENCH_SEED", "99", 1);
    int rc = generate(config, dir / "b");
    unsetenv("DRBENCH_SEED");
    ASSERT_EQ(rc, kOk);
    json a = read_json_file((dir / "a" / "manifest.json").string());
    json b = read_json_file((dir / "b" / "manifest.json").string());
    EXPECT_EQ(b["seed"], 99);
    EXPECT_NE(a["outputs"], b["outputs"]);
}

TEST(Generate, ConfigErrorsExitTwo) {
    fs::path dir = scratch("bad");
    json config = drb5_config();
    config["device"].erase("edges");
    std::ostringstream o, e;
    EXPECT_EQ(run_generate({write_config(dir, config), (dir / "out").string(), 1}, o, e), kConfigError);
    EXPECT_NE(e.str().find("device.edges"), std::string::npos) << e.str();

    json bad_p = small_config(2, 1.5, 0);
    std::ostringstream o2, e2;
    EXPECT_EQ(run_generate({write_config(dir, bad_p), (dir / "out").string(), 1}, o2, e2), kConfigError);
    std::ostringstream o3, e3;
    EXPECT_EQ(run_generate({(dir / "missing.json").string(), (dir / "out").string(), 1}, o3, e3), kConfigError);
}

TEST(Simulate, ZeroModelAndBundledModels) {
    fs::path dir = scratch("sim");
    std::string config = write_config(dir, drb5_config());
    ASSERT_EQ(generate(config, dir / "run"), kOk);
    ASSERT_EQ(simulate(dir / "run", "zero", 50), kOk);
    auto rows = dataset_from_jsonl(read_text_file((dir / "run" / "dataset.jsonl").string()));
    ASSERT_EQ(rows.size(), 84u);
    for (const auto &row : rows) {
        EXPECT_EQ(row.successes, row.shots);
        EXPECT_EQ(row.shots, 50u);
    }
    EXPECT_EQ(simulate(dir / "run", "crosstalk5", 20), kOk);
    EXPECT_EQ(simulate(dir / "run", "main_sim", 20), kOk);
    EXPECT_EQ(simulate(dir / "run", "depolarizing:0.9", 20), kOk);
    json manifest = read_json_file((dir / "run" / "manifest.json").string());
    EXPECT_EQ(manifest["history"].size(), 5u);
    EXPECT_TRUE(manifest["outputs"].contains("dataset.jsonl"));
    EXPECT_EQ(simulate(dir / "run", "depolarizing:2", 20), kConfigError);
    EXPECT_EQ(simulate(dir / "nope", "zero", 20), kConfigError);
}

TEST(Simulate, CoverageGapExitsThreeNamingGate) {
    fs::path dir = scratch("gap");
    ASSERT_EQ(generate(write_config(dir, small_config(2, 0.9, 3)), dir / "run"), kOk);
    json model{{"n", 2}, {"channels", {{"1Q", json::array()}}}};
    write_text_file((dir / "model.json").string(), model.dump());
    std::ostringstream o, e;
    SimulateOptions s;
    s.run = (dir / "run").string();
    s.model = (dir / "model.json").string();
    EXPECT_EQ(run_simulate(s, o, e), kRuntimeError);
    EXPECT_NE(e.str().find("CNOT"), std::string::npos) << e.str();
}

TEST(Simulate, CalibrationFileAndThreadIndependence) {
    fs::path dir = scratch("cal");
    ASSERT_EQ(generate(write_config(dir, small_config(2, 0.5, 4)), dir / "run"), kOk);
    json cal{{"calibration", {{"one_qubit", {0.001, 0.002}}, {"cnot", {{0, 1, 0.02}, {1, 0, 0.03}}}, {"readout", {0.0, 0.0}}}}};
    write_text_file((dir / "cal.json").string(), cal.dump());
    ASSERT_EQ(simulate(dir / "run", (dir / "cal.json").string(), 100, 1), kOk);
    std::string first = read_text_file((dir / "run" / "dataset.jsonl").string());
    ASSERT_EQ(simulate(dir / "run", (dir / "cal.json").string(), 100, 4), kOk);
    EXPECT_EQ(first, read_text_file((dir / "run" / "dataset.jsonl").string()));
}

TEST(Analyze, ZeroErrorDatasetIsDegenerate) {
    fs::path dir = scratch("ana0");
    ASSERT_EQ(generate(write_config(dir, small_config(2, 0.5, 5)), dir / "run"), kOk);
    ASSERT_EQ(simulate(dir / "run", "zero", 50), kOk);
    std::ostringstream o, e;
    AnalyzeOptions a;
    a.datasets = {(dir / "run" / "dataset.jsonl").string()};
    a.resamples = 100;
    EXPECT_EQ(run_analyze(a, o, e), kAnalysisError);
    json results = read_json_file((dir / "run" / "results.json").string());
    EXPECT_EQ(results["r"], 0.0);
    EXPECT_EQ(results["p"], 1.0);
    EXPECT_TRUE(results["diagnostics"]["degenerate"].get<bool>());
    std::string csv = read_text_file((dir / "run" / "plot.csv").string());
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "m,P_m,q05,q25,q50,q75,q95,fitted");
}

TEST(Analyze, MixingSolveEmitsCategoryRates) {
    fs::path dir = scratch("mix");
    for (auto [name, p] : {std::pair{"hi", 0.75}, std::pair{"lo", 0.25}}) {
        json config = small_config(3, p, 6);
        config["lengths"] = {0, 10, 20, 30};
        fs::path sub = dir / name;
        fs::create_directories(sub);
        ASSERT_EQ(generate(write_config(sub, config), sub / "run"), kOk);
        ASSERT_EQ(simulate(sub / "run", "main_sim", 200), kOk);
    }
    std::ostringstream o, e;
    AnalyzeOptions a;
    a.datasets = {(dir / "hi" / "run" / "dataset.jsonl").string(), (dir / "lo" / "run" / "dataset.jsonl").string()};
    a.out = (dir / "out").string();
    a.resamples = 100;
    a.mixing = {0.75, 0.25};
    ASSERT_EQ(run_analyze(a, o, e), kOk) << e.str();
    json results = read_json_file((dir / "out" / "results.json").string());
    ASSERT_EQ(results["runs"].size(), 2u);
    const json &rates = results["rates"];
    EXPECT_TRUE(rates.contains("epsilon_A"));
    EXPECT_TRUE(rates.contains("epsilon_B"));
    EXPECT_TRUE(rates.contains("cnot"));
    EXPECT_EQ(rates["M"], json::parse("[[0.75,0.25],[0.25,0.75]]"));
    EXPECT_TRUE(fs::exists(dir / "out" / "plot_0.csv"));
    EXPECT_TRUE(fs::exists(dir / "out" / "plot_1.csv"));

    AnalyzeOptions single = a;
    single.datasets.resize(1);
    single.mixing = {0.75};
    std::ostringstream o2, e2;
    EXPECT_EQ(run_analyze(single, o2, e2), kConfigError);
}

TEST(Report, DeterministicSvgAndMissingResults) {
    fs::path dir = scratch("rep");
    std::vector<std::string> runs;
    for (int n : {2, 3}) {
        fs::path sub = dir / ("n" + std::to_string(n));
        fs::create_directories(sub);
        ASSERT_EQ(generate(write_config(sub, small_config(n, 0.5, 8)), sub / "run"), kOk);
        ASSERT_EQ(simulate(sub / "run", "main_sim", 200), kOk);
        std::ostringstream o, e;
        AnalyzeOptions a;
        a.datasets = {(sub / "run" / "dataset.jsonl").string()};
        a.resamples = 100;
        run_analyze(a, o, e);
        runs.push_back((sub / "run").string());
    }
    std::ostringstream o1, e1, o2, e2;
    ASSERT_EQ(run_report({runs, (dir / "r1").string()}, o1, e1), kOk) << e1.str();
    ASSERT_EQ(run_report({runs, (dir / "r2").string()}, o2, e2), kOk);
    std::string svg = read_text_file((dir / "r1" / "report.svg").string());
    EXPECT_EQ(svg, read_text_file((dir / "r2" / "report.svg").string()));
    EXPECT_NE(svg.find("n=2 r="), std::string::npos);
    EXPECT_NE(svg.find("n=3 r="), std::string::npos);
    EXPECT_NE(svg.find("#2ca02c"), std::string::npos);
    EXPECT_NE(svg.find("#d62728"), std::string::npos);
    EXPECT_EQ(o1.str(), read_text_file((dir / "r1" / "report.txt").string()));

    std::ostringstream o3, e3;
    EXPECT_EQ(run_report({{(dir / "absent").string()}, (dir / "r3").string()}, o3, e3), kAnalysisError);
}

TEST(EndToEnd, ByteReproducibleExceptTimestamps) {
    fs::path dir = scratch("e2e");
    std::string config = write_config(dir, small_config(3, 0.5, 10));
    std::string results[2];
    for (int k = 0; k < 2; k++) {
        fs::path run = dir / ("run" + std::to_string(k));
        ASSERT_EQ(generate(config, run, 1 + 2 * k), kOk);
        ASSERT_EQ(simulate(run, "main_sim", 100, 1 + 3 * k), kOk);
        std::ostringstream o, e;
        AnalyzeOptions a;
        a.datasets = {(run / "dataset.jsonl").string()};
        a.resamples = 100;
        a.seed = 1;
        a.threads = 1 + k;
        ASSERT_EQ(run_analyze(a, o, e), kOk) << e.str();
        json r = read_json_file((run / "results.json").string());
        r.erase("dataset");
        results[k] = r.dump() + read_text_file((run / "plot.csv").string()) +
                     read_text_file((run / "dataset.jsonl").string());
    }
    EXPECT_EQ(results[0], results[1]);
}

TEST(Formats, RoundTrips) {
    ExperimentDesign d;
    d.device = DeviceSpec::ring_with_center5(GateSet::C24);
    d.sampler = SamplerSpec::category({0.25, 0.5, 0.25}, {{}, {{0, 1}}, {{4, 0}, {4, 1}}}, GateSet::C24);
    d.lengths = {0, 3};
    d.seed = 123456789012345ull;
    d.frame_randomization = true;
    d.compile.cost = CostMetric::Depth;
    ExperimentDesign back = design_from_json(json::parse(design_to_json(d).dump()));
    EXPECT_EQ(design_to_json(back), design_to_json(d));
    EXPECT_EQ(back.device, d.device);
    EXPECT_EQ(back.sampler, d.sampler);

    for (const ErrorModel &m : {build_model_crosstalk5(), build_model_main_sim(3), build_model_layer_depolarizing(2, 0.9)}) {
        EXPECT_EQ(error_model_from_json(json::parse(error_model_to_json(m).dump())), m);
    }
    ErrorModel fixed(2);
    fixed.set_channel("H:1", GateChannel{{PauliTerm{PauliTerm::Kind::Fixed, {0, 1}, 0.125, "XZ"}}});
    EXPECT_EQ(error_model_from_json(error_model_to_json(fixed)), fixed);

    CalibrationData cal{{0.01, 0.02}, {{{0, 1}, 0.03}}, {0.1, 0.2}};
    CalibrationData cal_back = calibration_from_json(calibration_to_json(cal));
    EXPECT_EQ(cal_back.one_qubit, cal.one_qubit);
    EXPECT_EQ(cal_back.cnot, cal.cnot);
    EXPECT_EQ(cal_back.readout, cal.readout);

    std::vector<DatasetRow> rows{{"m0-0000", 0, BitVector::from_string("0110"), 1024, 1000,
                                  {{BitVector::from_string("0110"), 1000}, {BitVector::from_string("1110"), 24}}},
                                 {"m5-0001", 5, BitVector::from_string("0001"), 10, 3, {}}};
    EXPECT_EQ(dataset_from_jsonl(dataset_to_jsonl(rows)), rows);
    EXPECT_THROW(dataset_from_jsonl("{\"m\": 1, \"shots\": 2, \"successes\": 3}\n"), ConfigError);
}

TEST(Hashing, KnownDigest) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
