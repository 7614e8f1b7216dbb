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

#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "commands.h"

namespace {

int default_threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

}  // namespace

int main(int argc, char **argv) {
    using namespace drbench::cli;
    CLI::App app{"Direct and Clifford randomized benchmarking: generate, simulate, analyze, report"};
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "Worker threads (default: all cores)")->check(CLI::PositiveNumber);

    GenerateOptions gen;
    auto *generate = app.add_subcommand("generate", "Sample and compile benchmark circuits");
    generate->add_option("--config", gen.config, "Run configuration (JSON)")->required();
    generate->add_option("--out", gen.out, "Output run directory")->required();

    SimulateOptions sim;
    uint64_t shots = 0, sim_seed = 0;
    auto *simulate = app.add_subcommand("simulate", "Simulate a generated run under an error model");
    simulate->add_option("--run", sim.run, "Run directory from generate")->required();
    simulate->add_option("--model", sim.model, "zero, main_sim, crosstalk5, depolarizing:LAMBDA, or a JSON file")
        ->required();
    auto *shots_opt = simulate->add_option("--shots", shots, "Shots per circuit (default: config)");
    auto *sim_seed_opt = simulate->add_option("--seed", sim_seed, "Simulation seed (default: manifest seed)");

    AnalyzeOptions ana;
    uint64_t ana_seed = 0;
    int n = 0;
    size_t local_index = 0;
    auto *analyze = app.add_subcommand("analyze", "Fit decays and estimate error rates");
    analyze->add_option("datasets", ana.datasets, "dataset.jsonl files")->required();
    analyze->add_option("--out", ana.out, "Output directory (default: first dataset's directory)");
    auto *n_opt = analyze->add_option("--n", n, "Qubit count (default: from targets)");
    analyze->add_option("--resamples", ana.resamples, "Bootstrap resamples")->check(CLI::Range(100, 1000000));
    auto *ana_seed_opt = analyze->add_option("--seed", ana_seed, "Bootstrap seed");
    analyze->add_option("--mixing", ana.mixing, "p_cnot of each dataset, for the CNOT / one-qubit solve")
        ->delimiter(',');
    analyze->add_option("--mixing-matrix", ana.mixing_matrix, "Mixing matrix rows, e.g. 0.75,0.25;0.25,0.75");
    auto *local_opt = analyze->add_option("--local-index", local_index, "Column of the all one-qubit category");
    analyze->add_flag("--fix-asymptote", ana.fix_asymptote, "Hold A at 2^-n instead of fitting it");

    ReportOptions rep;
    auto *report = app.add_subcommand("report", "Render decay curves and a rate table");
    report->add_option("runs", rep.runs, "Run directories or results.json files")->required();
    report->add_option("--out", rep.out, "Output directory (default: current directory)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    if (generate->parsed()) {
        gen.threads = threads;
        return run_generate(gen, std::cout, std::cerr);
    }
    if (simulate->parsed()) {
        sim.threads = threads;
        if (*shots_opt) {
            sim.shots = shots;
        }
        if (*sim_seed_opt) {
            sim.seed = sim_seed;
        }
        return run_simulate(sim, std::cout, std::cerr);
    }
    if (analyze->parsed()) {
        ana.threads = threads;
        if (*n_opt) {
            ana.n = n;
        }
        if (*ana_seed_opt) {
            ana.seed = ana_seed;
        }
        if (*local_opt) {
            ana.local_index = local_index;
        }
        return run_analyze(ana, std::cout, std::cerr);
    }
    return run_report(rep, std::cout, std::cerr);
}
