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

#ifndef DRBENCH_TOOLS_COMMANDS_H
#define DRBENCH_TOOLS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace drbench::cli {

enum ExitCode { kOk = 0, kConfigError = 2, kRuntimeError = 3, kAnalysisError = 4 };

struct GenerateOptions {
    std::string config;
    std::string out;
    int threads = 1;
};

struct SimulateOptions {
    std::string run;
    /// Bundled id (zero, main_sim, crosstalk5, depolarizing:LAMBDA) or a JSON file.
    std::string model;
    std::optional<uint64_t> shots;
    std::optional<uint64_t> seed;
    int threads = 1;
};

struct AnalyzeOptions {
    std::vector<std::string> datasets;
    std::string out;
    std::optional<int> n;
    int resamples = 1000;
    std::optional<uint64_t> seed;
    int threads = 1;
    /// p_cnot per dataset for the two-category (one CNOT, all one-qubit) solve.
    std::vector<double> mixing;
    /// Rows separated by ';', entries by ','.
    std::string mixing_matrix;
    std::optional<size_t> local_index;
    /// Hold A at 2^-n.
    bool fix_asymptote = false;
};

struct ReportOptions {
    std::vector<std::string> runs;
    std::string out;
};

int run_generate(const GenerateOptions &options, std::ostream &out, std::ostream &err);
int run_simulate(const SimulateOptions &options, std::ostream &out, std::ostream &err);
int run_analyze(const AnalyzeOptions &options, std::ostream &out, std::ostream &err);
int run_report(const ReportOptions &options, std::ostream &out, std::ostream &err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string &bytes);

/// Seed from DRBENCH_SEED when set and valid.
std::optional<uint64_t> seed_from_environment();

}  // namespace drbench::cli

#endif
