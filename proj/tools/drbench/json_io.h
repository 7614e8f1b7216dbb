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

#ifndef DRBENCH_TOOLS_JSON_IO_H
#define DRBENCH_TOOLS_JSON_IO_H

#include <stdexcept>
#include <string>
#include <vector>

#include "drbench/analysis.h"
#include "drbench/compilation.h"
#include "drbench/device.h"
#include "drbench/error_model.h"
#include "drbench/protocols.h"
#include "drbench/sampling.h"
#include "drbench/simulator.h"
#include "json.hpp"

namespace drbench::cli {

using json = nlohmann::ordered_json;

/// A malformed or inconsistent input file. The message starts with the
/// dotted path of the offending field.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

json device_to_json(const DeviceSpec &device);
DeviceSpec device_from_json(const json &j);

json sampler_to_json(const SamplerSpec &spec);
SamplerSpec sampler_from_json(const json &j);

json compile_options_to_json(const CompileOptions &options);
CompileOptions compile_options_from_json(const json &j);

json design_to_json(const ExperimentDesign &design);
/// Parses and validates a run configuration.
ExperimentDesign design_from_json(const json &j);

json error_model_to_json(const ErrorModel &model);
ErrorModel error_model_from_json(const json &j);

json calibration_to_json(const CalibrationData &data);
CalibrationData calibration_from_json(const json &j);

json compile_summary_to_json(const CompileSummary &s);

json dataset_row_to_json(const DatasetRow &row);
DatasetRow dataset_row_from_json(const json &j);
std::string dataset_to_jsonl(const std::vector<DatasetRow> &rows);
std::vector<DatasetRow> dataset_from_jsonl(const std::string &text);

json fit_to_json(const DecayFit &fit, const std::string &protocol, const std::vector<int> &lengths);

json read_json_file(const std::string &path);
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace drbench::cli

#endif
