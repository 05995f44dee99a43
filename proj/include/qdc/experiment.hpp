// Copyright 2026 The qdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Experiment orchestration for the command-line front end: configuration,
 * execution of the exact / sampled / oracle routes, and report rendering as
 * JSON, CSV, or a fixed-width table.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qdc/classifier.hpp"
#include "qdc/iris.hpp"

namespace qdc {

/// Invalid command line or configuration input.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class RunMode { Exact, Sampled, Oracle, All };
enum class OutputFormat { Json, Csv, Table };

struct ExperimentConfig {
    ProblemSpec problem;
    RunMode mode = RunMode::All;
    std::uint64_t shots = 2048;
    std::uint64_t seed = 0;
    OutputFormat output = OutputFormat::Table;
    std::optional<std::string> export_cqasm;
    std::optional<std::string> iris_path;
};

/// One classification run plus everything needed to audit it. Re-running
/// the same config regenerates the report bit-identically apart from the
/// timestamp.
struct ExperimentReport {
    ExperimentConfig config;
    std::string timestamp;
    EncodedAngles angles;
    ReductionParams reduction;
    std::optional<ClassifyReport> exact;
    std::optional<ClassifyReport> sampled;
    std::optional<ClassifyReport> oracle;
    /// Signed sampled-minus-theoretical differences; present whenever the
    /// sampled route ran.
    std::optional<LabelDistribution> deltas;
};

RunMode parse_run_mode(const std::string &text);       // throws UsageError
OutputFormat parse_output_format(const std::string &text); // throws UsageError

/// Applies a JSON config file onto `config`. Keys mirror the CLI flags
/// (preset, indices, point-x0, point-x1, point-test, mode, shots, seed,
/// output, export-cqasm, iris); unknown keys are rejected.
void apply_config_json(const nlohmann::json &file, ExperimentConfig &config);

/// Rejects configs with zero shots or without exactly one problem source.
void validate_config(const ExperimentConfig &config);

ExperimentReport run_experiment(const ExperimentConfig &config);

std::string render_report(const ExperimentReport &report,
                          OutputFormat format);

} // namespace qdc
