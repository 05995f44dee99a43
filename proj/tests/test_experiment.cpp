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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>

#include <doctest.h>

#include "qdc/errors.hpp"
#include "qdc/experiment.hpp"

using namespace qdc;

namespace {

ExperimentConfig preset_config(const std::string &preset, RunMode mode) {
    ExperimentConfig config;
    config.problem.preset = preset;
    config.mode = mode;
    return config;
}

std::string strip_timestamp(std::string text) {
    return std::regex_replace(text,
                              std::regex("\"timestamp\": \"[^\"]*\""),
                              "\"timestamp\": \"-\"");
}

} // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(validate_config(ExperimentConfig{}), UsageError);

    ExperimentConfig conflict = preset_config("dataset1", RunMode::Exact);
    conflict.problem.indices = IrisIndices{34, 75, 13};
    CHECK_THROWS_AS(validate_config(conflict), UsageError);

    ExperimentConfig no_shots = preset_config("dataset1", RunMode::Sampled);
    no_shots.shots = 0;
    CHECK_THROWS_AS(validate_config(no_shots), UsageError);

    CHECK_NOTHROW(validate_config(preset_config("dataset1", RunMode::All)));
}

TEST_CASE("config file application") {
    ExperimentConfig config;
    apply_config_json(nlohmann::json::parse(R"({
        "preset": "dataset2",
        "mode": "sampled",
        "shots": 4096,
        "seed": 11,
        "output": "csv"
    })"),
                      config);
    CHECK(config.problem.preset == "dataset2");
    CHECK(config.mode == RunMode::Sampled);
    CHECK(config.shots == 4096);
    CHECK(config.seed == 11);
    CHECK(config.output == OutputFormat::Csv);

    ExperimentConfig rejected;
    CHECK_THROWS_AS(
        apply_config_json(nlohmann::json::parse(R"({"shotz": 12})"),
                          rejected),
        UsageError);
    CHECK_THROWS_AS(
        apply_config_json(nlohmann::json::parse(R"({"mode": "warp"})"),
                          rejected),
        UsageError);
    CHECK_THROWS_AS(
        apply_config_json(nlohmann::json::parse(R"({"point-x0": [1, 0]})"),
                          rejected),
        UsageError); // point flags must arrive together

    ExperimentConfig points;
    apply_config_json(nlohmann::json::parse(R"({
        "point-x0": [1.0, 0.0],
        "point-x1": [0.0, 1.0],
        "point-test": [0.6, 0.8]
    })"),
                      points);
    REQUIRE(points.problem.points.has_value());
    CHECK((*points.problem.points)[2][0] == 0.6);
}

TEST_CASE("table one rows through the experiment layer") {
    const ExperimentReport r1 =
        run_experiment(preset_config("dataset1", RunMode::All));
    REQUIRE(r1.exact.has_value());
    CHECK(std::abs(r1.exact->distribution->p_acc - 0.9870) < 5e-4);
    CHECK(std::abs(r1.exact->distribution->p_minus - 0.9870) < 5e-4);
    CHECK(std::abs(r1.exact->distribution->p_plus - 0.0130) < 5e-4);
    CHECK(r1.exact->label == -1);
    REQUIRE(r1.sampled.has_value());
    CHECK(r1.sampled->label == -1);
    REQUIRE(r1.oracle.has_value());
    CHECK(r1.oracle->label == -1);
    REQUIRE(r1.deltas.has_value());

    const ExperimentReport r2 =
        run_experiment(preset_config("dataset2", RunMode::All));
    CHECK(std::abs(r2.exact->distribution->p_acc - 0.5232) < 5e-4);
    CHECK(std::abs(r2.exact->distribution->p_minus - 0.4768) < 5e-4);
    CHECK(std::abs(r2.exact->distribution->p_plus - 0.5232) < 5e-4);
    CHECK(r2.exact->label == +1);
    CHECK(r2.sampled->label == +1);
    CHECK(r2.oracle->label == +1);
}

TEST_CASE("sampled mode carries deltas against theory") {
    const ExperimentReport report =
        run_experiment(preset_config("dataset2", RunMode::Sampled));
    CHECK_FALSE(report.exact.has_value());
    REQUIRE(report.sampled.has_value());
    REQUIRE(report.deltas.has_value());
    CHECK(std::abs(report.deltas->p_plus) < 0.04);
    CHECK(std::abs(report.sampled->distribution->p_plus - 0.5232) < 0.04);
}

TEST_CASE("sampled values converge to theory at large shot counts") {
    for (const char *preset : {"dataset1", "dataset2"}) {
        ExperimentConfig config = preset_config(preset, RunMode::All);
        config.shots = 1 << 17;
        const ExperimentReport report = run_experiment(config);
        REQUIRE(report.deltas.has_value());
        CHECK(std::abs(report.deltas->p_acc) <= 0.01);
        CHECK(std::abs(report.deltas->p_minus) <= 0.01);
        CHECK(std::abs(report.deltas->p_plus) <= 0.01);
    }
}

TEST_CASE("csv rendering") {
    const ExperimentReport report =
        run_experiment(preset_config("dataset1", RunMode::Exact));
    const std::string csv = render_report(report, OutputFormat::Csv);
    CHECK(csv.substr(0, 33) == "mode,p_acc,p_minus,p_plus,label\ne");
    CHECK(csv.find("exact,0.986976,0.986976,0.013024,-1\n") !=
          std::string::npos);

    CHECK(render_report(report, OutputFormat::Csv) == csv);
}

TEST_CASE("table rendering mirrors the reference layout") {
    const ExperimentReport report =
        run_experiment(preset_config("dataset1", RunMode::Exact));
    const std::string table = render_report(report, OutputFormat::Table);
    CHECK(table.find("0.9870") != std::string::npos);
    CHECK(table.find("0.0130") != std::string::npos);
    CHECK(table.find("P(y=-1)") != std::string::npos);
    CHECK(table.find("orientation=swapped") != std::string::npos);
}

TEST_CASE("json reports are deterministic up to the timestamp") {
    ExperimentConfig config = preset_config("dataset2", RunMode::All);
    config.seed = 3;
    const std::string first =
        strip_timestamp(render_report(run_experiment(config), OutputFormat::Json));
    const std::string second =
        strip_timestamp(render_report(run_experiment(config), OutputFormat::Json));
    CHECK(first == second);
    CHECK(first.find("\"orientation\": \"normal\"") != std::string::npos);
    CHECK(first.find("\"counts\"") != std::string::npos);
    CHECK(first.find("\"deltas\"") != std::string::npos);
}

TEST_CASE("oracle-only report renders without distributions") {
    const ExperimentReport report =
        run_experiment(preset_config("dataset1", RunMode::Oracle));
    const std::string csv = render_report(report, OutputFormat::Csv);
    CHECK(csv.find("oracle,,,,-1\n") != std::string::npos);
    const std::string json = render_report(report, OutputFormat::Json);
    CHECK(json.find("\"decision_sum\"") != std::string::npos);
}

TEST_CASE("cqasm export writes the reduced circuit") {
    const auto path = std::filesystem::temp_directory_path() /
                      "qdc_experiment_export.cq";
    ExperimentConfig config = preset_config("dataset2", RunMode::Exact);
    config.export_cqasm = path.string();
    run_experiment(config);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(text.find("H q[0]\n") != std::string::npos);
    CHECK(text.find("RY q[1], 0.046401\n") != std::string::npos);
    CHECK(text.find("CNOT q[0], q[1]\n") != std::string::npos);
    CHECK(text.find("measure q[1]\n") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("mode and format parsing") {
    CHECK(parse_run_mode("exact") == RunMode::Exact);
    CHECK(parse_run_mode("all") == RunMode::All);
    CHECK_THROWS_AS(parse_run_mode("approximate"), UsageError);
    CHECK(parse_output_format("json") == OutputFormat::Json);
    CHECK_THROWS_AS(parse_output_format("xml"), UsageError);
}
