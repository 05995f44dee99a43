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

// Command-line front end. Exit codes: 0 success, 2 usage error, 3 data or
// format error, 4 numerical/degenerate error, 5 no shot accepted.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdc/errors.hpp"
#include "qdc/experiment.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitNoAcceptance = 5;

qdc::Vec2 parse_point_flag(const std::string &text, const std::string &flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw qdc::UsageError(flag + " expects two comma-separated numbers");
    }
    try {
        std::size_t used = 0;
        const std::string first = text.substr(0, comma);
        const std::string second = text.substr(comma + 1);
        const double x = std::stod(first, &used);
        if (used != first.size()) {
            throw std::invalid_argument(first);
        }
        const double y = std::stod(second, &used);
        if (used != second.size()) {
            throw std::invalid_argument(second);
        }
        return qdc::Vec2{x, y};
    } catch (const std::exception &) {
        throw qdc::UsageError(flag + " expects two comma-separated numbers");
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Two-qubit distance-based classifier"};

    std::string preset;
    std::vector<int> indices;
    std::string point_x0, point_x1, point_test;
    std::string mode_text, output_text;
    std::uint64_t shots = 0, seed = 0;
    std::string config_path, export_cqasm, iris_path;

    auto *preset_opt =
        app.add_option("--preset", preset, "Bundled problem: dataset1 or dataset2");
    auto *indices_opt = app.add_option(
        "--indices", indices,
        "Three Iris row numbers (x0,x1,test), e.g. --indices 34,75,13");
    indices_opt->delimiter(',')->expected(3);
    auto *x0_opt = app.add_option("--point-x0", point_x0,
                                  "Class -1 training point as 'x,y'");
    auto *x1_opt = app.add_option("--point-x1", point_x1,
                                  "Class +1 training point as 'x,y'");
    auto *test_opt =
        app.add_option("--point-test", point_test, "Test point as 'x,y'");
    auto *mode_opt = app.add_option("--mode", mode_text,
                                    "exact | sampled | oracle | all");
    auto *shots_opt =
        app.add_option("--shots", shots, "Shots for the sampled route");
    auto *seed_opt = app.add_option("--seed", seed, "Sampling seed");
    auto *output_opt =
        app.add_option("--output", output_text, "json | csv | table");
    auto *cqasm_opt = app.add_option("--export-cqasm", export_cqasm,
                                     "Write the reduced circuit as cQASM");
    auto *iris_opt =
        app.add_option("--iris", iris_path, "Path to the Iris CSV");
    app.add_option("--config", config_path,
                   "JSON config file; flags override file values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        qdc::ExperimentConfig config;

        if (!config_path.empty()) {
            std::ifstream file(config_path);
            if (!file) {
                throw qdc::UsageError("cannot open config file '" +
                                      config_path + "'");
            }
            nlohmann::json parsed;
            try {
                file >> parsed;
            } catch (const nlohmann::json::exception &e) {
                throw qdc::UsageError("config file is not valid JSON: " +
                                      std::string(e.what()));
            }
            qdc::apply_config_json(parsed, config);
        }

        if (preset_opt->count() > 0) {
            config.problem.preset = preset;
        }
        if (indices_opt->count() > 0) {
            config.problem.indices =
                qdc::IrisIndices{indices[0], indices[1], indices[2]};
        }
        if (x0_opt->count() + x1_opt->count() + test_opt->count() > 0) {
            if (x0_opt->count() == 0 || x1_opt->count() == 0 ||
                test_opt->count() == 0) {
                throw qdc::UsageError("--point-x0, --point-x1 and "
                                      "--point-test must be given together");
            }
            config.problem.points = std::array<qdc::Vec2, 3>{
                parse_point_flag(point_x0, "--point-x0"),
                parse_point_flag(point_x1, "--point-x1"),
                parse_point_flag(point_test, "--point-test"),
            };
        }
        if (mode_opt->count() > 0) {
            config.mode = qdc::parse_run_mode(mode_text);
        }
        if (shots_opt->count() > 0) {
            config.shots = shots;
        }
        if (seed_opt->count() > 0) {
            config.seed = seed;
        }
        if (output_opt->count() > 0) {
            config.output = qdc::parse_output_format(output_text);
        }
        if (cqasm_opt->count() > 0) {
            config.export_cqasm = export_cqasm;
        }
        if (iris_opt->count() > 0) {
            config.iris_path = iris_path;
        }

        qdc::validate_config(config);
        const qdc::ExperimentReport report = qdc::run_experiment(config);
        std::cout << qdc::render_report(report, config.output);
        return 0;
    } catch (const qdc::UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qdc::FormatError &e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const qdc::NoAcceptanceError &e) {
        std::cerr << "no acceptance: " << e.what() << "\n";
        return kExitNoAcceptance;
    } catch (const qdc::DegenerateError &e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid value: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::out_of_range &e) {
        std::cerr << "invalid value: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
