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

#include "qdc/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// JSON reports carry numbers at 6 decimal places so identical configs render
// byte-identically.
double round6(double v) {
    const double rounded = std::round(v * 1e6) / 1e6;
    return rounded == 0.0 ? 0.0 : rounded;
}

std::string fixed6(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.6f", v);
    return buffer;
}

std::string fixed4(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.4f", v);
    return buffer;
}

std::string label_text(int label) {
    if (label == 0) {
        return "tie";
    }
    return std::to_string(label);
}

std::string mode_name(RunMode mode) {
    switch (mode) {
    case RunMode::Exact:
        return "exact";
    case RunMode::Sampled:
        return "sampled";
    case RunMode::Oracle:
        return "oracle";
    case RunMode::All:
        return "all";
    }
    return "all";
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buffer;
}

ordered_json problem_json(const ProblemSpec &spec) {
    ordered_json out;
    if (spec.preset) {
        out["preset"] = *spec.preset;
    } else if (spec.indices) {
        out["indices"] = {spec.indices->x0, spec.indices->x1,
                          spec.indices->test};
    } else if (spec.points) {
        out["point-x0"] = {(*spec.points)[0][0], (*spec.points)[0][1]};
        out["point-x1"] = {(*spec.points)[1][0], (*spec.points)[1][1]};
        out["point-test"] = {(*spec.points)[2][0], (*spec.points)[2][1]};
    } else if (spec.angles) {
        out["angles"] = {(*spec.angles)[0], (*spec.angles)[1]};
    }
    return out;
}

ordered_json mode_result_json(const ClassifyReport &result, bool sampled) {
    ordered_json out;
    if (result.distribution) {
        out["p_acc"] = round6(result.distribution->p_acc);
        out["p_minus"] = round6(result.distribution->p_minus);
        out["p_plus"] = round6(result.distribution->p_plus);
    }
    out["label"] = result.label;
    if (sampled) {
        out["accepted_shots"] = result.accepted_shots;
        ordered_json counts = ordered_json::object();
        if (result.counts) {
            for (const auto &[bits, count] : result.counts->counts) {
                counts[bits] = count;
            }
        }
        out["counts"] = counts;
    }
    return out;
}

Vec2 parse_point_json(const json &value, const char *key) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
        !value[1].is_number()) {
        throw UsageError(std::string("config key '") + key +
                         "' must be an array of two numbers");
    }
    return Vec2{value[0].get<double>(), value[1].get<double>()};
}

} // namespace

RunMode parse_run_mode(const std::string &text) {
    if (text == "exact") {
        return RunMode::Exact;
    }
    if (text == "sampled") {
        return RunMode::Sampled;
    }
    if (text == "oracle") {
        return RunMode::Oracle;
    }
    if (text == "all") {
        return RunMode::All;
    }
    throw UsageError("invalid mode '" + text +
                     "' (expected exact|sampled|oracle|all)");
}

OutputFormat parse_output_format(const std::string &text) {
    if (text == "json") {
        return OutputFormat::Json;
    }
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "table") {
        return OutputFormat::Table;
    }
    throw UsageError("invalid output format '" + text +
                     "' (expected json|csv|table)");
}

void apply_config_json(const json &file, ExperimentConfig &config) {
    if (!file.is_object()) {
        throw UsageError("config file must hold a JSON object");
    }
    std::array<std::optional<Vec2>, 3> points{
        config.problem.points ? std::optional((*config.problem.points)[0])
                              : std::nullopt,
        config.problem.points ? std::optional((*config.problem.points)[1])
                              : std::nullopt,
        config.problem.points ? std::optional((*config.problem.points)[2])
                              : std::nullopt,
    };

    for (const auto &[key, value] : file.items()) {
        if (key == "preset") {
            config.problem.preset = value.get<std::string>();
        } else if (key == "indices") {
            if (!value.is_array() || value.size() != 3) {
                throw UsageError(
                    "config key 'indices' must be an array of three row "
                    "numbers");
            }
            config.problem.indices = IrisIndices{
                value[0].get<int>(), value[1].get<int>(), value[2].get<int>()};
        } else if (key == "point-x0") {
            points[0] = parse_point_json(value, "point-x0");
        } else if (key == "point-x1") {
            points[1] = parse_point_json(value, "point-x1");
        } else if (key == "point-test") {
            points[2] = parse_point_json(value, "point-test");
        } else if (key == "mode") {
            config.mode = parse_run_mode(value.get<std::string>());
        } else if (key == "shots") {
            if (!value.is_number_unsigned()) {
                throw UsageError("config key 'shots' must be a nonnegative "
                                 "integer");
            }
            config.shots = value.get<std::uint64_t>();
        } else if (key == "seed") {
            config.seed = value.get<std::uint64_t>();
        } else if (key == "output") {
            config.output = parse_output_format(value.get<std::string>());
        } else if (key == "export-cqasm") {
            config.export_cqasm = value.get<std::string>();
        } else if (key == "iris") {
            config.iris_path = value.get<std::string>();
        } else {
            throw UsageError("unknown config key '" + key + "'");
        }
    }

    if (points[0] || points[1] || points[2]) {
        if (!(points[0] && points[1] && points[2])) {
            throw UsageError(
                "point-x0, point-x1 and point-test must be given together");
        }
        config.problem.points =
            std::array<Vec2, 3>{*points[0], *points[1], *points[2]};
    }
}

void validate_config(const ExperimentConfig &config) {
    const int sources = int(config.problem.preset.has_value()) +
                        int(config.problem.indices.has_value()) +
                        int(config.problem.points.has_value()) +
                        int(config.problem.angles.has_value());
    if (sources == 0) {
        throw UsageError("no problem given: use --preset, --indices or the "
                         "--point-* flags");
    }
    if (sources > 1) {
        throw UsageError("conflicting problem sources: give exactly one of "
                         "--preset, --indices or the --point-* flags");
    }
    if (config.shots == 0) {
        throw UsageError("--shots must be at least 1");
    }
}

ExperimentReport run_experiment(const ExperimentConfig &config) {
    validate_config(config);

    std::optional<std::filesystem::path> iris_path;
    if (config.iris_path) {
        iris_path = *config.iris_path;
    }
    const ClassificationProblem problem =
        build_problem(config.problem, iris_path);

    ExperimentReport report;
    report.config = config;
    report.timestamp = utc_timestamp();

    // The exact route always runs: it carries the encoded angles and
    // reduction parameters every other route shares, and the sampled deltas
    // are measured against it.
    const ClassifyReport exact = classify(problem, ClassifyMode::Exact);
    report.angles = exact.angles;
    report.reduction = exact.reduction;

    if (config.mode == RunMode::Exact || config.mode == RunMode::All) {
        report.exact = exact;
    }
    if (config.mode == RunMode::Sampled || config.mode == RunMode::All) {
        report.sampled = classify(problem, ClassifyMode::Sampled, config.shots,
                                  config.seed);
        report.deltas = LabelDistribution{
            report.sampled->distribution->p_acc - exact.distribution->p_acc,
            report.sampled->distribution->p_minus -
                exact.distribution->p_minus,
            report.sampled->distribution->p_plus - exact.distribution->p_plus,
        };
    }
    if (config.mode == RunMode::Oracle || config.mode == RunMode::All) {
        report.oracle = classify(problem, ClassifyMode::Oracle);
    }

    if (config.export_cqasm) {
        std::ofstream out(*config.export_cqasm);
        if (!out) {
            throw FormatError("cannot write cQASM file '" +
                              *config.export_cqasm + "'");
        }
        out << to_cqasm(build_reduced_circuit(report.reduction));
    }
    return report;
}

namespace {

std::string render_json(const ExperimentReport &report) {
    ordered_json out;
    out["config"]["problem"] = problem_json(report.config.problem);
    out["config"]["mode"] = mode_name(report.config.mode);
    out["config"]["shots"] = report.config.shots;
    out["config"]["seed"] = report.config.seed;
    if (report.config.iris_path) {
        out["config"]["iris"] = *report.config.iris_path;
    }
    out["timestamp"] = report.timestamp;
    out["angles"] = {{"theta", round6(report.angles.theta)},
                     {"phi", round6(report.angles.phi)},
                     {"omega", round6(report.angles.omega)}};
    out["reduction"] = {
        {"t", round6(report.reduction.t)},
        {"t_canonical", round6(report.reduction.t_canonical)},
        {"omega_prime", round6(report.reduction.omega_prime)},
        {"orientation",
         report.reduction.orientation == Orientation::Swapped ? "swapped"
                                                              : "normal"},
        {"p_acc", round6(report.reduction.p_acc)},
    };
    ordered_json results = ordered_json::object();
    if (report.exact) {
        results["exact"] = mode_result_json(*report.exact, false);
    }
    if (report.sampled) {
        results["sampled"] = mode_result_json(*report.sampled, true);
    }
    if (report.oracle) {
        ordered_json oracle;
        oracle["decision_sum"] = round6(report.oracle->decision_sum);
        oracle["label"] = report.oracle->label;
        results["oracle"] = oracle;
    }
    out["results"] = results;
    if (report.deltas) {
        out["deltas"] = {{"p_acc", round6(report.deltas->p_acc)},
                         {"p_minus", round6(report.deltas->p_minus)},
                         {"p_plus", round6(report.deltas->p_plus)}};
    }
    return out.dump(2) + "\n";
}

std::string render_csv(const ExperimentReport &report) {
    std::string out = "mode,p_acc,p_minus,p_plus,label\n";
    auto row = [&out](const std::string &mode, const ClassifyReport &r) {
        out += mode + ",";
        if (r.distribution) {
            out += fixed6(r.distribution->p_acc) + "," +
                   fixed6(r.distribution->p_minus) + "," +
                   fixed6(r.distribution->p_plus) + ",";
        } else {
            out += ",,,";
        }
        out += label_text(r.label) + "\n";
    };
    if (report.exact) {
        row("exact", *report.exact);
    }
    if (report.sampled) {
        row("sampled", *report.sampled);
    }
    if (report.oracle) {
        row("oracle", *report.oracle);
    }
    return out;
}

std::string render_table(const ExperimentReport &report) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line,
                  "angles      theta=%s  phi=%s  omega=%s\n",
                  fixed6(report.angles.theta).c_str(),
                  fixed6(report.angles.phi).c_str(),
                  fixed6(report.angles.omega).c_str());
    out += line;
    std::snprintf(line, sizeof line,
                  "reduction   t=%s  t_canonical=%s  omega_prime=%s  "
                  "orientation=%s\n\n",
                  fixed6(report.reduction.t).c_str(),
                  fixed6(report.reduction.t_canonical).c_str(),
                  fixed6(report.reduction.omega_prime).c_str(),
                  report.reduction.orientation == Orientation::Swapped
                      ? "swapped"
                      : "normal");
    out += line;
    std::snprintf(line, sizeof line, "%-12s%-9s%-9s%-9s%s\n", "mode", "p_acc",
                  "P(y=-1)", "P(y=+1)", "label");
    out += line;
    auto row = [&](const char *mode, const ClassifyReport &r) {
        if (r.distribution) {
            std::snprintf(line, sizeof line, "%-12s%-9s%-9s%-9s%s\n", mode,
                          fixed4(r.distribution->p_acc).c_str(),
                          fixed4(r.distribution->p_minus).c_str(),
                          fixed4(r.distribution->p_plus).c_str(),
                          label_text(r.label).c_str());
        } else {
            std::snprintf(line, sizeof line, "%-12s%-9s%-9s%-9s%s\n", mode,
                          "-", "-", "-", label_text(r.label).c_str());
        }
        out += line;
    };
    if (report.exact) {
        row("exact", *report.exact);
    }
    if (report.sampled) {
        row("sampled", *report.sampled);
    }
    if (report.oracle) {
        row("oracle", *report.oracle);
    }
    return out;
}

} // namespace

std::string render_report(const ExperimentReport &report,
                          OutputFormat format) {
    switch (format) {
    case OutputFormat::Json:
        return render_json(report);
    case OutputFormat::Csv:
        return render_csv(report);
    case OutputFormat::Table:
        return render_table(report);
    }
    return render_table(report);
}

} // namespace qdc
