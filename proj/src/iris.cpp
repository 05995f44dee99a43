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

#include "qdc/iris.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

constexpr int kExpectedRows = 150;
constexpr int kRowsPerSpecies = 50;
constexpr const char *kHeader =
    "sepal_length,sepal_width,petal_length,petal_width,species";

double parse_measurement(const std::string &field, int row, const char *name) {
    double value = 0.0;
    const char *first = field.data();
    const char *last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw FormatError("row " + std::to_string(row) + ": cannot parse " +
                          name + " value '" + field + "'");
    }
    if (!std::isfinite(value) || value <= 0.0) {
        throw FormatError("row " + std::to_string(row) + ": " + name +
                          " must be positive and finite");
    }
    return value;
}

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

Vec2 normalize(const Vec2 &v) {
    const double n = std::hypot(v[0], v[1]);
    return Vec2{v[0] / n, v[1] / n};
}

// Accepts near-unit literals (hand-entered values are often rounded to a
// few decimals) and snaps them onto the unit circle.
Vec2 unit_literal(const Vec2 &v, const char *what) {
    const double n = std::hypot(v[0], v[1]);
    if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-3) {
        throw std::invalid_argument(std::string(what) +
                                    " must be a unit 2-vector");
    }
    return normalize(v);
}

Vec2 point_from_angle(double angle) {
    return Vec2{std::cos(0.5 * angle), -std::sin(0.5 * angle)};
}

void require_distinct_classes(const ClassificationProblem &problem) {
    const double dx = problem.x0[0] - problem.x1[0];
    const double dy = problem.x0[1] - problem.x1[1];
    if (std::hypot(dx, dy) < kUnitTolerance) {
        throw std::invalid_argument(
            "training points of the two classes must differ");
    }
}

} // namespace

std::vector<RawIrisRow> load_iris(const std::filesystem::path &path) {
    std::ifstream file(path);
    if (!file) {
        throw FormatError("cannot open Iris file '" + path.string() + "'");
    }

    std::string line;
    if (!std::getline(file, line)) {
        throw FormatError("Iris file is empty");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kHeader) {
        throw FormatError("unexpected Iris header '" + line + "'");
    }

    std::vector<RawIrisRow> rows;
    std::map<std::string, int> species_counts;
    int row_number = 0;
    while (std::getline(file, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != 5) {
            throw FormatError("row " + std::to_string(row_number) +
                              ": expected 5 fields, got " +
                              std::to_string(fields.size()));
        }
        RawIrisRow row;
        row.sepal_length =
            parse_measurement(fields[0], row_number, "sepal_length");
        row.sepal_width =
            parse_measurement(fields[1], row_number, "sepal_width");
        row.petal_length =
            parse_measurement(fields[2], row_number, "petal_length");
        row.petal_width =
            parse_measurement(fields[3], row_number, "petal_width");
        row.species = fields[4];
        if (row.species != "setosa" && row.species != "versicolor" &&
            row.species != "virginica") {
            throw FormatError("row " + std::to_string(row_number) +
                              ": unknown species '" + row.species + "'");
        }
        row.source_index = row_number;
        species_counts[row.species] += 1;
        rows.push_back(std::move(row));
        ++row_number;
    }

    if (static_cast<int>(rows.size()) != kExpectedRows) {
        throw FormatError("expected " + std::to_string(kExpectedRows) +
                          " data rows, got " + std::to_string(rows.size()));
    }
    for (const char *species : {"setosa", "versicolor", "virginica"}) {
        if (species_counts[species] != kRowsPerSpecies) {
            throw FormatError(std::string("expected ") +
                              std::to_string(kRowsPerSpecies) + " rows of " +
                              species + ", got " +
                              std::to_string(species_counts[species]));
        }
    }
    return rows;
}

std::vector<TaggedPoint> preprocess(const std::vector<RawIrisRow> &rows,
                                    const PipelineParams &params) {
    std::vector<TaggedPoint> retained;
    for (const RawIrisRow &row : rows) {
        if (row.species == "virginica") {
            continue;
        }
        retained.push_back(TaggedPoint{
            Vec2{row.sepal_length, row.sepal_width},
            row.species == "setosa" ? -1 : +1,
            row.source_index,
        });
    }
    if (retained.empty()) {
        throw DegenerateError("no setosa/versicolor rows to preprocess");
    }

    // Standardization statistics (population variance) over the configured
    // scope; the values standardized are always the retained rows.
    double mean[2] = {0.0, 0.0};
    double var[2] = {0.0, 0.0};
    std::size_t count = 0;
    auto accumulate = [&](double a, double b) {
        mean[0] += a;
        mean[1] += b;
        ++count;
    };
    if (params.scope == StandardizationScope::AllRows) {
        for (const RawIrisRow &row : rows) {
            accumulate(row.sepal_length, row.sepal_width);
        }
    } else {
        for (const TaggedPoint &p : retained) {
            accumulate(p.features[0], p.features[1]);
        }
    }
    mean[0] /= static_cast<double>(count);
    mean[1] /= static_cast<double>(count);
    auto accumulate_var = [&](double a, double b) {
        var[0] += (a - mean[0]) * (a - mean[0]);
        var[1] += (b - mean[1]) * (b - mean[1]);
    };
    if (params.scope == StandardizationScope::AllRows) {
        for (const RawIrisRow &row : rows) {
            accumulate_var(row.sepal_length, row.sepal_width);
        }
    } else {
        for (const TaggedPoint &p : retained) {
            accumulate_var(p.features[0], p.features[1]);
        }
    }
    const double stddev[2] = {
        std::sqrt(var[0] / static_cast<double>(count)),
        std::sqrt(var[1] / static_cast<double>(count)),
    };
    if (stddev[0] <= 0.0 || stddev[1] <= 0.0) {
        throw DegenerateError("a selected feature has zero variance");
    }

    for (TaggedPoint &p : retained) {
        const Vec2 z{(p.features[0] - mean[0]) / stddev[0],
                     (p.features[1] - mean[1]) / stddev[1]};
        const double n = std::hypot(z[0], z[1]);
        if (n < 1e-12) {
            throw DegenerateError(
                "row " + std::to_string(p.source_index) +
                " standardizes to the origin and has no direction");
        }
        p.features = Vec2{z[0] / n, z[1] / n};
    }
    return retained;
}

ClassificationProblem preset_problem(const std::string &name) {
    if (name == "dataset1") {
        return ClassificationProblem{
            Vec2{1.0, 0.0},
            normalize(Vec2{-0.9929, 0.1191}),
            normalize(Vec2{0.9939, 0.1103}),
        };
    }
    if (name == "dataset2") {
        return ClassificationProblem{
            Vec2{1.0, 0.0},
            normalize(Vec2{-0.1983, 0.9802}),
            normalize(Vec2{0.5545, 0.8322}),
        };
    }
    throw std::invalid_argument("unknown preset '" + name +
                                "' (expected dataset1 or dataset2)");
}

ClassificationProblem problem_from_indices(const std::vector<RawIrisRow> &rows,
                                           const IrisIndices &indices,
                                           const PipelineParams &params) {
    const std::vector<TaggedPoint> points = preprocess(rows, params);
    std::map<int, const TaggedPoint *> by_source;
    for (const TaggedPoint &p : points) {
        by_source[p.source_index] = &p;
    }

    auto lookup = [&](int index, const char *what) -> const TaggedPoint & {
        if (index < 0 || index >= static_cast<int>(rows.size())) {
            throw std::invalid_argument(std::string(what) + " index " +
                                        std::to_string(index) +
                                        " out of range");
        }
        auto it = by_source.find(index);
        if (it == by_source.end()) {
            throw std::invalid_argument(
                std::string(what) + " index " + std::to_string(index) +
                " is a virginica row; only setosa and versicolor are in "
                "scope");
        }
        return *it->second;
    };

    const TaggedPoint &p0 = lookup(indices.x0, "x0");
    const TaggedPoint &p1 = lookup(indices.x1, "x1");
    const TaggedPoint &pt = lookup(indices.test, "test");
    if (p0.label != -1) {
        throw std::invalid_argument("x0 row must be a setosa sample");
    }
    if (p1.label != +1) {
        throw std::invalid_argument("x1 row must be a versicolor sample");
    }

    ClassificationProblem problem{p0.features, p1.features, pt.features};
    require_distinct_classes(problem);
    return canonical_frame(problem);
}

ClassificationProblem
build_problem(const ProblemSpec &spec,
              const std::optional<std::filesystem::path> &iris_path) {
    const int sources = int(spec.preset.has_value()) +
                        int(spec.indices.has_value()) +
                        int(spec.points.has_value()) +
                        int(spec.angles.has_value());
    if (sources != 1) {
        throw std::invalid_argument(
            "exactly one problem source must be given (preset, indices, "
            "points or angles)");
    }

    if (spec.preset) {
        return preset_problem(*spec.preset);
    }
    if (spec.indices) {
        if (!iris_path) {
            throw std::invalid_argument(
                "index-based problems need an Iris file path");
        }
        return problem_from_indices(load_iris(*iris_path), *spec.indices);
    }
    if (spec.points) {
        const auto &pts = *spec.points;
        ClassificationProblem problem{
            unit_literal(pts[0], "x0"),
            unit_literal(pts[1], "x1"),
            unit_literal(pts[2], "test point"),
        };
        require_distinct_classes(problem);
        return problem;
    }
    const auto &angles = *spec.angles;
    if (!std::isfinite(angles[0]) || !std::isfinite(angles[1])) {
        throw std::invalid_argument("angles must be finite");
    }
    ClassificationProblem problem{
        Vec2{1.0, 0.0},
        point_from_angle(angles[0]),
        point_from_angle(angles[1]),
    };
    require_distinct_classes(problem);
    return problem;
}

} // namespace qdc
