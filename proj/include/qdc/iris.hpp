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
 * Iris ingestion and preprocessing: the two sepal features of the Setosa
 * (label -1) and Versicolor (label +1) rows are z-scored and normalized to
 * the unit circle, and problems are assembled from presets, row indices, or
 * literal values.
 */

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qdc/classifier.hpp"

namespace qdc {

struct RawIrisRow {
    double sepal_length = 0.0;
    double sepal_width = 0.0;
    double petal_length = 0.0;
    double petal_width = 0.0;
    std::string species; // "setosa", "versicolor" or "virginica"
    int source_index = 0;
};

/// Reads the canonical 150-row CSV (header
/// `sepal_length,sepal_width,petal_length,petal_width,species`, species
/// lowercase). Throws FormatError on any malformed row, a wrong row count,
/// or a species imbalance.
std::vector<RawIrisRow> load_iris(const std::filesystem::path &path);

/// Which rows the standardization statistics are computed over. The
/// retained 100 Setosa + Versicolor rows are the default.
enum class StandardizationScope { RetainedRows, AllRows };

struct PipelineParams {
    StandardizationScope scope = StandardizationScope::RetainedRows;
};

struct TaggedPoint {
    Vec2 features{1.0, 0.0};
    int label = -1; // -1 = setosa, +1 = versicolor
    int source_index = 0;
};

/// Per-feature z-score (population standard deviation) of the first two
/// features over the retained rows, then per-point L2 normalization.
/// Throws DegenerateError on zero variance or on a point that standardizes
/// to the origin.
std::vector<TaggedPoint> preprocess(const std::vector<RawIrisRow> &rows,
                                    const PipelineParams &params = {});

/// Row indices of (x0, x1, test) within the 150-row file; x0 must be a
/// Setosa row, x1 a Versicolor row, and the test point either of the two.
struct IrisIndices {
    int x0 = 0;
    int x1 = 0;
    int test = 0;
};

/// One way of naming a problem: a bundled preset, rows of an Iris file,
/// literal unit vectors, or literal encoding angles (phi, omega).
struct ProblemSpec {
    std::optional<std::string> preset; // "dataset1" | "dataset2"
    std::optional<IrisIndices> indices;
    std::optional<std::array<Vec2, 3>> points; // x0, x1, test
    std::optional<std::array<double, 2>> angles; // phi, omega (theta = 0)
};

/// The two bundled reference problems (Setosa vs Versicolor working points
/// on the unit circle, x0 pinned to (1, 0)).
ClassificationProblem preset_problem(const std::string &name);

/// Runs the full pipeline for an index spec and aligns the frame so that
/// x0 = (1, 0).
ClassificationProblem problem_from_indices(const std::vector<RawIrisRow> &rows,
                                           const IrisIndices &indices,
                                           const PipelineParams &params = {});

/// Builds a problem from exactly one of the spec's sources. Index specs
/// load `iris_path`. Literal vectors within 1e-3 of unit norm are
/// normalized exactly; anything farther off is rejected.
ClassificationProblem
build_problem(const ProblemSpec &spec,
              const std::optional<std::filesystem::path> &iris_path = {});

} // namespace qdc
