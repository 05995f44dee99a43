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
 * Distance-based classification of a unit 2-vector against one labelled
 * training point per class.
 *
 * Three routes produce the label, and agree with each other:
 *  - a classical threshold rule over the kernel 1 - ||a - b||^2 / (4N),
 *  - an interference circuit over [index, ancilla, data, label] registers
 *    with post-selection on the ancilla (the "general" route, N <= 8),
 *  - a two-qubit compression of that circuit parameterized by the
 *    probability ratio t and the rotation angle omega' (the "reduced"
 *    route), which preserves the conditional label distribution while
 *    needing only an {H, Ry, CNOT} circuit on two qubits.
 *
 * A point x is encoded as cos(a/2)|0> - sin(a/2)|1>, i.e. x = Ry(-a)|0>;
 * the canonical frame rotates every problem so the class -1 training point
 * sits at angle 0.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "qdc/circuit.hpp"
#include "qdc/sampling.hpp"
#include "qdc/statevector.hpp"

namespace qdc {

using Vec2 = std::array<double, 2>;

/// Unit-norm tolerance for feature vectors.
inline constexpr double kUnitTolerance = 1e-9;

/// |decision sum| at or below this is an exact tie.
inline constexpr double kTieTolerance = 1e-12;

struct DataPoint {
    Vec2 features{1.0, 0.0}; // unit norm within kUnitTolerance
    int label = -1;          // -1 or +1
};

/// Balanced two-point problem: x0 carries label -1, x1 carries label +1.
struct ClassificationProblem {
    Vec2 x0{1.0, 0.0};
    Vec2 x1{1.0, 0.0};
    Vec2 x_test{1.0, 0.0};
};

/// Encoding angles of a problem in the canonical frame (theta for x0 is 0
/// there by construction).
struct EncodedAngles {
    double theta = 0.0;
    double phi = 0.0;
    double omega = 0.0;
};

/// Which measured label bit maps to which class after canonicalizing the
/// ratio t: Normal keeps bit 1 on label +1, Swapped exchanges the roles.
enum class Orientation { Normal, Swapped };

struct ReductionParams {
    double t = 1.0;           // raw probability ratio P(-1)/P(+1)
    double t_canonical = 1.0; // min(t, 1/t); equals t when not canonicalized
    double omega_prime = 0.0; // rotation angle; >= 0 on the canonical path
    Orientation orientation = Orientation::Normal;
    double p_acc = 0.5; // acceptance probability (1 + sin(omega'/2)) / 2
};

/// Acceptance probability plus label probabilities conditional on
/// acceptance; p_minus + p_plus = 1 within 1e-12.
struct LabelDistribution {
    double p_acc = 1.0;
    double p_minus = 0.5;
    double p_plus = 0.5;
};

/// Encoding angle a with (cos(a/2), -sin(a/2)) equal to the unit input;
/// a = -2 atan2(x1, x0), folded into (-2*pi, 2*pi]. Throws DegenerateError
/// on non-unit input.
double encode_angle(const Vec2 &point);

/// Similarity kernel 1 - ||a - b||^2 / (4 n_points) for unit vectors.
double kernel(const Vec2 &a, const Vec2 &b, int n_points);

/// Signed decision sum of the threshold rule; positive favours +1.
double decision_sum(const ClassificationProblem &problem);

/// Threshold classifier: sign of the decision sum. This is the classical
/// oracle the quantum routes are checked against. Throws TieError when the
/// sum vanishes within kTieTolerance.
int classify_classical(const ClassificationProblem &problem);

/// Initial interference state over registers [index, ancilla, data, label]:
/// ancilla 0 pairs the test point with each index, ancilla 1 the training
/// point. Requires 2 <= N <= 8 with balanced labels; the result is
/// normalized within 1e-12.
StateVector build_general_state(std::span<const DataPoint> points,
                                const Vec2 &x_test);

/// Hadamard on the ancilla, post-selection on ancilla = 0, marginal of the
/// label qubit. Throws DegenerateError when acceptance is below 1e-12.
LabelDistribution general_classify_exact(std::span<const DataPoint> points,
                                         const Vec2 &x_test);

/// Probability ratio t = cos^2(omega/4) / cos^2((omega - phi)/4) of the two
/// label outcomes. Throws DegenerateError when the denominator falls below
/// 1e-15 (test point antipodal to x1 in half-angle space).
double label_ratio(double phi, double omega);

/// Derives the two-qubit parameters from the ratio t:
/// omega' = 4 arctan((1 - sqrt(t^))/(1 + sqrt(t^))) with t^ = min(t, 1/t),
/// and p_acc = (1 + sin(omega'/2))/2. Canonicalization keeps omega' >= 0 and
/// records the label orientation; it maximizes acceptance and is the path
/// every classification uses. `canonicalize = false` applies the formula to
/// the raw t (omega' may then be negative and acceptance small) for study.
ReductionParams reduce(double t, bool canonicalize = true);

/// The two-qubit circuit over {H, Ry, CNOT}: H(q0); Ry(omega'/2) on q1;
/// CNOT(q0 -> q1); Ry(omega'/2) on q1; H(q0); measure q0, q1. Before the
/// final Hadamard the state is
/// (cos(omega'/2)|00> + sin(omega'/2)|01> + |11>) / sqrt(2): on the q0 = 0
/// branch the Ry/CNOT/Ry block rotates q1 by omega', on the q0 = 1 branch it
/// reduces to a plain flip of q1.
Circuit build_reduced_circuit(const ReductionParams &params);

/// Closed-form conditional label distribution of the reduced circuit with
/// post-selection on q0 = 0. The bit-1 branch carries probability
/// (1 + sin(omega'/2))^2 / (4 p_acc) and maps to the orientation-favoured
/// label; the bit-0 branch carries cos^2(omega'/2) / (4 p_acc).
LabelDistribution reduced_classify_exact(const ReductionParams &params);

struct SampledClassification {
    LabelDistribution distribution;
    ShotCounts counts;
    std::uint64_t accepted_shots = 0;
};

/// Runs the reduced circuit with shot sampling; p_acc is the accepted
/// fraction and the conditional probabilities come from accepted shots
/// only. Deterministic per seed. Throws NoAcceptanceError when every shot
/// is rejected.
SampledClassification reduced_classify_sampled(const ReductionParams &params,
                                               std::uint64_t shots,
                                               std::uint64_t seed);

/// Rotates all three points by the planar rotation sending x0 to (1, 0);
/// pairwise inner products are unchanged.
ClassificationProblem canonical_frame(const ClassificationProblem &problem);

enum class ClassifyMode { Exact, Sampled, Oracle };

/// Full classification record: every intermediate quantity needed to audit
/// the assigned label. `label` is -1, +1, or 0 for an explicit tie.
struct ClassifyReport {
    EncodedAngles angles;
    ReductionParams reduction;
    std::optional<LabelDistribution> distribution; // Exact and Sampled modes
    std::optional<ShotCounts> counts;              // Sampled mode
    std::uint64_t accepted_shots = 0;              // Sampled mode
    double decision_sum = 0.0;
    int label = 0;
};

/// End-to-end pipeline: canonical frame, angle encoding, ratio, reduction,
/// then the requested classification route.
ClassifyReport classify(const ClassificationProblem &problem,
                        ClassifyMode mode, std::uint64_t shots = 2048,
                        std::uint64_t seed = 0);

} // namespace qdc
