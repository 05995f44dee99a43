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

#include "qdc/classifier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double norm2(const Vec2 &v) { return std::hypot(v[0], v[1]); }

void require_unit(const Vec2 &v, const char *what) {
    if (!std::isfinite(v[0]) || !std::isfinite(v[1])) {
        throw DegenerateError(std::string(what) + " has non-finite entries");
    }
    if (std::abs(norm2(v) - 1.0) > kUnitTolerance) {
        throw DegenerateError(std::string(what) + " is not unit norm (|v| = " +
                              std::to_string(norm2(v)) + ")");
    }
}

void require_problem(const ClassificationProblem &problem) {
    require_unit(problem.x0, "x0");
    require_unit(problem.x1, "x1");
    require_unit(problem.x_test, "test point");
}

double squared_distance(const Vec2 &a, const Vec2 &b) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

int argmax_label(const LabelDistribution &dist) {
    if (std::abs(dist.p_minus - dist.p_plus) <= kTieTolerance) {
        return 0;
    }
    return dist.p_plus > dist.p_minus ? +1 : -1;
}

} // namespace

double encode_angle(const Vec2 &point) {
    require_unit(point, "point");
    double angle = -2.0 * std::atan2(point[1], point[0]);
    // atan2 lands in (-pi, pi], so the only value outside (-2*pi, 2*pi] is
    // -2*pi itself; it encodes the same state as +2*pi.
    if (angle <= -kTwoPi) {
        angle += 2.0 * kTwoPi;
    }
    return angle == 0.0 ? 0.0 : angle; // never -0.0
}

double kernel(const Vec2 &a, const Vec2 &b, int n_points) {
    require_unit(a, "kernel argument");
    require_unit(b, "kernel argument");
    if (n_points < 1) {
        throw std::invalid_argument("kernel needs a positive point count");
    }
    return 1.0 - squared_distance(a, b) / (4.0 * n_points);
}

double decision_sum(const ClassificationProblem &problem) {
    require_problem(problem);
    return kernel(problem.x_test, problem.x1, 2) -
           kernel(problem.x_test, problem.x0, 2);
}

int classify_classical(const ClassificationProblem &problem) {
    const double sum = decision_sum(problem);
    if (std::abs(sum) <= kTieTolerance) {
        throw TieError("threshold classifier is exactly tied");
    }
    return sum > 0.0 ? +1 : -1;
}

StateVector build_general_state(std::span<const DataPoint> points,
                                const Vec2 &x_test) {
    const int n_points = static_cast<int>(points.size());
    if (n_points < 2 || n_points > 8) {
        throw std::invalid_argument("general route supports 2 to 8 points");
    }
    int plus = 0;
    for (const DataPoint &p : points) {
        if (p.label != -1 && p.label != 1) {
            throw std::invalid_argument("labels must be -1 or +1");
        }
        plus += (p.label == 1);
        require_unit(p.features, "training point");
    }
    if (2 * plus != n_points) {
        throw std::invalid_argument("classes must be balanced");
    }
    require_unit(x_test, "test point");

    // Register layout: [index (ceil(log2 N) qubits), ancilla, data, label],
    // qubit 0 being the most significant bit of the basis index.
    const int index_bits = std::max(
        1, static_cast<int>(std::bit_width(static_cast<unsigned>(n_points - 1))));
    const int num_qubits = index_bits + 3;
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits,
                                Amplitude{0.0, 0.0});
    const double coef = 1.0 / std::sqrt(2.0 * n_points);
    for (int i = 0; i < n_points; ++i) {
        const std::size_t base = static_cast<std::size_t>(i) << 3;
        const std::size_t label_bit = points[i].label == 1 ? 1 : 0;
        for (std::size_t j = 0; j < 2; ++j) {
            amps[base | (j << 1) | label_bit] += coef * x_test[j];
            amps[base | 0b100 | (j << 1) | label_bit] +=
                coef * points[i].features[j];
        }
    }
    return StateVector::from_amplitudes(num_qubits, std::move(amps));
}

LabelDistribution general_classify_exact(std::span<const DataPoint> points,
                                         const Vec2 &x_test) {
    const StateVector initial = build_general_state(points, x_test);
    const int index_bits = initial.num_qubits() - 3;
    const int ancilla = index_bits;
    const int label_qubit = index_bits + 2;

    const StateVector interfered = apply_gate(initial, Gate::h(ancilla));
    const auto [accepted, p_acc] = postselect(interfered, ancilla, 0);

    const std::vector<double> probs = exact_distribution(accepted);
    const std::size_t label_stride =
        std::size_t{1} << (initial.num_qubits() - 1 - label_qubit);
    double p_plus = 0.0;
    double p_minus = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        ((i & label_stride) ? p_plus : p_minus) += probs[i];
    }
    return LabelDistribution{p_acc, p_minus, p_plus};
}

double label_ratio(double phi, double omega) {
    if (!std::isfinite(phi) || !std::isfinite(omega)) {
        throw std::invalid_argument("angles must be finite");
    }
    const double num = std::cos(0.25 * omega);
    const double den = std::cos(0.25 * (omega - phi));
    if (den * den < 1e-15) {
        throw DegenerateError(
            "label ratio is degenerate: test point antipodal to x1 in "
            "half-angle space");
    }
    return (num * num) / (den * den);
}

ReductionParams reduce(double t, bool canonicalize) {
    if (!std::isfinite(t) || t <= 0.0) {
        throw DegenerateError("probability ratio must be positive and finite");
    }
    ReductionParams params;
    params.t = t;
    params.orientation = (canonicalize && t > 1.0) ? Orientation::Swapped
                                                   : Orientation::Normal;
    params.t_canonical = canonicalize ? std::min(t, 1.0 / t) : t;
    const double root = std::sqrt(params.t_canonical);
    params.omega_prime = 4.0 * std::atan((1.0 - root) / (1.0 + root));
    // Equal to (1 + sin(omega'/2)) / 2; this form has no cancellation when
    // the ratio is extreme.
    params.p_acc = 1.0 / (1.0 + params.t_canonical);
    return params;
}

Circuit build_reduced_circuit(const ReductionParams &params) {
    if (!std::isfinite(params.omega_prime)) {
        throw std::invalid_argument("omega' must be finite");
    }
    Circuit circuit;
    circuit.num_qubits = 2;
    circuit.gates = {
        Gate::h(0),
        Gate::ry(1, 0.5 * params.omega_prime),
        Gate::cnot(0, 1),
        Gate::ry(1, 0.5 * params.omega_prime),
        Gate::h(0),
    };
    circuit.measurements = {0, 1};
    return circuit;
}

LabelDistribution reduced_classify_exact(const ReductionParams &params) {
    // Identities in t^ = t_canonical:
    //   p_acc                          = (1 + sin(omega'/2)) / 2 = 1/(1 + t^)
    //   (1 + sin(omega'/2))^2 / (4 p_acc)                        = 1/(1 + t^)
    //   cos^2(omega'/2) / (4 p_acc)                              = t^/(1 + t^)
    // Evaluating through t^ keeps the conditional ratio exact to a few ulps
    // even when t is extreme, where 1 - sin(omega'/2) cancels catastrophically.
    const double t_hat = params.t_canonical;
    if (!std::isfinite(t_hat) || t_hat <= 0.0) {
        throw DegenerateError("reduction parameters are degenerate");
    }
    const double p_bit1 = 1.0 / (1.0 + t_hat);
    const double p_bit0 = t_hat / (1.0 + t_hat);
    if (params.orientation == Orientation::Normal) {
        return LabelDistribution{params.p_acc, p_bit0, p_bit1};
    }
    return LabelDistribution{params.p_acc, p_bit1, p_bit0};
}

SampledClassification reduced_classify_sampled(const ReductionParams &params,
                                               std::uint64_t shots,
                                               std::uint64_t seed) {
    const Circuit circuit = build_reduced_circuit(params);
    SampledClassification result;
    result.counts = run_sampled(circuit, shots, seed);

    const double accepted_0 = static_cast<double>(result.counts.count("00"));
    const double accepted_1 = static_cast<double>(result.counts.count("01"));
    result.accepted_shots = result.counts.count("00") + result.counts.count("01");
    if (result.accepted_shots == 0) {
        throw NoAcceptanceError("every shot was rejected by post-selection");
    }

    const double accepted = static_cast<double>(result.accepted_shots);
    const double p_bit0 = accepted_0 / accepted;
    const double p_bit1 = accepted_1 / accepted;
    result.distribution.p_acc = accepted / static_cast<double>(shots);
    if (params.orientation == Orientation::Normal) {
        result.distribution.p_minus = p_bit0;
        result.distribution.p_plus = p_bit1;
    } else {
        result.distribution.p_minus = p_bit1;
        result.distribution.p_plus = p_bit0;
    }
    return result;
}

ClassificationProblem canonical_frame(const ClassificationProblem &problem) {
    require_problem(problem);
    const double c = problem.x0[0];
    const double s = problem.x0[1];
    auto rotate = [c, s](const Vec2 &v) {
        return Vec2{c * v[0] + s * v[1], -s * v[0] + c * v[1]};
    };
    return ClassificationProblem{rotate(problem.x0), rotate(problem.x1),
                                 rotate(problem.x_test)};
}

ClassifyReport classify(const ClassificationProblem &problem,
                        ClassifyMode mode, std::uint64_t shots,
                        std::uint64_t seed) {
    const ClassificationProblem framed = canonical_frame(problem);

    ClassifyReport report;
    report.angles.theta = encode_angle(framed.x0);
    report.angles.phi = encode_angle(framed.x1);
    report.angles.omega = encode_angle(framed.x_test);
    report.reduction =
        reduce(label_ratio(report.angles.phi, report.angles.omega));
    report.decision_sum = decision_sum(framed);

    switch (mode) {
    case ClassifyMode::Exact: {
        report.distribution = reduced_classify_exact(report.reduction);
        report.label = argmax_label(*report.distribution);
        break;
    }
    case ClassifyMode::Sampled: {
        SampledClassification sampled =
            reduced_classify_sampled(report.reduction, shots, seed);
        report.distribution = sampled.distribution;
        report.counts = std::move(sampled.counts);
        report.accepted_shots = sampled.accepted_shots;
        report.label = argmax_label(*report.distribution);
        break;
    }
    case ClassifyMode::Oracle: {
        try {
            report.label = classify_classical(framed);
        } catch (const TieError &) {
            report.label = 0; // surfaced as an explicit tie
        }
        break;
    }
    }
    return report;
}

} // namespace qdc
