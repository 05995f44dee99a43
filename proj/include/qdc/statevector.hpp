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
 * Dense complex statevector over a small qubit register, with the elementary
 * gate set {H, X, Ry, CNOT} and exact measurement primitives.
 *
 * Conventions (pinned; every other module relies on them):
 *  - Qubit 0 is the left-most ket symbol and the most significant bit of a
 *    basis index: the bitstring b0 b1 ... b_{n-1} has index sum(b_k 2^{n-1-k}).
 *  - Ry(theta) maps |0> to cos(theta/2)|0> + sin(theta/2)|1> and
 *    |1> to -sin(theta/2)|0> + cos(theta/2)|1>.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qdc {

using Amplitude = std::complex<double>;

/// Widest register the dense representation accepts.
inline constexpr int kMaxQubits = 20;

/// Tolerance for every exact-arithmetic assertion on states and
/// distributions.
inline constexpr double kNormTolerance = 1e-12;

/// Below this probability a post-selection branch is treated as impossible
/// rather than renormalized noise.
inline constexpr double kZeroProbability = 1e-12;

struct Gate;
struct PostselectResult;

/// Normalized state of `num_qubits` qubits as 2^n complex amplitudes.
///
/// Instances are immutable values; gate application and post-selection
/// return new states.
class StateVector {
  public:
    /// The ground state |00...0>. Throws std::invalid_argument unless
    /// 1 <= num_qubits <= kMaxQubits.
    explicit StateVector(int num_qubits);

    /// Builds a state from explicit amplitudes. The vector must have length
    /// 2^num_qubits, contain only finite values and have unit L2 norm within
    /// kNormTolerance.
    static StateVector from_amplitudes(int num_qubits,
                                       std::vector<Amplitude> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Amplitude> &amplitudes() const { return amplitudes_; }
    Amplitude amplitude(std::size_t basis_index) const {
        return amplitudes_.at(basis_index);
    }

    /// L2 norm; 1 within kNormTolerance for any state that escapes this
    /// module.
    double norm() const;

  private:
    StateVector(int num_qubits, std::vector<Amplitude> amplitudes);

    friend StateVector apply_gate(const StateVector &, const Gate &);
    friend PostselectResult postselect(const StateVector &, int, int);

    int num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

enum class GateKind { H, X, Ry, Cnot };

/// One elementary gate. `control` is meaningful for CNOT only, `angle` for
/// Ry only.
struct Gate {
    GateKind kind = GateKind::H;
    int target = 0;
    int control = -1;
    double angle = 0.0;

    static Gate h(int target);
    static Gate x(int target);
    static Gate ry(int target, double angle); // throws on non-finite angle
    static Gate cnot(int control, int target); // throws if control == target
};

/// Applies the gate unitary embedded at the gate's qubits; norm preserved
/// within kNormTolerance. Throws std::out_of_range on invalid indices.
StateVector apply_gate(const StateVector &state, const Gate &gate);

/// Probability of each basis state, |amplitude|^2, indexed by basis index.
/// Sums to 1 within kNormTolerance for a normalized input.
std::vector<double> exact_distribution(const StateVector &state);

struct PostselectResult {
    StateVector state;
    double probability;
};

/// Projects onto `qubit == value`, renormalizes, and reports the projection
/// probability. Throws DegenerateError when the branch probability is below
/// kZeroProbability (the requested outcome never occurs).
PostselectResult postselect(const StateVector &state, int qubit, int value);

/// Renders a basis index as a bitstring under the qubit-0-first convention,
/// e.g. format_bitstring(2, 2) == "10".
std::string format_bitstring(std::size_t basis_index, int width);

} // namespace qdc
