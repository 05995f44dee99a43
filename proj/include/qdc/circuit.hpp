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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdc/sampling.hpp"
#include "qdc/statevector.hpp"

namespace qdc {

/// An ordered gate sequence over `num_qubits` qubits with a terminal
/// measurement list. An empty measurement list means "measure every qubit in
/// register order".
struct Circuit {
    int num_qubits = 1;
    std::vector<Gate> gates;
    std::vector<int> measurements;
};

/// Throws std::invalid_argument / std::out_of_range when gate or measurement
/// indices are out of range, or the measurement list has duplicates.
void validate(const Circuit &circuit);

/// State after applying all gates in sequence order to |00...0>.
StateVector final_state(const Circuit &circuit);

/// Exact marginal distribution over the measured qubits, indexed by the
/// measured bits in measurement-list order.
std::vector<double> run_exact(const Circuit &circuit);

/// Samples the measured-qubit marginal; deterministic per seed.
ShotCounts run_sampled(const Circuit &circuit, std::uint64_t shots,
                       std::uint64_t seed);

/// Marginalizes a full-register distribution onto `measured` qubits (bit k
/// of the output index is the value of qubit measured[k]).
std::vector<double> marginal_distribution(const std::vector<double> &full,
                                          int num_qubits,
                                          const std::vector<int> &measured);

/// Renders the circuit as cQASM-style text, one operation per line:
/// `H q[0]`, `RY q[1], 0.092890` (angles at 6 decimals), `CNOT q[0], q[1]`,
/// `measure q[0]`.
std::string to_cqasm(const Circuit &circuit);

} // namespace qdc
