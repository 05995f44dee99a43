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

#include "qdc/circuit.hpp"

#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qdc {

namespace {

std::vector<int> effective_measurements(const Circuit &circuit) {
    if (!circuit.measurements.empty()) {
        return circuit.measurements;
    }
    std::vector<int> all(static_cast<std::size_t>(circuit.num_qubits));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

} // namespace

void validate(const Circuit &circuit) {
    if (circuit.num_qubits < 1 || circuit.num_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit width out of range");
    }
    auto check = [&](int q, const char *what) {
        if (q < 0 || q >= circuit.num_qubits) {
            throw std::out_of_range(std::string(what) + " index " +
                                    std::to_string(q) + " out of range");
        }
    };
    for (const Gate &g : circuit.gates) {
        check(g.target, "gate target");
        if (g.kind == GateKind::Cnot) {
            check(g.control, "gate control");
            if (g.control == g.target) {
                throw std::invalid_argument(
                    "CNOT control and target must differ");
            }
        }
    }
    std::set<int> seen;
    for (int q : circuit.measurements) {
        check(q, "measurement");
        if (!seen.insert(q).second) {
            throw std::invalid_argument("duplicate measurement of qubit " +
                                        std::to_string(q));
        }
    }
}

StateVector final_state(const Circuit &circuit) {
    validate(circuit);
    StateVector state(circuit.num_qubits);
    for (const Gate &g : circuit.gates) {
        state = apply_gate(state, g);
    }
    return state;
}

std::vector<double> marginal_distribution(const std::vector<double> &full,
                                          int num_qubits,
                                          const std::vector<int> &measured) {
    const int m = static_cast<int>(measured.size());
    std::vector<double> out(std::size_t{1} << m, 0.0);
    for (std::size_t i = 0; i < full.size(); ++i) {
        std::size_t j = 0;
        for (int k = 0; k < m; ++k) {
            const std::size_t bit =
                (i >> (num_qubits - 1 - measured[static_cast<std::size_t>(k)])) &
                1;
            j |= bit << (m - 1 - k);
        }
        out[j] += full[i];
    }
    return out;
}

std::vector<double> run_exact(const Circuit &circuit) {
    const StateVector state = final_state(circuit);
    return marginal_distribution(exact_distribution(state),
                                 circuit.num_qubits,
                                 effective_measurements(circuit));
}

ShotCounts run_sampled(const Circuit &circuit, std::uint64_t shots,
                       std::uint64_t seed) {
    const std::vector<int> measured = effective_measurements(circuit);
    const StateVector state = final_state(circuit);
    const std::vector<double> marginal = marginal_distribution(
        exact_distribution(state), circuit.num_qubits, measured);
    return sample_counts(marginal, static_cast<int>(measured.size()), shots,
                         seed);
}

std::string to_cqasm(const Circuit &circuit) {
    validate(circuit);
    std::string text;
    char line[64];
    for (const Gate &g : circuit.gates) {
        switch (g.kind) {
        case GateKind::H:
            std::snprintf(line, sizeof line, "H q[%d]\n", g.target);
            break;
        case GateKind::X:
            std::snprintf(line, sizeof line, "X q[%d]\n", g.target);
            break;
        case GateKind::Ry:
            std::snprintf(line, sizeof line, "RY q[%d], %.6f\n", g.target,
                          g.angle);
            break;
        case GateKind::Cnot:
            std::snprintf(line, sizeof line, "CNOT q[%d], q[%d]\n", g.control,
                          g.target);
            break;
        }
        text += line;
    }
    for (int q : effective_measurements(circuit)) {
        std::snprintf(line, sizeof line, "measure q[%d]\n", q);
        text += line;
    }
    return text;
}

} // namespace qdc
