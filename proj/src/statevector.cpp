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

#include "qdc/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

// Stride of `qubit` inside an `n`-qubit register under the qubit-0-is-MSB
// convention.
std::size_t qubit_stride(int num_qubits, int qubit) {
    return std::size_t{1} << (num_qubits - 1 - qubit);
}

void check_qubit_index(int num_qubits, int qubit, const char *what) {
    if (qubit < 0 || qubit >= num_qubits) {
        throw std::out_of_range(std::string(what) + " index " +
                                std::to_string(qubit) + " out of range for " +
                                std::to_string(num_qubits) + " qubit(s)");
    }
}

} // namespace

StateVector::StateVector(int num_qubits)
    : num_qubits_(num_qubits), amplitudes_() {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument(
            "register width must be between 1 and " +
            std::to_string(kMaxQubits) + " qubits, got " +
            std::to_string(num_qubits));
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amplitudes_[0] = Amplitude{1.0, 0.0};
}

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(int num_qubits,
                                         std::vector<Amplitude> amplitudes) {
    StateVector ground(num_qubits); // validates the width
    if (amplitudes.size() != ground.dim()) {
        throw std::invalid_argument(
            "amplitude vector has length " +
            std::to_string(amplitudes.size()) + ", expected " +
            std::to_string(ground.dim()));
    }
    double norm_sq = 0.0;
    for (const Amplitude &a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("amplitudes must be finite");
        }
        norm_sq += std::norm(a);
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state is not normalized (|norm - 1| = " +
                                    std::to_string(std::abs(
                                        std::sqrt(norm_sq) - 1.0)) +
                                    ")");
    }
    return StateVector(num_qubits, std::move(amplitudes));
}

double StateVector::norm() const {
    double norm_sq = 0.0;
    for (const Amplitude &a : amplitudes_) {
        norm_sq += std::norm(a);
    }
    return std::sqrt(norm_sq);
}

Gate Gate::h(int target) { return Gate{GateKind::H, target, -1, 0.0}; }

Gate Gate::x(int target) { return Gate{GateKind::X, target, -1, 0.0}; }

Gate Gate::ry(int target, double angle) {
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("Ry angle must be finite");
    }
    return Gate{GateKind::Ry, target, -1, angle};
}

Gate Gate::cnot(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    return Gate{GateKind::Cnot, target, control, 0.0};
}

StateVector apply_gate(const StateVector &state, const Gate &gate) {
    const int n = state.num_qubits();
    check_qubit_index(n, gate.target, "target qubit");
    if (gate.kind == GateKind::Cnot) {
        check_qubit_index(n, gate.control, "control qubit");
        if (gate.control == gate.target) {
            throw std::invalid_argument("CNOT control and target must differ");
        }
    }

    std::vector<Amplitude> amps = state.amplitudes();
    const std::size_t dim = amps.size();
    const std::size_t t_stride = qubit_stride(n, gate.target);

    switch (gate.kind) {
    case GateKind::H: {
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & t_stride) == 0) {
                const Amplitude a = amps[i];
                const Amplitude b = amps[i | t_stride];
                amps[i] = (a + b) * inv_sqrt2;
                amps[i | t_stride] = (a - b) * inv_sqrt2;
            }
        }
        break;
    }
    case GateKind::X: {
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & t_stride) == 0) {
                std::swap(amps[i], amps[i | t_stride]);
            }
        }
        break;
    }
    case GateKind::Ry: {
        const double c = std::cos(0.5 * gate.angle);
        const double s = std::sin(0.5 * gate.angle);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & t_stride) == 0) {
                const Amplitude a = amps[i];
                const Amplitude b = amps[i | t_stride];
                amps[i] = c * a - s * b;
                amps[i | t_stride] = s * a + c * b;
            }
        }
        break;
    }
    case GateKind::Cnot: {
        const std::size_t c_stride = qubit_stride(n, gate.control);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & c_stride) != 0 && (i & t_stride) == 0) {
                std::swap(amps[i], amps[i | t_stride]);
            }
        }
        break;
    }
    }
    return StateVector(n, std::move(amps));
}

std::vector<double> exact_distribution(const StateVector &state) {
    std::vector<double> probabilities(state.dim());
    for (std::size_t i = 0; i < state.dim(); ++i) {
        probabilities[i] = std::norm(state.amplitudes()[i]);
    }
    return probabilities;
}

PostselectResult postselect(const StateVector &state, int qubit, int value) {
    const int n = state.num_qubits();
    check_qubit_index(n, qubit, "post-selection qubit");
    if (value != 0 && value != 1) {
        throw std::invalid_argument("post-selection value must be 0 or 1");
    }

    const std::size_t stride = qubit_stride(n, qubit);
    const std::size_t want = (value == 1) ? stride : 0;
    double probability = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if ((i & stride) == want) {
            probability += std::norm(state.amplitudes()[i]);
        }
    }
    if (probability < kZeroProbability) {
        throw DegenerateError(
            "post-selection on qubit " + std::to_string(qubit) + " = " +
            std::to_string(value) + " has zero probability");
    }
    probability = std::min(probability, 1.0);

    const double scale = 1.0 / std::sqrt(probability);
    std::vector<Amplitude> amps(state.dim(), Amplitude{0.0, 0.0});
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if ((i & stride) == want) {
            amps[i] = state.amplitudes()[i] * scale;
        }
    }
    return PostselectResult{StateVector(n, std::move(amps)), probability};
}

std::string format_bitstring(std::size_t basis_index, int width) {
    std::string bits(static_cast<std::size_t>(width), '0');
    for (int q = 0; q < width; ++q) {
        if (basis_index & (std::size_t{1} << (width - 1 - q))) {
            bits[static_cast<std::size_t>(q)] = '1';
        }
    }
    return bits;
}

} // namespace qdc
