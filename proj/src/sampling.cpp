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

#include "qdc/sampling.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qdc {

std::uint64_t ShotCounts::count(const std::string &bitstring) const {
    auto it = counts.find(bitstring);
    return it == counts.end() ? 0 : it->second;
}

ShotCounts sample_counts(const std::vector<double> &probabilities, int width,
                         std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shot count must be positive");
    }
    if (probabilities.empty() ||
        probabilities.size() != (std::size_t{1} << width)) {
        throw std::invalid_argument("distribution size does not match width");
    }

    std::vector<double> cumulative(probabilities.size());
    double total = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        total += probabilities[i];
        cumulative[i] = total;
    }

    std::mt19937_64 engine(seed);
    std::vector<std::uint64_t> hits(probabilities.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        // Top 53 bits of the raw output as a uniform in [0, 1); scaled by the
        // cumulative total so a 1e-12 normalization slack cannot overflow the
        // table.
        const double u =
            static_cast<double>(engine() >> 11) * 0x1.0p-53 * total;
        const auto it =
            std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t outcome = std::min(
            static_cast<std::size_t>(it - cumulative.begin()),
            probabilities.size() - 1);
        ++hits[outcome];
    }

    ShotCounts result;
    result.total_shots = shots;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (hits[i] != 0) {
            result.counts[format_bitstring(i, width)] = hits[i];
        }
    }
    return result;
}

ShotCounts sample_shots(const StateVector &state, std::uint64_t shots,
                        std::uint64_t seed) {
    return sample_counts(exact_distribution(state), state.num_qubits(), shots,
                         seed);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream_index) {
    // SplitMix64 finalizer; stream 0 is not the identity on purpose so that
    // substreams never collide with direct use of the base seed.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream_index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace qdc
