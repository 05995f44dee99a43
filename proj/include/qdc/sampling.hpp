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
 * Deterministic shot sampling.
 *
 * The sampler is inverse-CDF over an exact distribution, driven by a
 * std::mt19937_64 engine whose raw 64-bit outputs are mapped to uniforms in
 * [0, 1) by taking the top 53 bits. Both pieces are fully specified by the
 * C++ standard, so a (seed, shots) pair reproduces bit-identical counts on
 * any conforming platform.
 */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qdc/statevector.hpp"

namespace qdc {

/// Counts of measured bitstrings. Only observed outcomes appear; counts sum
/// to total_shots.
struct ShotCounts {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t total_shots = 0;

    std::uint64_t count(const std::string &bitstring) const;
};

/// Draws `shots` i.i.d. samples from `probabilities` (indexed by basis
/// index, keys formatted at `width` bits). Deterministic for a fixed seed.
/// Throws std::invalid_argument when shots == 0.
ShotCounts sample_counts(const std::vector<double> &probabilities, int width,
                         std::uint64_t shots, std::uint64_t seed);

/// Samples full-register measurements of `state`.
ShotCounts sample_shots(const StateVector &state, std::uint64_t shots,
                        std::uint64_t seed);

/// Derives an independent seed for worker `stream_index` from a base seed
/// (SplitMix64 finalizer over seed + stream offset). Partitioned sampling
/// must merge counts from substreams; the single-stream path remains the
/// reproducibility reference.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream_index);

} // namespace qdc
