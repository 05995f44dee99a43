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

#include <stdexcept>
#include <string>

namespace qdc {

/// Malformed input data (CSV files, report payloads).
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A numerically impossible or ill-posed request: zero-probability
/// post-selection branch, degenerate probability ratio, non-unit input,
/// vanishing standard deviation.
class DegenerateError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// The threshold classifier cannot break an exact tie.
class TieError : public DegenerateError {
  public:
    using DegenerateError::DegenerateError;
};

/// Every shot of a sampled run was rejected by post-selection.
class NoAcceptanceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qdc
