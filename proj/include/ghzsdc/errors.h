// Copyright 2026 The ghzsdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHZSDC_ERRORS_H
#define GHZSDC_ERRORS_H

#include <stdexcept>

namespace ghzsdc {

/// Qubit or party count outside the supported range.
class SizeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Input violates a type invariant (normalization, trace preservation,
/// travel-qubit restriction, probability mass, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ghzsdc

#endif  // GHZSDC_ERRORS_H
