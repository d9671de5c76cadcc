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

#ifndef GHZSDC_SRC_OPS_INTERNAL_H
#define GHZSDC_SRC_OPS_INTERNAL_H

#include <span>
#include <vector>

#include "ghzsdc/linalg.h"

namespace ghzsdc::detail {

/// Applies m to the listed bit positions of a flat 2^k-length buffer. Local
/// index bit j of m addresses bits[j].
std::vector<cplx> apply_matrix_raw(std::span<const cplx> amps, std::span<const unsigned> bits,
                                   const CMatrix& m);

}  // namespace ghzsdc::detail

#endif  // GHZSDC_SRC_OPS_INTERNAL_H
