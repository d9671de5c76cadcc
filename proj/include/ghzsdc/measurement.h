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

#ifndef GHZSDC_MEASUREMENT_H
#define GHZSDC_MEASUREMENT_H

#include <cstdint>
#include <vector>

#include "ghzsdc/rng.h"
#include "ghzsdc/state.h"

namespace ghzsdc {

// Outcomes are encoded as +1/-1 per qubit: in Bz, +1 is |0> and -1 is |1>; in
// Bx, +1 is |+> and -1 is |->. An outcome index packs a tuple with bit k set
// when qubit k read -1.

std::vector<int> outcomes_from_index(std::uint64_t index, unsigned n_qubits);
std::uint64_t index_from_outcomes(const std::vector<int>& outcomes);

/// Product of the +/-1 outcomes encoded in `index`.
int outcome_product(std::uint64_t index);

struct MeasurementRecord {
  Basis basis;
  std::vector<int> outcomes;
  PureState post_state;
};

/// Exact Born probabilities for measuring every qubit in one product basis.
struct OutcomeTable {
  Basis basis;
  unsigned n_qubits;
  std::vector<double> probabilities;  // indexed by outcome index

  double total() const;
  /// Draws an outcome index by inverse CDF with one uniform variate.
  std::uint64_t sample(Rng& rng) const;
};

OutcomeTable measure_all_density(const DensityOperator& rho, Basis basis);
OutcomeTable outcome_table(const PureState& psi, Basis basis);

/// Samples a product-basis measurement of all qubits from the Born rule.
MeasurementRecord measure_all(const PureState& state, Basis basis, Rng& rng);

/// The product basis state for an outcome index.
PureState product_state(Basis basis, std::uint64_t index, unsigned n_qubits);

}  // namespace ghzsdc

#endif  // GHZSDC_MEASUREMENT_H
