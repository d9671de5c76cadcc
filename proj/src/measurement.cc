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

#include "ghzsdc/measurement.h"

#include <bit>
#include <cmath>
#include <numeric>

#include "ghzsdc/errors.h"
#include "ghzsdc/kernels.h"

namespace ghzsdc {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const cplx kHadamard[4] = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};

}  // namespace

std::vector<int> outcomes_from_index(std::uint64_t index, unsigned n_qubits) {
  std::vector<int> out(n_qubits);
  for (unsigned k = 0; k < n_qubits; ++k) {
    out[k] = ((index >> k) & 1U) ? -1 : 1;
  }
  return out;
}

std::uint64_t index_from_outcomes(const std::vector<int>& outcomes) {
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (outcomes[k] == -1) {
      index |= std::uint64_t{1} << k;
    } else if (outcomes[k] != 1) {
      throw ValidationError("outcomes must be +1 or -1");
    }
  }
  return index;
}

int outcome_product(std::uint64_t index) { return (std::popcount(index) % 2 == 0) ? 1 : -1; }

double OutcomeTable::total() const { return std::accumulate(probabilities.begin(), probabilities.end(), 0.0); }

std::uint64_t OutcomeTable::sample(Rng& rng) const {
  const double u = rng.uniform() * total();
  double cumulative = 0.0;
  std::uint64_t last_nonzero = 0;
  for (std::uint64_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] <= 0.0) {
      continue;
    }
    cumulative += probabilities[i];
    last_nonzero = i;
    if (u < cumulative) {
      return i;
    }
  }
  return last_nonzero;
}

OutcomeTable outcome_table(const PureState& psi, Basis basis) {
  std::vector<cplx> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  if (basis == Basis::kX) {
    for (unsigned q = 0; q < psi.n_qubits(); ++q) {
      kernels::apply_1q(amps, q, kHadamard);
    }
  }
  OutcomeTable table{basis, psi.n_qubits(), std::vector<double>(amps.size())};
  kernels::abs_squared(amps, table.probabilities);
  return table;
}

OutcomeTable measure_all_density(const DensityOperator& rho, Basis basis) {
  const unsigned n = rho.n_qubits();
  const std::size_t d = rho.dim();
  OutcomeTable table{basis, n, std::vector<double>(d)};
  if (basis == Basis::kZ) {
    for (std::size_t i = 0; i < d; ++i) {
      table.probabilities[i] = std::max(0.0, rho(i, i).real());
    }
    return table;
  }
  // H^{(x)n} rho H^{(x)n}; H is real and symmetric so the column side uses H too.
  std::vector<cplx> m(rho.data().begin(), rho.data().end());
  for (unsigned q = 0; q < n; ++q) {
    kernels::apply_1q(m, n + q, kHadamard);
    kernels::apply_1q(m, q, kHadamard);
  }
  for (std::size_t i = 0; i < d; ++i) {
    table.probabilities[i] = std::max(0.0, m[i * d + i].real());
  }
  return table;
}

PureState product_state(Basis basis, std::uint64_t index, unsigned n_qubits) {
  if (basis == Basis::kZ) {
    return PureState::basis_state(n_qubits, index);
  }
  const std::size_t d = std::size_t{1} << n_qubits;
  const double a = std::pow(kInvSqrt2, static_cast<double>(n_qubits));
  std::vector<cplx> amps(d);
  for (std::size_t z = 0; z < d; ++z) {
    // <z|x-product> picks up a sign for each qubit that is 1 in z and |-> in index.
    amps[z] = (std::popcount(z & index) % 2 == 0) ? a : -a;
  }
  return renormalized(n_qubits, std::move(amps));
}

MeasurementRecord measure_all(const PureState& state, Basis basis, Rng& rng) {
  const OutcomeTable table = outcome_table(state, basis);
  const std::uint64_t index = table.sample(rng);
  return MeasurementRecord{basis, outcomes_from_index(index, state.n_qubits()),
                           product_state(basis, index, state.n_qubits())};
}

}  // namespace ghzsdc
