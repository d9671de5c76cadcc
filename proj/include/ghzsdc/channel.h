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

#ifndef GHZSDC_CHANNEL_H
#define GHZSDC_CHANNEL_H

#include <span>
#include <vector>

#include "ghzsdc/linalg.h"
#include "ghzsdc/state.h"

namespace ghzsdc {

inline constexpr double kCompletenessTolerance = 1e-10;
/// Eigenvalues below this are treated as exact zeros by entropy functions.
inline constexpr double kEigenClip = 1e-12;

/// Throws ValidationError unless sum_k K_k^dagger K_k = I within
/// kCompletenessTolerance and all operators are 2^|targets| square.
void validate_kraus_set(std::span<const CMatrix> kraus_set, std::size_t n_targets);

/// rho -> sum_k K_k rho K_k^dagger, the Kraus operators acting on `target_qubits`
/// (local index bit j of each K addresses target_qubits[j]).
DensityOperator apply_channel(const DensityOperator& rho, std::span<const CMatrix> kraus_set,
                              std::span<const unsigned> target_qubits);

/// U rho U^dagger.
DensityOperator apply_unitary(const DensityOperator& rho, const CMatrix& u,
                              std::span<const unsigned> target_qubits);

/// Ascending eigenvalues of a Hermitian operator.
std::vector<double> hermitian_eigenvalues(const DensityOperator& rho);

/// -sum lambda log2 lambda, in bits. Eigenvalues below kEigenClip count as 0.
double von_neumann_entropy(const DensityOperator& rho);

/// -sum p log2 p with 0 log 0 = 0.
double shannon_entropy(std::span<const double> probabilities);

/// sqrt(<target|rho|target>).
double fidelity_to_target(const DensityOperator& rho, const PureState& target);

/// <psi|rho|psi>, real part.
double expectation(const DensityOperator& rho, const PureState& psi);

}  // namespace ghzsdc

#endif  // GHZSDC_CHANNEL_H
