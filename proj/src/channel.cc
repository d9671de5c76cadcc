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

#include "ghzsdc/channel.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "ghzsdc/errors.h"
#include "ops_internal.h"

namespace ghzsdc {
namespace {

std::vector<unsigned> shifted(std::span<const unsigned> qubits, unsigned by) {
  std::vector<unsigned> out(qubits.begin(), qubits.end());
  for (auto& q : out) {
    q += by;
  }
  return out;
}

void check_targets(const DensityOperator& rho, std::span<const unsigned> targets) {
  if (targets.empty()) {
    throw ValidationError("channel: no target qubits");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] >= rho.n_qubits()) {
      throw ValidationError("channel: target qubit " + std::to_string(targets[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) {
        throw ValidationError("channel: duplicate target qubit");
      }
    }
  }
}

// K rho K^dagger on the flat row-major buffer.
std::vector<cplx> sandwich(std::span<const cplx> data, unsigned n, const CMatrix& k,
                           std::span<const unsigned> targets) {
  const auto row_bits = shifted(targets, n);
  auto once = detail::apply_matrix_raw(data, row_bits, k);
  return detail::apply_matrix_raw(once, targets, k.conj());
}

}  // namespace

void validate_kraus_set(std::span<const CMatrix> kraus_set, std::size_t n_targets) {
  if (kraus_set.empty()) {
    throw ValidationError("Kraus set is empty");
  }
  const std::size_t dim = std::size_t{1} << n_targets;
  CMatrix sum(dim);
  for (const auto& k : kraus_set) {
    if (k.dim() != dim) {
      throw ValidationError("Kraus operator is " + std::to_string(k.dim()) + "x" + std::to_string(k.dim()) +
                            ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    sum = sum + k.adjoint() * k;
  }
  const double err = sum.max_abs_diff(CMatrix::identity(dim));
  if (!(err <= kCompletenessTolerance)) {
    throw ValidationError("Kraus set is not trace preserving: |sum K^dag K - I| = " + std::to_string(err));
  }
}

DensityOperator apply_channel(const DensityOperator& rho, std::span<const CMatrix> kraus_set,
                              std::span<const unsigned> target_qubits) {
  check_targets(rho, target_qubits);
  validate_kraus_set(kraus_set, target_qubits.size());
  std::vector<cplx> acc(rho.data().size());
  for (const auto& k : kraus_set) {
    const auto term = sandwich(rho.data(), rho.n_qubits(), k, target_qubits);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      acc[i] += term[i];
    }
  }
  // Clean up rounding so the output is exactly Hermitian.
  const std::size_t d = rho.dim();
  for (std::size_t r = 0; r < d; ++r) {
    acc[r * d + r] = acc[r * d + r].real();
    for (std::size_t c = r + 1; c < d; ++c) {
      const cplx avg = 0.5 * (acc[r * d + c] + std::conj(acc[c * d + r]));
      acc[r * d + c] = avg;
      acc[c * d + r] = std::conj(avg);
    }
  }
  return DensityOperator::from_trusted(rho.n_qubits(), std::move(acc));
}

DensityOperator apply_unitary(const DensityOperator& rho, const CMatrix& u, std::span<const unsigned> target_qubits) {
  check_targets(rho, target_qubits);
  if (u.dim() != (std::size_t{1} << target_qubits.size())) {
    throw ValidationError("apply_unitary: operator dimension does not match target count");
  }
  return DensityOperator::from_trusted(rho.n_qubits(), sandwich(rho.data(), rho.n_qubits(), u, target_qubits));
}

std::vector<double> hermitian_eigenvalues(const DensityOperator& rho) {
  const auto d = static_cast<Eigen::Index>(rho.dim());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      m(r, c) = rho(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("eigenvalue decomposition did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p > kEigenClip) {
      h -= p * std::log2(p);
    }
  }
  return h;
}

double von_neumann_entropy(const DensityOperator& rho) {
  const auto evals = hermitian_eigenvalues(rho);
  if (!evals.empty() && evals.front() < -kNegativeEigenTolerance) {
    throw ValidationError("von_neumann_entropy: operator has eigenvalue " + std::to_string(evals.front()));
  }
  return std::max(0.0, shannon_entropy(evals));
}

double expectation(const DensityOperator& rho, const PureState& psi) {
  if (psi.n_qubits() != rho.n_qubits()) {
    throw ValidationError("expectation: dimension mismatch");
  }
  const auto a = psi.amplitudes();
  const std::size_t d = rho.dim();
  cplx acc{};
  for (std::size_t r = 0; r < d; ++r) {
    if (a[r] == cplx{}) {
      continue;
    }
    cplx row{};
    for (std::size_t c = 0; c < d; ++c) {
      row += rho(r, c) * a[c];
    }
    acc += std::conj(a[r]) * row;
  }
  return acc.real();
}

double fidelity_to_target(const DensityOperator& rho, const PureState& target) {
  if (target.n_qubits() != rho.n_qubits()) {
    throw ValidationError("fidelity_to_target: dimension mismatch");
  }
  return std::sqrt(std::clamp(expectation(rho, target), 0.0, 1.0));
}

}  // namespace ghzsdc
