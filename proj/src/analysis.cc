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

#include "ghzsdc/analysis.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ghzsdc/channel.h"
#include "ghzsdc/errors.h"
#include "ghzsdc/measurement.h"
#include "ghzsdc/protocol.h"

namespace ghzsdc {

double fidelity_deficit(const DensityOperator& rho) {
  return 1.0 - ghz_basis_weight(rho, 0);
}

double entropy_bound(double gamma, unsigned n) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ValidationError("entropy_bound: gamma must lie in [0, 1]");
  }
  if (n < 2 || n > kMaxQubits) {
    throw SizeError("entropy_bound: unsupported qubit count " + std::to_string(n));
  }
  const double others = std::ldexp(1.0, static_cast<int>(n)) - 1.0;
  double s = 0.0;
  if (gamma < 1.0) {
    s -= (1.0 - gamma) * std::log2(1.0 - gamma);
  }
  if (gamma > 0.0) {
    s -= gamma * std::log2(gamma / others);
  }
  return s;
}

double entropy_bound_check(double gamma, unsigned n) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ValidationError("entropy_bound_check: gamma must lie in [0, 1]");
  }
  const std::vector<PureState> basis = ghz_basis(n);
  std::vector<double> weights(basis.size(), gamma / static_cast<double>(basis.size() - 1));
  weights[0] = 1.0 - gamma;
  return von_neumann_entropy(DensityOperator::mixture(weights, basis));
}

double holevo_bound(const std::vector<std::pair<double, DensityOperator>>& ensemble) {
  if (ensemble.empty()) {
    throw ValidationError("holevo_bound: empty ensemble");
  }
  const unsigned n = ensemble.front().second.n_qubits();
  double total = 0.0;
  for (const auto& [p, rho] : ensemble) {
    if (p < 0.0) {
      throw ValidationError("holevo_bound: negative probability");
    }
    if (rho.n_qubits() != n) {
      throw ValidationError("holevo_bound: ensemble members differ in dimension");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw ValidationError("holevo_bound: probabilities sum to " + std::to_string(total));
  }
  const std::size_t len = ensemble.front().second.data().size();
  std::vector<cplx> avg(len);
  double conditional = 0.0;
  for (const auto& [p, rho] : ensemble) {
    const auto d = rho.data();
    for (std::size_t i = 0; i < len; ++i) {
      avg[i] += p * d[i];
    }
    conditional += p * von_neumann_entropy(rho);
  }
  return von_neumann_entropy(DensityOperator::from_trusted(n, std::move(avg))) - conditional;
}

double detection_probability_exact(const DensityOperator& rho) {
  const unsigned n = rho.n_qubits();
  const OutcomeTable z = measure_all_density(rho, Basis::kZ);
  const OutcomeTable x = measure_all_density(rho, Basis::kX);
  const std::uint64_t all_minus = (std::uint64_t{1} << n) - 1;
  double p_z = 0.0;
  double p_x = 0.0;
  for (std::uint64_t i = 0; i < z.probabilities.size(); ++i) {
    if (i != 0 && i != all_minus) {
      p_z += z.probabilities[i];
    }
    if (outcome_product(i) == -1) {
      p_x += x.probabilities[i];
    }
  }
  return 0.5 * p_z + 0.5 * p_x;
}

std::vector<double> ghz_diagonal_weights(const DensityOperator& rho) {
  std::vector<double> w(rho.dim());
  for (std::uint64_t i = 0; i < w.size(); ++i) {
    w[i] = ghz_basis_weight(rho, i);
  }
  return w;
}

BoundAudit detection_bound_audit(const DensityOperator& rho) {
  const double gamma = fidelity_deficit(rho);
  const double d = detection_probability_exact(rho);
  return {gamma, d, d >= gamma / 2.0 - kBoundSlack};
}

MonteCarloEstimate monte_carlo_detection(const AttackModel& attack, std::uint64_t rounds, std::uint64_t seed,
                                         unsigned n, unsigned workers) {
  if (rounds == 0) {
    throw ValidationError("monte_carlo_detection: need at least one round");
  }
  const std::uint64_t flagged = count_control_detections(attack, n, rounds, seed, workers);
  const double d_hat = static_cast<double>(flagged) / static_cast<double>(rounds);
  return {d_hat, std::sqrt(d_hat * (1.0 - d_hat) / static_cast<double>(rounds)), rounds, flagged};
}

SecurityReport security_report(const DensityOperator& rho) {
  SecurityReport r;
  r.ghz_diagonal_weights = ghz_diagonal_weights(rho);
  // Squared 1/sqrt(2) amplitudes leave ~1e-16 residue on ideal states.
  r.gamma = std::clamp(1.0 - r.ghz_diagonal_weights[0], 0.0, 1.0);
  if (r.gamma < 1e-14) {
    r.gamma = 0.0;
  }
  r.entropy_bound_bits = entropy_bound(r.gamma, rho.n_qubits());
  r.detection_exact = detection_probability_exact(rho);
  r.bound_satisfied = r.detection_exact >= r.gamma / 2.0 - kBoundSlack;
  return r;
}

SecurityReport security_report(const AttackModel& attack, unsigned n, std::uint64_t rounds, std::uint64_t seed) {
  SecurityReport r = security_report(apply_attack(attack, ghz_state(n)));
  if (rounds > 0) {
    const MonteCarloEstimate mc = monte_carlo_detection(attack, rounds, seed, n);
    r.detection_mc = mc.d_hat;
    r.mc_std_error = mc.std_error;
  }
  return r;
}

}  // namespace ghzsdc
