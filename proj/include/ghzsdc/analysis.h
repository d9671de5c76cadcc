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

#ifndef GHZSDC_ANALYSIS_H
#define GHZSDC_ANALYSIS_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ghzsdc/adversary.h"
#include "ghzsdc/state.h"

namespace ghzsdc {

/// Slack allowed when checking d >= gamma/2.
inline constexpr double kBoundSlack = 1e-12;

struct SecurityReport {
  double gamma = 0.0;
  double entropy_bound_bits = 0.0;
  double detection_exact = 0.0;
  std::optional<double> detection_mc;
  std::optional<double> mc_std_error;
  std::vector<double> ghz_diagonal_weights;
  bool bound_satisfied = true;
};

/// gamma = 1 - <GHZ|rho|GHZ>, the squared-fidelity deficit to the ideal state.
double fidelity_deficit(const DensityOperator& rho);

/// Entropy in bits of the maximally mixed state compatible with fidelity
/// deficit gamma: diagonal (1 - gamma, gamma/(2^n - 1), ...).
/// Throws ValidationError if gamma is outside [0, 1].
double entropy_bound(double gamma, unsigned n);

/// Same quantity via an explicit operator in the GHZ-type basis and its
/// spectrum. Independent of entropy_bound's closed form; n <= 10.
double entropy_bound_check(double gamma, unsigned n);

/// chi = S(sum p_i rho_i) - sum p_i S(rho_i).
double holevo_bound(const std::vector<std::pair<double, DensityOperator>>& ensemble);

/// Probability that one control round flags, with Bz and Bx each chosen with
/// probability 1/2: d = P_z[readings disagree]/2 + P_x[product = -1]/2.
double detection_probability_exact(const DensityOperator& rho);

/// Diagonal of rho in the GHZ-type basis.
std::vector<double> ghz_diagonal_weights(const DensityOperator& rho);

struct BoundAudit {
  double gamma;
  double detection;
  bool bound_satisfied;  // detection >= gamma/2 - kBoundSlack
};

BoundAudit detection_bound_audit(const DensityOperator& rho);

struct MonteCarloEstimate {
  double d_hat;
  double std_error;  // sqrt(d_hat (1 - d_hat) / rounds)
  std::uint64_t rounds;
  std::uint64_t flagged;
};

/// Runs `rounds` control rounds through the protocol engine.
MonteCarloEstimate monte_carlo_detection(const AttackModel& attack, std::uint64_t rounds, std::uint64_t seed,
                                         unsigned n, unsigned workers = 1);

SecurityReport security_report(const DensityOperator& rho);

/// Report for an attack on the n-qubit GHZ state, with a Monte Carlo column
/// when rounds > 0.
SecurityReport security_report(const AttackModel& attack, unsigned n, std::uint64_t rounds = 0,
                               std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Sweeps

/// A one-parameter attack family.
struct AttackFamily {
  enum class Kind { kNoAttack, kGhzPauli, kDepolarize, kInterceptResend };

  Kind kind = Kind::kNoAttack;
  /// Depolarize acts on these qubits.
  std::vector<unsigned> qubits{1};
  /// InterceptResend measures in this basis.
  Basis basis = Basis::kZ;

  /// Instance for one grid value: ghz_pauli -> element index, depolarize -> p,
  /// intercept_resend -> number k of intercepted travel qubits (1..k).
  AttackModel instantiate(double param) const;
  /// Grid used when none is given: 1..2^n-1 for ghz_pauli, 0..1 in steps of
  /// 0.1 for depolarize, 1..n-1 for intercept_resend, {0} for no_attack.
  std::vector<double> default_grid(unsigned n) const;
  std::string name() const;
};

struct SweepRow {
  std::string attack_label;
  double param = 0.0;
  double gamma = 0.0;
  double d_exact = 0.0;
  std::optional<double> d_mc;
  std::optional<double> mc_std_err;
  double s_max_bits = 0.0;
  bool bound_satisfied = true;
};

/// Evaluates every grid point and returns rows in ascending gamma (stable in
/// grid order). Grid point j uses Monte Carlo seed derive_seed(seed, j);
/// rounds == 0 skips the Monte Carlo columns. Throws ValidationError on an
/// empty grid.
std::vector<SweepRow> sweep(const AttackFamily& family, const std::vector<double>& grid, unsigned n,
                            std::uint64_t seed, std::uint64_t rounds, unsigned workers = 1);

}  // namespace ghzsdc

#endif  // GHZSDC_ANALYSIS_H
