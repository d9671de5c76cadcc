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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ghzsdc/analysis.h"
#include "ghzsdc/errors.h"
#include "ghzsdc/rng.h"

namespace ghzsdc {

AttackModel AttackFamily::instantiate(double param) const {
  switch (kind) {
    case Kind::kNoAttack:
      return attack::NoAttack{};
    case Kind::kGhzPauli:
      if (param < 1.0 || param != std::floor(param)) {
        throw ValidationError("ghz_pauli grid values must be integers >= 1");
      }
      return attack::GhzPauli{static_cast<std::uint64_t>(param)};
    case Kind::kDepolarize:
      return attack::Depolarize{param, qubits};
    case Kind::kInterceptResend: {
      if (param < 1.0 || param != std::floor(param)) {
        throw ValidationError("intercept_resend grid values count intercepted qubits and must be integers >= 1");
      }
      std::vector<unsigned> q;
      for (unsigned k = 1; k <= static_cast<unsigned>(param); ++k) {
        q.push_back(k);
      }
      return attack::InterceptResend{basis, q};
    }
  }
  throw ValidationError("unknown attack family");
}

std::vector<double> AttackFamily::default_grid(unsigned n) const {
  std::vector<double> grid;
  switch (kind) {
    case Kind::kNoAttack:
      grid = {0.0};
      break;
    case Kind::kGhzPauli:
      for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
        grid.push_back(static_cast<double>(i));
      }
      break;
    case Kind::kDepolarize:
      for (int k = 0; k <= 10; ++k) {
        grid.push_back(k / 10.0);
      }
      break;
    case Kind::kInterceptResend:
      for (unsigned k = 1; k < n; ++k) {
        grid.push_back(k);
      }
      break;
  }
  return grid;
}

std::string AttackFamily::name() const {
  switch (kind) {
    case Kind::kNoAttack:
      return "no_attack";
    case Kind::kGhzPauli:
      return "ghz_pauli";
    case Kind::kDepolarize:
      return "depolarize";
    case Kind::kInterceptResend:
      return "intercept_resend";
  }
  return "unknown";
}

std::vector<SweepRow> sweep(const AttackFamily& family, const std::vector<double>& grid, unsigned n,
                            std::uint64_t seed, std::uint64_t rounds, unsigned workers) {
  if (grid.empty()) {
    throw ValidationError("sweep: empty parameter grid");
  }
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const AttackModel model = family.instantiate(grid[j]);
    const SecurityReport report = security_report(apply_attack(model, ghz_state(n)));
    SweepRow row;
    row.attack_label = describe(model);
    row.param = grid[j];
    row.gamma = report.gamma;
    row.d_exact = report.detection_exact;
    row.s_max_bits = report.entropy_bound_bits;
    row.bound_satisfied = report.bound_satisfied;
    if (rounds > 0) {
      const MonteCarloEstimate mc = monte_carlo_detection(model, rounds, derive_seed(seed, j), n, workers);
      row.d_mc = mc.d_hat;
      row.mc_std_err = mc.std_error;
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) { return a.gamma < b.gamma; });
  return rows;
}

}  // namespace ghzsdc
