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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ghzsdc/adversary.h"
#include "ghzsdc/channel.h"
#include "ghzsdc/errors.h"
#include "oracle.h"

namespace ghzsdc {
namespace {

constexpr double kPerElementD[8] = {0, 0.5, 0.5, 1, 0.5, 1, 0.5, 1};

DensityOperator phi(unsigned n, std::uint64_t i) { return DensityOperator::from_pure(ghz_basis_state(n, i)); }

DensityOperator ghz_diagonal(const std::vector<double>& w) {
  std::vector<PureState> states;
  for (std::size_t i = 0; i < w.size(); ++i) states.push_back(ghz_basis_state(3, i));
  return DensityOperator::mixture(w, states);
}

TEST(FidelityDeficit, Examples) {
  EXPECT_NEAR(fidelity_deficit(phi(3, 0)), 0.0, 1e-15);
  EXPECT_NEAR(fidelity_deficit(phi(3, 1)), 1.0, 1e-15);
  EXPECT_NEAR(fidelity_deficit(apply_attack(attack::InterceptResend{Basis::kZ, {1}}, ghz_state(3))), 0.5, 1e-15);
}

TEST(EntropyBound, Examples) {
  EXPECT_EQ(entropy_bound(0.0, 3), 0.0);
  EXPECT_NEAR(entropy_bound(7.0 / 8.0, 3), 3.0, 1e-12);
  EXPECT_NEAR(entropy_bound(1.0, 3), std::log2(7.0), 1e-12);
  EXPECT_NEAR(entropy_bound_check(0.3, 3), entropy_bound(0.3, 3), 1e-10);
  EXPECT_NEAR(entropy_bound_check(0.0, 3), 0.0, 1e-10);
  EXPECT_NEAR(entropy_bound_check(7.0 / 8.0, 3), 3.0, 1e-10);
  EXPECT_THROW(entropy_bound(-0.1, 3), ValidationError);
  EXPECT_THROW(entropy_bound(1.1, 3), ValidationError);
}

TEST(EntropyBound, MatchesSpectralCheckOnGrid) {
  for (unsigned n : {3U, 4U}) {
    for (int k = 0; k < 100; ++k) {
      const double g = k / 99.0;
      EXPECT_NEAR(entropy_bound(g, n), entropy_bound_check(g, n), 1e-10) << "n=" << n << " g=" << g;
    }
  }
}

TEST(EntropyBound, ShapeAndMaximum) {
  for (unsigned n : {3U, 4U, 5U}) {
    const double uniform = (std::pow(2.0, n) - 1) / std::pow(2.0, n);
    double best = -1, arg = -1;
    const int steps = 20000;
    for (int k = 0; k <= steps; ++k) {
      const double g = double(k) / steps;
      const double v = entropy_bound(g, n);
      if (v > best) best = v, arg = g;
    }
    EXPECT_NEAR(arg, uniform, 1.0 / steps);
    EXPECT_NEAR(entropy_bound(uniform, n), double(n), 1e-12);
    EXPECT_LE(best, double(n) + 1e-12);
    // Increasing below the maximum, decreasing above it.
    EXPECT_LT(entropy_bound(uniform / 2, n), entropy_bound(uniform * 0.9, n));
    EXPECT_GT(entropy_bound(uniform + (1 - uniform) / 3, n), entropy_bound(1.0, n));
    // Concavity on a coarse grid.
    for (int k = 1; k < 99; ++k) {
      const double a = entropy_bound((k - 1) / 99.0, n), b = entropy_bound(k / 99.0, n),
                   c = entropy_bound((k + 1) / 99.0, n);
      EXPECT_GE(2 * b, a + c - 1e-12);
    }
  }
}

TEST(Holevo, Examples) {
  EXPECT_NEAR(holevo_bound({{1.0, phi(3, 0)}}), 0.0, 1e-12);
  EXPECT_NEAR(holevo_bound({{0.5, DensityOperator::from_pure(PureState::basis_state(1, 0))},
                            {0.5, DensityOperator::from_pure(PureState::basis_state(1, 1))}}),
              1.0, 1e-12);
  EXPECT_NEAR(holevo_bound({{0.5, phi(3, 0)}, {0.5, phi(3, 1)}}), 1.0, 1e-12);
  EXPECT_THROW(holevo_bound({{0.5, phi(3, 0)}, {0.4, phi(3, 1)}}), ValidationError);
}

TEST(Holevo, OrthogonalEnsemblesGiveShannon) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (std::size_t m = 2; m <= 4; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> p(m);
      double s = 0;
      for (auto& x : p) s += (x = u(rng));
      for (auto& x : p) x /= s;
      std::vector<std::pair<double, DensityOperator>> ens;
      std::vector<std::uint64_t> idx = {0, 3, 5, 6};
      std::shuffle(idx.begin(), idx.end(), rng);
      for (std::size_t i = 0; i < m; ++i) ens.emplace_back(p[i], phi(3, idx[i]));
      double h = 0;
      for (double x : p) h -= x * std::log2(x);
      EXPECT_NEAR(holevo_bound(ens), h, 1e-10);
      EXPECT_NEAR(shannon_entropy(p), h, 1e-12);
    }
  }
}

TEST(Detection, Examples) {
  EXPECT_NEAR(detection_probability_exact(phi(3, 0)), 0.0, 1e-15);
  EXPECT_NEAR(detection_probability_exact(phi(3, 1)), 0.5, 1e-15);
  EXPECT_NEAR(detection_probability_exact(phi(3, 3)), 1.0, 1e-15);
}

TEST(Detection, MatchesOracleOnRandomDensities) {
  std::mt19937_64 rng(3);
  for (unsigned n : {3U, 4U}) {
    for (int trial = 0; trial < 10; ++trial) {
      const oracle::Mat m = oracle::random_density(Eigen::Index(1) << n, 1 + trial % 4, rng);
      EXPECT_NEAR(detection_probability_exact(oracle::to_density(m, n)), oracle::detection(m, n), 1e-12);
    }
  }
}

TEST(GhzDiagonalWeights, Examples) {
  auto w = ghz_diagonal_weights(phi(3, 2));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(w[i], i == 2 ? 1.0 : 0.0, 1e-15);
  w = ghz_diagonal_weights(apply_attack(attack::InterceptResend{Basis::kZ, {1}}, ghz_state(3)));
  const auto basis = oracle::reference_basis3();
  const oracle::Mat rho = 0.5 * (oracle::projector(oracle::ket("000")) + oracle::projector(oracle::ket("111")));
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(w[i], (basis[i].adjoint() * rho * basis[i])(0, 0).real(), 1e-15);
  }
  EXPECT_NEAR(w[0], 0.5, 1e-15);
  EXPECT_NEAR(w[1], 0.5, 1e-15);
  w = ghz_diagonal_weights(DensityOperator::maximally_mixed(3));
  for (double x : w) EXPECT_NEAR(x, 0.125, 1e-15);
}

TEST(BoundAudit, Examples) {
  BoundAudit a = detection_bound_audit(phi(3, 1));
  EXPECT_NEAR(a.gamma, 1.0, 1e-15);
  EXPECT_NEAR(a.detection, 0.5, 1e-15);
  EXPECT_TRUE(a.bound_satisfied);
  a = detection_bound_audit(phi(3, 0));
  EXPECT_NEAR(a.gamma, 0.0, 1e-15);
  EXPECT_NEAR(a.detection, 0.0, 1e-15);
  EXPECT_TRUE(a.bound_satisfied);
  a = detection_bound_audit(ghz_diagonal({0.6, 0, 0, 0, 0, 0.4, 0, 0}));
  EXPECT_NEAR(a.gamma, 0.4, 1e-12);
  EXPECT_NEAR(a.detection, 0.4, 1e-12);
  EXPECT_TRUE(a.bound_satisfied);
}

TEST(BoundAudit, GhzDiagonalStatesObeyTheLinearFormula) {
  std::mt19937_64 rng(1234);
  std::exponential_distribution<double> e(1.0);
  std::bernoulli_distribution zero_odd(0.3);
  int equality_cases = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> w(8);
    const bool restrict = zero_odd(rng);
    double s = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      w[i] = (restrict && (i == 3 || i == 5 || i == 7)) ? 0.0 : e(rng);
      s += w[i];
    }
    for (auto& x : w) x /= s;
    const DensityOperator rho = ghz_diagonal(w);
    double expected = 0;
    for (std::size_t i = 0; i < 8; ++i) expected += w[i] * kPerElementD[i];
    const BoundAudit a = detection_bound_audit(rho);
    EXPECT_NEAR(a.detection, expected, 1e-10);
    EXPECT_NEAR(a.gamma, 1 - w[0], 1e-10);
    EXPECT_GE(a.detection, a.gamma / 2 - 1e-10);
    EXPECT_TRUE(a.bound_satisfied);
    if (restrict) {
      ++equality_cases;
      EXPECT_NEAR(a.detection, a.gamma / 2, 1e-10);
    }
  }
  EXPECT_GT(equality_cases, 0);
}

TEST(Detection, PermutationInvariance) {
  // Symmetric mixtures stay symmetric; conjugating by a travel-qubit swap must not change d.
  const oracle::Mat swap = [] {
    oracle::Mat s = oracle::Mat::Zero(8, 8);
    for (int i = 0; i < 8; ++i) s((i & 1) | ((i >> 2) & 1) << 1 | ((i >> 1) & 1) << 2, i) = 1;
    return s;
  }();
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const oracle::Mat m = oracle::random_density(8, 3, rng);
    const oracle::Mat sym = 0.5 * (m + swap * m * swap.adjoint());
    const double d = detection_probability_exact(oracle::to_density(sym, 3));
    EXPECT_NEAR(d, detection_probability_exact(oracle::to_density(swap * sym * swap.adjoint(), 3)), 1e-12);
  }
  // The GHZ state under intercept on qubit 1 vs qubit 2.
  EXPECT_NEAR(detection_probability_exact(apply_attack(attack::InterceptResend{Basis::kX, {1}}, ghz_state(4))),
              detection_probability_exact(apply_attack(attack::InterceptResend{Basis::kX, {3}}, ghz_state(4))),
              1e-12);
}

TEST(MonteCarlo, Examples) {
  const MonteCarloEstimate none = monte_carlo_detection(attack::NoAttack{}, 10000, 1, 3);
  EXPECT_EQ(none.d_hat, 0.0);
  EXPECT_EQ(none.flagged, 0U);
  const MonteCarloEstimate p1 = monte_carlo_detection(attack::GhzPauli{1}, 100000, 2, 3, 4);
  EXPECT_NEAR(p1.d_hat, 0.5, 4 * p1.std_error);
  EXPECT_NEAR(p1.std_error, std::sqrt(p1.d_hat * (1 - p1.d_hat) / 1e5), 1e-15);
  const MonteCarloEstimate ir = monte_carlo_detection(attack::InterceptResend{Basis::kZ, {1}}, 100000, 3, 3, 4);
  EXPECT_NEAR(ir.d_hat, 0.25, 4 * ir.std_error);
}

TEST(MonteCarlo, AgreesWithExactForEveryCatalogedAttack) {
  std::vector<AttackModel> models = {
      attack::NoAttack{},
      attack::InterceptResend{Basis::kZ, {1}},
      attack::InterceptResend{Basis::kX, {2}},
      attack::InterceptResend{Basis::kZ, {1, 2}},
      attack::Depolarize{0.3, {1}},
      attack::Depolarize{0.7, {1, 2}},
      attack::KrausCustom{{gates::I() * std::sqrt(0.6), gates::X() * std::sqrt(0.4)}, {2}},
      attack::WSubstitution{},
  };
  for (std::uint64_t i = 1; i < 8; ++i) models.push_back(attack::GhzPauli{i});
  std::uint64_t seed = 500;
  for (const auto& m : models) {
    const double exact = detection_probability_exact(apply_attack(m, ghz_state(3)));
    const MonteCarloEstimate est = monte_carlo_detection(m, 100000, ++seed, 3, 4);
    const double sigma = std::max(est.std_error, 1e-12);
    EXPECT_LE(std::abs(est.d_hat - exact), 4 * sigma) << describe(m);
  }
}

TEST(MonteCarlo, WorkerCountDoesNotMatter) {
  const AttackModel m = attack::Depolarize{0.4, {1}};
  const auto a = monte_carlo_detection(m, 30000, 9, 4, 1);
  const auto b = monte_carlo_detection(m, 30000, 9, 4, 5);
  EXPECT_EQ(a.flagged, b.flagged);
}

TEST(SecurityReport, FieldsAndInvariants) {
  const SecurityReport r = security_report(attack::Depolarize{0.3, {1}}, 3, 20000, 4);
  EXPECT_NEAR(r.detection_exact, 0.15, 1e-12);
  ASSERT_TRUE(r.detection_mc.has_value());
  ASSERT_TRUE(r.mc_std_error.has_value());
  double s = 0;
  for (double w : r.ghz_diagonal_weights) s += w;
  EXPECT_NEAR(s, 1.0, 1e-10);
  const DensityOperator rho = apply_attack(attack::Depolarize{0.3, {1}}, ghz_state(3));
  const double f = fidelity_to_target(rho, ghz_state(3));
  EXPECT_NEAR(r.gamma, 1 - f * f, 1e-12);
  EXPECT_NEAR(r.entropy_bound_bits, entropy_bound(r.gamma, 3), 1e-15);
  EXPECT_TRUE(r.bound_satisfied);
  const SecurityReport plain = security_report(phi(3, 0));
  EXPECT_FALSE(plain.detection_mc.has_value());
  EXPECT_EQ(plain.gamma, 0.0);
}

TEST(Sweep, DepolarizeIsMonotone) {
  AttackFamily fam;
  fam.kind = AttackFamily::Kind::kDepolarize;
  const auto rows = sweep(fam, {0.0, 0.5, 1.0}, 3, 1, 2000);
  ASSERT_EQ(rows.size(), 3U);
  EXPECT_LT(rows[0].gamma, rows[1].gamma);
  EXPECT_LT(rows[1].gamma, rows[2].gamma);
  EXPECT_NEAR(rows[0].gamma, 0.0, 1e-15);
  EXPECT_NEAR(rows[0].d_exact, 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(rows[1].param, 0.5);
}

TEST(Sweep, GhzPauliFamily) {
  AttackFamily fam;
  fam.kind = AttackFamily::Kind::kGhzPauli;
  const auto rows = sweep(fam, fam.default_grid(3), 3, 1, 0);
  ASSERT_EQ(rows.size(), 7U);
  for (const auto& r : rows) {
    EXPECT_NEAR(r.gamma, 1.0, 1e-12);
    EXPECT_TRUE(std::abs(r.d_exact - 0.5) < 1e-12 || std::abs(r.d_exact - 1.0) < 1e-12);
    EXPECT_TRUE(r.bound_satisfied);
    EXPECT_FALSE(r.d_mc.has_value());
  }
}

TEST(Sweep, NoAttackSingleZeroRow) {
  AttackFamily fam;
  const auto rows = sweep(fam, fam.default_grid(3), 3, 1, 1000);
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_EQ(rows[0].gamma, 0.0);
  EXPECT_EQ(rows[0].d_exact, 0.0);
  EXPECT_EQ(*rows[0].d_mc, 0.0);
  EXPECT_EQ(rows[0].s_max_bits, 0.0);
}

TEST(Sweep, SortedByGammaAndRejectsEmptyGrid) {
  AttackFamily fam;
  fam.kind = AttackFamily::Kind::kDepolarize;
  const auto rows = sweep(fam, {1.0, 0.2, 0.6}, 3, 1, 0);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(rows[i - 1].gamma, rows[i].gamma);
  EXPECT_THROW(sweep(fam, {}, 3, 1, 0), ValidationError);
}

}  // namespace
}  // namespace ghzsdc
