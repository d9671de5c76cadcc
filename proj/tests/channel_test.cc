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

#include <gtest/gtest.h>

#include <cmath>

#include "ghzsdc/errors.h"
#include "oracle.h"

namespace ghzsdc {
namespace {

CMatrix from_eigen(const oracle::Mat& m) {
  CMatrix out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
    }
  }
  return out;
}

// Kraus set from a random isometry C^d -> C^d (x) C^k.
std::vector<oracle::Mat> random_kraus(Eigen::Index d, int k, std::mt19937_64& rng) {
  const oracle::Mat u = oracle::random_unitary(d * k, rng);
  std::vector<oracle::Mat> out;
  for (int j = 0; j < k; ++j) {
    out.push_back(u.block(j * d, 0, d, d));
  }
  return out;
}

DensityOperator phi(unsigned i) { return DensityOperator::from_pure(ghz_basis_state(3, i)); }

TEST(ApplyChannel, IdentityLeavesStateUnchanged) {
  std::mt19937_64 rng(1);
  const DensityOperator rho = oracle::to_density(oracle::random_density(8, 3, rng), 3);
  const std::vector<CMatrix> id{CMatrix::identity(2)};
  for (unsigned q = 0; q < 3; ++q) {
    const unsigned t[1] = {q};
    EXPECT_LT(apply_channel(rho, id, t).max_abs_diff(rho), 1e-15);
  }
}

TEST(ApplyChannel, DoubleFlipOnTravelQubitsGivesPhi2) {
  const std::vector<CMatrix> xx{kron(gates::X(), gates::X())};
  const unsigned t[2] = {1, 2};
  const DensityOperator out = apply_channel(phi(0), xx, t);
  EXPECT_LT(out.max_abs_diff(phi(2)), 1e-15);
}

TEST(ApplyChannel, FullDephasingOnOneQubitMatchesOracle) {
  // Oracle: P0 rho P0 + P1 rho P1 on qubit 1, built as 8x8 matrices.
  const oracle::Mat rho = oracle::to_mat(phi(0));
  const oracle::Mat expected =
      oracle::channel(rho, {oracle::embed(oracle::proj(0), 1, 3), oracle::embed(oracle::proj(1), 1, 3)});
  const oracle::Mat half_sum = 0.5 * (oracle::to_mat(phi(0)) + oracle::to_mat(phi(1)));
  ASSERT_LT((expected - half_sum).cwiseAbs().maxCoeff(), 1e-15);

  // Dephasing with probability 1: Kraus {Z/sqrt2, I/sqrt2} (the same channel).
  const std::vector<CMatrix> dephase{gates::I() * std::sqrt(0.5), gates::Z() * std::sqrt(0.5)};
  const unsigned t[1] = {1};
  EXPECT_LT((oracle::to_mat(apply_channel(phi(0), dephase, t)) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ApplyChannel, RandomKrausMatchesOracleAndPreservesTrace) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 3;
    const oracle::Mat rho = oracle::random_density(8, 2, rng);
    const bool two_qubit = trial % 2 == 1;
    const auto kraus = random_kraus(two_qubit ? 4 : 2, 3, rng);
    std::vector<CMatrix> set;
    std::vector<oracle::Mat> full;
    for (const auto& k : kraus) {
      set.push_back(from_eigen(k));
      if (two_qubit) {
        // Local index bit 0 addresses qubit 0, bit 1 addresses qubit 2; embed
        // by permuting qubit 1 and 2 around a K on qubits {0,1}.
        const oracle::Mat swap12 = [] {
          oracle::Mat s = oracle::Mat::Zero(8, 8);
          for (int i = 0; i < 8; ++i) {
            const int j = (i & 1) | ((i >> 2) & 1) << 1 | ((i >> 1) & 1) << 2;
            s(j, i) = 1;
          }
          return s;
        }();
        full.push_back(swap12 * oracle::kron(oracle::pauli_i(), k) * swap12);
      } else {
        full.push_back(oracle::embed(k, 2, n));
      }
    }
    std::vector<unsigned> targets = two_qubit ? std::vector<unsigned>{0, 2} : std::vector<unsigned>{2};
    const DensityOperator out = apply_channel(oracle::to_density(rho, n), set, targets);
    EXPECT_NEAR(out.trace().real(), 1.0, 1e-10);
    EXPECT_LT((oracle::to_mat(out) - oracle::channel(rho, full)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NO_THROW(validate_density(out));
  }
}

TEST(ApplyChannel, RejectsNonTracePreservingSet) {
  const std::vector<CMatrix> bad{gates::I() * 0.9};
  const unsigned t[1] = {1};
  EXPECT_THROW(apply_channel(phi(0), bad, t), ValidationError);
  const std::vector<CMatrix> wrong_shape{CMatrix::identity(4)};
  EXPECT_THROW(apply_channel(phi(0), wrong_shape, t), ValidationError);
  const std::vector<CMatrix> ok{gates::I()};
  const unsigned out_of_range[1] = {3};
  EXPECT_THROW(apply_channel(phi(0), ok, out_of_range), ValidationError);
}

TEST(ApplyChannel, UnitaryKrausPreservesEntropy) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = oracle::to_density(oracle::random_density(8, 3, rng), 3);
    const std::vector<CMatrix> u{from_eigen(oracle::random_unitary(4, rng))};
    const unsigned t[2] = {2, 0};
    EXPECT_NEAR(von_neumann_entropy(apply_channel(rho, u, t)), von_neumann_entropy(rho), 1e-9);
  }
}

TEST(VonNeumannEntropy, PureStateIsZero) {
  EXPECT_NEAR(von_neumann_entropy(DensityOperator::from_pure(w_state(3))), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(phi(5)), 0.0, 1e-12);
}

TEST(VonNeumannEntropy, MaximallyMixedIsThreeBits) {
  EXPECT_NEAR(von_neumann_entropy(DensityOperator::maximally_mixed(3)), 3.0, 1e-12);
}

TEST(VonNeumannEntropy, UniformDiagonalAtSevenEighths) {
  const double gamma = 7.0 / 8.0;
  std::vector<cplx> diag(64);
  diag[0] = 1 - gamma;
  for (int i = 1; i < 8; ++i) {
    diag[i * 8 + i] = gamma / 7;
  }
  EXPECT_NEAR(von_neumann_entropy(DensityOperator(3, diag)), 3.0, 1e-12);
}

TEST(VonNeumannEntropy, UnitarilyInvariant) {
  std::mt19937_64 rng(13);
  for (unsigned n : {2U, 3U}) {
    const Eigen::Index d = Eigen::Index{1} << n;
    for (int trial = 0; trial < 10; ++trial) {
      const oracle::Mat rho = oracle::random_density(d, 2, rng);
      const oracle::Mat u = oracle::random_unitary(d, rng);
      const double a = von_neumann_entropy(oracle::to_density(rho, n));
      const double b = von_neumann_entropy(oracle::to_density(u * rho * u.adjoint(), n));
      EXPECT_NEAR(a, b, 1e-9);
      EXPECT_NEAR(a, oracle::entropy_bits(rho), 1e-9);
    }
  }
}

TEST(FidelityToTarget, Examples) {
  const PureState target = ghz_state(3);
  EXPECT_NEAR(fidelity_to_target(phi(0), target), 1.0, 1e-12);
  EXPECT_NEAR(fidelity_to_target(phi(1), target), 0.0, 1e-12);

  const double gamma = 0.3;
  std::vector<double> w(8, gamma / 7);
  w[0] = 1 - gamma;
  const auto basis = ghz_basis(3);
  const DensityOperator rho = DensityOperator::mixture(w, basis);
  EXPECT_NEAR(fidelity_to_target(rho, target), std::sqrt(0.7), 1e-12);
}

TEST(FidelityToTarget, DimensionMismatchThrows) {
  EXPECT_THROW(fidelity_to_target(phi(0), ghz_state(4)), ValidationError);
}

}  // namespace
}  // namespace ghzsdc
