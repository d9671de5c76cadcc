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

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracle.h"

namespace ghzsdc {
namespace {

TEST(MeasureAll, GhzInZIsAllEqualWithEvenOdds) {
  Rng rng(42);
  const PureState ghz = ghz_state(3);
  int all_plus = 0;
  const int shots = 20000;
  for (int s = 0; s < shots; ++s) {
    const MeasurementRecord rec = measure_all(ghz, Basis::kZ, rng);
    ASSERT_EQ(rec.outcomes.size(), 3U);
    const bool plus = rec.outcomes == std::vector<int>{1, 1, 1};
    const bool minus = rec.outcomes == std::vector<int>{-1, -1, -1};
    ASSERT_TRUE(plus || minus);
    all_plus += plus;
    EXPECT_NEAR(rec.post_state.norm_squared(), 1.0, 1e-12);
  }
  const double sigma = std::sqrt(0.25 / shots);
  EXPECT_NEAR(all_plus / double(shots), 0.5, 4 * sigma);
}

TEST(MeasureAll, EigenstateIsDeterministic) {
  Rng rng(1);
  const PureState zero = PureState::basis_state(3, 0);
  for (int s = 0; s < 100; ++s) {
    EXPECT_EQ(measure_all(zero, Basis::kZ, rng).outcomes, (std::vector<int>{1, 1, 1}));
  }
}

TEST(MeasureAll, GhzInXHasEvenParity) {
  Rng rng(7);
  const PureState ghz = ghz_state(3);
  for (int s = 0; s < 2000; ++s) {
    const auto rec = measure_all(ghz, Basis::kX, rng);
    EXPECT_EQ(rec.outcomes[0] * rec.outcomes[1] * rec.outcomes[2], 1);
  }
}

TEST(MeasureAll, PostStateIsTheMeasuredProductState) {
  Rng rng(3);
  const auto rec = measure_all(w_state(3), Basis::kX, rng);
  const OutcomeTable t = outcome_table(rec.post_state, Basis::kX);
  EXPECT_NEAR(t.probabilities[index_from_outcomes(rec.outcomes)], 1.0, 1e-12);
}

TEST(MeasureAll, SameSeedSameOutcome) {
  Rng a(99), b(99);
  for (int s = 0; s < 50; ++s) {
    EXPECT_EQ(measure_all(w_state(4), Basis::kZ, a).outcomes, measure_all(w_state(4), Basis::kZ, b).outcomes);
  }
}

TEST(MeasureAllDensity, GhzInZ) {
  const OutcomeTable t = measure_all_density(DensityOperator::from_pure(ghz_state(3)), Basis::kZ);
  EXPECT_NEAR(t.probabilities[index_from_outcomes({1, 1, 1})], 0.5, 1e-12);
  EXPECT_NEAR(t.probabilities[index_from_outcomes({-1, -1, -1})], 0.5, 1e-12);
  EXPECT_NEAR(t.total(), 1.0, 1e-12);
}

TEST(MeasureAllDensity, MaximallyMixedIsUniform) {
  for (Basis b : {Basis::kZ, Basis::kX}) {
    const OutcomeTable t = measure_all_density(DensityOperator::maximally_mixed(3), b);
    for (double p : t.probabilities) {
      EXPECT_NEAR(p, 1.0 / 8, 1e-12);
    }
  }
}

TEST(MeasureAllDensity, Phi1InXHasOddParityQuarterEach) {
  const OutcomeTable t = measure_all_density(DensityOperator::from_pure(ghz_basis_state(3, 1)), Basis::kX);
  for (std::uint64_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(t.probabilities[i], outcome_product(i) == -1 ? 0.25 : 0.0, 1e-12) << i;
  }
}

TEST(MeasureAllDensity, MatchesProjectorOracleOnRandomStates) {
  std::mt19937_64 rng(5);
  for (unsigned n : {2U, 3U, 4U}) {
    const oracle::Mat rho = oracle::random_density(std::int64_t{1} << n, 2, rng);
    const DensityOperator d = oracle::to_density(rho, n);
    for (bool x : {false, true}) {
      const auto expected = oracle::outcome_probabilities(rho, n, x);
      const auto t = measure_all_density(d, x ? Basis::kX : Basis::kZ);
      for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_NEAR(t.probabilities[i], expected[i], 1e-12);
      }
      EXPECT_NEAR(t.total(), 1.0, 1e-12);
    }
  }
}

TEST(MeasureAllDensity, PureAndDensityTablesAgree) {
  for (Basis b : {Basis::kZ, Basis::kX}) {
    const auto a = outcome_table(w_state(4), b);
    const auto c = measure_all_density(DensityOperator::from_pure(w_state(4)), b);
    for (std::size_t i = 0; i < a.probabilities.size(); ++i) {
      EXPECT_NEAR(a.probabilities[i], c.probabilities[i], 1e-14);
    }
  }
}

TEST(GhzBasisMeasurement, ZYieldsComplementPairs) {
  for (unsigned n : {2U, 3U, 4U}) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const auto e = ghz_basis_element(n, i);
      const auto t = outcome_table(ghz_basis_state(n, i), Basis::kZ);
      int support = 0;
      for (std::uint64_t k = 0; k < t.probabilities.size(); ++k) {
        if (t.probabilities[k] > 1e-12) {
          ++support;
          EXPECT_TRUE(k == e.x || k == e.x_complement);
          EXPECT_NEAR(t.probabilities[k], 0.5, 1e-12);
        }
      }
      EXPECT_EQ(support, 2);
    }
  }
}

// Sampled frequencies against exact tables, 1e5 shots, 4 sigma per cell.
TEST(MeasureAll, EmpiricalFrequenciesMatchExactTable) {
  const int shots = 100000;
  const std::vector<PureState> states = {ghz_state(3), w_state(3), ghz_basis_state(3, 5)};
  Rng rng(2024);
  for (const auto& psi : states) {
    for (Basis b : {Basis::kZ, Basis::kX}) {
      const auto exact = measure_all_density(DensityOperator::from_pure(psi), b);
      std::vector<int> counts(8, 0);
      for (int s = 0; s < shots; ++s) {
        ++counts[index_from_outcomes(measure_all(psi, b, rng).outcomes)];
      }
      for (std::size_t i = 0; i < 8; ++i) {
        const double p = exact.probabilities[i];
        const double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / shots);
        EXPECT_NEAR(counts[i] / double(shots), p, 4 * sigma + 1e-12) << "cell " << i;
      }
    }
  }
}

TEST(Outcomes, IndexEncodingRoundTrips) {
  for (std::uint64_t i = 0; i < 32; ++i) {
    EXPECT_EQ(index_from_outcomes(outcomes_from_index(i, 5)), i);
  }
  EXPECT_THROW(index_from_outcomes({1, 0}), std::invalid_argument);
}

}  // namespace
}  // namespace ghzsdc
