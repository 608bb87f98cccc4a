// Copyright 2026 The blindlab Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "blindlab/distribution.hpp"
#include "dense_oracle.hpp"

namespace blindlab {
namespace {

using K = GateKind;
using Z = ZOmega<Integer>;

ExactProbability prob(long num, long den) { return ExactProbability(Rational(num, den)); }

TEST(RunStatevector, HadamardOnZero) {
  const auto psi = run_statevector(Circuit(1, {Gate(K::H, {0})}), "0");
  EXPECT_EQ(psi[0], ExactAmplitude(Z(1), 1));
  EXPECT_EQ(psi[1], ExactAmplitude(Z(1), 1));
}

TEST(RunStatevector, EmptyCircuitIsIdentity) {
  const auto psi = run_statevector(Circuit(2), "10");
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(psi[i].is_zero(), i != 0b10);
  EXPECT_EQ(psi[0b10], ExactAmplitude(Z(1), 0));
}

TEST(RunStatevector, ToffoliTruthTable) {
  const auto psi = run_statevector(Circuit(3, {Gate(K::Toffoli, {0, 1, 2})}), "110");
  EXPECT_EQ(psi[0b111], ExactAmplitude(Z(1), 0));
}

TEST(RunStatevector, LengthMismatchThrows) {
  EXPECT_THROW(run_statevector(Circuit(2), "1"), std::invalid_argument);
  EXPECT_THROW(run_statevector(Circuit(1), "2"), std::invalid_argument);
}

TEST(RunStatevector, NormalizedExactly) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + i % 5;
    const auto psi = run_statevector(random_circuit(rng, n, 20), std::uint64_t{0});
    EXPECT_EQ(psi.norm_squared(), RealSqrt2(1));
  }
}

TEST(RunStatevector, MatchesOracleAmplitudes) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + i % 5;
    const Circuit c = random_circuit(rng, n, 15);
    const std::uint64_t in = rng() % (1u << n);
    const auto exact = run_statevector(c, in);
    const auto ref = oracle::state(c, in);
    for (std::size_t j = 0; j < exact.size(); ++j) {
      EXPECT_NEAR(std::abs(exact[j].to_complex() - ref(static_cast<Eigen::Index>(j))), 0.0, 1e-10);
    }
  }
}

TEST(Engines, SparseDenseAndCoefficientWidthsAgree) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + i % 6;
    const Circuit c = random_circuit(rng, n, 25);
    BasicExactState<std::int64_t> dense(n, 1);
    BasicExactState<Integer> wide(n, 1);
    BasicSparseState<std::int64_t> sparse(n, 1);
    dense.run(c);
    wide.run(c);
    sparse.run(c);
    ASSERT_EQ(dense.half_exponent(), sparse.half_exponent());
    const auto sd = sparse.to_dense();
    for (std::size_t j = 0; j < sd.size(); ++j) {
      EXPECT_EQ(sd[j], dense.numerators()[j]);
      EXPECT_EQ(dense.numerators()[j].cast<Integer>(), wide.numerators()[j]);
    }
  }
}

TEST(Engines, FloatBackendMatchesExact) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 10;
    const Circuit c = random_circuit(rng, n, 30);
    EXPECT_NEAR(float_acceptance_probability(c), acceptance_probability(c).to_double(), 1e-9);
  }
}

TEST(AcceptanceProbability, Examples) {
  EXPECT_EQ(acceptance_probability(Circuit(1, {Gate(K::X, {0})})), ExactProbability::one());
  EXPECT_EQ(acceptance_probability(Circuit(1, {Gate(K::H, {0})})), prob(1, 2));
  EXPECT_NEAR(oracle::acceptance(Circuit(1, {Gate(K::H, {0})})), 0.5, 1e-12);
  EXPECT_TRUE(acceptance_probability(Circuit(3)).is_zero());
  // H T H: |1 - ω|²/4 = (2 - √2)/4.
  EXPECT_EQ(acceptance_probability(Circuit(1, {Gate(K::H, {0}), Gate(K::T, {0}), Gate(K::H, {0})})).value(),
            RealSqrt2(2, -1, 4));
}

TEST(AcceptanceProbability, ZeroExactlyWhenProjectionVanishes) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 80; ++i) {
    const int n = 1 + i % 4;
    Circuit c = random_circuit(rng, n, 8);
    if (i % 2) c.append_shifted(inverse(c), 0);  // returns to |0^n⟩, zero on qubit 0
    const auto psi = run_statevector(c, std::uint64_t{0});
    bool all_zero = true;
    for (std::size_t j = psi.size() / 2; j < psi.size(); ++j) all_zero = all_zero && psi[j].is_zero();
    EXPECT_EQ(acceptance_probability(c).is_zero(), all_zero);
  }
}

TEST(AcceptanceProbability, BudgetIsEnforced) {
  EXPECT_THROW(acceptance_probability(Circuit(5), SimulationLimits{20, 4}), BudgetExceeded);
}

TEST(Dqc1Distribution, Examples) {
  EXPECT_EQ(dqc1_distribution(Circuit(2)), BinaryDistribution::from_p1(Rational(0)));
  EXPECT_EQ(dqc1_distribution(Circuit(2, {Gate(K::CNOT, {1, 0})})), BinaryDistribution::from_p1(Rational(1, 2)));
  EXPECT_EQ(dqc1_distribution(Circuit(1, {Gate(K::H, {0})})), BinaryDistribution::from_p1(Rational(1, 2)));
}

TEST(Dqc1Distribution, SumsToOneAndMatchesDensityMatrixOracle) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + i % 6;
    const Circuit c = random_circuit(rng, n, 15);
    const auto d = dqc1_distribution(c);
    EXPECT_EQ(d.p0().value() + d.p1().value(), RealSqrt2(1));
    EXPECT_NEAR(d.p1().to_double(), oracle::dqc1_p1(c), 1e-9);
    EXPECT_NEAR(d.p1().to_double(), float_dqc1_probability(c), 1e-9);
  }
}

TEST(Dqc1Distribution, EnumerationBound) {
  EXPECT_THROW(dqc1_distribution(Circuit(6), SimulationLimits{5, 26}), BudgetExceeded);
  EXPECT_NO_THROW(dqc1_distribution(Circuit(5), SimulationLimits{5, 26}));
}

TEST(IqpMarginal, Examples) {
  EXPECT_EQ(iqp_marginal_distribution(IqpForm{1, {Gate(K::Z, {0})}}, 1), BinaryDistribution::from_p1(Rational(1)));
  EXPECT_EQ(iqp_marginal_distribution(IqpForm{1, {}}, 1), BinaryDistribution::from_p1(Rational(0)));
  EXPECT_EQ(iqp_marginal_distribution(IqpForm{2, {Gate(K::CZ, {0, 1})}}, 2),
            BinaryDistribution::from_p1(Rational(1, 4)));
}

TEST(IqpMarginal, RangeOfM) {
  const IqpForm f{2, {Gate(K::CZ, {0, 1})}};
  EXPECT_THROW(iqp_marginal_distribution(f, 0), std::invalid_argument);
  EXPECT_THROW(iqp_marginal_distribution(f, 3), std::invalid_argument);
}

TEST(IqpMarginal, AgreesWithStatevectorProjection) {
  std::mt19937_64 rng(27);
  const GateKind diag[] = {K::Z, K::S, K::T, K::CZ, K::CCZ, K::PhaseZ};
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 3;
    IqpForm f{n, {}};
    for (int i = 0; i < 8; ++i) {
      const GateKind k = diag[rng() % 6];
      std::vector<int> q(n);
      std::iota(q.begin(), q.end(), 0);
      std::shuffle(q.begin(), q.end(), rng);
      f.diagonal_gates.emplace_back(k, std::span<const int>(q.data(), arity(k)), k == K::PhaseZ ? int(rng() % 8) : 0);
    }
    const auto psi = run_statevector(f.to_circuit(), std::uint64_t{0});
    for (int m = 1; m <= n; ++m) {
      RealSqrt2 expect;
      const std::uint64_t ones = ((std::uint64_t{1} << m) - 1) << (n - m);
      for (std::uint64_t j = 0; j < psi.size(); ++j) {
        if ((j & ones) == ones && !psi[j].is_zero()) expect += psi[j].norm();
      }
      EXPECT_EQ(iqp_marginal_distribution(f, m).p1().value(), expect);
      const auto amps = iqp_projected_amplitudes(f, m);
      for (std::uint64_t w = 0; w < amps.size(); ++w) EXPECT_EQ(amps[w], psi[ones | w]);
    }
  }
}

TEST(SampleOutcome, DeterministicEdges) {
  std::mt19937_64 rng(28);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_EQ(sample_outcome(BinaryDistribution::from_p1(Rational(0)), rng), 0);
    EXPECT_EQ(sample_outcome(BinaryDistribution::from_p1(Rational(1)), rng), 1);
  }
}

TEST(SampleOutcome, HalfFrequencyWithinChernoffBand) {
  std::mt19937_64 rng(29);
  const auto d = BinaryDistribution::from_p1(Rational(1, 2));
  int ones = 0;
  for (int i = 0; i < 100000; ++i) ones += sample_outcome(d, rng);
  // Hoeffding: Pr[|f - 1/2| > 0.01] ≤ 2 exp(-2·10^5·10^-4) ≈ 4e-9.
  EXPECT_GE(ones, 49000);
  EXPECT_LE(ones, 51000);
}

TEST(SampleOutcome, SameSeedSameDraws) {
  const auto d = BinaryDistribution::from_p1(ExactProbability(RealSqrt2(2, -1, 4)));
  std::mt19937_64 a(30), b(30);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(sample_outcome(d, a), sample_outcome(d, b));
}

TEST(SampleIndex, FollowsCumulativeMass) {
  std::mt19937_64 rng(31);
  const std::vector<ExactProbability> p = {prob(1, 4), ExactProbability::zero(), prob(3, 4)};
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 40000; ++i) ++counts[sample_index(p, rng)];
  EXPECT_EQ(counts[1], 0);
  EXPECT_NEAR(counts[0] / 40000.0, 0.25, 0.015);
}

TEST(MultiplicativeError, Examples) {
  const auto half = BinaryDistribution::from_p1(Rational(1, 2));
  const auto claimed = BinaryDistribution::from_p1(Rational(3, 5));
  const auto pass = check_multiplicative_error(half, claimed, Rational(1, 5));
  EXPECT_TRUE(pass.pass);
  EXPECT_EQ(pass.residuals[0], RealSqrt2(Rational(1, 10)));
  EXPECT_EQ(pass.residuals[0], pass.bounds[0]);
  EXPECT_FALSE(check_multiplicative_error(half, claimed, Rational(1, 10)).pass);

  const auto one = BinaryDistribution::from_p1(Rational(1));
  const auto near = BinaryDistribution::from_p1(Rational(999, 1000));
  for (const auto& eps : {Rational(0), Rational(1, 2), Rational(999999, 1000000)}) {
    EXPECT_FALSE(check_multiplicative_error(one, near, eps).pass);
  }
}

TEST(MultiplicativeError, ZeroEpsilonIsEquality) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 50; ++i) {
    const auto a = BinaryDistribution::from_p1(Rational(static_cast<long>(rng() % 9), 8));
    const auto b = BinaryDistribution::from_p1(Rational(static_cast<long>(rng() % 9), 8));
    EXPECT_EQ(check_multiplicative_error(a, b, 0).pass, a == b);
  }
}

TEST(MultiplicativeError, EpsilonRange) {
  const BinaryDistribution d;
  EXPECT_THROW(check_multiplicative_error(d, d, Rational(1)), std::invalid_argument);
  EXPECT_THROW(check_multiplicative_error(d, d, Rational(-1, 2)), std::invalid_argument);
}

}  // namespace
}  // namespace blindlab
