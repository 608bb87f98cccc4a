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

#include <numeric>
#include <random>

#include "blindlab/circuit.hpp"
#include "blindlab/statevector.hpp"
#include "dense_oracle.hpp"

namespace blindlab {
namespace {

using K = GateKind;

TEST(Gate, ArityAndDistinctness) {
  EXPECT_THROW(Gate(K::CZ, {0, 0}), std::invalid_argument);
  EXPECT_THROW(Gate(K::H, {0, 1}), std::invalid_argument);
  EXPECT_THROW(Gate(K::Toffoli, {0, 1}), std::invalid_argument);
  EXPECT_THROW(Gate::phase_z(8, 0), std::invalid_argument);
  EXPECT_NO_THROW(Gate(K::CCZ, {2, 0, 1}));
}

TEST(Circuit, RejectsOutOfRangeQubits) {
  Circuit c(2);
  EXPECT_THROW(c.add(K::H, {2}), CircuitError);
  EXPECT_THROW(Circuit(0), CircuitError);
}

TEST(ParseCircuit, Examples) {
  const Circuit c = parse_circuit("2\nH 0\nCNOT 0 1");
  EXPECT_EQ(c, Circuit(2, {Gate(K::H, {0}), Gate(K::CNOT, {0, 1})}));
  EXPECT_EQ(parse_circuit("1\n"), Circuit(1));
  EXPECT_THROW(parse_circuit("1\nCZ 0 0"), CircuitParseError);
}

TEST(ParseCircuit, CommentsBlankLinesAndPhase) {
  const Circuit c = parse_circuit("# header\n3\n\nPZ 5 2   # trailing\nCCZ 0 1 2\n");
  EXPECT_EQ(c, Circuit(3, {Gate::phase_z(5, 2), Gate(K::CCZ, {0, 1, 2})}));
}

TEST(ParseCircuit, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) {
    try {
      parse_circuit(text);
    } catch (const CircuitParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("2\nH 0\nFOO 1"), 3);   // unknown gate
  EXPECT_EQ(line_of("2\nCNOT 0"), 2);        // arity mismatch
  EXPECT_EQ(line_of("2\nH 2"), 2);           // index out of range
  EXPECT_EQ(line_of("2\n\nH x"), 3);         // non-integer token
  EXPECT_EQ(line_of("two\nH 0"), 1);
  EXPECT_EQ(line_of("1\nCZ 0 0"), 2);
  EXPECT_EQ(line_of("1\nPZ 9 0"), 2);
}

TEST(SerializeCircuit, Examples) {
  EXPECT_EQ(serialize_circuit(Circuit(1, {Gate(K::H, {0})})), "1\nH 0");
  EXPECT_EQ(serialize_circuit(Circuit(3, {Gate(K::CCZ, {0, 1, 2})})), "3\nCCZ 0 1 2");
  EXPECT_EQ(serialize_circuit(Circuit(1, {Gate::phase_z(3, 0)})), "1\nPZ 3 0");
}

TEST(SerializeCircuit, RoundTripsRandomCircuits) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 6;
    const Circuit c = random_circuit(rng, n, i % 25);
    EXPECT_EQ(parse_circuit(serialize_circuit(c)), c);
  }
}

TEST(IsIqpForm, Examples) {
  auto one = is_iqp_form(Circuit(1, {Gate(K::H, {0}), Gate(K::Z, {0}), Gate(K::H, {0})}));
  ASSERT_TRUE(one);
  EXPECT_EQ(one->diagonal_gates, std::vector<Gate>{Gate(K::Z, {0})});

  auto two = is_iqp_form(Circuit(
      2, {Gate(K::H, {0}), Gate(K::H, {1}), Gate(K::CZ, {0, 1}), Gate(K::H, {0}), Gate(K::H, {1})}));
  ASSERT_TRUE(two);
  EXPECT_EQ(two->diagonal_gates, std::vector<Gate>{Gate(K::CZ, {0, 1})});

  EXPECT_FALSE(is_iqp_form(Circuit(1, {Gate(K::H, {0}), Gate(K::X, {0}), Gate(K::H, {0})})));
  EXPECT_FALSE(is_iqp_form(Circuit(2, {Gate(K::H, {0}), Gate(K::H, {0}), Gate(K::H, {1}), Gate(K::H, {1})})));
}

TEST(IsIqpForm, ReexpansionSimulatesIdentically) {
  std::mt19937_64 rng(12);
  const GateKind diag[] = {K::Z, K::S, K::T, K::CZ, K::CCZ, K::PhaseZ};
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3;
    Circuit c(n);
    for (int q = 0; q < n; ++q) c.add(K::H, {q});
    for (int i = 0; i < 6; ++i) {
      const GateKind k = diag[rng() % 6];
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      c.add(Gate(k, std::span<const int>(order.data(), arity(k)), k == K::PhaseZ ? int(rng() % 8) : 0));
    }
    for (int q = 0; q < n; ++q) c.add(K::H, {q});
    const auto form = is_iqp_form(c);
    ASSERT_TRUE(form);
    for (std::uint64_t in = 0; in < 8; ++in) EXPECT_EQ(run_statevector(form->to_circuit(), in), run_statevector(c, in));
  }
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose_to_h_diagonal(Circuit(1, {Gate(K::X, {0})})),
            Circuit(1, {Gate(K::H, {0}), Gate(K::Z, {0}), Gate(K::H, {0})}));
  EXPECT_EQ(decompose_to_h_diagonal(Circuit(2, {Gate(K::CNOT, {0, 1})})),
            Circuit(2, {Gate(K::H, {1}), Gate(K::CZ, {0, 1}), Gate(K::H, {1})}));
  EXPECT_EQ(decompose_to_h_diagonal(Circuit(3, {Gate(K::Toffoli, {0, 1, 2})})),
            Circuit(3, {Gate(K::H, {2}), Gate(K::CCZ, {0, 1, 2}), Gate(K::H, {2})}));
}

TEST(Decompose, OnlyHadamardsAndDiagonalGates) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const Circuit d = decompose_to_h_diagonal(random_circuit(rng, 4, 15));
    for (const auto& g : d.gates()) EXPECT_TRUE(g.kind() == K::H || g.is_diagonal());
  }
}

TEST(Decompose, PreservesStateOnEveryBasisInput) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + i % 4;
    const Circuit c = random_circuit(rng, n, 10);
    const Circuit d = decompose_to_h_diagonal(c);
    for (std::uint64_t in = 0; in < (1u << n); ++in) EXPECT_EQ(run_statevector(d, in), run_statevector(c, in));
  }
}

TEST(Inverse, UndoesTheCircuitExactly) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + i % 4;
    Circuit c = random_circuit(rng, n, 12);
    const Circuit inv = inverse(c);
    c.append_shifted(inv, 0);
    for (std::uint64_t in = 0; in < (1u << n); ++in) {
      const auto psi = run_statevector(c, in);
      for (std::uint64_t j = 0; j < psi.size(); ++j) {
        EXPECT_EQ(psi[j], j == in ? ExactAmplitude(ZOmega<Integer>(1), 0) : ExactAmplitude());
      }
    }
  }
}

TEST(Inverse, MatchesAdjointOfOracleUnitary) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 20; ++i) {
    const Circuit c = random_circuit(rng, 3, 10);
    const auto u = oracle::unitary(c);
    const auto v = oracle::unitary(inverse(c));
    EXPECT_LT((v - u.adjoint()).norm(), 1e-10);
  }
}

/// Applies the circuit to every basis input and checks it acts as "flip target iff all controls match".
void expect_controlled_flip(const Circuit& c, const std::vector<int>& controls, int target, bool on_zero) {
  const int n = c.n_qubits();
  for (std::uint64_t in = 0; in < (std::uint64_t{1} << n); ++in) {
    bool fire = true;
    for (int q : controls) fire = fire && (((in & qubit_mask(n, q)) != 0) != on_zero);
    const std::uint64_t expect = fire ? in ^ qubit_mask(n, target) : in;
    const auto psi = run_statevector(c, in);
    ASSERT_EQ(psi[expect], ExactAmplitude(ZOmega<Integer>(1), 0)) << "input " << in;
  }
}

TEST(MultiControlledX, TruthTableForEveryDirtyAncillaState) {
  for (int k = 0; k <= 6; ++k) {
    for (bool on_zero : {false, true}) {
      // Controls 0..k-1, target k, one borrowed ancilla k+1 in every basis state.
      std::vector<int> controls(k);
      std::iota(controls.begin(), controls.end(), 0);
      const std::vector<int> pool = {k + 1};
      Circuit c(k + 2);
      if (on_zero) {
        append_zero_controlled_x(c, controls, k, pool);
      } else {
        append_multi_controlled_x(c, controls, k, pool);
      }
      for (const auto& g : c.gates()) {
        EXPECT_TRUE(g.kind() == K::X || g.kind() == K::CNOT || g.kind() == K::Toffoli);
      }
      expect_controlled_flip(c, controls, k, on_zero);
    }
  }
}

TEST(MultiControlledX, WithoutAncillaUpToTwoControls) {
  Circuit c(3);
  const std::vector<int> controls = {0, 2};
  append_multi_controlled_x(c, controls, 1, {});
  expect_controlled_flip(c, controls, 1, false);
  Circuit d(4);
  const std::vector<int> three = {0, 1, 2};
  EXPECT_THROW(append_multi_controlled_x(d, three, 3, {}), std::invalid_argument);
}

TEST(MultiControlledX, RejectsOverlappingRoles) {
  Circuit c(4);
  const std::vector<int> controls = {0, 1, 2};
  const std::vector<int> pool = {2};
  EXPECT_THROW(append_multi_controlled_x(c, controls, 3, pool), std::invalid_argument);
  const std::vector<int> pool_target = {3};
  EXPECT_THROW(append_multi_controlled_x(c, controls, 3, pool_target), std::invalid_argument);
}

TEST(RandomCircuit, UsesOnlyFittingGates) {
  std::mt19937_64 rng(17);
  const Circuit c = random_circuit(rng, 1, 200);
  for (const auto& g : c.gates()) EXPECT_EQ(g.arity(), 1);
  const Circuit d = random_circuit(rng, 3, 400);
  for (auto k : {K::H, K::X, K::Z, K::S, K::T, K::CNOT, K::CZ, K::CCZ, K::Toffoli, K::PhaseZ}) {
    EXPECT_GT(d.count(k), 0u) << gate_name(k);
  }
}

}  // namespace
}  // namespace blindlab
