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

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "blindlab/circuit.hpp"
#include "blindlab/ring.hpp"
#include "blindlab/statevector.hpp"

namespace blindlab {

/// Outcome distribution of a single measured bit; p0 + p1 = 1 exactly.
class BinaryDistribution {
 public:
  BinaryDistribution() : p0_(ExactProbability::one()), p1_() {}
  static BinaryDistribution from_p1(ExactProbability p1) { return BinaryDistribution(p1.complement(), p1); }
  static BinaryDistribution from_p1(const Rational& p1) { return from_p1(ExactProbability(p1)); }

  const ExactProbability& p0() const { return p0_; }
  const ExactProbability& p1() const { return p1_; }
  const ExactProbability& operator[](int z) const { return z == 0 ? p0_ : p1_; }

  friend bool operator==(const BinaryDistribution& a, const BinaryDistribution& b) { return a.p1_ == b.p1_; }

 private:
  BinaryDistribution(ExactProbability p0, ExactProbability p1) : p0_(std::move(p0)), p1_(std::move(p1)) {}

  ExactProbability p0_, p1_;
};

struct SimulationLimits {
  /// Largest qubit count for exact DQC1 enumeration (2^{n-1} basis inputs).
  int max_dqc1_qubits = 20;
  /// Largest qubit count for a single exact statevector run.
  int max_statevector_qubits = 26;
};

/// Exact probability that qubit 0 reads 1 after running `c` on |0^n⟩.
ExactProbability acceptance_probability(const Circuit& c, const SimulationLimits& limits = {});

/**
 * Exact one-clean-qubit output distribution: qubit 0 starts in |0⟩, the
 * rest maximally mixed. Computed by enumerating the 2^{n-1} basis inputs of
 * the mixed register. Throws BudgetExceeded above limits.max_dqc1_qubits.
 */
BinaryDistribution dqc1_distribution(const Circuit& c, const SimulationLimits& limits = {});

/**
 * Unnormalised projection of H^⊗n U H^⊗n |0^n⟩ onto |1^m⟩ on the first m
 * qubits, as the 2^{n-m} exact amplitudes of the remaining qubits.
 * Accepts 0 ≤ m ≤ n.
 */
std::vector<ExactAmplitude> iqp_projected_amplitudes(const IqpForm& form, int m,
                                                     const SimulationLimits& limits = {});

/// p1 = ‖(|1^m⟩⟨1^m| ⊗ I) V |0^n⟩‖². Throws std::invalid_argument unless 1 ≤ m ≤ n.
BinaryDistribution iqp_marginal_distribution(const IqpForm& form, int m, const SimulationLimits& limits = {});

/**
 * Draws one bit: compares `precision_bits` uniform bits against the binary
 * expansion of p1, so the result is exact up to a 2^-precision_bits truncation.
 */
int sample_outcome(const BinaryDistribution& d, std::mt19937_64& rng, unsigned precision_bits = 128);

/// Same scheme over a finite outcome list; probabilities must sum to one.
std::size_t sample_index(std::span<const ExactProbability> probabilities, std::mt19937_64& rng,
                         unsigned precision_bits = 128);

struct MultiplicativeErrorReport {
  BinaryDistribution ideal;
  BinaryDistribution claimed;
  Rational epsilon;
  /// |claimed_z - ideal_z| and ε·ideal_z for z = 0, 1.
  std::array<RealSqrt2, 2> residuals;
  std::array<RealSqrt2, 2> bounds;
  bool pass = false;
};

/// |q_z - p_z| ≤ ε p_z for both z, exactly. Throws std::invalid_argument unless 0 ≤ ε < 1.
MultiplicativeErrorReport check_multiplicative_error(const BinaryDistribution& ideal,
                                                     const BinaryDistribution& claimed, const Rational& epsilon);

/// Floating-point counterparts, for cross-checking the exact engine.
double float_acceptance_probability(const Circuit& c);
double float_dqc1_probability(const Circuit& c);

}  // namespace blindlab
