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

/**
 * @file
 * Circuit compilers that preserve the zero/non-zero acceptance semantics:
 * an arbitrary circuit V into a one-clean-qubit circuit, and into a
 * postselected IQP circuit, plus an exact checker for both identities.
 */

#pragma once

#include <optional>

#include "blindlab/circuit.hpp"
#include "blindlab/distribution.hpp"

namespace blindlab {

/**
 * W on n+2 qubits, laid out (w, h, V-register): H on the coin h, V on the
 * register, then Toffoli(V's qubit 0, h → w). p_W(1) = p_V(1)/2.
 */
Circuit build_w(const Circuit& v);

struct Dqc1Reduction {
  Circuit w_circuit;
  /// Qubit 0 clean, qubits 1..n+2 carry W, the trailing qubits are borrowed ancillas.
  Circuit dqc1_circuit;
  int source_n = 0;
  int ancilla_count = 0;
};

/**
 * One-clean-qubit circuit whose output probability is
 * 4 p_W(1)(1 - p_W(1)) / 2^{n+2}:
 *   zero-controlled X(register → clean); W; CZ(clean, w); W†; zero-controlled X again.
 * Only the all-zero register input flips the clean qubit, and it flips back
 * unless W† Z_w W moved the register off |0⟩.
 */
Dqc1Reduction build_dqc1_reduction(const Circuit& v);

struct IqpReduction {
  /// Qubits 0..s-1 are postselected on |1⟩; qubits s..s+n-1 carry V's output.
  IqpForm iqp;
  int s = 0;
  int postselect_count = 1;
};

/**
 * Compiles V into H^⊗(n+s) U H^⊗(n+s) with
 * (⟨1^s| ⊗ I) W |0^{n+s}⟩ = 2^{-s/2} V|0^n⟩.
 *
 * V is first rewritten into H and diagonal gates. Hadamards that meet the
 * outer IQP layers cancel; each remaining one becomes a gadget: a fresh line
 * (|+⟩ from the outer layer), Z and CZ from the old line, which is then
 * measured and postselected on 1.
 */
IqpReduction build_iqp_reduction(const Circuit& v);

struct ReductionReport {
  int n = 0;
  ExactProbability p_v;
  ExactProbability p_w;
  bool w_ok = false;
  RealSqrt2 ptilde_expected;
  ExactProbability ptilde_actual;
  bool dqc1_ok = false;
  int s = 0;
  RealSqrt2 iqp_expected;
  ExactProbability iqp_actual;
  bool iqp_ok = false;
  bool state_identity_ok = false;
  /// k with postselected state = ω^k |1^s⟩ ⊗ V|0^n⟩, when the identity holds.
  std::optional<int> global_phase;

  bool all_ok() const { return w_ok && dqc1_ok && iqp_ok && state_identity_ok; }
};

/// Evaluates both sides of every identity exactly. Throws BudgetExceeded past `limits`.
ReductionReport verify_reductions(const Circuit& v, const SimulationLimits& limits = {});

}  // namespace blindlab
