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
 * Circuit IR over the fixed gate set {H, X, Z, S, T, CNOT, CZ, CCZ, Toffoli,
 * PhaseZ(k)}. Qubit 0 is the measured (clean) qubit throughout.
 *
 * Text format: first line is the qubit count, then one gate per line as
 * `NAME q...` (PhaseZ is `PZ k q`). `#` starts a comment; blank lines are
 * ignored.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blindlab {

enum class GateKind { H, X, Z, S, T, CNOT, CZ, CCZ, Toffoli, PhaseZ };

int arity(GateKind kind);
std::string_view gate_name(GateKind kind);
/// Z-diagonal kinds: Z, S, T, CZ, CCZ, PhaseZ.
bool is_diagonal(GateKind kind);

/// A gate application. For CNOT and Toffoli the last qubit is the target.
/// PhaseZ(k) is e^{i(kπ/4)Z} = diag(ω^k, ω^-k).
class Gate {
 public:
  /// Throws std::invalid_argument on arity mismatch, repeated qubits or a bad phase.
  Gate(GateKind kind, std::span<const int> qubits, int phase = 0);
  Gate(GateKind kind, std::initializer_list<int> qubits, int phase = 0)
      : Gate(kind, std::span<const int>(qubits.begin(), qubits.size()), phase) {}

  static Gate phase_z(int k, int qubit) { return Gate(GateKind::PhaseZ, {qubit}, k); }

  GateKind kind() const { return kind_; }
  int arity() const { return blindlab::arity(kind_); }
  std::span<const int> qubits() const { return {qubits_.data(), static_cast<std::size_t>(arity())}; }
  int qubit(int i) const { return qubits_[i]; }
  int phase() const { return phase_; }
  bool is_diagonal() const { return blindlab::is_diagonal(kind_); }
  bool acts_on(int q) const;

  /// Same gate on relabelled qubits, q ↦ mapping[q].
  Gate remapped(std::span<const int> mapping) const;

  friend bool operator==(const Gate& a, const Gate& b) {
    return a.kind_ == b.kind_ && a.qubits_ == b.qubits_ && a.phase_ == b.phase_;
  }

 private:
  GateKind kind_;
  std::array<int, 3> qubits_{-1, -1, -1};
  int phase_ = 0;
};

class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CircuitParseError : public CircuitError {
 public:
  CircuitParseError(int line, const std::string& what)
      : CircuitError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class Circuit {
 public:
  /// Throws CircuitError when n_qubits < 1.
  explicit Circuit(int n_qubits);
  /// Throws CircuitError when a gate addresses a qubit outside [0, n_qubits).
  Circuit(int n_qubits, std::vector<Gate> gates);

  int n_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit& add(const Gate& g);
  Circuit& add(GateKind kind, std::initializer_list<int> qubits, int phase = 0) {
    return add(Gate(kind, qubits, phase));
  }
  /// Appends `other` with its qubit q placed on mapping[q].
  Circuit& append(const Circuit& other, std::span<const int> mapping);
  /// Appends `other` with its qubits shifted up by `offset`.
  Circuit& append_shifted(const Circuit& other, int offset);

  std::size_t count(GateKind kind) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_;
  std::vector<Gate> gates_;
};

/// H^⊗n · U · H^⊗n with U a list of Z-diagonal gates.
struct IqpForm {
  int n_qubits = 1;
  std::vector<Gate> diagonal_gates;

  /// Throws CircuitError if any listed gate is not Z-diagonal or out of range.
  void validate() const;
  Circuit to_circuit() const;

  friend bool operator==(const IqpForm&, const IqpForm&) = default;
};

Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& c);

std::optional<IqpForm> is_iqp_form(const Circuit& c);

/// Rewrites X, CNOT and Toffoli as H-conjugated Z, CZ and CCZ.
Circuit decompose_to_h_diagonal(const Circuit& c);

/// The exact inverse circuit (S† = S·Z, T† = T·S·Z, PZ(k)† = PZ(-k)).
Circuit inverse(const Circuit& c);

/**
 * Multi-controlled X with every control conditioned on |0⟩, written with
 * X-conjugated controls and a Toffoli ladder. Qubits in `dirty_pool` are
 * borrowed in an arbitrary state and restored; at least one is required
 * once there are three or more controls.
 */
void append_zero_controlled_x(Circuit& c, std::span<const int> controls, int target,
                              std::span<const int> dirty_pool);

/// Same as above with ordinary |1⟩ controls.
void append_multi_controlled_x(Circuit& c, std::span<const int> controls, int target,
                               std::span<const int> dirty_pool);

/// Uniformly random circuit over every gate kind whose arity fits n_qubits.
Circuit random_circuit(std::mt19937_64& rng, int n_qubits, int gate_count);

}  // namespace blindlab
