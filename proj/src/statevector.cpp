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

#include "blindlab/statevector.hpp"

namespace blindlab {

Statevector::Statevector(int n_qubits, std::vector<ExactAmplitude> amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::size_t{1} << n_qubits)) throw std::invalid_argument("statevector size mismatch");
}

RealSqrt2 Statevector::norm_squared() const {
  RealSqrt2 total;
  for (const auto& a : amps_) {
    if (!a.is_zero()) total += a.norm();
  }
  return total;
}

std::uint64_t basis_index(std::string_view bits) {
  if (bits.size() > 63) throw std::invalid_argument("basis string too long");
  std::uint64_t index = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("basis string must contain only 0 and 1");
    index = (index << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return index;
}

Statevector run_statevector(const Circuit& c, std::string_view input) {
  if (static_cast<int>(input.size()) != c.n_qubits()) {
    throw std::invalid_argument("input length " + std::to_string(input.size()) + " does not match " +
                                std::to_string(c.n_qubits()) + " qubit(s)");
  }
  return run_statevector(c, basis_index(input));
}

Statevector run_statevector(const Circuit& c, std::uint64_t input_index) {
  if (c.n_qubits() > 30) throw BudgetExceeded("dense statevector limited to 30 qubits");
  if (input_index >> c.n_qubits()) throw std::invalid_argument("basis index out of range");
  return with_coefficient_type(c.count(GateKind::H), [&]<class Int>(std::type_identity<Int>) {
    BasicExactState<Int> state(c.n_qubits(), input_index);
    state.run(c);
    std::vector<ExactAmplitude> amps;
    amps.reserve(state.numerators().size());
    for (const auto& z : state.numerators()) amps.emplace_back(z.template cast<Integer>(), state.half_exponent());
    return Statevector(c.n_qubits(), std::move(amps));
  });
}

Eigen::VectorXcd run_float_statevector(const Circuit& c, std::uint64_t input_index) {
  if (c.n_qubits() > 30) throw BudgetExceeded("dense statevector limited to 30 qubits");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << c.n_qubits());
  psi(static_cast<Eigen::Index>(input_index)) = 1.0;
  std::span<std::complex<double>> view(psi.data(), static_cast<std::size_t>(psi.size()));
  for (const auto& g : c.gates()) apply_gate(view, c.n_qubits(), g);
  return psi;
}

}  // namespace blindlab
