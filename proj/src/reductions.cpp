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

#include "blindlab/reductions.hpp"

#include <numeric>

namespace blindlab {

Circuit build_w(const Circuit& v) {
  const int n = v.n_qubits();
  Circuit w(n + 2);
  w.add(GateKind::H, {1});
  w.append_shifted(v, 2);
  w.add(GateKind::Toffoli, {2, 1, 0});
  return w;
}

Dqc1Reduction build_dqc1_reduction(const Circuit& v) {
  const int n = v.n_qubits();
  const Circuit w = build_w(v);
  const int reg = n + 2;
  const int ancilla = reg + 1;

  Circuit c(reg + 2);
  std::vector<int> controls(reg);
  std::iota(controls.begin(), controls.end(), 1);
  const int pool[] = {ancilla};

  append_zero_controlled_x(c, controls, 0, pool);
  c.append_shifted(w, 1);
  c.add(GateKind::CZ, {0, 1});
  c.append_shifted(inverse(w), 1);
  append_zero_controlled_x(c, controls, 0, pool);

  return Dqc1Reduction{w, std::move(c), n, 1};
}

IqpReduction build_iqp_reduction(const Circuit& v) {
  const int n = v.n_qubits();
  const Circuit d = decompose_to_h_diagonal(v);
  const auto& gates = d.gates();

  // Cancel Hadamards against the outer layers: the first gate on a wire
  // meets the opening H layer, the last gate meets the closing one.
  std::vector<bool> absorbed(gates.size(), false);
  std::vector<bool> open_h(n, true), close_h(n, true);
  for (int q = 0; q < n; ++q) {
    std::optional<std::size_t> first, last;
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (!gates[i].acts_on(q)) continue;
      if (!first) first = i;
      last = i;
    }
    if (!first) {
      open_h[q] = close_h[q] = false;  // H·H on an idle wire
      continue;
    }
    if (gates[*first].kind() == GateKind::H) {
      absorbed[*first] = true;
      open_h[q] = false;
    }
    if (gates[*last].kind() == GateKind::H && !absorbed[*last]) {
      absorbed[*last] = true;
      close_h[q] = false;
    }
  }

  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 0);
  int next_line = n;
  std::vector<int> consumed;
  std::vector<Gate> middle;  // over provisional line ids

  auto gadget = [&](int q) {
    const int fresh = next_line++;
    middle.push_back(Gate(GateKind::Z, {line[q]}));
    middle.push_back(Gate(GateKind::CZ, {line[q], fresh}));
    consumed.push_back(line[q]);
    line[q] = fresh;
  };

  for (int q = 0; q < n; ++q) {
    if (open_h[q]) gadget(q);
  }
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (absorbed[i]) continue;
    if (gates[i].kind() == GateKind::H) {
      gadget(gates[i].qubit(0));
    } else {
      middle.push_back(gates[i].remapped(line));
    }
  }
  for (int q = 0; q < n; ++q) {
    if (close_h[q]) gadget(q);
  }

  const int s = static_cast<int>(consumed.size());
  std::vector<int> relabel(next_line, -1);
  for (int i = 0; i < s; ++i) relabel[consumed[i]] = i;
  for (int q = 0; q < n; ++q) relabel[line[q]] = s + q;

  IqpForm form{n + s, {}};
  form.diagonal_gates.reserve(middle.size());
  for (const auto& g : middle) form.diagonal_gates.push_back(g.remapped(relabel));
  form.validate();
  return IqpReduction{std::move(form), s, s + 1};
}

ReductionReport verify_reductions(const Circuit& v, const SimulationLimits& limits) {
  ReductionReport r;
  const int n = v.n_qubits();
  r.n = n;
  r.p_v = acceptance_probability(v, limits);

  const auto dqc1 = build_dqc1_reduction(v);
  r.p_w = acceptance_probability(dqc1.w_circuit, limits);
  r.w_ok = r.p_w.value() == r.p_v.value().shifted_down(1);

  const RealSqrt2 pw = r.p_w.value();
  r.ptilde_expected = (RealSqrt2(4) * pw * (RealSqrt2(1) - pw)).shifted_down(static_cast<unsigned>(n + 2));
  r.ptilde_actual = dqc1_distribution(dqc1.dqc1_circuit, limits).p1();
  r.dqc1_ok = r.ptilde_actual.value() == r.ptilde_expected;

  const auto iqp = build_iqp_reduction(v);
  r.s = iqp.s;
  r.iqp_expected = r.p_v.value().shifted_down(static_cast<unsigned>(iqp.s));
  r.iqp_actual = iqp_marginal_distribution(iqp.iqp, iqp.postselect_count, limits).p1();
  r.iqp_ok = r.iqp_actual.value() == r.iqp_expected;

  // Postselected, renormalised state against V|0^n⟩ up to one ω^k.
  const auto projected = iqp_projected_amplitudes(iqp.iqp, iqp.s, limits);
  const auto target = run_statevector(v, std::uint64_t{0});
  std::size_t pivot = 0;
  while (pivot < target.size() && target[pivot].is_zero()) ++pivot;
  for (int k = 0; k < 8 && pivot < target.size(); ++k) {
    if (projected[pivot].scaled_sqrt2(iqp.s) != target[pivot].times_omega(k)) continue;
    bool all = true;
    for (std::size_t i = 0; i < target.size() && all; ++i) {
      all = projected[i].scaled_sqrt2(iqp.s) == target[i].times_omega(k);
    }
    if (all) {
      r.global_phase = k;
      break;
    }
  }
  r.state_identity_ok = r.global_phase.has_value();
  return r;
}

}  // namespace blindlab
