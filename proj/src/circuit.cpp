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

#include "blindlab/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace blindlab {

int arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
      return 2;
    case GateKind::CCZ:
    case GateKind::Toffoli:
      return 3;
    default:
      return 1;
  }
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::CCZ: return "CCZ";
    case GateKind::Toffoli: return "TOFFOLI";
    case GateKind::PhaseZ: return "PZ";
  }
  return "?";
}

bool is_diagonal(GateKind kind) {
  switch (kind) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::T:
    case GateKind::CZ:
    case GateKind::CCZ:
    case GateKind::PhaseZ:
      return true;
    default:
      return false;
  }
}

Gate::Gate(GateKind kind, std::span<const int> qubits, int phase) : kind_(kind), phase_(phase) {
  const int k = blindlab::arity(kind);
  if (static_cast<int>(qubits.size()) != k) {
    throw CircuitError(std::string(gate_name(kind)) + " expects " + std::to_string(k) + " qubit(s), got " +
                       std::to_string(qubits.size()));
  }
  for (int i = 0; i < k; ++i) {
    if (qubits[i] < 0) throw CircuitError("negative qubit index");
    for (int j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) throw CircuitError("duplicate target index " + std::to_string(qubits[i]));
    }
    qubits_[i] = qubits[i];
  }
  if (kind == GateKind::PhaseZ) {
    if (phase < 0 || phase > 7) throw CircuitError("PZ phase must lie in 0..7");
  } else if (phase != 0) {
    throw CircuitError("only PZ carries a phase");
  }
}

bool Gate::acts_on(int q) const {
  const auto qs = qubits();
  return std::find(qs.begin(), qs.end(), q) != qs.end();
}

Gate Gate::remapped(std::span<const int> mapping) const {
  std::array<int, 3> q{};
  for (int i = 0; i < arity(); ++i) q[i] = mapping[qubits_[i]];
  return Gate(kind_, std::span<const int>(q.data(), arity()), phase_);
}

// --- Circuit ---

Circuit::Circuit(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1) throw CircuitError("circuit needs at least one qubit");
}

Circuit::Circuit(int n_qubits, std::vector<Gate> gates) : Circuit(n_qubits) {
  for (const auto& g : gates) add(g);
}

Circuit& Circuit::add(const Gate& g) {
  for (int q : g.qubits()) {
    if (q >= n_) {
      throw CircuitError("qubit index " + std::to_string(q) + " out of range for " + std::to_string(n_) +
                         " qubit(s)");
    }
  }
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other, std::span<const int> mapping) {
  if (static_cast<int>(mapping.size()) < other.n_qubits()) throw CircuitError("qubit mapping too short");
  for (const auto& g : other.gates()) add(g.remapped(mapping));
  return *this;
}

Circuit& Circuit::append_shifted(const Circuit& other, int offset) {
  std::vector<int> mapping(other.n_qubits());
  std::iota(mapping.begin(), mapping.end(), offset);
  return append(other, mapping);
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind() == kind; }));
}

// --- IqpForm ---

void IqpForm::validate() const {
  if (n_qubits < 1) throw CircuitError("IQP form needs at least one qubit");
  for (const auto& g : diagonal_gates) {
    if (!g.is_diagonal()) throw CircuitError("IQP middle layer contains non-diagonal gate " + std::string(gate_name(g.kind())));
    for (int q : g.qubits()) {
      if (q >= n_qubits) throw CircuitError("IQP gate qubit out of range");
    }
  }
}

Circuit IqpForm::to_circuit() const {
  validate();
  Circuit c(n_qubits);
  for (int q = 0; q < n_qubits; ++q) c.add(GateKind::H, {q});
  for (const auto& g : diagonal_gates) c.add(g);
  for (int q = 0; q < n_qubits; ++q) c.add(GateKind::H, {q});
  return c;
}

// --- text format ---

namespace {

std::optional<GateKind> lookup_gate(std::string_view name) {
  static const std::pair<std::string_view, GateKind> table[] = {
      {"H", GateKind::H},       {"X", GateKind::X},         {"Z", GateKind::Z},
      {"S", GateKind::S},       {"T", GateKind::T},         {"CNOT", GateKind::CNOT},
      {"CX", GateKind::CNOT},   {"CZ", GateKind::CZ},       {"CCZ", GateKind::CCZ},
      {"TOFFOLI", GateKind::Toffoli}, {"Toffoli", GateKind::Toffoli}, {"CCX", GateKind::Toffoli},
      {"PZ", GateKind::PhaseZ},
  };
  for (const auto& [n, k] : table) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::optional<int> to_int(std::string_view tok) {
  int value = 0;
  const auto* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || p != end) return std::nullopt;
  return value;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (!circuit) {
      if (toks.size() != 1) throw CircuitParseError(line_no, "expected the qubit count alone on the first line");
      const auto n = to_int(toks[0]);
      if (!n) throw CircuitParseError(line_no, "non-integer token '" + std::string(toks[0]) + "'");
      if (*n < 1) throw CircuitParseError(line_no, "qubit count must be positive");
      circuit.emplace(*n);
      continue;
    }

    const auto kind = lookup_gate(toks[0]);
    if (!kind) throw CircuitParseError(line_no, "unknown gate '" + std::string(toks[0]) + "'");
    std::vector<int> args;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const auto v = to_int(toks[i]);
      if (!v) throw CircuitParseError(line_no, "non-integer token '" + std::string(toks[i]) + "'");
      args.push_back(*v);
    }
    int phase = 0;
    if (*kind == GateKind::PhaseZ) {
      if (args.empty()) throw CircuitParseError(line_no, "PZ expects 'PZ k q'");
      phase = args.front();
      args.erase(args.begin());
    }
    if (static_cast<int>(args.size()) != arity(*kind)) {
      throw CircuitParseError(line_no, std::string(gate_name(*kind)) + " expects " + std::to_string(arity(*kind)) +
                                           " qubit index(es), got " + std::to_string(args.size()));
    }
    for (int q : args) {
      if (q < 0 || q >= circuit->n_qubits()) {
        throw CircuitParseError(line_no, "qubit index " + std::to_string(q) + " out of range");
      }
    }
    try {
      circuit->add(Gate(*kind, args, phase));
    } catch (const CircuitError& e) {
      throw CircuitParseError(line_no, e.what());
    }
  }
  if (!circuit) throw CircuitParseError(line_no, "missing qubit count");
  return *circuit;
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream os;
  os << c.n_qubits();
  for (const auto& g : c.gates()) {
    os << '\n' << gate_name(g.kind());
    if (g.kind() == GateKind::PhaseZ) os << ' ' << g.phase();
    for (int q : g.qubits()) os << ' ' << q;
  }
  return os.str();
}

// --- structural rewrites ---

std::optional<IqpForm> is_iqp_form(const Circuit& c) {
  const int n = c.n_qubits();
  const auto& gates = c.gates();
  if (gates.size() < static_cast<std::size_t>(2 * n)) return std::nullopt;

  auto is_full_h_layer = [&](std::size_t begin) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = begin; i < begin + n; ++i) {
      if (gates[i].kind() != GateKind::H || seen[gates[i].qubit(0)]) return false;
      seen[gates[i].qubit(0)] = true;
    }
    return true;
  };
  if (!is_full_h_layer(0) || !is_full_h_layer(gates.size() - n)) return std::nullopt;

  IqpForm form{n, {}};
  for (std::size_t i = n; i < gates.size() - n; ++i) {
    if (!gates[i].is_diagonal()) return std::nullopt;
    form.diagonal_gates.push_back(gates[i]);
  }
  return form;
}

Circuit decompose_to_h_diagonal(const Circuit& c) {
  Circuit out(c.n_qubits());
  for (const auto& g : c.gates()) {
    switch (g.kind()) {
      case GateKind::X:
        out.add(GateKind::H, {g.qubit(0)}).add(GateKind::Z, {g.qubit(0)}).add(GateKind::H, {g.qubit(0)});
        break;
      case GateKind::CNOT:
        out.add(GateKind::H, {g.qubit(1)})
            .add(GateKind::CZ, {g.qubit(0), g.qubit(1)})
            .add(GateKind::H, {g.qubit(1)});
        break;
      case GateKind::Toffoli:
        out.add(GateKind::H, {g.qubit(2)})
            .add(GateKind::CCZ, {g.qubit(0), g.qubit(1), g.qubit(2)})
            .add(GateKind::H, {g.qubit(2)});
        break;
      default:
        out.add(g);
    }
  }
  return out;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.n_qubits());
  const auto& gates = c.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    const int q = it->qubit(0);
    switch (it->kind()) {
      case GateKind::S:
        out.add(GateKind::S, {q}).add(GateKind::Z, {q});
        break;
      case GateKind::T:
        out.add(GateKind::T, {q}).add(GateKind::S, {q}).add(GateKind::Z, {q});
        break;
      case GateKind::PhaseZ:
        out.add(Gate::phase_z((8 - it->phase()) % 8, q));
        break;
      default:
        out.add(*it);
    }
  }
  return out;
}

namespace {

void mcx_rec(Circuit& c, std::vector<int> controls, int target, std::vector<int> pool) {
  switch (controls.size()) {
    case 0:
      c.add(GateKind::X, {target});
      return;
    case 1:
      c.add(GateKind::CNOT, {controls[0], target});
      return;
    case 2:
      c.add(GateKind::Toffoli, {controls[0], controls[1], target});
      return;
    default:
      break;
  }
  if (pool.empty()) throw CircuitError("multi-controlled X with 3+ controls needs a borrowed qubit");
  const int a = pool.front();
  const std::vector<int> rest_pool(pool.begin() + 1, pool.end());

  const std::size_t m1 = (controls.size() + 1) / 2;
  std::vector<int> first(controls.begin(), controls.begin() + m1);
  std::vector<int> second(controls.begin() + m1, controls.end());

  // A: a ^= AND(first). B: target ^= AND(second, a). B A B A leaves a restored
  // and flips target by AND(first) · AND(second) whatever a held initially.
  std::vector<int> pool_a = second;
  pool_a.push_back(target);
  pool_a.insert(pool_a.end(), rest_pool.begin(), rest_pool.end());

  std::vector<int> controls_b = second;
  controls_b.push_back(a);
  std::vector<int> pool_b = first;
  pool_b.insert(pool_b.end(), rest_pool.begin(), rest_pool.end());

  for (int rep = 0; rep < 2; ++rep) {
    mcx_rec(c, controls_b, target, pool_b);
    mcx_rec(c, first, a, pool_a);
  }
}

void check_disjoint(std::span<const int> controls, int target, std::span<const int> pool) {
  std::vector<int> all(controls.begin(), controls.end());
  all.push_back(target);
  all.insert(all.end(), pool.begin(), pool.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw CircuitError("controls, target and borrowed qubits must be distinct");
}

}  // namespace

void append_multi_controlled_x(Circuit& c, std::span<const int> controls, int target,
                               std::span<const int> dirty_pool) {
  check_disjoint(controls, target, dirty_pool);
  mcx_rec(c, {controls.begin(), controls.end()}, target, {dirty_pool.begin(), dirty_pool.end()});
}

void append_zero_controlled_x(Circuit& c, std::span<const int> controls, int target,
                              std::span<const int> dirty_pool) {
  for (int q : controls) c.add(GateKind::X, {q});
  append_multi_controlled_x(c, controls, target, dirty_pool);
  for (int q : controls) c.add(GateKind::X, {q});
}

Circuit random_circuit(std::mt19937_64& rng, int n_qubits, int gate_count) {
  static constexpr GateKind kinds[] = {GateKind::H,    GateKind::X,  GateKind::Z,   GateKind::S,
                                       GateKind::T,    GateKind::CNOT, GateKind::CZ, GateKind::CCZ,
                                       GateKind::Toffoli, GateKind::PhaseZ};
  std::vector<GateKind> usable;
  for (auto k : kinds) {
    if (arity(k) <= n_qubits) usable.push_back(k);
  }
  Circuit c(n_qubits);
  std::vector<int> order(n_qubits);
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < gate_count; ++i) {
    const GateKind kind = usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
    std::shuffle(order.begin(), order.end(), rng);
    const int phase = kind == GateKind::PhaseZ ? std::uniform_int_distribution<int>(0, 7)(rng) : 0;
    c.add(Gate(kind, std::span<const int>(order.data(), arity(kind)), phase));
  }
  return c;
}

}  // namespace blindlab
