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
 * Statevector simulation, exact and floating.
 *
 * Basis index convention: qubit 0 is the most significant bit, so the
 * basis string "10" on two qubits is index 2.
 *
 * The exact engines keep every amplitude over one shared denominator
 * √2^E, where E counts the Hadamards applied so far. A gate is then pure
 * integer arithmetic on Z[ω] numerators: permutations swap, diagonal gates
 * rotate by powers of ω, H adds and subtracts.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "blindlab/circuit.hpp"
#include "blindlab/ring.hpp"

namespace blindlab {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t qubit_mask(int n_qubits, int q) { return std::uint64_t{1} << (n_qubits - 1 - q); }

/// Per-scalar operations used by the gate kernel.
template <class Amp>
struct AmplitudeOps;

template <class Int>
struct AmplitudeOps<ZOmega<Int>> {
  /// H leaves the 1/√2 to the caller's shared denominator.
  static constexpr bool kDeferredSqrt2 = true;
  static void rotate(ZOmega<Int>& a, int k) { a.rotate(k); }
  static void butterfly(ZOmega<Int>& a, ZOmega<Int>& b) {
    ZOmega<Int> sum = a + b;
    a -= b;
    b = std::move(a);
    a = std::move(sum);
  }
  static bool is_zero(const ZOmega<Int>& a) { return a.is_zero(); }
};

template <>
struct AmplitudeOps<std::complex<double>> {
  static constexpr bool kDeferredSqrt2 = false;
  static void rotate(std::complex<double>& a, int k) {
    static const std::complex<double> omega[8] = {
        {1, 0}, {0.70710678118654752440, 0.70710678118654752440}, {0, 1},
        {-0.70710678118654752440, 0.70710678118654752440}, {-1, 0},
        {-0.70710678118654752440, -0.70710678118654752440}, {0, -1},
        {0.70710678118654752440, -0.70710678118654752440}};
    a *= omega[mod8(k)];
  }
  static void butterfly(std::complex<double>& a, std::complex<double>& b) {
    constexpr double h = 0.70710678118654752440;
    const auto s = (a + b) * h;
    b = (a - b) * h;
    a = s;
  }
  static bool is_zero(const std::complex<double>& a) { return a == 0.0; }
};

/**
 * Applies `g` in place to a dense 2^n amplitude array. Returns true when the
 * gate was a Hadamard whose 1/√2 factor the caller must account for (exact
 * scalars only).
 */
template <class Amp>
bool apply_gate(std::span<Amp> amps, int n, const Gate& g) {
  using Ops = AmplitudeOps<Amp>;
  const std::uint64_t dim = std::uint64_t{1} << n;
  auto mask = [n](int q) { return qubit_mask(n, q); };
  switch (g.kind()) {
    case GateKind::H: {
      const auto m = mask(g.qubit(0));
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (!(i & m)) Ops::butterfly(amps[i], amps[i | m]);
      }
      return Ops::kDeferredSqrt2;
    }
    case GateKind::X: {
      const auto m = mask(g.qubit(0));
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (!(i & m)) std::swap(amps[i], amps[i | m]);
      }
      return false;
    }
    case GateKind::CNOT:
    case GateKind::Toffoli: {
      std::uint64_t cm = 0;
      for (int j = 0; j + 1 < g.arity(); ++j) cm |= mask(g.qubit(j));
      const auto tm = mask(g.qubit(g.arity() - 1));
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & cm) == cm && !(i & tm)) std::swap(amps[i], amps[i | tm]);
      }
      return false;
    }
    case GateKind::Z:
    case GateKind::S:
    case GateKind::T: {
      const int k = g.kind() == GateKind::Z ? 4 : g.kind() == GateKind::S ? 2 : 1;
      const auto m = mask(g.qubit(0));
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & m) Ops::rotate(amps[i], k);
      }
      return false;
    }
    case GateKind::CZ:
    case GateKind::CCZ: {
      std::uint64_t m = 0;
      for (int q : g.qubits()) m |= mask(q);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & m) == m) Ops::rotate(amps[i], 4);
      }
      return false;
    }
    case GateKind::PhaseZ: {
      const auto m = mask(g.qubit(0));
      const int k = g.phase();
      if (k == 0) return false;
      for (std::uint64_t i = 0; i < dim; ++i) Ops::rotate(amps[i], (i & m) ? -k : k);
      return false;
    }
  }
  return false;
}

/// Dense exact state: amplitudes are numerators()[i] / √2^half_exponent().
template <class Int>
class BasicExactState {
 public:
  BasicExactState(int n_qubits, std::uint64_t basis_index)
      : n_(n_qubits), amps_(std::size_t{1} << n_qubits) {
    amps_[basis_index] = ZOmega<Int>(Int(1));
  }

  void apply(const Gate& g) {
    if (apply_gate<ZOmega<Int>>(amps_, n_, g)) ++half_exp_;
  }
  void run(const Circuit& c) {
    for (const auto& g : c.gates()) apply(g);
  }

  int n_qubits() const { return n_; }
  unsigned half_exponent() const { return half_exp_; }
  const std::vector<ZOmega<Int>>& numerators() const { return amps_; }

  /// Σ|numerator_i|² over indices with (i & mask) == value, as (a, b) ↦ a + b√2.
  std::pair<Integer, Integer> projected_norm(std::uint64_t mask, std::uint64_t value) const {
    Integer a = 0, b = 0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
      if ((i & mask) != value || amps_[i].is_zero()) continue;
      auto [na, nb] = amps_[i].norm_squared();
      a += na;
      b += nb;
    }
    return {a, b};
  }

 private:
  int n_;
  unsigned half_exp_ = 0;
  std::vector<ZOmega<Int>> amps_;
};

/// Sparse exact state; worthwhile while few Hadamards have been applied.
template <class Int>
class BasicSparseState {
 public:
  BasicSparseState(int n_qubits, std::uint64_t basis_index) : n_(n_qubits) {
    amps_.emplace(basis_index, ZOmega<Int>(Int(1)));
  }

  void apply(const Gate& g);
  void run(const Circuit& c) {
    for (const auto& gate : c.gates()) apply(gate);
  }

  int n_qubits() const { return n_; }
  unsigned half_exponent() const { return half_exp_; }
  std::size_t nonzeros() const { return amps_.size(); }

  std::pair<Integer, Integer> projected_norm(std::uint64_t mask, std::uint64_t value) const {
    Integer a = 0, b = 0;
    for (const auto& [i, z] : amps_) {
      if ((i & mask) != value) continue;
      auto [na, nb] = z.norm_squared();
      a += na;
      b += nb;
    }
    return {a, b};
  }

  std::vector<ZOmega<Int>> to_dense() const {
    std::vector<ZOmega<Int>> out(std::size_t{1} << n_);
    for (const auto& [i, z] : amps_) out[i] = z;
    return out;
  }

 private:
  using Map = std::unordered_map<std::uint64_t, ZOmega<Int>>;

  template <class F>
  void permute(F&& f) {
    Map next;
    next.reserve(amps_.size());
    for (auto& [i, z] : amps_) next.emplace(f(i), std::move(z));
    amps_ = std::move(next);
  }

  int n_;
  unsigned half_exp_ = 0;
  Map amps_;
};

template <class Int>
void BasicSparseState<Int>::apply(const Gate& g) {
  auto mask = [this](int q) { return qubit_mask(n_, q); };
  switch (g.kind()) {
    case GateKind::H: {
      const auto m = mask(g.qubit(0));
      Map next;
      next.reserve(2 * amps_.size());
      for (const auto& [i, z] : amps_) {
        next[i & ~m] += z;
        if (i & m)
          next[i] -= z;
        else
          next[i | m] += z;
      }
      std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
      amps_ = std::move(next);
      ++half_exp_;
      return;
    }
    case GateKind::X: {
      const auto m = mask(g.qubit(0));
      permute([m](std::uint64_t i) { return i ^ m; });
      return;
    }
    case GateKind::CNOT:
    case GateKind::Toffoli: {
      std::uint64_t cm = 0;
      for (int j = 0; j + 1 < g.arity(); ++j) cm |= mask(g.qubit(j));
      const auto tm = mask(g.qubit(g.arity() - 1));
      permute([cm, tm](std::uint64_t i) { return (i & cm) == cm ? i ^ tm : i; });
      return;
    }
    default: {
      // Diagonal gates: reuse the dense kernel one entry at a time.
      for (auto& [i, z] : amps_) {
        switch (g.kind()) {
          case GateKind::Z:
            if (i & mask(g.qubit(0))) z.rotate(4);
            break;
          case GateKind::S:
            if (i & mask(g.qubit(0))) z.rotate(2);
            break;
          case GateKind::T:
            if (i & mask(g.qubit(0))) z.rotate(1);
            break;
          case GateKind::PhaseZ:
            z.rotate((i & mask(g.qubit(0))) ? -g.phase() : g.phase());
            break;
          default: {
            std::uint64_t m = 0;
            for (int q : g.qubits()) m |= mask(q);
            if ((i & m) == m) z.rotate(4);
          }
        }
      }
    }
  }
}

/**
 * Calls f(std::type_identity<Int>{}) with the narrowest coefficient type
 * that cannot overflow for a circuit with `hadamards` Hadamard gates.
 * Numerators are bounded by 2^hadamards; squares must fit in 63 bits.
 */
template <class F>
decltype(auto) with_coefficient_type(std::size_t hadamards, F&& f) {
  if (hadamards <= 30) return f(std::type_identity<std::int64_t>{});
  return f(std::type_identity<Integer>{});
}

/// True when the sparse engine is expected to beat the dense one.
inline bool prefer_sparse(const Circuit& c) { return c.count(GateKind::H) + 3 < static_cast<std::size_t>(c.n_qubits()); }

/// Canonical exact statevector.
class Statevector {
 public:
  Statevector(int n_qubits, std::vector<ExactAmplitude> amplitudes);

  int n_qubits() const { return n_; }
  std::size_t size() const { return amps_.size(); }
  const ExactAmplitude& operator[](std::size_t i) const { return amps_[i]; }
  const std::vector<ExactAmplitude>& amplitudes() const { return amps_; }

  /// Σ|amp|² exactly.
  RealSqrt2 norm_squared() const;

  friend bool operator==(const Statevector&, const Statevector&) = default;

 private:
  int n_;
  std::vector<ExactAmplitude> amps_;
};

/// Parses a basis string like "0110" (qubit 0 first). Throws std::invalid_argument.
std::uint64_t basis_index(std::string_view bits);

/// Exact state after running `c` on |input⟩. Throws std::invalid_argument on length mismatch.
Statevector run_statevector(const Circuit& c, std::string_view input);
Statevector run_statevector(const Circuit& c, std::uint64_t input_index);

/// Double-precision backend sharing the gate kernel, stored as an Eigen vector.
Eigen::VectorXcd run_float_statevector(const Circuit& c, std::uint64_t input_index);

}  // namespace blindlab
