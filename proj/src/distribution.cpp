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

#include "blindlab/distribution.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace blindlab {

namespace {

using NormSum = std::pair<Integer, Integer>;

/// Sums fn(begin, end) over [0, count) split across hardware threads.
template <class F>
NormSum parallel_norm_sum(std::uint64_t count, F&& fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::min<std::uint64_t>(hw, std::max<std::uint64_t>(1, count / 64));
  if (workers <= 1) return fn(0, count);

  std::vector<NormSum> partial(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t b = w * chunk;
      const std::uint64_t e = std::min(count, b + chunk);
      partial[w] = b < e ? fn(b, e) : NormSum{0, 0};
    });
  }
  for (auto& t : pool) t.join();
  NormSum total{0, 0};
  for (auto& [a, b] : partial) {
    total.first += a;
    total.second += b;
  }
  return total;
}

template <class State>
NormSum qubit0_one_norm(const Circuit& c, std::uint64_t input) {
  State state(c.n_qubits(), input);
  state.run(c);
  const auto m = qubit_mask(c.n_qubits(), 0);
  return state.projected_norm(m, m);
}

NormSum qubit0_one_norm_any(const Circuit& c, std::uint64_t input) {
  const bool sparse = prefer_sparse(c);
  return with_coefficient_type(c.count(GateKind::H), [&]<class Int>(std::type_identity<Int>) {
    return sparse ? qubit0_one_norm<BasicSparseState<Int>>(c, input)
                  : qubit0_one_norm<BasicExactState<Int>>(c, input);
  });
}

/// Phase exponent k with U|x⟩ = ω^k |x⟩ for a product of Z-diagonal gates.
struct DiagonalTerm {
  std::uint64_t mask;  // all bits must be set (for PhaseZ: the single qubit)
  int on_phase;        // added when mask fully set
  int off_phase;       // added otherwise (PhaseZ only)
};

std::vector<DiagonalTerm> diagonal_terms(const IqpForm& form) {
  std::vector<DiagonalTerm> terms;
  const int n = form.n_qubits;
  for (const auto& g : form.diagonal_gates) {
    std::uint64_t m = 0;
    for (int q : g.qubits()) m |= qubit_mask(n, q);
    switch (g.kind()) {
      case GateKind::Z:
      case GateKind::CZ:
      case GateKind::CCZ:
        terms.push_back({m, 4, 0});
        break;
      case GateKind::S:
        terms.push_back({m, 2, 0});
        break;
      case GateKind::T:
        terms.push_back({m, 1, 0});
        break;
      case GateKind::PhaseZ:
        terms.push_back({m, mod8(-g.phase()), g.phase()});
        break;
      default:
        throw CircuitError("non-diagonal gate in IQP form");
    }
  }
  return terms;
}

}  // namespace

ExactProbability acceptance_probability(const Circuit& c, const SimulationLimits& limits) {
  if (c.n_qubits() > limits.max_statevector_qubits) {
    throw BudgetExceeded("circuit has " + std::to_string(c.n_qubits()) + " qubits; exact simulation bound is " +
                         std::to_string(limits.max_statevector_qubits));
  }
  auto [a, b] = qubit0_one_norm_any(c, 0);
  return ExactProbability(RealSqrt2::dyadic(std::move(a), std::move(b), static_cast<unsigned>(c.count(GateKind::H))));
}

BinaryDistribution dqc1_distribution(const Circuit& c, const SimulationLimits& limits) {
  const int n = c.n_qubits();
  if (n > limits.max_dqc1_qubits || n > limits.max_statevector_qubits) {
    throw BudgetExceeded("DQC1 enumeration over " + std::to_string(n) + " qubits exceeds the bound of " +
                         std::to_string(std::min(limits.max_dqc1_qubits, limits.max_statevector_qubits)) +
                         " (raise --budget-n)");
  }
  const std::uint64_t inputs = std::uint64_t{1} << (n - 1);
  auto [a, b] = parallel_norm_sum(inputs, [&](std::uint64_t begin, std::uint64_t end) {
    NormSum acc{0, 0};
    for (std::uint64_t y = begin; y < end; ++y) {
      // Qubit 0 is the MSB, so y < 2^{n-1} already has the clean qubit at |0⟩.
      auto [na, nb] = qubit0_one_norm_any(c, y);
      acc.first += na;
      acc.second += nb;
    }
    return acc;
  });
  const auto e = static_cast<unsigned>(c.count(GateKind::H)) + static_cast<unsigned>(n - 1);
  return BinaryDistribution::from_p1(ExactProbability(RealSqrt2::dyadic(std::move(a), std::move(b), e)));
}

std::vector<ExactAmplitude> iqp_projected_amplitudes(const IqpForm& form, int m, const SimulationLimits& limits) {
  form.validate();
  const int n = form.n_qubits;
  if (m < 0 || m > n) throw std::invalid_argument("projection size m must lie in [0, n]");
  if (n > limits.max_statevector_qubits) {
    throw BudgetExceeded("IQP circuit has " + std::to_string(n) + " qubits; exact bound is " +
                         std::to_string(limits.max_statevector_qubits));
  }
  // amp(1^m w) = 2^{-n} Σ_x (-1)^{(1^m w)·x} ω^{k(x)}. Summing out the first m
  // bits first leaves a Walsh-Hadamard transform over the remaining n - m.
  const auto terms = diagonal_terms(form);
  const int rest = n - m;
  const std::uint64_t rest_dim = std::uint64_t{1} << rest;
  const std::uint64_t rest_mask = rest_dim - 1;
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<std::uint8_t> phase(dim, 0);
  for (const auto& t : terms) {
    const auto on = static_cast<std::uint8_t>(t.on_phase);
    const auto off = static_cast<std::uint8_t>(t.off_phase);
    for (std::uint64_t x = 0; x < dim; ++x) phase[x] += ((x & t.mask) == t.mask) ? on : off;
  }
  std::vector<ZOmega<std::int64_t>> g(rest_dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    const int k = (phase[x] + ((std::popcount(x >> rest) & 1) ? 4 : 0)) & 7;
    g[x & rest_mask][k & 3] += (k & 4) ? -1 : 1;
  }
  for (std::uint64_t h = 1; h < rest_dim; h <<= 1) {
    for (std::uint64_t i = 0; i < rest_dim; ++i) {
      if (!(i & h)) AmplitudeOps<ZOmega<std::int64_t>>::butterfly(g[i], g[i | h]);
    }
  }
  std::vector<ExactAmplitude> out;
  out.reserve(rest_dim);
  for (const auto& z : g) out.emplace_back(z.cast<Integer>(), static_cast<unsigned>(2 * n));
  return out;
}

BinaryDistribution iqp_marginal_distribution(const IqpForm& form, int m, const SimulationLimits& limits) {
  if (m < 1 || m > form.n_qubits) {
    throw std::invalid_argument("marginal size m=" + std::to_string(m) + " outside [1, " +
                                std::to_string(form.n_qubits) + "]");
  }
  RealSqrt2 p1;
  for (const auto& a : iqp_projected_amplitudes(form, m, limits)) {
    if (!a.is_zero()) p1 += a.norm();
  }
  return BinaryDistribution::from_p1(ExactProbability(p1));
}

namespace {

Integer uniform_bits(std::mt19937_64& rng, unsigned bits) {
  Integer r = 0;
  unsigned have = 0;
  while (have < bits) {
    r = (r << 64) | Integer(rng());
    have += 64;
  }
  return r >> (have - bits);
}

}  // namespace

int sample_outcome(const BinaryDistribution& d, std::mt19937_64& rng, unsigned precision_bits) {
  const Integer threshold = d.p1().value().floor_scaled(precision_bits);
  return uniform_bits(rng, precision_bits) < threshold ? 1 : 0;
}

std::size_t sample_index(std::span<const ExactProbability> probabilities, std::mt19937_64& rng,
                         unsigned precision_bits) {
  if (probabilities.empty()) throw std::invalid_argument("cannot sample from an empty distribution");
  const Integer r = uniform_bits(rng, precision_bits);
  RealSqrt2 cumulative;
  for (std::size_t i = 0; i + 1 < probabilities.size(); ++i) {
    cumulative += probabilities[i].value();
    if (r < cumulative.floor_scaled(precision_bits)) return i;
  }
  return probabilities.size() - 1;
}

MultiplicativeErrorReport check_multiplicative_error(const BinaryDistribution& ideal,
                                                     const BinaryDistribution& claimed, const Rational& epsilon) {
  if (epsilon < 0 || epsilon >= 1) throw std::invalid_argument("epsilon must lie in [0, 1)");
  MultiplicativeErrorReport report{ideal, claimed, epsilon, {}, {}, true};
  const RealSqrt2 eps(epsilon);
  for (int z = 0; z < 2; ++z) {
    report.residuals[z] = (claimed[z].value() - ideal[z].value()).abs();
    report.bounds[z] = eps * ideal[z].value();
    if (report.residuals[z] > report.bounds[z]) report.pass = false;
  }
  return report;
}

double float_acceptance_probability(const Circuit& c) {
  const auto psi = run_float_statevector(c, 0);
  const auto half = psi.size() / 2;
  return psi.tail(half).squaredNorm();
}

double float_dqc1_probability(const Circuit& c) {
  const std::uint64_t inputs = std::uint64_t{1} << (c.n_qubits() - 1);
  double total = 0.0;
  for (std::uint64_t y = 0; y < inputs; ++y) {
    const auto psi = run_float_statevector(c, y);
    total += psi.tail(psi.size() / 2).squaredNorm();
  }
  return total / static_cast<double>(inputs);
}

}  // namespace blindlab
