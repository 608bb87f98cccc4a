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

#include "blindlab/extract.hpp"

namespace blindlab {

ResponseMode parse_response_mode(const std::string& text) {
  if (text == "single") return ResponseMode::single;
  if (text == "poly") return ResponseMode::poly;
  throw std::invalid_argument("mode must be single or poly, got '" + text + "'");
}

std::string to_string(ResponseMode mode) { return mode == ResponseMode::single ? "single" : "poly"; }

const ExactProbability& Advice::q0() const {
  if (mode != ResponseMode::single) throw std::logic_error("q0 is only defined for single-bit advice");
  return response.front().second;
}

Advice make_advice(const Scheme& scheme, const ServerModel& server, std::size_t s, ResponseMode mode,
                   std::mt19937_64& rng, int max_attempts) {
  if (mode == ResponseMode::single && !server.single_bit()) {
    throw std::invalid_argument("single-bit advice needs a one-bit server; " + server.name() + " answers " +
                                std::to_string(server.response_length()) + " bits");
  }
  Advice adv;
  adv.s = s;
  adv.mode = mode;
  const BitString ones = BitString::ones(s);
  const auto c = static_cast<std::size_t>(scheme.coin_length(s));
  for (adv.attempts = 1;; ++adv.attempts) {
    if (adv.attempts > max_attempts) {
      throw std::runtime_error("key generation for 1^s failed " + std::to_string(max_attempts) + " times");
    }
    adv.coins = random_bits(rng, c);
    if (auto k = scheme.keygen(ones, adv.coins)) {
      adv.key = *k;
      break;
    }
  }
  adv.a = scheme.encrypt(ones, adv.key);
  adv.response = server.respond(adv.a);
  validate_response(adv.response, server.response_length());
  if (mode == ResponseMode::single) {
    // Keep q(0) alone, as the single-bit advice does, and rebuild q(1) from it.
    const ExactProbability q0 = adv.response.front().first[0] ? ExactProbability::zero() : adv.response.front().second;
    adv.response = {{BitString::from_string("0"), q0}, {BitString::from_string("1"), q0.complement()}};
  }
  return adv;
}

ExtractionOutcome extract_decide(const Scheme& scheme, const Advice& advice, const BitString& x,
                                 const ProtocolLimits& limits) {
  if (x.size() != advice.s) {
    throw std::invalid_argument("advice is for length " + std::to_string(advice.s) + ", x has length " +
                                std::to_string(x.size()));
  }
  const auto keys = enumerate_keys(scheme, x, limits);
  if (keys.success_count == 0) throw std::runtime_error("key generation never succeeds for x='" + x.to_string() + "'");

  RealSqrt2 weighted;  // Σ_{matching k} count(k) · Pr_b[D(x,k,b) = 1]
  ExtractionOutcome out;
  out.successful_coins = keys.success_count;
  for (const auto& [key, count] : keys.keys) {
    if (scheme.encrypt(x, key) != advice.a) continue;
    out.matching_coins += count;
    weighted += RealSqrt2(Integer(count)) * decrypted_distribution(scheme, x, key, advice.response).p1().value();
  }
  out.eta = ExactProbability(Rational(Integer(out.matching_coins), Integer(keys.success_count)));
  if (out.matching_coins > 0) out.pr_xi_1 = ExactProbability(weighted / RealSqrt2(Integer(out.matching_coins)));
  out.p_acc = out.eta * out.pr_xi_1;
  out.accept = !out.p_acc.is_zero();
  return out;
}

bool extract_run_once(const Scheme& scheme, const Advice& advice, const BitString& x, std::mt19937_64& rng,
                      int max_attempts) {
  const auto c = static_cast<std::size_t>(scheme.coin_length(x.size()));
  std::optional<BitString> key;
  for (int attempt = 0; !key; ++attempt) {
    if (attempt >= max_attempts) throw std::runtime_error("key generation kept failing");
    key = scheme.keygen(x, random_bits(rng, c));
  }
  if (scheme.encrypt(x, *key) != advice.a) return false;
  std::vector<ExactProbability> probs;
  probs.reserve(advice.response.size());
  for (const auto& [b, p] : advice.response) probs.push_back(p);
  const BitString& b = advice.response[sample_index(probs, rng)].first;
  return scheme.decrypt(x, *key, b) == 1;
}

ExtractionBounds check_extraction_bounds(const ExtractionOutcome& outcome, const ExactProbability& p1,
                                         const Rational& epsilon) {
  const RealSqrt2 base = outcome.eta.value() * p1.value();
  ExtractionBounds b;
  b.lower = base * RealSqrt2(Rational(1 - epsilon));
  b.upper = base * RealSqrt2(Rational(1 + epsilon));
  b.ok = b.lower <= outcome.p_acc.value() && outcome.p_acc.value() <= b.upper;
  return b;
}

// ---------------------------------------------------------------- truth tables

TruthTable TruthTable::parse(std::string_view text) {
  std::size_t s = 0;
  while ((std::size_t{1} << s) < text.size()) ++s;
  if (text.empty() || (std::size_t{1} << s) != text.size()) {
    throw std::invalid_argument("truth table length must be a power of two, got " + std::to_string(text.size()));
  }
  TruthTable t{s, {}};
  for (char c : text) {
    switch (c) {
      case '0': t.values.push_back(TruthValue::zero); break;
      case '1': t.values.push_back(TruthValue::one); break;
      case '*': t.values.push_back(TruthValue::undefined); break;
      default: throw std::invalid_argument(std::string("truth table entries are 0, 1 or *; got '") + c + "'");
    }
  }
  return t;
}

TruthTable TruthTable::random(std::mt19937_64& rng, std::size_t s, bool allow_undefined) {
  std::uniform_int_distribution<int> pick(0, allow_undefined ? 2 : 1);
  TruthTable t{s, std::vector<TruthValue>(std::size_t{1} << s)};
  for (auto& v : t.values) v = static_cast<TruthValue>(pick(rng));
  return t;
}

TruthTable TruthTable::parity(std::size_t s) {
  TruthTable t{s, std::vector<TruthValue>(std::size_t{1} << s)};
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    t.values[i] = BitString::from_index(i, s).parity() ? TruthValue::one : TruthValue::zero;
  }
  return t;
}

TruthTable TruthTable::constant(std::size_t s, TruthValue v) {
  return TruthTable{s, std::vector<TruthValue>(std::size_t{1} << s, v)};
}

std::string TruthTable::to_string() const {
  std::string out;
  for (auto v : values) out += v == TruthValue::zero ? '0' : v == TruthValue::one ? '1' : '*';
  return out;
}

AllDemoOutcome all_demo(const TruthTable& f, const BitString& x, std::size_t max_s) {
  if (f.s > max_s) {
    throw BudgetExceeded("truth table on s=" + std::to_string(f.s) + " bits exceeds the bound " +
                         std::to_string(max_s));
  }
  if (x.size() != f.s) throw std::invalid_argument("x must have " + std::to_string(f.s) + " bits");
  AllDemoOutcome out;
  out.x = x;
  out.fx = f.at(x);
  // The advice distribution puts 2^-s on each (x', f(x')). Sum over its support.
  RealSqrt2 p_acc;
  const RealSqrt2 weight = RealSqrt2(1).shifted_down(static_cast<unsigned>(f.s));
  for (std::uint64_t i = 0; i < f.values.size(); ++i) {
    if (BitString::from_index(i, f.s) != x) continue;
    if (f.values[i] == TruthValue::one) p_acc += weight;
  }
  out.p_acc = ExactProbability(p_acc);
  out.accept = !out.p_acc.is_zero();
  return out;
}

bool all_demo_run_once(const TruthTable& f, const BitString& x, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, f.values.size() - 1);
  const std::uint64_t sampled = pick(rng);
  return sampled == x.to_index() && f.values[sampled] == TruthValue::one;
}

}  // namespace blindlab
