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

#include "blindlab/protocol.hpp"

#include <algorithm>

#include "blindlab/reductions.hpp"

namespace blindlab {

void validate_response(const ResponseDistribution& d, std::size_t length) {
  RealSqrt2 total;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].first.size() != length) {
      throw MalformedResponse("response '" + d[i].first.to_string() + "' has length " +
                              std::to_string(d[i].first.size()) + ", expected " + std::to_string(length));
    }
    if (i > 0 && !(d[i - 1].first < d[i].first)) throw MalformedResponse("response strings not sorted and distinct");
    total += d[i].second.value();
  }
  if (total != RealSqrt2(1)) throw MalformedResponse("response probabilities sum to " + total.to_string() + ", not 1");
}

// ---------------------------------------------------------------- schemes

namespace {

class LeakyScheme final : public Scheme {
 public:
  SchemeManifest manifest() const override {
    return {"leaky", 0, 0, 1, "basic10", "sends the parameter in the clear; decrypts as the response bit"};
  }
  std::optional<BitString> keygen(const BitString&, const BitString&) const override { return BitString(); }
  BitString encrypt(const BitString& x, const BitString&) const override { return x; }
  int decrypt(const BitString&, const BitString&, const BitString& b) const override { return b[0]; }
};

class ConstantScheme final : public Scheme {
 public:
  SchemeManifest manifest() const override {
    return {"constant", 0, 0, 1, "degenerate", "sends the all-zero string; decrypts as the response bit"};
  }
  std::optional<BitString> keygen(const BitString&, const BitString&) const override { return BitString(); }
  BitString encrypt(const BitString& x, const BitString&) const override { return BitString::zeros(x.size()); }
  int decrypt(const BitString&, const BitString&, const BitString& b) const override { return b[0]; }
};

class OtpScheme : public Scheme {
 public:
  SchemeManifest manifest() const override {
    return {"otp", 1, 0, 1, "parity-flip", "one-time pad on the parameter; decrypts as the response bit"};
  }
  std::optional<BitString> keygen(const BitString&, const BitString& coins) const override { return coins; }
  BitString encrypt(const BitString& x, const BitString& key) const override { return x ^ key; }
  int decrypt(const BitString&, const BitString&, const BitString& b) const override { return b[0]; }
};

class OtpParityScheme : public OtpScheme {
 public:
  SchemeManifest manifest() const override {
    return {"otp-parity", 1, 0, 1, "parity-flip", "one-time pad; flips the response bit by the key parity"};
  }
  int decrypt(const BitString&, const BitString& key, const BitString& b) const override {
    return b[0] ^ static_cast<int>(key.parity());
  }
};

class FlaggedOtpParityScheme final : public OtpParityScheme {
 public:
  SchemeManifest manifest() const override {
    return {"flagged-otp-parity", 1, 2, 1, "parity-flip-t",
            "otp-parity with two flag coins; key generation fails when both are 1"};
  }
  std::optional<BitString> keygen(const BitString& x, const BitString& coins) const override {
    const std::size_t s = x.size();
    if (coins[s] && coins[s + 1]) return std::nullopt;
    return coins.prefix(s);
  }
};

}  // namespace

std::vector<std::string> scheme_names() { return {"leaky", "constant", "otp", "otp-parity", "flagged-otp-parity"}; }

std::unique_ptr<Scheme> make_scheme(const std::string& name) {
  if (name == "leaky") return std::make_unique<LeakyScheme>();
  if (name == "constant") return std::make_unique<ConstantScheme>();
  if (name == "otp") return std::make_unique<OtpScheme>();
  if (name == "otp-parity") return std::make_unique<OtpParityScheme>();
  if (name == "flagged-otp-parity") return std::make_unique<FlaggedOtpParityScheme>();
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

// ---------------------------------------------------------------- families

namespace {

std::vector<BitString> all_strings(std::size_t n) {
  std::vector<BitString> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) out.push_back(BitString::from_index(i, n));
  return out;
}

class Basic10Family final : public CircuitFamily {
 public:
  Basic10Family() {
    using K = GateKind;
    auto c = [](int n, std::vector<Gate> g) { return Circuit(n, std::move(g)); };
    table_ = {
        c(2, {}),
        c(2, {Gate(K::X, {0})}),
        c(2, {Gate(K::H, {0})}),
        c(2, {Gate(K::CNOT, {1, 0})}),
        c(2, {Gate(K::H, {0}), Gate(K::T, {0}), Gate(K::H, {0})}),
        c(2, {Gate(K::H, {0}), Gate(K::S, {0}), Gate(K::H, {0})}),
        c(2, {Gate(K::X, {0}), Gate(K::H, {0}), Gate(K::T, {0}), Gate(K::H, {0})}),
        c(3, {Gate(K::Toffoli, {1, 2, 0})}),
        c(2, {Gate(K::H, {0}), Gate(K::CZ, {0, 1}), Gate(K::H, {0})}),
        c(3, {Gate(K::H, {0}), Gate(K::CCZ, {0, 1, 2}), Gate(K::H, {0})}),
    };
  }
  std::string name() const override { return "basic10"; }
  Circuit circuit(const BitString& x) const override { return table_[x.to_index() % table_.size()]; }
  std::vector<BitString> default_parameters() const override {
    std::vector<BitString> xs;
    for (std::uint64_t i = 0; i < table_.size(); ++i) xs.push_back(BitString::from_index(i, 4));
    return xs;
  }

 private:
  std::vector<Circuit> table_;
};

/// Base circuit, followed by X on the clean qubit when the parameter has odd parity.
class ParityFlipFamily final : public CircuitFamily {
 public:
  ParityFlipFamily(std::string name, Circuit base) : name_(std::move(name)), base_(std::move(base)) {}
  std::string name() const override { return name_; }
  Circuit circuit(const BitString& x) const override {
    Circuit c = base_;
    if (x.parity()) c.add(GateKind::X, {0});
    return c;
  }
  std::vector<BitString> default_parameters() const override { return all_strings(3); }

 private:
  std::string name_;
  Circuit base_;
};

/// Every parameter maps to the one-clean-qubit compilation of a single Hadamard.
class DegenerateFamily final : public CircuitFamily {
 public:
  DegenerateFamily() : circuit_(build_dqc1_reduction(Circuit(1, {Gate(GateKind::H, {0})})).dqc1_circuit) {}
  std::string name() const override { return "degenerate"; }
  Circuit circuit(const BitString&) const override { return circuit_; }
  std::vector<BitString> default_parameters() const override { return all_strings(3); }

 private:
  Circuit circuit_;
};

}  // namespace

std::vector<std::string> family_names() { return {"basic10", "parity-flip", "parity-flip-t", "degenerate"}; }

std::shared_ptr<const CircuitFamily> make_family(const std::string& name) {
  using K = GateKind;
  if (name == "basic10") return std::make_shared<Basic10Family>();
  if (name == "parity-flip") return std::make_shared<ParityFlipFamily>(name, Circuit(2));
  if (name == "parity-flip-t") {
    return std::make_shared<ParityFlipFamily>(
        name, Circuit(2, {Gate(K::H, {0}), Gate(K::T, {0}), Gate(K::H, {0})}));
  }
  if (name == "degenerate") return std::make_shared<DegenerateFamily>();
  throw std::invalid_argument("unknown family '" + name + "'");
}

// ---------------------------------------------------------------- servers

namespace {

ResponseDistribution pad_response(const BinaryDistribution& d, std::size_t length) {
  ResponseDistribution out;
  const std::size_t pad = length - 1;
  for (int z = 0; z < 2; ++z) {
    const ExactProbability p(d[z].value().shifted_down(static_cast<unsigned>(pad)));
    for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << pad); ++tail) {
      out.emplace_back(BitString::from_index(static_cast<std::uint64_t>(z), 1).concat(BitString::from_index(tail, pad)),
                       p);
    }
  }
  return out;
}

class HonestServer final : public ServerModel {
 public:
  HonestServer(std::shared_ptr<const CircuitFamily> family, SimulationLimits limits, std::size_t length)
      : family_(std::move(family)), limits_(limits), length_(length) {}

  std::string name() const override {
    return length_ == 1 ? "honest" : "honest-padded:" + std::to_string(length_);
  }
  std::size_t response_length() const override { return length_; }

  ResponseDistribution respond(const BitString& a) const override {
    return pad_response(distribution_of(family_->circuit(a)), length_);
  }

 private:
  BinaryDistribution distribution_of(const Circuit& c) const {
    const std::string key = serialize_circuit(c);
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto d = dqc1_distribution(c, limits_);
    std::lock_guard lock(mu_);
    return cache_.emplace(key, std::move(d)).first->second;
  }

  std::shared_ptr<const CircuitFamily> family_;
  SimulationLimits limits_;
  std::size_t length_;
  mutable std::mutex mu_;
  mutable std::map<std::string, BinaryDistribution> cache_;
};

class FixedServer final : public ServerModel {
 public:
  explicit FixedServer(const Rational& q1) : q1_(q1), dist_(BinaryDistribution::from_p1(q1)) {}
  std::string name() const override { return "fixed:" + to_string(q1_); }
  std::size_t response_length() const override { return 1; }
  ResponseDistribution respond(const BitString&) const override { return pad_response(dist_, 1); }

 private:
  Rational q1_;
  BinaryDistribution dist_;
};

}  // namespace

std::unique_ptr<ServerModel> make_server(const std::string& spec, std::shared_ptr<const CircuitFamily> family,
                                         const SimulationLimits& limits) {
  if (spec == "honest") return std::make_unique<HonestServer>(std::move(family), limits, 1);
  if (spec.starts_with("honest-padded:")) {
    const auto r = std::stoi(spec.substr(14));
    if (r < 1 || r > 16) throw std::invalid_argument("padded response length must lie in [1, 16]");
    return std::make_unique<HonestServer>(std::move(family), limits, static_cast<std::size_t>(r));
  }
  if (spec.starts_with("fixed:")) {
    const Rational q1 = parse_rational(spec.substr(6));
    if (q1 < 0 || q1 > 1) throw std::invalid_argument("fixed server probability must lie in [0, 1]");
    return std::make_unique<FixedServer>(q1);
  }
  throw std::invalid_argument("unknown server '" + spec + "' (expected honest, honest-padded:R or fixed:Q)");
}

// ---------------------------------------------------------------- execution

BitString random_bits(std::mt19937_64& rng, std::size_t n) {
  BitString out = BitString::zeros(n);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) word = rng();
    out.set(i, (word >> (i % 64)) & 1);
  }
  return out;
}

Transcript run_protocol(const Scheme& scheme, const ServerModel& server, const BitString& x, std::mt19937_64& rng,
                        int max_attempts) {
  Transcript t;
  t.x = x;
  const auto c = static_cast<std::size_t>(scheme.coin_length(x.size()));
  for (t.attempts = 1;; ++t.attempts) {
    if (t.attempts > max_attempts) throw std::runtime_error("key generation failed " + std::to_string(max_attempts) + " times");
    t.coins = random_bits(rng, c);
    if (auto k = scheme.keygen(x, t.coins)) {
      t.key = *k;
      break;
    }
  }
  t.a = scheme.encrypt(x, t.key);
  const auto response = server.respond(t.a);
  validate_response(response, server.response_length());
  std::vector<ExactProbability> probs;
  probs.reserve(response.size());
  for (const auto& [b, p] : response) probs.push_back(p);
  t.b = response[sample_index(probs, rng)].first;
  t.tau = scheme.decrypt(x, t.key, t.b);
  return t;
}

Rational KeyEnumeration::fail_probability() const {
  return Rational(Integer(fail_count), Integer(success_count + fail_count));
}

KeyEnumeration enumerate_keys(const Scheme& scheme, const BitString& x, const ProtocolLimits& limits) {
  const int c = scheme.coin_length(x.size());
  if (c > limits.max_coin_bits || c > 62) {
    throw BudgetExceeded(scheme.name() + " needs " + std::to_string(c) + " coin bits for |x|=" +
                         std::to_string(x.size()) + "; budget is " + std::to_string(limits.max_coin_bits) +
                         " (raise --budget-coins)");
  }
  KeyEnumeration e;
  e.x = x;
  e.coin_length = c;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << c); ++i) {
    if (auto k = scheme.keygen(x, BitString::from_index(i, static_cast<std::size_t>(c)))) {
      ++e.success_count;
      ++e.keys[*k];
    } else {
      ++e.fail_count;
    }
  }
  return e;
}

BinaryDistribution decrypted_distribution(const Scheme& scheme, const BitString& x, const BitString& key,
                                          const ResponseDistribution& response) {
  RealSqrt2 p1;
  for (const auto& [b, p] : response) {
    if (scheme.decrypt(x, key, b) == 1) p1 += p.value();
  }
  return BinaryDistribution::from_p1(ExactProbability(p1));
}

BinaryDistribution exact_output_distribution(const Scheme& scheme, const ServerModel& server, const BitString& x,
                                             const BitString& key, const ProtocolLimits& limits) {
  if (!enumerate_keys(scheme, x, limits).keys.contains(key)) {
    throw std::invalid_argument("key '" + key.to_string() + "' is not produced by any coin string for x='" +
                                x.to_string() + "'");
  }
  const auto response = server.respond(scheme.encrypt(x, key));
  validate_response(response, server.response_length());
  return decrypted_distribution(scheme, x, key, response);
}

CorrectnessReport check_correctness(const Scheme& scheme, const ServerModel& server, const CircuitFamily& family,
                                    const std::vector<BitString>& xs, const Rational& epsilon,
                                    const ProtocolLimits& limits) {
  CorrectnessReport report;
  report.epsilon = epsilon;
  std::vector<BitString> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::map<std::string, BinaryDistribution> ideal_cache;
  std::map<BitString, ResponseDistribution> response_cache;
  for (const auto& x : sorted) {
    const Circuit circuit = family.circuit(x);
    const std::string ck = serialize_circuit(circuit);
    auto it = ideal_cache.find(ck);
    if (it == ideal_cache.end()) it = ideal_cache.emplace(ck, dqc1_distribution(circuit, limits.simulation)).first;
    const BinaryDistribution& ideal = it->second;

    const auto keys = enumerate_keys(scheme, x, limits);
    report.max_fail_probability = std::max(report.max_fail_probability, keys.fail_probability());
    for (const auto& [key, count] : keys.keys) {
      const BitString a = scheme.encrypt(x, key);
      auto rit = response_cache.find(a);
      if (rit == response_cache.end()) {
        auto r = server.respond(a);
        validate_response(r, server.response_length());
        rit = response_cache.emplace(a, std::move(r)).first;
      }
      CorrectnessEntry entry{x, key,
                             check_multiplicative_error(ideal, decrypted_distribution(scheme, x, key, rit->second),
                                                        epsilon)};
      if (!entry.check.pass) report.violations.push_back(entry);
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

EncryptionSupport encryption_support(const Scheme& scheme, const BitString& x, const ProtocolLimits& limits) {
  const auto keys = enumerate_keys(scheme, x, limits);
  if (keys.success_count == 0) throw std::runtime_error("key generation never succeeds for x='" + x.to_string() + "'");
  std::map<BitString, std::uint64_t> counts;
  for (const auto& [key, n] : keys.keys) counts[scheme.encrypt(x, key)] += n;
  EncryptionSupport out;
  out.x = x;
  out.fail_probability = keys.fail_probability();
  for (const auto& [a, n] : counts) {
    out.support.emplace(a, ExactProbability(Rational(Integer(n), Integer(keys.success_count))));
  }
  return out;
}

BlindnessReport check_blindness(const Scheme& scheme, const BitString& x1, const BitString& x2,
                                const ProtocolLimits& limits) {
  if (x1.size() != x2.size()) {
    throw std::invalid_argument("blindness compares equal-length parameters; got " + std::to_string(x1.size()) +
                                " and " + std::to_string(x2.size()));
  }
  const auto s1 = encryption_support(scheme, x1, limits).support;
  const auto s2 = encryption_support(scheme, x2, limits).support;
  BlindnessReport r{x1, x2, {}, {}};
  for (const auto& [a, p] : s1) {
    if (!s2.contains(a)) r.only_x1.push_back(a);
  }
  for (const auto& [a, p] : s2) {
    if (!s1.contains(a)) r.only_x2.push_back(a);
  }
  return r;
}

std::vector<BlindnessReport> check_blindness_pairs(const Scheme& scheme, const std::vector<BitString>& xs,
                                                   const ProtocolLimits& limits) {
  std::vector<BitString> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<BitString, std::map<BitString, ExactProbability>> supports;
  for (const auto& x : sorted) supports.emplace(x, encryption_support(scheme, x, limits).support);

  std::vector<BlindnessReport> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[i].size() != sorted[j].size()) continue;
      const auto& s1 = supports.at(sorted[i]);
      const auto& s2 = supports.at(sorted[j]);
      BlindnessReport r{sorted[i], sorted[j], {}, {}};
      for (const auto& [a, p] : s1) {
        if (!s2.contains(a)) r.only_x1.push_back(a);
      }
      for (const auto& [a, p] : s2) {
        if (!s1.contains(a)) r.only_x2.push_back(a);
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace blindlab
