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
 * One-round delegation: a client scheme (key generation, encryption,
 * decryption driven by explicit coin strings), a server model answering each
 * ciphertext with an exact response distribution, and exhaustive checkers
 * for multiplicative-error correctness and support-equality blindness.
 */

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "blindlab/bitstring.hpp"
#include "blindlab/circuit.hpp"
#include "blindlab/distribution.hpp"
#include "blindlab/ring.hpp"

namespace blindlab {

/// Exact distribution over response strings, sorted by string.
using ResponseDistribution = std::vector<std::pair<BitString, ExactProbability>>;

class MalformedResponse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws MalformedResponse unless every string has `length` bits, strings are distinct and the mass is exactly one.
void validate_response(const ResponseDistribution& d, std::size_t length);

struct SchemeManifest {
  std::string name;
  /// coin_length(s) = coins_per_bit * s + coin_offset.
  int coins_per_bit = 0;
  int coin_offset = 0;
  std::size_t response_length = 1;
  std::string default_family;
  std::string description;
};

/// Client algorithms. Implementations must be deterministic in their arguments.
class Scheme {
 public:
  virtual ~Scheme() = default;

  virtual SchemeManifest manifest() const = 0;
  std::string name() const { return manifest().name; }
  int coin_length(std::size_t s) const {
    const auto m = manifest();
    return m.coins_per_bit * static_cast<int>(s) + m.coin_offset;
  }

  /// nullopt is the failure flag; the client reruns key generation on it.
  virtual std::optional<BitString> keygen(const BitString& x, const BitString& coins) const = 0;
  virtual BitString encrypt(const BitString& x, const BitString& key) const = 0;
  virtual int decrypt(const BitString& x, const BitString& key, const BitString& response) const = 0;
};

/// Built-in schemes: leaky, constant, otp, otp-parity, flagged-otp-parity.
std::unique_ptr<Scheme> make_scheme(const std::string& name);
std::vector<std::string> scheme_names();

/// Maps a parameter string to the circuit whose one-clean-qubit distribution is the target.
class CircuitFamily {
 public:
  virtual ~CircuitFamily() = default;
  virtual std::string name() const = 0;
  virtual Circuit circuit(const BitString& x) const = 0;
  virtual std::vector<BitString> default_parameters() const = 0;
};

/// Built-in families: basic10, parity-flip, parity-flip-t, degenerate.
std::shared_ptr<const CircuitFamily> make_family(const std::string& name);
std::vector<std::string> family_names();

class ServerModel {
 public:
  virtual ~ServerModel() = default;
  virtual std::string name() const = 0;
  virtual std::size_t response_length() const = 0;
  bool single_bit() const { return response_length() == 1; }
  virtual ResponseDistribution respond(const BitString& a) const = 0;
};

/**
 * Server specs:
 *   honest            one-clean-qubit distribution of family(a), one bit
 *   honest-padded:R   same first bit followed by R-1 uniform bits
 *   fixed:Q           answers 1 with probability Q (a rational) regardless of a
 * Throws std::invalid_argument on an unknown spec.
 */
std::unique_ptr<ServerModel> make_server(const std::string& spec, std::shared_ptr<const CircuitFamily> family,
                                         const SimulationLimits& limits = {});

struct ProtocolLimits {
  int max_coin_bits = 20;
  SimulationLimits simulation;
};

struct Transcript {
  BitString x, coins, key, a, b;
  int tau = 0;
  /// Key-generation runs until the success flag, including the successful one.
  int attempts = 1;
};

/// Draws `n` uniform bits.
BitString random_bits(std::mt19937_64& rng, std::size_t n);

/// One protocol round. Throws MalformedResponse, or std::runtime_error after `max_attempts` key failures.
Transcript run_protocol(const Scheme& scheme, const ServerModel& server, const BitString& x, std::mt19937_64& rng,
                        int max_attempts = 256);

/// Every coin string for x pushed through key generation.
struct KeyEnumeration {
  BitString x;
  int coin_length = 0;
  std::uint64_t success_count = 0;
  std::uint64_t fail_count = 0;
  /// Distinct successful keys with the number of coin strings producing each.
  std::map<BitString, std::uint64_t> keys;

  Rational fail_probability() const;
};

/// Throws BudgetExceeded when coin_length(|x|) exceeds limits.max_coin_bits.
KeyEnumeration enumerate_keys(const Scheme& scheme, const BitString& x, const ProtocolLimits& limits = {});

/// Pr(τ = 1) = Σ_b q(b) [D(x,k,b) = 1] for a given response distribution.
BinaryDistribution decrypted_distribution(const Scheme& scheme, const BitString& x, const BitString& key,
                                          const ResponseDistribution& response);

/// Throws std::invalid_argument if no coin string yields `key` for x.
BinaryDistribution exact_output_distribution(const Scheme& scheme, const ServerModel& server, const BitString& x,
                                             const BitString& key, const ProtocolLimits& limits = {});

struct CorrectnessEntry {
  BitString x, key;
  MultiplicativeErrorReport check;
};

struct CorrectnessReport {
  Rational epsilon;
  /// One entry per (x, reachable key), sorted by x then key.
  std::vector<CorrectnessEntry> entries;
  std::vector<CorrectnessEntry> violations;
  /// Largest key-generation failure probability seen over xs.
  Rational max_fail_probability;
  bool pass() const { return violations.empty(); }
};

CorrectnessReport check_correctness(const Scheme& scheme, const ServerModel& server, const CircuitFamily& family,
                                    const std::vector<BitString>& xs, const Rational& epsilon,
                                    const ProtocolLimits& limits = {});

struct EncryptionSupport {
  BitString x;
  /// a ↦ P_x(a) > 0, conditioned on key-generation success.
  std::map<BitString, ExactProbability> support;
  Rational fail_probability;
};

EncryptionSupport encryption_support(const Scheme& scheme, const BitString& x, const ProtocolLimits& limits = {});

struct BlindnessReport {
  BitString x1, x2;
  std::vector<BitString> only_x1, only_x2;
  bool pass() const { return only_x1.empty() && only_x2.empty(); }
};

/// Support equality. Throws std::invalid_argument if |x1| ≠ |x2|.
BlindnessReport check_blindness(const Scheme& scheme, const BitString& x1, const BitString& x2,
                                const ProtocolLimits& limits = {});

/// check_blindness over every unordered pair of equal-length entries of xs.
std::vector<BlindnessReport> check_blindness_pairs(const Scheme& scheme, const std::vector<BitString>& xs,
                                                   const ProtocolLimits& limits = {});

}  // namespace blindlab
