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
 * Turning a blind, correct delegation scheme into a nondeterministic
 * decider with length-only advice: the advice fixes one ciphertext for the
 * all-ones parameter of each length plus the server's answer distribution on
 * it; deciding x means replaying the client with x against that transcript.
 */

#pragma once

#include <random>
#include <vector>

#include "blindlab/protocol.hpp"

namespace blindlab {

enum class ResponseMode { single, poly };

ResponseMode parse_response_mode(const std::string& text);
std::string to_string(ResponseMode mode);

struct Advice {
  std::size_t s = 0;
  ResponseMode mode = ResponseMode::single;
  /// The replayable key draw for 1^s.
  BitString coins, key, a;
  int attempts = 1;
  /// Single mode keeps only q(0); it is expanded here to the two-point distribution.
  ResponseDistribution response;

  const ExactProbability& q0() const;
};

/**
 * Samples a key for 1^s and records the server's exact answer on its
 * ciphertext. Single mode requires a one-bit server.
 */
Advice make_advice(const Scheme& scheme, const ServerModel& server, std::size_t s, ResponseMode mode,
                   std::mt19937_64& rng, int max_attempts = 256);

struct ExtractionOutcome {
  /// Pr[E(x, k) = a] over successful keys for x.
  ExactProbability eta;
  /// Pr[D(x, k, b) = 1] for k conditioned on the match and b drawn from the advice; zero when eta is zero.
  ExactProbability pr_xi_1;
  ExactProbability p_acc;
  bool accept = false;
  std::uint64_t matching_coins = 0;
  std::uint64_t successful_coins = 0;
};

/// Exact acceptance probability by coin enumeration. Throws std::invalid_argument if |x| ≠ advice.s.
ExtractionOutcome extract_decide(const Scheme& scheme, const Advice& advice, const BitString& x,
                                 const ProtocolLimits& limits = {});

/// One literal run of the sampled decider.
bool extract_run_once(const Scheme& scheme, const Advice& advice, const BitString& x, std::mt19937_64& rng,
                      int max_attempts = 256);

struct ExtractionBounds {
  RealSqrt2 lower, upper;
  bool ok = false;
};

/// η(1-ε)p1 ≤ p_acc ≤ η(1+ε)p1, exactly.
ExtractionBounds check_extraction_bounds(const ExtractionOutcome& outcome, const ExactProbability& p1,
                                         const Rational& epsilon);

enum class TruthValue { zero, one, undefined };

/// f on {0,1}^s with values in {0, 1, ⊥}, indexed by the big-endian value of x.
struct TruthTable {
  std::size_t s = 0;
  std::vector<TruthValue> values;

  /// 2^s characters from {0, 1, *}; '*' is undefined. Throws std::invalid_argument otherwise.
  static TruthTable parse(std::string_view text);
  static TruthTable random(std::mt19937_64& rng, std::size_t s, bool allow_undefined = true);
  static TruthTable parity(std::size_t s);
  static TruthTable constant(std::size_t s, TruthValue v);

  TruthValue at(const BitString& x) const { return values.at(x.to_index()); }
  std::string to_string() const;
};

struct AllDemoOutcome {
  BitString x;
  TruthValue fx = TruthValue::undefined;
  ExactProbability p_acc;
  bool accept = false;
};

/**
 * Exact run of the advice-distribution decider: the advice is a pair (x', f(x'))
 * with x' uniform; accept when x' = x and the recorded value is 1.
 * Throws BudgetExceeded when s > max_s.
 */
AllDemoOutcome all_demo(const TruthTable& f, const BitString& x, std::size_t max_s = 16);

/// One sampled run of the same decider.
bool all_demo_run_once(const TruthTable& f, const BitString& x, std::mt19937_64& rng);

}  // namespace blindlab
