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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "blindlab/extract.hpp"

namespace blindlab {
namespace {

BitString bits(const char* s) { return BitString::from_string(s); }

struct Setup {
  std::unique_ptr<Scheme> scheme;
  std::shared_ptr<const CircuitFamily> family;
  std::unique_ptr<ServerModel> server;
};

Setup setup(const std::string& scheme, const std::string& server = "honest") {
  Setup s;
  s.scheme = make_scheme(scheme);
  s.family = make_family(s.scheme->manifest().default_family);
  s.server = make_server(server, s.family);
  return s;
}

/// Acceptance probability straight from the coin strings: draw coins until
/// key generation succeeds, require the advice ciphertext, then decrypt.
double brute_force_p_acc(const Scheme& scheme, const Advice& adv, const BitString& x) {
  const int c = scheme.coin_length(x.size());
  double ok = 0, accept = 0;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << c); ++i) {
    const auto k = scheme.keygen(x, BitString::from_index(i, static_cast<std::size_t>(c)));
    if (!k) continue;
    ok += 1;
    if (scheme.encrypt(x, *k) != adv.a) continue;
    for (const auto& [b, p] : adv.response) {
      if (scheme.decrypt(x, *k, b) == 1) accept += p.to_double();
    }
  }
  return accept / ok;
}

TEST(ResponseMode, ParseAndPrint) {
  EXPECT_EQ(parse_response_mode("single"), ResponseMode::single);
  EXPECT_EQ(parse_response_mode("poly"), ResponseMode::poly);
  EXPECT_EQ(to_string(ResponseMode::poly), "poly");
  EXPECT_THROW(parse_response_mode("many"), std::invalid_argument);
}

TEST(MakeAdvice, EncryptsAllOnes) {
  auto s = setup("otp-parity");
  std::mt19937_64 rng(61);
  const Advice adv = make_advice(*s.scheme, *s.server, 3, ResponseMode::single, rng);
  EXPECT_EQ(adv.a, bits("111") ^ adv.key);
  EXPECT_EQ(adv.response.size(), 2u);
  // parity-flip answers the ciphertext parity with certainty.
  EXPECT_EQ(adv.q0().is_zero(), adv.a.parity());
}

TEST(MakeAdvice, SingleModeNeedsOneBitServer) {
  auto s = setup("otp-parity", "honest-padded:3");
  std::mt19937_64 rng(62);
  EXPECT_THROW(make_advice(*s.scheme, *s.server, 3, ResponseMode::single, rng), std::invalid_argument);
  const Advice adv = make_advice(*s.scheme, *s.server, 3, ResponseMode::poly, rng);
  EXPECT_EQ(adv.response.size(), 8u);
}

TEST(ExtractDecide, LeakyAcceptsOnlyAllOnes) {
  auto s = setup("leaky");
  std::mt19937_64 rng(63);
  const Advice adv = make_advice(*s.scheme, *s.server, 4, ResponseMode::single, rng);
  for (std::uint64_t i = 0; i < 16; ++i) {
    const BitString x = BitString::from_index(i, 4);
    const auto o = extract_decide(*s.scheme, adv, x);
    // 1111 selects table row 5 (H S H), which answers 1 with probability 1/2.
    EXPECT_EQ(o.p_acc, ExactProbability(Rational(i == 15 ? 1 : 0, 2)));
    EXPECT_EQ(o.accept, i == 15);
  }
}

TEST(ExtractDecide, ConstantSeesEveryParameter) {
  auto s = setup("constant");
  std::mt19937_64 rng(64);
  const Advice adv = make_advice(*s.scheme, *s.server, 3, ResponseMode::single, rng);
  for (std::uint64_t i = 0; i < 8; ++i) {
    const auto o = extract_decide(*s.scheme, adv, BitString::from_index(i, 3));
    EXPECT_EQ(o.eta, ExactProbability::one());
    EXPECT_EQ(o.p_acc, ExactProbability(Rational(3, 32)));
  }
}

TEST(ExtractDecide, OtpParityDecidesParity) {
  auto s = setup("otp-parity");
  std::mt19937_64 rng(65);
  const Advice adv = make_advice(*s.scheme, *s.server, 3, ResponseMode::single, rng);
  for (std::uint64_t i = 0; i < 8; ++i) {
    const BitString x = BitString::from_index(i, 3);
    const auto o = extract_decide(*s.scheme, adv, x);
    EXPECT_EQ(o.eta, ExactProbability(Rational(1, 8)));
    EXPECT_EQ(o.accept, x.parity());
    EXPECT_EQ(o.p_acc, ExactProbability(Rational(x.parity() ? 1 : 0, 8)));
  }
}

TEST(ExtractDecide, FlaggedMatchesClosedForm) {
  auto s = setup("flagged-otp-parity");
  std::mt19937_64 rng(66);
  const Advice adv = make_advice(*s.scheme, *s.server, 3, ResponseMode::single, rng);
  for (std::uint64_t i = 0; i < 8; ++i) {
    const BitString x = BitString::from_index(i, 3);
    const auto o = extract_decide(*s.scheme, adv, x);
    EXPECT_EQ(o.p_acc.value(), RealSqrt2(2, x.parity() ? 1 : -1, 32));
  }
}

TEST(ExtractDecide, AgreesWithCoinBruteForce) {
  std::mt19937_64 rng(67);
  for (const auto& name : scheme_names()) {
    auto s = setup(name);
    for (std::size_t len = 1; len <= 4; ++len) {
      const Advice adv = make_advice(*s.scheme, *s.server, len, ResponseMode::single, rng);
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << len); ++i) {
        const BitString x = BitString::from_index(i, len);
        const auto o = extract_decide(*s.scheme, adv, x);
        EXPECT_NEAR(o.p_acc.to_double(), brute_force_p_acc(*s.scheme, adv, x), 1e-12) << name;
        EXPECT_EQ(o.p_acc, o.eta * o.pr_xi_1);
        EXPECT_EQ(o.accept, !o.p_acc.is_zero());
      }
    }
  }
}

TEST(ExtractDecide, LengthMismatchThrows) {
  auto s = setup("otp-parity");
  std::mt19937_64 rng(68);
  const Advice adv = make_advice(*s.scheme, *s.server, 3, ResponseMode::single, rng);
  EXPECT_THROW(extract_decide(*s.scheme, adv, bits("0101")), std::invalid_argument);
}

TEST(ExtractDecide, SingleAndPolyModesCoincide) {
  for (const auto& name : {"otp-parity", "flagged-otp-parity", "constant"}) {
    auto single = setup(name);
    auto poly = setup(name, "honest-padded:3");
    std::mt19937_64 r1(69), r2(69);
    const Advice a1 = make_advice(*single.scheme, *single.server, 3, ResponseMode::single, r1);
    const Advice a2 = make_advice(*poly.scheme, *poly.server, 3, ResponseMode::poly, r2);
    ASSERT_EQ(a1.a, a2.a);
    for (std::uint64_t i = 0; i < 8; ++i) {
      const BitString x = BitString::from_index(i, 3);
      EXPECT_EQ(extract_decide(*single.scheme, a1, x).p_acc, extract_decide(*poly.scheme, a2, x).p_acc) << name;
    }
  }
}

TEST(ExtractionBounds, Examples) {
  ExtractionOutcome o;
  o.eta = ExactProbability(Rational(1, 8));
  o.p_acc = ExactProbability(Rational(1, 8));
  EXPECT_TRUE(check_extraction_bounds(o, ExactProbability::one(), 0).ok);
  o.p_acc = ExactProbability(Rational(1, 16));
  EXPECT_FALSE(check_extraction_bounds(o, ExactProbability::one(), Rational(1, 4)).ok);
  EXPECT_TRUE(check_extraction_bounds(o, ExactProbability::one(), Rational(1, 2)).ok);
}

TEST(ExtractRunOnce, FrequencyWithinFiveSigma) {
  auto s = setup("constant");
  std::mt19937_64 rng(70);
  const Advice adv = make_advice(*s.scheme, *s.server, 3, ResponseMode::single, rng);
  const int runs = 100000;
  int hits = 0;
  for (int i = 0; i < runs; ++i) hits += extract_run_once(*s.scheme, adv, bits("010"), rng);
  const double p = 3.0 / 32;
  EXPECT_LT(std::abs(hits / double(runs) - p), 5 * std::sqrt(p * (1 - p) / runs));
}

TEST(TruthTable, ParseAndPrint) {
  const auto t = TruthTable::parse("01*1");
  EXPECT_EQ(t.s, 2u);
  EXPECT_EQ(t.at(bits("10")), TruthValue::undefined);
  EXPECT_EQ(t.to_string(), "01*1");
  EXPECT_THROW(TruthTable::parse("011"), std::invalid_argument);
  EXPECT_THROW(TruthTable::parse("01x1"), std::invalid_argument);
  EXPECT_THROW(TruthTable::parse(""), std::invalid_argument);
  EXPECT_EQ(TruthTable::parity(3).to_string(), "01101001");
  EXPECT_EQ(TruthTable::constant(1, TruthValue::one).to_string(), "11");
}

TEST(AllDemo, Examples) {
  const auto f = TruthTable::parse("01101001");
  const auto yes = all_demo(f, bits("001"));
  EXPECT_TRUE(yes.accept);
  EXPECT_EQ(yes.p_acc, ExactProbability(Rational(1, 8)));
  EXPECT_FALSE(all_demo(f, bits("000")).accept);
  EXPECT_FALSE(all_demo(TruthTable::parse("**"), bits("1")).accept);
  EXPECT_THROW(all_demo(f, bits("01")), std::invalid_argument);
  EXPECT_THROW(all_demo(TruthTable::constant(5, TruthValue::one), BitString::zeros(5), 4), BudgetExceeded);
}

TEST(AllDemo, ExhaustiveSmallTables) {
  std::mt19937_64 rng(71);
  for (std::size_t s = 1; s <= 10; ++s) {
    const auto f = TruthTable::random(rng, s);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << s); ++i) {
      const BitString x = BitString::from_index(i, s);
      const auto o = all_demo(f, x);
      EXPECT_EQ(o.accept, f.values[i] == TruthValue::one);
      EXPECT_EQ(o.p_acc.value(), o.accept ? RealSqrt2(1).shifted_down(static_cast<unsigned>(s)) : RealSqrt2());
    }
  }
}

TEST(AllDemo, RunOnceFrequency) {
  std::mt19937_64 rng(72);
  const auto f = TruthTable::constant(2, TruthValue::one);
  const int runs = 100000;
  int hits = 0;
  for (int i = 0; i < runs; ++i) hits += all_demo_run_once(f, bits("10"), rng);
  EXPECT_LT(std::abs(hits / double(runs) - 0.25), 5 * std::sqrt(0.25 * 0.75 / runs));
  for (int i = 0; i < 1000; ++i) EXPECT_FALSE(all_demo_run_once(TruthTable::parse("1011"), bits("01"), rng));
}

}  // namespace
}  // namespace blindlab
