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

#include "blindlab/ring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace blindlab {

namespace mp = boost::multiprecision;

namespace {

bool is_integer_token(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Integer parse_integer(const std::string& raw) {
  const std::string s = trim(raw);
  if (!is_integer_token(s)) throw std::invalid_argument("not an integer: '" + raw + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  const Integer num = parse_integer(s.substr(0, slash));
  const Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  const Integer num = mp::numerator(r);
  const Integer den = mp::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// --- RealSqrt2 ---

RealSqrt2::RealSqrt2(Integer u, Integer v, Integer d) : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {
  if (d_ == 0) throw std::domain_error("RealSqrt2: zero denominator");
  normalize();
}

RealSqrt2::RealSqrt2(const Rational& r) : u_(mp::numerator(r)), v_(0), d_(mp::denominator(r)) { normalize(); }

RealSqrt2 RealSqrt2::dyadic(Integer u, Integer v, unsigned e) {
  return RealSqrt2(std::move(u), std::move(v), Integer(1) << e);
}

void RealSqrt2::normalize() {
  if (d_ < 0) {
    u_ = -u_;
    v_ = -v_;
    d_ = -d_;
  }
  if (u_ == 0 && v_ == 0) {
    d_ = 1;
    return;
  }
  Integer g = mp::gcd(mp::gcd(mp::abs(u_), mp::abs(v_)), d_);
  if (g != 1) {
    u_ /= g;
    v_ /= g;
    d_ /= g;
  }
}

unsigned RealSqrt2::two_exponent() const { return static_cast<unsigned>(mp::lsb(d_)); }

Integer RealSqrt2::odd_denominator() const { return d_ >> two_exponent(); }

int RealSqrt2::sign() const {
  const int su = u_.sign();
  const int sv = v_.sign();
  if (su >= 0 && sv >= 0) return (su > 0 || sv > 0) ? 1 : 0;
  if (su <= 0 && sv <= 0) return -1;
  // Opposite signs: compare u² with 2v²; equality is impossible since √2 is irrational.
  const Integer lhs = u_ * u_;
  const Integer rhs = 2 * v_ * v_;
  if (su > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

RealSqrt2 operator+(const RealSqrt2& a, const RealSqrt2& b) {
  if (a.d_ == b.d_) return RealSqrt2(a.u_ + b.u_, a.v_ + b.v_, a.d_);
  return RealSqrt2(a.u_ * b.d_ + b.u_ * a.d_, a.v_ * b.d_ + b.v_ * a.d_, a.d_ * b.d_);
}

RealSqrt2 operator-(const RealSqrt2& a, const RealSqrt2& b) { return a + (-b); }

RealSqrt2 operator*(const RealSqrt2& a, const RealSqrt2& b) {
  return RealSqrt2(a.u_ * b.u_ + 2 * a.v_ * b.v_, a.u_ * b.v_ + a.v_ * b.u_, a.d_ * b.d_);
}

RealSqrt2 operator/(const RealSqrt2& a, const RealSqrt2& b) {
  if (b.is_zero()) throw std::domain_error("RealSqrt2: division by zero");
  const Integer n = b.u_ * b.u_ - 2 * b.v_ * b.v_;
  const RealSqrt2 inverse(b.d_ * b.u_, -(b.d_ * b.v_), n);
  return a * inverse;
}

RealSqrt2 RealSqrt2::shifted_down(unsigned k) const { return RealSqrt2(u_, v_, d_ << k); }

Integer RealSqrt2::floor_scaled(unsigned bits) const {
  const Integer x = u_ << bits;
  Integer t = 0;
  if (v_ != 0) {
    const Integer radicand = (2 * v_ * v_) << (2 * bits);
    const Integer root = mp::sqrt(radicand);
    // radicand is never a perfect square for v != 0.
    t = v_ > 0 ? root : Integer(-(root + 1));
  }
  return floor_div(x + t, d_);
}

double RealSqrt2::to_double() const {
  using Float = mp::cpp_bin_float_50;
  const Float value = (Float(u_) + Float(v_) * mp::sqrt(Float(2))) / Float(d_);
  return value.convert_to<double>();
}

std::string RealSqrt2::to_string() const {
  std::ostringstream os;
  os << "(" << u_.str() << ", " << v_.str() << ", " << two_exponent();
  const Integer m = odd_denominator();
  if (m != 1) os << ", " << m.str();
  os << ")";
  return os.str();
}

RealSqrt2 RealSqrt2::parse(const std::string& text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("expected '(u, v, e)': '" + text + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3 && parts.size() != 4)
    throw std::invalid_argument("expected 3 or 4 fields: '" + text + "'");
  const Integer u = parse_integer(parts[0]);
  const Integer v = parse_integer(parts[1]);
  const Integer e = parse_integer(parts[2]);
  if (e < 0 || e > 1 << 20) throw std::invalid_argument("bad exponent: '" + text + "'");
  Integer d = Integer(1) << e.convert_to<unsigned>();
  if (parts.size() == 4) {
    const Integer m = parse_integer(parts[3]);
    if (m <= 0) throw std::invalid_argument("bad odd denominator: '" + text + "'");
    d *= m;
  }
  return RealSqrt2(u, v, d);
}

// --- ExactAmplitude ---

ExactAmplitude::ExactAmplitude(ZOmega<Integer> numerator, unsigned half_exponent)
    : num_(std::move(numerator)), e_(half_exponent) {
  if (num_.is_zero()) {
    e_ = 0;
    return;
  }
  while (e_ >= 2 && num_.all_even()) {
    num_ = num_.halved();
    e_ -= 2;
  }
  while (e_ >= 1) {
    auto t = num_.times_sqrt2();
    if (!t.all_even()) break;
    num_ = t.halved();
    --e_;
  }
}

RealSqrt2 ExactAmplitude::norm() const {
  auto [a, b] = num_.norm_squared();
  return RealSqrt2::dyadic(std::move(a), std::move(b), e_);
}

ExactAmplitude ExactAmplitude::times_omega(int k) const { return ExactAmplitude(num_.times_omega(k), e_); }

ExactAmplitude ExactAmplitude::scaled_sqrt2(int k) const {
  if (k <= 0) return ExactAmplitude(num_, e_ + static_cast<unsigned>(-k));
  auto num = num_;
  int e = static_cast<int>(e_) - k;
  for (; e < 0; ++e) num = num.times_sqrt2();
  return ExactAmplitude(std::move(num), static_cast<unsigned>(e));
}

std::complex<double> ExactAmplitude::to_complex() const {
  return num_.to_complex() * std::pow(0.70710678118654752440, static_cast<double>(e_));
}

std::string ExactAmplitude::to_string() const {
  std::ostringstream os;
  os << "(" << num_[0].str() << ", " << num_[1].str() << ", " << num_[2].str() << ", " << num_[3].str()
     << ")/sqrt2^" << e_;
  return os.str();
}

// --- ExactProbability ---

ExactProbability::ExactProbability(RealSqrt2 value) : value_(std::move(value)) {
  if (value_.sign() < 0 || (RealSqrt2(1) - value_).sign() < 0)
    throw std::domain_error("probability outside [0, 1]: " + value_.to_string());
}

}  // namespace blindlab
