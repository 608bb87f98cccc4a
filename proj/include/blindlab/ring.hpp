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
 * Exact scalar types for Clifford+T style amplitudes.
 *
 * Amplitudes live in Z[ω, 1/√2] with ω = e^{iπ/4}. Probabilities are real
 * elements of Q(√2). Both admit exact zero and sign tests, which is what
 * makes "probability > 0" decidable without thresholds.
 */

#pragma once

#include <array>
#include <concepts>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace blindlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" into an exact rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

inline int mod8(int k) { return ((k % 8) + 8) % 8; }

/**
 * Element c0 + c1·ω + c2·ω² + c3·ω³ of the cyclotomic integers Z[ω].
 *
 * Templated on the coefficient type so that the simulation kernels can run
 * on machine integers when the gate count guarantees no overflow, and on
 * arbitrary-precision integers otherwise.
 */
template <class Int>
class ZOmega {
 public:
  using Scalar = Int;

  ZOmega() : c_{Int(0), Int(0), Int(0), Int(0)} {}
  ZOmega(Int c0, Int c1 = Int(0), Int c2 = Int(0), Int c3 = Int(0))
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  /// ω^k for any integer k.
  static ZOmega omega_power(int k) {
    k = mod8(k);
    ZOmega r;
    r.c_[k & 3] = (k & 4) ? Int(-1) : Int(1);
    return r;
  }

  static ZOmega sqrt2() { return ZOmega(Int(0), Int(1), Int(0), Int(-1)); }

  const Int& operator[](int j) const { return c_[j]; }
  Int& operator[](int j) { return c_[j]; }

  bool is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
  }

  bool all_even() const {
    for (const auto& c : c_) {
      if (c % 2 != 0) return false;
    }
    return true;
  }

  ZOmega& operator+=(const ZOmega& o) {
    for (int j = 0; j < 4; ++j) c_[j] += o.c_[j];
    return *this;
  }
  ZOmega& operator-=(const ZOmega& o) {
    for (int j = 0; j < 4; ++j) c_[j] -= o.c_[j];
    return *this;
  }
  ZOmega operator-() const { return ZOmega(-c_[0], -c_[1], -c_[2], -c_[3]); }

  friend ZOmega operator+(ZOmega a, const ZOmega& b) { return a += b; }
  friend ZOmega operator-(ZOmega a, const ZOmega& b) { return a -= b; }

  // ω^4 = -1 folds the convolution back onto four coefficients.
  friend ZOmega operator*(const ZOmega& a, const ZOmega& b) {
    ZOmega r;
    for (int i = 0; i < 4; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < 4; ++j) {
        const int k = i + j;
        if (k < 4)
          r.c_[k] += a.c_[i] * b.c_[j];
        else
          r.c_[k - 4] -= a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  /// In-place multiplication by ω^k.
  void rotate(int k) {
    k = mod8(k);
    if (k == 0) return;
    if (k == 4) {
      for (auto& c : c_) c = -c;
      return;
    }
    std::array<Int, 4> out;
    for (int i = 0; i < 4; ++i) {
      const int t = i + k;
      out[t % 4] = ((t / 4) % 2 == 0) ? std::move(c_[i]) : Int(-c_[i]);
    }
    c_ = std::move(out);
  }

  ZOmega times_omega(int k) const {
    ZOmega r = *this;
    r.rotate(k);
    return r;
  }

  /// Complex conjugate: ω ↦ ω^7 = -ω³.
  ZOmega conj() const { return ZOmega(c_[0], -c_[3], -c_[2], -c_[1]); }

  /// Multiplication by √2 = ω - ω³.
  ZOmega times_sqrt2() const {
    return ZOmega(c_[1] - c_[3], c_[0] + c_[2], c_[1] + c_[3], c_[2] - c_[0]);
  }

  /// Exact division by 2; requires all_even().
  ZOmega halved() const {
    return ZOmega(c_[0] / 2, c_[1] / 2, c_[2] / 2, c_[3] / 2);
  }

  /// |z|² = a + b√2, returned as (a, b).
  std::pair<Int, Int> norm_squared() const {
    const auto& [c0, c1, c2, c3] = c_;
    return {c0 * c0 + c1 * c1 + c2 * c2 + c3 * c3,
            c0 * c1 + c1 * c2 + c2 * c3 - c0 * c3};
  }

  template <class To>
  ZOmega<To> cast() const {
    return ZOmega<To>(To(c_[0]), To(c_[1]), To(c_[2]), To(c_[3]));
  }

  std::complex<double> to_complex() const {
    constexpr double h = 0.70710678118654752440;
    const double c0 = static_cast<double>(c_[0]);
    const double c1 = static_cast<double>(c_[1]);
    const double c2 = static_cast<double>(c_[2]);
    const double c3 = static_cast<double>(c_[3]);
    return {c0 + h * (c1 - c3), c2 + h * (c1 + c3)};
  }

  friend bool operator==(const ZOmega& a, const ZOmega& b) { return a.c_ == b.c_; }

 private:
  std::array<Int, 4> c_;
};

/**
 * Exact element (u + v√2)/d of the real field Q(√2), kept in lowest terms
 * (d > 0, gcd(u, v, d) = 1, zero is (0, 0, 1)).
 */
class RealSqrt2 {
 public:
  RealSqrt2() : u_(0), v_(0), d_(1) {}
  RealSqrt2(Integer u, Integer v = 0, Integer d = 1);
  template <std::integral T>
  RealSqrt2(T u) : RealSqrt2(Integer(u)) {}
  explicit RealSqrt2(const Rational& r);
  static RealSqrt2 dyadic(Integer u, Integer v, unsigned e);

  const Integer& u() const { return u_; }
  const Integer& v() const { return v_; }
  const Integer& denominator() const { return d_; }

  /// Power of two in the denominator, d = 2^e · m with m odd.
  unsigned two_exponent() const;
  Integer odd_denominator() const;

  bool is_zero() const { return u_ == 0 && v_ == 0; }
  int sign() const;

  RealSqrt2 operator-() const { return RealSqrt2(-u_, -v_, d_); }
  RealSqrt2 abs() const { return sign() < 0 ? -*this : *this; }

  friend RealSqrt2 operator+(const RealSqrt2& a, const RealSqrt2& b);
  friend RealSqrt2 operator-(const RealSqrt2& a, const RealSqrt2& b);
  friend RealSqrt2 operator*(const RealSqrt2& a, const RealSqrt2& b);
  /// Throws std::domain_error on division by zero.
  friend RealSqrt2 operator/(const RealSqrt2& a, const RealSqrt2& b);

  RealSqrt2& operator+=(const RealSqrt2& o) { return *this = *this + o; }
  RealSqrt2& operator-=(const RealSqrt2& o) { return *this = *this - o; }
  RealSqrt2& operator*=(const RealSqrt2& o) { return *this = *this * o; }

  /// Division by 2^k.
  RealSqrt2 shifted_down(unsigned k) const;

  friend bool operator==(const RealSqrt2& a, const RealSqrt2& b) {
    return a.u_ == b.u_ && a.v_ == b.v_ && a.d_ == b.d_;
  }
  friend bool operator<(const RealSqrt2& a, const RealSqrt2& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const RealSqrt2& a, const RealSqrt2& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const RealSqrt2& a, const RealSqrt2& b) { return b < a; }
  friend bool operator>=(const RealSqrt2& a, const RealSqrt2& b) { return b <= a; }

  /// floor(value · 2^bits), computed exactly.
  Integer floor_scaled(unsigned bits) const;

  double to_double() const;

  /// "(u, v, e)" when d = 2^e, otherwise "(u, v, e, m)" with d = 2^e·m.
  std::string to_string() const;
  static RealSqrt2 parse(const std::string& text);

 private:
  void normalize();

  Integer u_, v_, d_;
};

/// Exact amplitude z/√2^e with z ∈ Z[ω], canonical (z not divisible by √2 unless e = 0).
class ExactAmplitude {
 public:
  ExactAmplitude() = default;
  ExactAmplitude(ZOmega<Integer> numerator, unsigned half_exponent);

  const ZOmega<Integer>& numerator() const { return num_; }
  unsigned half_exponent() const { return e_; }
  bool is_zero() const { return num_.is_zero(); }

  /// |amplitude|².
  RealSqrt2 norm() const;

  /// Multiplication by ω^k, and by √2^k (k may be negative).
  ExactAmplitude times_omega(int k) const;
  ExactAmplitude scaled_sqrt2(int k) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend bool operator==(const ExactAmplitude&, const ExactAmplitude&) = default;

 private:
  ZOmega<Integer> num_;
  unsigned e_ = 0;
};

/// A value of RealSqrt2 constrained to [0, 1].
class ExactProbability {
 public:
  ExactProbability() = default;
  /// Throws std::domain_error when the value lies outside [0, 1].
  explicit ExactProbability(RealSqrt2 value);
  explicit ExactProbability(const Rational& r) : ExactProbability(RealSqrt2(r)) {}

  static ExactProbability zero() { return ExactProbability(); }
  static ExactProbability one() { return ExactProbability(RealSqrt2(1)); }

  const RealSqrt2& value() const { return value_; }
  operator const RealSqrt2&() const { return value_; }

  bool is_zero() const { return value_.is_zero(); }
  ExactProbability complement() const { return ExactProbability(RealSqrt2(1) - value_); }

  double to_double() const { return value_.to_double(); }
  std::string to_string() const { return value_.to_string(); }

  friend ExactProbability operator*(const ExactProbability& a, const ExactProbability& b) {
    return ExactProbability(a.value_ * b.value_);
  }
  friend bool operator==(const ExactProbability& a, const ExactProbability& b) {
    return a.value_ == b.value_;
  }

 private:
  RealSqrt2 value_;
};

}  // namespace blindlab
