// Copyright 2026 The mahler-t Authors
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

#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "mahler/arith/natural.hpp"

namespace mahler {

/// Nonzero rational number, always in lowest terms.
///
/// Zero is not representable: every measure in this library is defined on
/// the multiplicative group only.
class Rational {
 public:
  Rational() : Rational(1) {}
  Rational(long long value) : Rational(Integer(value), Natural(1)) {}  // NOLINT
  Rational(const Integer& num) : Rational(num, Natural(1)) {}          // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (num == 0) throw Error(ErrorCode::kInvalidArgument, "zero is not a valid rational here");
    if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
    negative_ = (num < 0) != (den < 0);
    num_ = boost::multiprecision::abs(num);
    den_ = boost::multiprecision::abs(den);
    const Natural g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  const Natural& num() const noexcept { return num_; }
  const Natural& den() const noexcept { return den_; }
  bool negative() const noexcept { return negative_; }
  int sign() const noexcept { return negative_ ? -1 : 1; }
  bool is_integer() const noexcept { return den_ == 1; }
  bool is_unit() const noexcept { return num_ == 1 && den_ == 1; }

  /// Signed numerator.
  Integer signed_num() const { return negative_ ? Integer(-num_) : Integer(num_); }

  Rational abs() const { return Rational(num_, den_); }
  Rational inverse() const { return Rational(signed_den_(), num_); }
  Rational operator-() const { return Rational(-signed_num(), den_); }

  Rational pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    const auto e = static_cast<unsigned>(exponent);
    Integer n = boost::multiprecision::pow(signed_num(), e);
    return Rational(n, boost::multiprecision::pow(den_, e));
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.signed_num() * b.signed_num(), a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }
  Rational& operator/=(const Rational& other) { return *this = *this / other; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Integer lhs = a.signed_num() * b.den_;
    const Integer rhs = b.signed_num() * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const {
    const boost::multiprecision::cpp_rational exact(num_, den_);
    return static_cast<double>(sign()) * exact.convert_to<double>();
  }

  /// `[-]num/den`, or `[-]num` for integers.
  std::string str() const {
    std::string out = negative_ ? "-" : "";
    out += num_.str();
    if (den_ != 1) out += "/" + den_.str();
    return out;
  }

  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(arith::parse_integer(text));
    }
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
      throw Error(ErrorCode::kParseError, "sign belongs on the numerator: '" + std::string(text) + "'");
    }
    return Rational(arith::parse_integer(text.substr(0, slash)), arith::parse_natural(den_text));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  Integer signed_den_() const { return negative_ ? Integer(-den_) : Integer(den_); }

  bool negative_ = false;
  Natural num_ = 1;
  Natural den_ = 1;
};

}  // namespace mahler
