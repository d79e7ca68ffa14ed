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

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mahler/arith/natural.hpp"
#include "mahler/arith/rational.hpp"

namespace mahler {

enum class Root { kPlus, kMinus };

/// A degree-2 algebraic number given by its primitive minimal polynomial
/// a x^2 + b x + c over Z (a > 0) and a choice of root (-b +- sqrt(disc)) / 2a.
class QuadraticNumber {
 public:
  QuadraticNumber(std::int64_t a, std::int64_t b, std::int64_t c, Root root = Root::kPlus)
      : a_(a), b_(b), c_(c), root_(root) {
    if (a_ <= 0) throw Error(ErrorCode::kInvalidArgument, "leading coefficient must be positive");
    if (c_ == 0) throw Error(ErrorCode::kInvalidArgument, "constant coefficient must be nonzero");
    if (std::gcd(std::gcd(a_, b_), c_) != 1) {
      throw Error(ErrorCode::kInvalidArgument, "coefficients must be coprime");
    }
    if (arith::is_perfect_square(discriminant())) {
      throw Error(ErrorCode::kInvalidArgument, "polynomial is reducible over Q");
    }
  }

  /// Divides out the content and fixes the sign of the leading coefficient,
  /// keeping the same root selected.
  static QuadraticNumber normalized(std::int64_t a, std::int64_t b, std::int64_t c,
                                    Root root = Root::kPlus) {
    if (a == 0) throw Error(ErrorCode::kInvalidArgument, "not a quadratic");
    const std::int64_t g = std::gcd(std::gcd(a, b), c);
    a /= g;
    b /= g;
    c /= g;
    if (a < 0) {
      a = -a;
      b = -b;
      c = -c;
      root = root == Root::kPlus ? Root::kMinus : Root::kPlus;
    }
    return QuadraticNumber(a, b, c, root);
  }

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t c() const noexcept { return c_; }
  Root root() const noexcept { return root_; }

  Integer discriminant() const { return Integer(b_) * b_ - 4 * Integer(a_) * c_; }

  /// Both conjugates. The larger-magnitude real root is formed first and the
  /// other comes from the product c/a, so neither suffers cancellation.
  std::pair<std::complex<double>, std::complex<double>> conjugates() const {
    const double a = static_cast<double>(a_);
    const double b = static_cast<double>(b_);
    const double c = static_cast<double>(c_);
    const Integer disc = discriminant();
    if (disc > 0) {
      const double sq = std::sqrt(disc.convert_to<double>());
      const double big = b >= 0 ? (-b - sq) / (2 * a) : (-b + sq) / (2 * a);
      const double small = c / (a * big);
      // Order as (plus root, minus root).
      const double plus = b >= 0 ? small : big;
      const double minus = b >= 0 ? big : small;
      return {plus, minus};
    }
    const double re = -b / (2 * a);
    const double im = std::sqrt((-disc).convert_to<double>()) / (2 * a);
    return {{re, im}, {re, -im}};
  }

  std::complex<double> value() const {
    const auto [plus, minus] = conjugates();
    return root_ == Root::kPlus ? plus : minus;
  }

  /// Root of the reversed polynomial, i.e. 1/alpha.
  QuadraticNumber inverse() const {
    // 1/((-b + s)/2a) = (-b - s)/2c after rationalising, so the root label
    // flips when c > 0 and survives the sign normalisation when c < 0.
    return normalized(c_, b_, a_, root_ == Root::kPlus ? Root::kMinus : Root::kPlus);
  }

  /// `a,b,c` with `,+` or `,-` appended for the minus root.
  std::string str() const {
    std::string out = std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_);
    if (root_ == Root::kMinus) out += ",-";
    return out;
  }

  static QuadraticNumber parse(std::string_view text);

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::int64_t c_;
  Root root_;
};

/// The positive real root base^(1/k).
class Surd {
 public:
  Surd(Rational base, unsigned k) : base_(std::move(base)), k_(k) {
    if (base_.negative()) throw Error(ErrorCode::kInvalidArgument, "surd base must be positive");
    if (k_ == 0) throw Error(ErrorCode::kInvalidArgument, "surd index must be positive");
  }

  const Rational& base() const noexcept { return base_; }
  unsigned k() const noexcept { return k_; }

  /// Writes the number as s^(1/d) where s is not a perfect p-th power for
  /// any prime p | d. Then x^d - s is irreducible (Capelli; the -4c^4 clause
  /// cannot trigger for positive s), so d is the degree.
  std::pair<Rational, unsigned> reduced() const {
    for (unsigned g = k_; g >= 1; --g) {
      if (k_ % g != 0) continue;
      const auto num_root = arith::exact_root(base_.num(), g);
      if (!num_root) continue;
      const auto den_root = arith::exact_root(base_.den(), g);
      if (!den_root) continue;
      return {Rational(*num_root, *den_root), k_ / g};
    }
    return {base_, k_};
  }

  unsigned degree() const { return reduced().second; }

  double to_double() const {
    return std::exp((arith::log_of(base_.num()) - arith::log_of(base_.den())) / k_);
  }

  /// `D^(1/k)` or `(m/n)^(1/k)`; a bare rational when k = 1.
  std::string str() const {
    if (k_ == 1) return base_.str();
    const std::string b = base_.is_integer() ? base_.str() : "(" + base_.str() + ")";
    return b + "^(1/" + std::to_string(k_) + ")";
  }

  static Surd parse(std::string_view text);

  friend bool operator==(const Surd&, const Surd&) = default;

 private:
  Rational base_;
  unsigned k_;
};

using AlgebraicNumber = std::variant<Rational, QuadraticNumber, Surd>;

namespace detail {

inline std::int64_t parse_i64(std::string_view text) {
  const Integer v = arith::parse_integer(text);
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kParseError, "coefficient out of range: " + std::string(text));
  }
  return v.convert_to<std::int64_t>();
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline QuadraticNumber QuadraticNumber::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(detail::trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw Error(ErrorCode::kParseError, "quadratic must be 'a,b,c[,+|-]': " + std::string(text));
  }
  Root root = Root::kPlus;
  if (parts.size() == 4) {
    if (parts[3] == "+") {
      root = Root::kPlus;
    } else if (parts[3] == "-") {
      root = Root::kMinus;
    } else {
      throw Error(ErrorCode::kParseError, "root selector must be + or -");
    }
  }
  return QuadraticNumber(detail::parse_i64(parts[0]), detail::parse_i64(parts[1]),
                         detail::parse_i64(parts[2]), root);
}

inline Surd Surd::parse(std::string_view text) {
  const auto caret = text.find("^(1/");
  if (caret == std::string_view::npos || text.back() != ')') {
    throw Error(ErrorCode::kParseError, "surd must be 'D^(1/k)' or '(m/n)^(1/k)': " + std::string(text));
  }
  std::string_view base_text = text.substr(0, caret);
  if (base_text.size() >= 2 && base_text.front() == '(' && base_text.back() == ')') {
    base_text = base_text.substr(1, base_text.size() - 2);
  }
  const std::string_view k_text = text.substr(caret + 4, text.size() - caret - 5);
  const Natural k = arith::parse_natural(k_text);
  if (k < 1 || k > 1'000'000) throw Error(ErrorCode::kParseError, "surd index out of range");
  return Surd(Rational::parse(base_text), k.convert_to<unsigned>());
}

inline std::string to_string(const AlgebraicNumber& x) {
  return std::visit([](const auto& v) { return v.str(); }, x);
}

}  // namespace mahler
