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

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "mahler/measure/types.hpp"

namespace mahler::quadfield {

using Q = boost::multiprecision::cpp_rational;

/// x + y sqrt(D) in Q(sqrt D), exact.
struct FieldElement {
  Q x = 0;
  Q y = 0;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

inline FieldElement multiply(const FieldElement& a, const FieldElement& b, const Natural& d) {
  return {a.x * b.x + Q(d) * a.y * b.y, a.x * b.y + a.y * b.x};
}

inline FieldElement embed(const Rational& r) {
  return {Q(r.signed_num(), r.den()), 0};
}

/// Position of the root in Q(sqrt D) when disc = D v^2, v > 0.
inline std::optional<FieldElement> embed(const QuadraticNumber& alpha, const Natural& d) {
  const Integer disc = alpha.discriminant();
  if (disc <= 0 || disc % d != 0) return std::nullopt;
  const auto v = arith::exact_root(Natural(disc / d), 2);
  if (!v) return std::nullopt;
  const Q two_a = Q(2 * Integer(alpha.a()));
  const Q y = Q(*v) / two_a;
  return FieldElement{Q(-Integer(alpha.b())) / two_a, alpha.root() == Root::kPlus ? y : Q(-y)};
}

/// sqrt(m/n) = (w / (n D)) sqrt(D) when m D n = w^2.
inline std::optional<FieldElement> embed(const Surd& s, const Natural& d) {
  const auto [base, degree] = s.reduced();
  if (degree == 1) return embed(base);
  if (degree != 2) return std::nullopt;
  const auto w = arith::exact_root(Natural(base.num() * d * base.den()), 2);
  if (!w) return std::nullopt;
  return FieldElement{0, Q(*w, base.den() * d)};
}

}  // namespace mahler::quadfield
