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

#include <algorithm>
#include <cmath>
#include <complex>
#include <variant>

#include "mahler/arith/factorize.hpp"
#include "mahler/arith/rational.hpp"
#include "mahler/measure/types.hpp"

namespace mahler {

/// Nonnegative natural-log quantity (Mahler measure, Weil height, t-cost).
using LogValue = double;

namespace measure {

inline double log_plus(double x) { return x > 1.0 ? std::log(x) : 0.0; }

/// log max(|num|, |den|) of the reduced fraction.
inline LogValue mahler_rational(const Rational& q) {
  return arith::log_of(std::max(q.num(), q.den()));
}

/// log a + log+|r1| + log+|r2| over the two conjugates.
inline LogValue mahler_quadratic(const QuadraticNumber& alpha) {
  const auto [r1, r2] = alpha.conjugates();
  return std::log(static_cast<double>(alpha.a())) + log_plus(std::abs(r1)) +
         log_plus(std::abs(r2));
}

/// Mahler measure of base^(1/k) from its minimal polynomial n x^d - m,
/// where (m/n)^(1/d) is the reduced form: every root has modulus (m/n)^(1/d).
inline LogValue mahler(const Surd& s) {
  const auto [reduced, degree] = s.reduced();
  const double log_modulus =
      (arith::log_of(reduced.num()) - arith::log_of(reduced.den())) / degree;
  return arith::log_of(reduced.den()) + degree * std::max(0.0, log_modulus);
}

inline LogValue mahler(const Rational& q) { return mahler_rational(q); }
inline LogValue mahler(const QuadraticNumber& alpha) { return mahler_quadratic(alpha); }
inline LogValue mahler(const AlgebraicNumber& x) {
  return std::visit([](const auto& v) { return mahler(v); }, x);
}

/// Squarefree integer base D >= 2 as a certified factorization.
inline arith::Factorization require_squarefree(const Natural& d) {
  if (d < 2) throw Error(ErrorCode::kNotSquarefree, "expected a squarefree integer >= 2, got " + d.str());
  auto f = arith::factorize(d);
  if (!f.squarefree()) throw Error(ErrorCode::kNotSquarefree, d.str() + " is not squarefree");
  return f;
}

/// M(D^(1/k)) for squarefree D >= 2. For any prime p | D, x^k - D is
/// p-Eisenstein, so it is the minimal polynomial and the measure is log D.
inline LogValue mahler_surd(const Surd& s) {
  if (!s.base().is_integer()) {
    throw Error(ErrorCode::kNotSquarefree, "surd base must be a squarefree integer");
  }
  require_squarefree(s.base().num());
  return mahler(s);
}

inline unsigned degree(const Rational&) { return 1; }
inline unsigned degree(const QuadraticNumber&) { return 2; }
inline unsigned degree(const Surd& s) { return s.degree(); }
inline unsigned degree(const AlgebraicNumber& x) {
  return std::visit([](const auto& v) { return degree(v); }, x);
}

/// h = M / deg.
template <typename Number>
LogValue weil_height(const Number& x) {
  return mahler(x) / static_cast<double>(degree(x));
}

enum class Stability { kStableOutside, kStableOnCircle, kStableInside, kUnstable };

inline const char* to_string(Stability s) noexcept {
  switch (s) {
    case Stability::kStableOutside: return "stable_outside";
    case Stability::kStableOnCircle: return "stable_on_circle";
    case Stability::kStableInside: return "stable_inside";
    case Stability::kUnstable: return "unstable";
  }
  return "unstable";
}

/// Exact classification: stable iff f(1) and f(-1) share a sign, i.e.
/// |a + c| > |b|; then |c/a| decides the side of the unit circle.
inline Stability is_stable_quadratic(const QuadraticNumber& alpha) {
  const Integer a = alpha.a();
  const Integer b = alpha.b();
  const Integer c = alpha.c();
  if (boost::multiprecision::abs(a + c) <= boost::multiprecision::abs(b)) {
    return Stability::kUnstable;
  }
  const Integer abs_a = boost::multiprecision::abs(a);
  const Integer abs_c = boost::multiprecision::abs(c);
  if (abs_a < abs_c) return Stability::kStableOutside;
  if (abs_a == abs_c) return Stability::kStableOnCircle;
  return Stability::kStableInside;
}

/// alpha * conj(alpha) = c / a.
inline Rational norm_quadratic(const QuadraticNumber& alpha) {
  return Rational(Integer(alpha.c()), Integer(alpha.a()));
}

/// Norm from Q(s) to Q: the product of the roots of x^d - s for the reduced
/// form s^(1/d), which is (-1)^(d+1) s.
inline Rational norm_surd(const Surd& s) {
  const auto [reduced, degree] = s.reduced();
  return degree % 2 == 0 ? -reduced : reduced;
}

}  // namespace measure
}  // namespace mahler
