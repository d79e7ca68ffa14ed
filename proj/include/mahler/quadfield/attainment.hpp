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
#include <numeric>
#include <string>
#include <vector>

#include "mahler/measure/mahler.hpp"
#include "mahler/quadfield/field.hpp"
#include "mahler/quadfield/squarefree.hpp"
#include "mahler/ratopt/tparam.hpp"

namespace mahler::quadfield {

/// Absolute tolerance for comparing individual measures.
inline constexpr double kMeasureTolerance = 1e-9;

/// alpha = alpha_1 ... alpha_N with the measure of each factor.
struct MixedDecomposition {
  std::vector<AlgebraicNumber> factors;
  std::vector<LogValue> measures;

  static MixedDecomposition of(std::vector<AlgebraicNumber> factors) {
    MixedDecomposition out{std::move(factors), {}};
    for (const auto& f : out.factors) out.measures.push_back(measure::mahler(f));
    return out;
  }

  double cost(const TParam& t) const { return ratopt::tnorm(measures, t); }
};

struct SurdResult {
  double value = 0.0;
  std::vector<Surd> witness;
  std::vector<LogValue> measures;
};

/// M_t(D^(1/k)) = || (log p_1, ..., log p_L) ||_t, attained by the p_l^(1/k).
inline SurdResult metric_mahler_surd(const SquarefreeD& d, unsigned k, const TParam& t) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  SurdResult out;
  for (const auto& p : d.primes()) {
    out.witness.emplace_back(Rational(p), k);
    out.measures.push_back(measure::mahler_surd(out.witness.back()));
  }
  out.value = ratopt::tnorm(out.measures, t);
  return out;
}

/// Exact test that the factors multiply to D^(1/k).
///
/// Without quadratic factors everything is a positive surd times a signed
/// rational, and the identity is checked after raising both sides to the
/// lcm of the indices. With quadratic factors every factor must embed in
/// Q(sqrt D) and the product is formed there.
inline bool product_is_root(const SquarefreeD& d, unsigned k,
                            const std::vector<AlgebraicNumber>& factors) {
  const bool has_quadratic = std::any_of(factors.begin(), factors.end(), [](const auto& f) {
    return std::holds_alternative<QuadraticNumber>(f);
  });
  if (!has_quadratic) {
    unsigned lcm = k;
    for (const auto& f : factors) {
      if (const auto* s = std::get_if<Surd>(&f)) lcm = std::lcm(lcm, s->k());
    }
    Rational lhs(1);
    for (const auto& f : factors) {
      if (const auto* r = std::get_if<Rational>(&f)) {
        if (r->negative()) lhs = -lhs;
        lhs *= r->abs().pow(static_cast<int>(lcm));
      } else {
        const auto& s = std::get<Surd>(f);
        lhs *= s.base().pow(static_cast<int>(lcm / s.k()));
      }
    }
    return lhs == Rational(d.value()).pow(static_cast<int>(lcm / k));
  }
  if (k != 1 && k != 2) return false;
  FieldElement product{1, 0};
  for (const auto& f : factors) {
    std::optional<FieldElement> e;
    if (const auto* r = std::get_if<Rational>(&f)) e = embed(*r);
    if (const auto* q = std::get_if<QuadraticNumber>(&f)) e = embed(*q, d.value());
    if (const auto* s = std::get_if<Surd>(&f)) e = embed(*s, d.value());
    if (!e) return false;
    product = multiply(product, *e, d.value());
  }
  const FieldElement target = k == 2 ? FieldElement{0, 1} : FieldElement{Q(d.value()), 0};
  return product == target;
}

struct Validation {
  bool valid = false;
  std::string reason;
};

/// Checks a decomposition of D^(1/k) against the shape every attaining
/// decomposition must have when 1 < t < inf: after relabelling,
/// M(alpha_n) = log p_n for n <= L and M(alpha_n) = 0 for n > L. At t = inf
/// only max M(alpha_n) = log p_1 is required.
inline Validation validate_attaining_decomposition(const SquarefreeD& d, unsigned k,
                                                   const TParam& t,
                                                   const MixedDecomposition& dec) {
  if (!t.is_infinite() && t.value() <= 1.0) {
    throw Error(ErrorCode::kTOutOfRange, "attainment shape is only determined for t > 1");
  }
  if (!product_is_root(d, k, dec.factors)) {
    throw Error(ErrorCode::kProductMismatch, "factors do not multiply to the target root");
  }
  const double log_p1 = arith::log_of(d.largest_prime());
  if (t.is_infinite()) {
    const double top = dec.measures.empty()
                           ? 0.0
                           : *std::max_element(dec.measures.begin(), dec.measures.end());
    if (std::abs(top - log_p1) <= kMeasureTolerance) return {true, ""};
    return {false, "largest factor measure differs from log p_1"};
  }
  const std::size_t primes = d.primes().size();
  if (dec.factors.size() < primes) return {false, "fewer factors than primes of D"};
  std::vector<double> nonzero;
  for (double m : dec.measures) {
    if (m > log_p1 + kMeasureTolerance) {
      return {false, "a factor measure exceeds log p_1"};
    }
    if (m > kMeasureTolerance) nonzero.push_back(m);
  }
  if (nonzero.size() > primes) return {false, "more than L factors have nonzero measure"};
  std::sort(nonzero.rbegin(), nonzero.rend());
  for (std::size_t n = 0; n < primes; ++n) {
    if (n >= nonzero.size()) {
      return {false, "no factor has measure log p_" + std::to_string(n + 1)};
    }
    if (std::abs(nonzero[n] - arith::log_of(d.primes()[n])) > kMeasureTolerance) {
      return {false, "factor measure differs from log p_" + std::to_string(n + 1)};
    }
  }
  return {true, ""};
}

/// Record of a quadratic enumeration: which polynomials were tried and which
/// passed every filter.
struct Certificate {
  std::size_t forms_checked = 0;
  std::int64_t a_min = 1;
  std::int64_t a_max = 0;
  std::vector<QuadraticNumber> candidates;
};

namespace detail {

/// Tries a x^2 + b x + c; on success appends the quadratic.
inline void try_form(std::int64_t a, std::int64_t b, std::int64_t c, const Natural& d,
                     Certificate& cert) {
  ++cert.forms_checked;
  if (std::gcd(std::gcd(a, b), c) != 1) return;
  // |a|, |b|, |c| < 2^31, so the discriminant fits in 128 bits.
  using i128 = __int128;
  const i128 disc = i128(b) * b - 4 * i128(a) * c;
  if (disc <= 0) return;
  if (d <= Natural(std::numeric_limits<std::int64_t>::max())) {
    const auto dd = d.convert_to<std::int64_t>();
    if (disc % dd != 0) return;
    const auto v2 = static_cast<std::uint64_t>(disc / dd);
    auto v = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v2)));
    while (v * v > v2) --v;
    while ((v + 1) * (v + 1) <= v2) ++v;
    if (v * v != v2) return;
  } else {
    const Integer big = arith::from_u128(static_cast<u128>(disc));
    if (big % d != 0 || !arith::is_perfect_square(Natural(big / d))) return;
  }
  QuadraticNumber f(a, b, c);
  if (measure::is_stable_quadratic(f) == measure::Stability::kUnstable) return;
  cert.candidates.push_back(f);
}

inline std::int64_t small_prime(const Natural& p) {
  if (p > Natural(std::numeric_limits<std::int32_t>::max())) {
    throw Error(ErrorCode::kTooLarge, "prime too large for quadratic enumeration");
  }
  return p.convert_to<std::int64_t>();
}

}  // namespace detail

/// Quadratics in Q(sqrt D) with M <= log p and p | numerator of the norm:
/// necessarily a x^2 - p or a x^2 +- p x + p with 0 < a < p (a x^2 + p has
/// negative discriminant), kept when disc = D v^2 and the root is stable.
inline Certificate enumerate_small_quadratics_certificate(const SquarefreeD& d, const Natural& p) {
  if (d.value() % p != 0 || !arith::is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument, "p must be a prime divisor of D");
  }
  const std::int64_t pp = detail::small_prime(p);
  Certificate cert;
  cert.a_max = pp - 1;
  for (std::int64_t a = 1; a < pp; ++a) {
    detail::try_form(a, 0, pp, d.value(), cert);
    detail::try_form(a, 0, -pp, d.value(), cert);
    detail::try_form(a, pp, pp, d.value(), cert);
    detail::try_form(a, -pp, pp, d.value(), cert);
  }
  return cert;
}

inline std::vector<QuadraticNumber> enumerate_small_quadratics(const SquarefreeD& d,
                                                               const Natural& p) {
  return enumerate_small_quadratics_certificate(d, p).candidates;
}

inline std::vector<QuadraticNumber> enumerate_small_quadratics(const SquarefreeD& d) {
  return enumerate_small_quadratics(d, d.largest_prime());
}

namespace detail {

/// Both orientations: p in the numerator of Norm(alpha) (the forms above)
/// and p in the denominator, i.e. the same forms for 1/alpha, whose
/// minimal polynomials are the reversed ones.
inline Certificate both_orientations(const SquarefreeD& d) {
  Certificate cert = enumerate_small_quadratics_certificate(d, d.largest_prime());
  const std::int64_t pp = small_prime(d.largest_prime());
  for (std::int64_t a = 1; a < pp; ++a) {
    try_form(pp, 0, a, d.value(), cert);
    try_form(pp, 0, -a, d.value(), cert);
    try_form(pp, pp, a, d.value(), cert);
    try_form(pp, -pp, a, d.value(), cert);
  }
  return cert;
}

inline void require_t_above_one(const TParam& t) {
  if (!t.is_infinite() && t.value() <= 1.0) {
    throw Error(ErrorCode::kTOutOfRange, "attainment in Q(sqrt D) is decided for t in (1, inf]");
  }
}

}  // namespace detail

struct AttainmentReport {
  Natural d;
  std::vector<Natural> primes;
  TParam t = TParam::infinity();
  bool attained = false;
  std::optional<MixedDecomposition> witness;
  double value = 0.0;
  Certificate certificate;
};

/// Decides whether M_t(sqrt D) is attained by points of Q(sqrt D), t > 1.
///
/// Any attaining decomposition needs a quadratic factor of measure <= log p_1
/// with p_1 dividing its norm, so the decision is read off the enumeration.
/// When it is nonempty, sqrt(p_1 / (p_2...p_L)), p_2, ..., p_L attains.
inline AttainmentReport attainment_in_Q_sqrtD(const SquarefreeD& d, const TParam& t) {
  detail::require_t_above_one(t);
  AttainmentReport report;
  report.d = d.value();
  report.primes = d.primes();
  report.t = t;
  report.value = metric_mahler_surd(d, 2, t).value;
  report.certificate = detail::both_orientations(d);
  report.attained = !report.certificate.candidates.empty();
  if (!report.attained) return report;

  const Natural rest = d.cofactor();
  // M(sqrt(p_1/rest)) = log max(p_1, rest) is log p_1 only when rest < p_1.
  if (!(rest < d.largest_prime())) {
    throw std::logic_error("enumeration found candidates but p_2...p_L >= p_1");
  }
  std::vector<AlgebraicNumber> factors;
  factors.emplace_back(Surd(Rational(d.largest_prime(), rest), 2));
  for (std::size_t i = 1; i < d.primes().size(); ++i) factors.emplace_back(Rational(d.primes()[i]));
  report.witness = MixedDecomposition::of(std::move(factors));
  const auto check = validate_attaining_decomposition(d, 2, t, *report.witness);
  if (!check.valid) throw std::logic_error("constructed witness failed validation: " + check.reason);
  return report;
}

/// Re-runs the enumeration behind non-attainment for D >= p_1^2 and
/// returns the (empty) candidate record for both norm orientations.
inline Certificate certify_non_attainment(const SquarefreeD& d, const TParam& t) {
  detail::require_t_above_one(t);
  if (d.below_largest_prime_squared()) {
    throw Error(ErrorCode::kWrongRegime, "D < p_1^2: the infimum is attained in Q(sqrt D)");
  }
  return detail::both_orientations(d);
}

}  // namespace mahler::quadfield
