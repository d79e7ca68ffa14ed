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
#include <functional>
#include <string>
#include <vector>

#include "mahler/io/serialize.hpp"
#include "mahler/quadfield/attainment.hpp"
#include "mahler/ratopt/optimizer.hpp"
#include "mahler/ratopt/oracle.hpp"

namespace mahler::cli {

struct CheckOutcome {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Injection points so the suite itself can be mutation-tested.
struct ExampleHooks {
  std::function<Rational(const QuadraticNumber&)> norm_quadratic = measure::norm_quadratic;
};

namespace detail {

inline constexpr double kValueTolerance = 1e-9;

/// (sum_p (log p)^t)^(1/t), or max log p, evaluated from the primes.
inline double log_prime_norm(const std::vector<long long>& primes, const TParam& t) {
  double acc = 0.0;
  for (long long p : primes) {
    const double lp = std::log(static_cast<double>(p));
    acc = t.is_infinite() ? std::max(acc, lp) : acc + std::pow(lp, t.value());
  }
  return t.is_infinite() ? acc : std::pow(acc, 1.0 / t.value());
}

class Suite {
 public:
  void numeric(std::string name, double expected, double computed, double tol = kValueTolerance) {
    outcomes_.push_back({std::move(name), io::format15(expected), io::format15(computed),
                         std::abs(expected - computed) <= tol});
  }
  void text(std::string name, std::string expected, std::string computed) {
    const bool pass = expected == computed;
    outcomes_.push_back({std::move(name), std::move(expected), std::move(computed), pass});
  }
  void flag(std::string name, bool expected, bool computed) {
    text(std::move(name), expected ? "true" : "false", computed ? "true" : "false");
  }
  std::vector<CheckOutcome> take() { return std::move(outcomes_); }

 private:
  std::vector<CheckOutcome> outcomes_;
};

inline std::string joined(const std::vector<std::string>& parts) {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + "}";
}

template <typename Factors>
std::string factor_list(const Factors& factors) {
  std::vector<std::string> parts;
  for (const auto& f : factors) parts.push_back(to_string(AlgebraicNumber(f)));
  return joined(parts);
}

}  // namespace detail

/// Replays the fixed worked examples; expected values are rebuilt from sums
/// of powers of log p at run time.
inline std::vector<CheckOutcome> run_worked_examples(const ExampleHooks& hooks = {}) {
  using quadfield::MixedDecomposition;
  detail::Suite suite;
  const TParam inf = TParam::infinity();
  const std::vector<TParam> finite_ts = {TParam::finite(1), TParam::finite(1.5), TParam::finite(2),
                                         TParam::finite(3)};

  // sqrt(30): value from the primes 5, 3, 2, and not attained inside Q(sqrt 30).
  const SquarefreeD d30(30);
  for (const auto& t : finite_ts) {
    suite.numeric("sqrt30-value-t=" + t.str(), detail::log_prime_norm({5, 3, 2}, t),
                  quadfield::metric_mahler_surd(d30, 2, t).value);
  }
  suite.numeric("sqrt30-value-t=inf", std::log(5.0), quadfield::metric_mahler_surd(d30, 2, inf).value);
  {
    const auto report = quadfield::attainment_in_Q_sqrtD(d30, TParam::finite(2));
    suite.flag("sqrt30-attained-in-field", false, report.attained);
    suite.text("sqrt30-small-quadratics", "{}", detail::factor_list(report.certificate.candidates));
  }
  {
    const auto w = MixedDecomposition::of({Surd(2, 2), Surd(3, 2), Surd(5, 2)});
    suite.flag("sqrt30-surd-witness-valid-t=2", true,
               quadfield::validate_attaining_decomposition(d30, 2, TParam::finite(2), w).valid);
  }

  // sqrt(42): two different attaining sets with the same cost.
  const SquarefreeD d42(42);
  const auto surds42 = MixedDecomposition::of({Surd(2, 2), Surd(3, 2), Surd(7, 2)});
  const auto field42 = MixedDecomposition::of({Surd(Rational(7, 6), 2), Rational(3), Rational(2)});
  for (const auto& t : {TParam::finite(1.5), TParam::finite(2), inf}) {
    suite.flag("sqrt42-surd-witness-valid-t=" + t.str(), true,
               quadfield::validate_attaining_decomposition(d42, 2, t, surds42).valid);
    suite.flag("sqrt42-field-witness-valid-t=" + t.str(), true,
               quadfield::validate_attaining_decomposition(d42, 2, t, field42).valid);
    suite.numeric("sqrt42-dual-witness-cost-t=" + t.str(), surds42.cost(t), field42.cost(t));
    suite.numeric("sqrt42-value-t=" + t.str(), detail::log_prime_norm({7, 3, 2}, t),
                  quadfield::metric_mahler_surd(d42, 2, t).value);
  }
  {
    const auto report = quadfield::attainment_in_Q_sqrtD(d42, TParam::finite(2));
    suite.text("sqrt42-attainment-witness", "{(7/6)^(1/2),3,2}",
               report.witness ? detail::factor_list(report.witness->factors) : "none");
  }

  // sqrt(21) = (-1) * (7 + sqrt21)/2 * (3 - sqrt21)/2.
  const SquarefreeD d21(21);
  const QuadraticNumber big(1, -7, 7, Root::kPlus);
  const QuadraticNumber small(1, -3, -3, Root::kMinus);
  const double m_big = measure::mahler_quadratic(big);
  const double m_small = measure::mahler_quadratic(small);
  suite.numeric("sqrt21-measure-(7+sqrt21)/2", std::log(7.0), m_big, 1e-12);
  suite.flag("sqrt21-measure-(3-sqrt21)/2-above-log3", true, m_small > std::log(3.0));
  suite.flag("sqrt21-measure-(3-sqrt21)/2-below-log7", true, m_small < std::log(7.0));
  const auto three_factor = MixedDecomposition::of({Rational(-1), big, small});
  suite.flag("sqrt21-three-factor-product", true, quadfield::product_is_root(d21, 2, three_factor.factors));
  {
    // Norms from Q(sqrt 21): N(-1) = 1, N(alpha) = c/a; their product is N(sqrt 21).
    const Rational n_big = hooks.norm_quadratic(big);
    const Rational n_small = hooks.norm_quadratic(small);
    const Rational product = Rational(-1).pow(2) * n_big * n_small;
    const Rational target = measure::norm_surd(Surd(21, 2));
    suite.text("sqrt21-three-factor-norms", "7,-3,-21,-21",
               n_big.str() + "," + n_small.str() + "," + product.str() + "," + target.str());
  }
  suite.flag("sqrt21-three-factor-valid-t=inf", true,
             quadfield::validate_attaining_decomposition(d21, 2, inf, three_factor).valid);
  suite.numeric("sqrt21-three-factor-cost-t=inf", std::log(7.0), three_factor.cost(inf));
  suite.flag("sqrt21-three-factor-valid-t=2", false,
             quadfield::validate_attaining_decomposition(d21, 2, TParam::finite(2), three_factor).valid);
  {
    const auto report = quadfield::attainment_in_Q_sqrtD(d21, inf);
    suite.text("sqrt21-attainment-witness", "{(7/3)^(1/2),3}",
               report.witness ? detail::factor_list(report.witness->factors) : "none");
    suite.numeric("sqrt21-value-t=inf", std::log(7.0), report.value);
  }

  // Rational targets.
  {
    const auto r = ratopt::metric_mahler_rational(Rational(6), TParam::finite(2));
    suite.text("rational-6-t=2-witness", "{2,3}", detail::factor_list(r.witness.factors));
    suite.numeric("rational-6-t=2-value", detail::log_prime_norm({2, 3}, TParam::finite(2)), r.value);
  }
  {
    const auto r = ratopt::metric_mahler_rational(Rational(4, 3), TParam::finite(2));
    suite.text("rational-4/3-t=2-witness", "{2/3,2}", detail::factor_list(r.witness.factors));
    suite.numeric("rational-4/3-t=2-value", detail::log_prime_norm({2, 3}, TParam::finite(2)), r.value);
  }
  for (const char* text : {"6", "360/7", "4/3", "-90/77"}) {
    const Rational q = Rational::parse(text);
    for (const auto& t : {TParam::finite(1.5), TParam::finite(2), inf}) {
      suite.numeric("rational-oracle-" + std::string(text) + "-t=" + t.str(),
                    ratopt::metric_mahler_rational_oracle(q, t),
                    ratopt::metric_mahler_rational(q, t).value);
    }
  }
  suite.numeric("rational-30-t=inf", std::log(5.0),
                ratopt::metric_mahler_rational(Rational(30), inf).value);

  // Attainment criterion over small squarefree D, and k-independence.
  {
    std::string mismatches;
    for (long long n = 2; n <= 200; ++n) {
      if (!arith::factorize(Natural(n)).squarefree()) continue;
      const SquarefreeD d(n);
      const bool attained = quadfield::attainment_in_Q_sqrtD(d, TParam::finite(2)).attained;
      if (attained != d.below_largest_prime_squared()) mismatches += std::to_string(n) + " ";
    }
    suite.text("sqrtD-attained-iff-D<p1^2-up-to-200", "", mismatches);
  }
  for (unsigned k = 1; k <= 5; ++k) {
    suite.numeric("surd-30-k=" + std::to_string(k) + "-t=2",
                  detail::log_prime_norm({5, 3, 2}, TParam::finite(2)),
                  quadfield::metric_mahler_surd(d30, k, TParam::finite(2)).value);
  }
  return suite.take();
}

}  // namespace mahler::cli
