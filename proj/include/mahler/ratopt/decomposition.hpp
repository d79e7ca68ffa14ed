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

#include <string>
#include <vector>

#include "mahler/arith/valuation.hpp"
#include "mahler/measure/mahler.hpp"
#include "mahler/ratopt/tparam.hpp"

namespace mahler {

/// alpha = factors[0] * ... * factors[N-1] with the cost of that split.
struct RationalDecomposition {
  std::vector<Rational> factors;
  std::vector<LogValue> per_factor_measure;
  double total_cost = 0.0;

  Rational product() const {
    Rational out(1);
    for (const auto& f : factors) out *= f;
    return out;
  }
};

/// A norm r/s in lowest terms together with its sign.
struct NormPair {
  int sign = 1;
  Natural r = 1;
  Natural s = 1;

  static NormPair of(const Rational& norm) { return {norm.sign(), norm.num(), norm.den()}; }
};

namespace ratopt {

/// Builds the decomposition record, dropping +-1 factors. The sign of a
/// dropped -1 is moved onto the first remaining factor.
inline RationalDecomposition make_decomposition(std::vector<Rational> factors, const TParam& t) {
  RationalDecomposition out;
  bool flip = false;
  for (auto& f : factors) {
    if (f.is_unit()) {
      flip ^= f.negative();
      continue;
    }
    out.factors.push_back(std::move(f));
  }
  if (flip && !out.factors.empty()) out.factors.front() = -out.factors.front();
  for (const auto& f : out.factors) out.per_factor_measure.push_back(measure::mahler_rational(f));
  out.total_cost = tnorm(out.per_factor_measure, t);
  return out;
}

/// Turns norms r_n/s_n of an arbitrary factorisation of q into the rational
/// factorisation m_n/m'_n obtained from gcd chains of m against (r_n) and of
/// m' against (s_n). Each new factor costs no more than its source term
/// log max(r_n, s_n).
inline RationalDecomposition reduce_to_rational_decomposition(const Rational& q,
                                                              const std::vector<NormPair>& norms,
                                                              const TParam& t) {
  std::vector<Natural> r;
  std::vector<Natural> s;
  Rational product(1);
  for (const auto& n : norms) {
    if (n.r < 1 || n.s < 1) throw Error(ErrorCode::kInvalidArgument, "norm parts must be positive");
    const Rational reduced(n.r, n.s);
    r.push_back(reduced.num());
    s.push_back(reduced.den());
    product *= reduced;
  }
  if (product != q.abs()) {
    throw Error(ErrorCode::kDivisibilityViolation,
                "norm product " + product.str() + " is not +-" + q.abs().str());
  }
  const auto numer = arith::gcd_chain(q.num(), r);
  const auto denom = arith::gcd_chain(q.den(), s);
  std::vector<Rational> factors;
  for (std::size_t i = 0; i < numer.size(); ++i) factors.emplace_back(numer[i], denom[i]);
  if (q.negative()) factors.emplace_back(-1);
  return make_decomposition(std::move(factors), t);
}

}  // namespace ratopt
}  // namespace mahler
