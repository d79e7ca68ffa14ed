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

#include "mahler/arith/primality.hpp"
#include "mahler/arith/rational.hpp"

namespace mahler::arith {

namespace detail {

inline int valuation_of(Natural n, const Natural& p) {
  int count = 0;
  while (n % p == 0) {
    n /= p;
    ++count;
  }
  return count;
}

}  // namespace detail

/// p-adic valuation of a nonzero rational: nu_p(num) - nu_p(den).
inline int nu(const Natural& p, const Rational& x) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, p.str() + " is not prime");
  return detail::valuation_of(x.num(), p) - detail::valuation_of(x.den(), p);
}

enum class DividesSide { kNumerator, kDenominator, kNo };

inline const char* to_string(DividesSide side) noexcept {
  switch (side) {
    case DividesSide::kNumerator: return "numerator";
    case DividesSide::kDenominator: return "denominator";
    case DividesSide::kNo: return "no";
  }
  return "no";
}

/// Which side of r (in lowest terms) the integer d >= 2 divides.
inline DividesSide divides_rational(const Natural& d, const Rational& r) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "divisor must be at least 2");
  if (r.num() % d == 0) return DividesSide::kNumerator;
  if (r.den() % d == 0) return DividesSide::kDenominator;
  return DividesSide::kNo;
}

/// m_n = gcd(r_n, m / (m_1 ... m_{n-1})). When m divides the product of the
/// r_n these multiply back to m and m_n | r_n. Output length equals input
/// length, trailing 1s included.
inline std::vector<Natural> gcd_chain(const Natural& m, const std::vector<Natural>& r) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "gcd_chain requires m >= 1");
  Natural product = 1;
  for (const auto& rn : r) {
    if (rn < 1) throw Error(ErrorCode::kInvalidArgument, "gcd_chain requires positive r_n");
    product *= rn;
  }
  if (product % m != 0) {
    throw Error(ErrorCode::kDivisibilityViolation,
                m.str() + " does not divide the product " + product.str());
  }
  std::vector<Natural> out;
  out.reserve(r.size());
  Natural rest = m;
  for (const auto& rn : r) {
    Natural mn = boost::multiprecision::gcd(rn, rest);
    rest /= mn;
    out.push_back(std::move(mn));
  }
  return out;
}

}  // namespace mahler::arith
