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
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "mahler/arith/natural.hpp"
#include "mahler/arith/primality.hpp"

namespace mahler::arith {

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
struct Factorization {
  std::vector<PrimePower> factors;

  bool empty() const noexcept { return factors.empty(); }
  std::size_t size() const noexcept { return factors.size(); }

  /// Total multiplicity Omega(n).
  unsigned total_multiplicity() const noexcept {
    unsigned total = 0;
    for (const auto& f : factors) total += f.exponent;
    return total;
  }

  Natural product() const {
    Natural out = 1;
    for (const auto& f : factors) out *= boost::multiprecision::pow(f.prime, f.exponent);
    return out;
  }

  bool squarefree() const noexcept {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& f) { return f.exponent == 1; });
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

inline constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialDivisionLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialDivisionLimit; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
/// composite n, or n when the polynomial constant c fails.
inline u128 brent_rho(u128 n, u128 c) {
  constexpr std::uint32_t kBatch = 128;
  u128 y = 2;
  u128 x = y;
  u128 ys = y;
  u128 g = 1;
  u128 q = 1;
  std::uint64_t r = 1;
  auto step = [&](u128 v) { return (mulmod(v, v, n) + c) % n; };
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = step(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      const std::uint64_t lim = std::min<std::uint64_t>(kBatch, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = step(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u128(q, n);
      k += kBatch;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    // Batch overshot; replay one step at a time from the saved point.
    do {
      ys = step(ys);
      g = gcd_u128(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

inline void split_large(u128 n, std::map<u128, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u128(n)) {
    ++out[n];
    return;
  }
  for (u128 c = 1;; ++c) {
    const u128 d = brent_rho(n, c);
    if (d != n) {
      split_large(d, out);
      split_large(n / d, out);
      return;
    }
  }
}

}  // namespace detail

/// Complete factorization of 1 <= n < 2^96: trial division to 10^6, then
/// Pollard-Brent rho on the cofactor with every factor certified prime.
inline Factorization factorize(const Natural& n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "factorize requires n >= 1");
  if (n > max_supported()) {
    throw Error(ErrorCode::kFactorizationOverflow,
                "factorization limited to inputs below 2^96, got " + n.str());
  }
  u128 rest = to_u128(n);
  std::map<u128, unsigned> found;
  for (std::uint32_t p : detail::small_primes()) {
    if (static_cast<u128>(p) * p > rest) break;
    while (rest % p == 0) {
      rest /= p;
      ++found[p];
    }
  }
  if (rest > 1) {
    if (rest <= static_cast<u128>(detail::kTrialDivisionLimit) * detail::kTrialDivisionLimit) {
      ++found[rest];
    } else {
      detail::split_large(rest, found);
    }
  }
  Factorization out;
  for (const auto& [p, e] : found) out.factors.push_back({from_u128(p), e});
  return out;
}

}  // namespace mahler::arith
