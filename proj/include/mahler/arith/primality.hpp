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

#include <array>
#include <cstdint>

#include "mahler/arith/natural.hpp"

namespace mahler::arith {

namespace detail {

/// a * b mod n for n < 2^96 without a 256-bit product: Horner over 32-bit
/// chunks of b keeps every intermediate below 2^128.
inline u128 mulmod(u128 a, u128 b, u128 n) {
  if ((n >> 64) == 0) {
    const auto nn = static_cast<std::uint64_t>(n);
    return static_cast<u128>(static_cast<std::uint64_t>(a % nn)) *
           static_cast<std::uint64_t>(b % nn) % nn;
  }
  a %= n;
  b %= n;
  u128 r = 0;
  for (int shift = 64; shift >= 0; shift -= 32) {
    const u128 chunk = (b >> shift) & 0xFFFFFFFFu;
    r = (r << 32) % n;
    r = (r + a * chunk % n) % n;
  }
  return r;
}

inline u128 powmod(u128 base, u128 exp, u128 n) {
  u128 result = 1 % n;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return result;
}

inline bool strong_probable_prime(u128 n, u128 base) {
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u128 x = powmod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

inline int jacobi(Integer a, Natural n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n % 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

inline Integer mod_floor(const Integer& x, const Natural& n) {
  Integer r = x % n;
  if (r < 0) r += n;
  return r;
}

inline Integer half_mod(Integer x, const Natural& n) {
  if ((x & 1) != 0) x += n;
  return x / 2;
}

/// Strong Lucas probable-prime test with Selfridge parameters (P = 1).
inline bool strong_lucas_probable_prime(const Natural& n) {
  if (is_perfect_square(n)) return false;
  Integer disc = 5;
  for (;;) {
    const int j = jacobi(disc, n);
    if (j == -1) break;
    if (j == 0 && boost::multiprecision::abs(disc) != n) return false;
    disc = disc > 0 ? Integer(-(disc + 2)) : Integer(-disc + 2);
  }
  const Integer q = (1 - disc) / 4;
  Natural d = n + 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Integer u = 1;
  Integer v = 1;
  Integer qk = mod_floor(q, n);
  const std::size_t top = boost::multiprecision::msb(d);
  for (std::size_t i = top; i-- > 0;) {
    u = mod_floor(u * v, n);
    v = mod_floor(v * v - 2 * qk, n);
    qk = mod_floor(qk * qk, n);
    if (boost::multiprecision::bit_test(d, static_cast<unsigned>(i))) {
      const Integer nu = half_mod(u + v, n);
      const Integer nv = half_mod(disc * u + v, n);
      u = mod_floor(nu, n);
      v = mod_floor(nv, n);
      qk = mod_floor(qk * q, n);
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    v = mod_floor(v * v - 2 * qk, n);
    qk = mod_floor(qk * qk, n);
    if (v == 0) return true;
  }
  return false;
}

inline constexpr std::array<unsigned, 13> kWitnessPrimes = {2,  3,  5,  7,  11, 13, 17,
                                                            19, 23, 29, 31, 37, 41};

}  // namespace detail

/// Largest input accepted by the primality test and the factorizer.
inline const Natural& max_supported() {
  static const Natural bound = (Natural(1) << 96) - 1;
  return bound;
}

/// Primality for n < 2^96.
///
/// Miller-Rabin with the first 13 prime bases is deterministic below
/// 3.3e24 (~2^81.4). Above that bound a strong Lucas test is added, making
/// the check Baillie-PSW, which has no known counterexample.
inline bool is_prime_u128(u128 n) {
  if (n < 2) return false;
  for (unsigned p : detail::kWitnessPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (unsigned p : detail::kWitnessPrimes) {
    if (!detail::strong_probable_prime(n, p)) return false;
  }
  static const u128 kDeterministicBound = to_u128(Natural("3317044064679887385961981"));
  if (n < kDeterministicBound) return true;
  return detail::strong_lucas_probable_prime(from_u128(n));
}

inline bool is_prime(const Natural& n) {
  if (n < 2) return false;
  if (n > max_supported()) {
    throw Error(ErrorCode::kFactorizationOverflow, "primality test limited to inputs below 2^96");
  }
  return is_prime_u128(to_u128(n));
}

}  // namespace mahler::arith
