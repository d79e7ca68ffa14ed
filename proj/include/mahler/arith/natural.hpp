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

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mahler/error.hpp"

namespace mahler {

/// Arbitrary-precision integer. `Natural` is the same type used where the
/// value is known to be nonnegative.
using Integer = boost::multiprecision::cpp_int;
using Natural = boost::multiprecision::cpp_int;

using u128 = unsigned __int128;

namespace arith {

/// Natural log of a positive integer of any size.
inline double log_of(const Natural& n) {
  if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "log of nonpositive integer");
  const std::size_t bits = boost::multiprecision::msb(n) + 1;
  if (bits <= 1000) return std::log(n.convert_to<double>());
  const std::size_t shift = bits - 64;
  const Natural top = n >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

inline Natural isqrt(const Natural& n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Natural& n) {
  if (n < 0) return false;
  const Natural r = isqrt(n);
  return r * r == n;
}

/// Largest r with r^k <= n, for n >= 0 and k >= 1.
inline Natural iroot(const Natural& n, unsigned k) {
  if (n < 0 || k == 0) throw Error(ErrorCode::kInvalidArgument, "iroot domain");
  if (k == 1 || n < 2) return n;
  Natural lo = 0;
  Natural hi = Natural(1) << ((boost::multiprecision::msb(n) + 1) / k + 1);
  while (lo < hi) {
    const Natural mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, k) <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

/// Returns r when n == r^k exactly.
inline std::optional<Natural> exact_root(const Natural& n, unsigned k) {
  const Natural r = iroot(n, k);
  if (boost::multiprecision::pow(r, k) == n) return r;
  return std::nullopt;
}

inline Natural parse_natural(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kParseError, "empty integer");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw Error(ErrorCode::kParseError, "invalid integer '" + std::string(text) + "'");
    }
  }
  return Natural(std::string(text));
}

inline Integer parse_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    const Natural mag = parse_natural(text.substr(1));
    return text.front() == '-' ? Integer(-mag) : Integer(mag);
  }
  return parse_natural(text);
}

inline u128 to_u128(const Natural& n) {
  u128 out = 0;
  Natural rest = n;
  unsigned shift = 0;
  while (rest > 0) {
    out |= static_cast<u128>(static_cast<std::uint64_t>(rest & 0xFFFFFFFFFFFFFFFFull)) << shift;
    rest >>= 64;
    shift += 64;
  }
  return out;
}

inline Natural from_u128(u128 v) {
  Natural out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

}  // namespace arith
}  // namespace mahler
