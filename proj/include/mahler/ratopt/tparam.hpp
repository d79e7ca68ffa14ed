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
#include <cstdio>
#include <limits>
#include <span>
#include <string>
#include <string_view>

#include "mahler/error.hpp"

namespace mahler {

/// The exponent t in [1, inf]; infinity is a distinguished value rather
/// than a floating-point sentinel.
class TParam {
 public:
  static TParam finite(double t) {
    if (!std::isfinite(t) || t < 1.0) {
      throw Error(ErrorCode::kInvalidT, "t must be a real number >= 1 or 'inf'");
    }
    return TParam(t, false);
  }
  static TParam infinity() { return TParam(0.0, true); }

  /// A decimal string, or the literal `inf`.
  static TParam parse(std::string_view text) {
    if (text == "inf") return infinity();
    const std::string s(text);
    char* end = nullptr;
    const double t = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
      throw Error(ErrorCode::kInvalidT, "cannot parse t from '" + s + "'");
    }
    return finite(t);
  }

  bool is_infinite() const noexcept { return infinite_; }
  double value() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  std::string str() const {
    if (infinite_) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", value_);
    return buf;
  }

  friend bool operator==(const TParam& a, const TParam& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<(const TParam& a, const TParam& b) noexcept { return a.value() < b.value(); }

 private:
  TParam(double value, bool infinite) : value_(value), infinite_(infinite) {}

  double value_;
  bool infinite_;
};

namespace ratopt {

/// Objective used internally: sum of x^t for finite t, max x for t = inf.
/// Monotone in the t-norm, so minimising it minimises the norm.
inline double objective(std::span<const double> measures, const TParam& t) {
  double acc = 0.0;
  if (t.is_infinite()) {
    for (double m : measures) acc = std::max(acc, m);
    return acc;
  }
  for (double m : measures) acc += std::pow(m, t.value());
  return acc;
}

inline double objective_to_norm(double objective_value, const TParam& t) {
  if (t.is_infinite() || objective_value == 0.0) return objective_value;
  return std::pow(objective_value, 1.0 / t.value());
}

/// L_t norm of the measure vector (maximum for t = inf).
inline double tnorm(std::span<const double> measures, const TParam& t) {
  for (double m : measures) {
    if (!(m >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "measures must be nonnegative");
  }
  return objective_to_norm(objective(measures, t), t);
}

}  // namespace ratopt
}  // namespace mahler
