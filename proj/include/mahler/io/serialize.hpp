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
#include <cstdio>
#include <string>

#include "json.hpp"

#include "mahler/quadfield/attainment.hpp"
#include "mahler/ratopt/decomposition.hpp"

namespace mahler::io {

using Json = nlohmann::ordered_json;

/// Rounds to 15 significant digits; the shortest round-trip printing used
/// by the JSON writer then emits at most 15 digits.
inline double round15(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

inline std::string format15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

/// Converts natural-log values for display only.
struct LogScale {
  double divisor = 1.0;

  double operator()(double natural_log) const { return round15(natural_log / divisor); }

  static LogScale for_base(const std::string& base) {
    if (base == "e") return {1.0};
    if (base == "2") return {std::log(2.0)};
    if (base == "10") return {std::log(10.0)};
    throw Error(ErrorCode::kInvalidArgument, "log base must be e, 2 or 10");
  }
};

inline Json t_json(const TParam& t) {
  if (t.is_infinite()) return "inf";
  return round15(t.value());
}

inline Json strings(const std::vector<Natural>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

template <typename T>
Json measures_json(const std::vector<T>& values, const LogScale& scale) {
  Json out = Json::array();
  for (double v : values) out.push_back(scale(v));
  return out;
}

/// {factors: ["a/b", ...], measures: [...], total_cost}.
inline Json to_json(const RationalDecomposition& d, const LogScale& scale = {}) {
  Json factors = Json::array();
  for (const auto& f : d.factors) factors.push_back(f.str());
  Json out;
  out["factors"] = std::move(factors);
  out["measures"] = measures_json(d.per_factor_measure, scale);
  out["total_cost"] = scale(d.total_cost);
  return out;
}

inline Json to_json(const quadfield::Certificate& c) {
  Json candidates = Json::array();
  for (const auto& q : c.candidates) candidates.push_back(q.str());
  Json out;
  out["forms_checked"] = c.forms_checked;
  out["a_range"] = Json::array({c.a_min, c.a_max});
  out["candidates"] = std::move(candidates);
  return out;
}

/// {D, primes, t, attained, witness[], value, certificate{...}}.
inline Json to_json(const quadfield::AttainmentReport& r, const LogScale& scale = {}) {
  Json witness = Json::array();
  if (r.witness) {
    for (const auto& f : r.witness->factors) witness.push_back(to_string(f));
  }
  Json out;
  out["D"] = r.d.str();
  out["primes"] = strings(r.primes);
  out["t"] = t_json(r.t);
  out["attained"] = r.attained;
  out["witness"] = std::move(witness);
  out["value"] = scale(r.value);
  out["certificate"] = to_json(r.certificate);
  return out;
}

}  // namespace mahler::io
