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
#include <sstream>
#include <string>
#include <utility>
#include <variant>

#include "mahler/io/serialize.hpp"
#include "mahler/quadfield/attainment.hpp"
#include "mahler/ratopt/optimizer.hpp"

namespace mahler::cli {

/// What to plot: a rational q, or the surd D^(1/k).
using PlotTarget = std::variant<Rational, std::pair<SquarefreeD, unsigned>>;

inline double metric_value(const PlotTarget& target, const TParam& t) {
  if (const auto* q = std::get_if<Rational>(&target)) {
    return ratopt::metric_mahler_rational(*q, t).value;
  }
  const auto& [d, k] = std::get<std::pair<SquarefreeD, unsigned>>(target);
  return quadfield::metric_mahler_surd(d, k, t).value;
}

/// CSV `t,value` over t_min, t_min + step, ... <= t_max, plus `inf,<value>`
/// when requested.
inline std::string plot_data(const PlotTarget& target, double t_min, double t_max, double step,
                             bool include_infinity, const io::LogScale& scale = {}) {
  if (!(t_min >= 1.0) || !std::isfinite(t_max)) {
    throw Error(ErrorCode::kInvalidT, "plot range must satisfy 1 <= t_min <= t_max");
  }
  if (t_max < t_min) throw Error(ErrorCode::kInvalidT, "t_max is below t_min");
  if (!(step > 0.0)) throw Error(ErrorCode::kInvalidArgument, "step must be positive");
  std::ostringstream out;
  out << "t,value\n";
  const auto count = static_cast<long>(std::floor((t_max - t_min) / step + 1e-9));
  for (long i = 0; i <= count; ++i) {
    const double t = t_min + static_cast<double>(i) * step;
    out << io::format15(t) << ',' << io::format15(scale(metric_value(target, TParam::finite(t))))
        << '\n';
  }
  if (include_infinity) {
    out << "inf," << io::format15(scale(metric_value(target, TParam::infinity()))) << '\n';
  }
  return out.str();
}

}  // namespace mahler::cli
