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
#include <vector>

#include "mahler/measure/mahler.hpp"

namespace mahler {

/// Squarefree D = p_1 ... p_L >= 2 with its primes in decreasing order.
class SquarefreeD {
 public:
  explicit SquarefreeD(const Natural& d) : value_(d) {
    const auto f = measure::require_squarefree(d);
    for (const auto& pp : f.factors) primes_.push_back(pp.prime);
    std::reverse(primes_.begin(), primes_.end());
  }
  explicit SquarefreeD(long long d) : SquarefreeD(Natural(d)) {}

  const Natural& value() const noexcept { return value_; }
  /// p_1 > p_2 > ... > p_L.
  const std::vector<Natural>& primes() const noexcept { return primes_; }
  const Natural& largest_prime() const noexcept { return primes_.front(); }

  /// p_2 ... p_L (1 when D is prime).
  Natural cofactor() const { return value_ / primes_.front(); }

  /// D < p_1^2, equivalently p_2 ... p_L < p_1.
  bool below_largest_prime_squared() const {
    return value_ < primes_.front() * primes_.front();
  }

 private:
  Natural value_;
  std::vector<Natural> primes_;
};

}  // namespace mahler
