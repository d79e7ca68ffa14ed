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
#include <limits>
#include <vector>

#include "mahler/arith/factorize.hpp"
#include "mahler/ratopt/tparam.hpp"

namespace mahler::ratopt {

struct OracleOptions {
  /// Largest Omega(num * den) accepted.
  unsigned max_multiplicity = 12;
  /// Primes outside supp(num * den). Each one is tried, one at a time, as an
  /// extra cancelling pair p / p spread over the factors. They never lower
  /// the cost; this exists to check that claim.
  std::vector<Natural> extraneous_primes;
};

namespace detail {

/// One prime occurrence; `tag` links the two halves of an extraneous p / p.
struct Occurrence {
  double log;
  int tag = -1;
};

/// Calls visit(blocks) for every set partition of {0, ..., n-1}, blocks
/// given as index lists. Restricted growth strings, no deduplication of equal items.
template <typename Visit>
void for_each_set_partition(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> label(n, 0);
  std::vector<std::vector<std::size_t>> blocks;
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      blocks.assign(used, {});
      for (std::size_t k = 0; k < n; ++k) blocks[label[k]].push_back(k);
      visit(blocks);
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      label[i] = b;
      self(self, i + 1, b == used ? used + 1 : used);
    }
  };
  rec(rec, 0, 0);
}

class ExhaustiveOracle {
 public:
  ExhaustiveOracle(std::vector<Occurrence> num, std::vector<Occurrence> den, const TParam& t)
      : num_(std::move(num)), den_(std::move(den)), t_(t) {
    auto tagged = [](const Occurrence& o) { return o.tag >= 0; };
    has_tags_ = std::any_of(num_.begin(), num_.end(), tagged);
  }

  double minimum() {
    best_ = std::numeric_limits<double>::infinity();
    for_each_set_partition(num_.size(), [&](const auto& num_blocks) {
      for_each_set_partition(den_.size(), [&](const auto& den_blocks) {
        score_all_matchings(num_blocks, den_blocks);
      });
    });
    return best_;
  }

 private:
  using Blocks = std::vector<std::vector<std::size_t>>;

  double cost_of(double x) const { return t_.is_infinite() ? x : std::pow(x, t_.value()); }
  double add(double acc, double c) const { return t_.is_infinite() ? std::max(acc, c) : acc + c; }

  /// log u and log v of the reduced fraction u/v for the given blocks.
  std::pair<double, double> pair_logs(const std::vector<std::size_t>* nb,
                                      const std::vector<std::size_t>* db) const {
    double u = 0.0;
    double v = 0.0;
    if (!has_tags_) {
      if (nb) for (std::size_t k : *nb) u += num_[k].log;
      if (db) for (std::size_t k : *db) v += den_[k].log;
      return {u, v};
    }
    std::vector<int> num_tags;
    if (nb) {
      for (std::size_t k : *nb) {
        u += num_[k].log;
        if (num_[k].tag >= 0) num_tags.push_back(num_[k].tag);
      }
    }
    if (db) {
      for (std::size_t k : *db) {
        v += den_[k].log;
        if (den_[k].tag >= 0 &&
            std::find(num_tags.begin(), num_tags.end(), den_[k].tag) != num_tags.end()) {
          u -= den_[k].log;
          v -= den_[k].log;
        }
      }
    }
    return {u, v};
  }

  void score_all_matchings(const Blocks& nb, const Blocks& db) {
    std::vector<bool> den_used(db.size(), false);
    auto rec = [&](auto&& self, std::size_t i, double acc) -> void {
      if (i == nb.size()) {
        for (std::size_t j = 0; j < db.size(); ++j) {
          if (!den_used[j]) acc = add(acc, cost_of(pair_logs(nullptr, &db[j]).second));
        }
        best_ = std::min(best_, acc);
        return;
      }
      // Block i alone.
      self(self, i + 1, add(acc, cost_of(pair_logs(&nb[i], nullptr).first)));
      // Block i with each free denominator block.
      for (std::size_t j = 0; j < db.size(); ++j) {
        if (den_used[j]) continue;
        den_used[j] = true;
        const auto [u, v] = pair_logs(&nb[i], &db[j]);
        self(self, i + 1, add(acc, cost_of(std::max(u, v))));
        den_used[j] = false;
      }
    };
    rec(rec, 0, 0.0);
  }

  std::vector<Occurrence> num_;
  std::vector<Occurrence> den_;
  TParam t_;
  bool has_tags_ = false;
  double best_ = 0.0;
};

inline std::vector<Occurrence> occurrences(const arith::Factorization& f) {
  std::vector<Occurrence> out;
  for (const auto& [p, e] : f.factors) {
    for (unsigned k = 0; k < e; ++k) out.push_back({arith::log_of(p)});
  }
  return out;
}

}  // namespace detail

/// M_t(q) by brute force: every set partition of the numerator prime
/// occurrences, every set partition of the denominator occurrences, and every
/// partial matching between the two block lists. No pruning.
inline double metric_mahler_rational_oracle(const Rational& q, const TParam& t,
                                            const OracleOptions& options = {}) {
  const auto fn = arith::factorize(q.num());
  const auto fd = arith::factorize(q.den());
  const unsigned omega = fn.total_multiplicity() + fd.total_multiplicity();
  const unsigned extra = options.extraneous_primes.empty() ? 0 : 2;
  if (omega + extra > options.max_multiplicity) {
    throw Error(ErrorCode::kTooLarge, "oracle limited to Omega(num*den) <= " +
                                          std::to_string(options.max_multiplicity));
  }
  const auto num = detail::occurrences(fn);
  const auto den = detail::occurrences(fd);
  double value = detail::ExhaustiveOracle(num, den, t).minimum();

  for (const auto& p : options.extraneous_primes) {
    if (!arith::is_prime(p)) throw Error(ErrorCode::kNotPrime, p.str() + " is not prime");
    if (q.num() % p == 0 || q.den() % p == 0) {
      throw Error(ErrorCode::kInvalidArgument, "extraneous prime must not divide q");
    }
    auto n2 = num;
    auto d2 = den;
    n2.push_back({arith::log_of(p), 0});
    d2.push_back({arith::log_of(p), 0});
    value = std::min(value, detail::ExhaustiveOracle(n2, d2, t).minimum());
  }
  return objective_to_norm(value, t);
}

}  // namespace mahler::ratopt
