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
#include <compare>
#include <vector>

#include "mahler/arith/factorize.hpp"
#include "mahler/ratopt/decomposition.hpp"

namespace mahler::ratopt {

/// Costs within this (relative) distance are treated as equal and resolved
/// by the deterministic tie-break: fewest factors, then the lexicographically
/// smallest ascending factor list.
inline constexpr double kTieTolerance = 1e-12;

struct MetricResult {
  double value = 0.0;
  RationalDecomposition witness;
};

namespace detail {

/// One distinct prime of num(q) * den(q). Slots are kept in decreasing
/// prime order; numerator and denominator primes never coincide.
struct PrimeSlot {
  Natural prime;
  double log = 0.0;
  double weight = 0.0;  // (log p)^t, or log p for t = inf
  bool in_denominator = false;
  unsigned multiplicity = 0;
};

using Exponents = std::vector<unsigned>;

inline std::vector<PrimeSlot> prime_slots(const Rational& q, const TParam& t) {
  std::vector<PrimeSlot> slots;
  auto add = [&](const arith::Factorization& f, bool den) {
    for (const auto& [p, e] : f.factors) {
      const double lp = arith::log_of(p);
      slots.push_back({p, lp, t.is_infinite() ? lp : std::pow(lp, t.value()), den, e});
    }
  };
  add(arith::factorize(q.num()), false);
  add(arith::factorize(q.den()), true);
  std::sort(slots.begin(), slots.end(),
            [](const PrimeSlot& a, const PrimeSlot& b) { return a.prime > b.prime; });
  return slots;
}

/// Branch and bound over multisets of (u, v) pairs with prod u = num(q) and
/// prod v = den(q). Pairs are generated in a canonical order (the next pair
/// always holds the largest unassigned prime; pairs sharing that prime come
/// in non-increasing lexicographic exponent order), so each multiset is
/// visited at most once.
class PairSearch {
 public:
  PairSearch(std::vector<PrimeSlot> slots, const TParam& t)
      : slots_(std::move(slots)), t_(t), remaining_(slots_.size()) {
    for (std::size_t i = 0; i < slots_.size(); ++i) remaining_[i] = slots_[i].multiplicity;
  }

  void seed(const std::vector<Exponents>& pairs) {
    double obj = 0.0;
    for (const auto& e : pairs) obj = combine(obj, pair_cost(e));
    offer(obj, pairs);
  }

  void run() {
    chosen_.clear();
    explore(0.0, slots_.size(), nullptr);
  }

  double best_objective() const { return best_objective_; }
  const std::vector<Rational>& best_factors() const { return best_factors_; }

  /// Pair objective contribution: max(log u, log v) raised to t.
  double pair_cost(const Exponents& e) const {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      (slots_[i].in_denominator ? den : num) += e[i] * slots_[i].log;
    }
    const double x = std::max(num, den);
    return t_.is_infinite() ? x : std::pow(x, t_.value());
  }

  std::vector<Rational> factors_of(const std::vector<Exponents>& pairs) const {
    std::vector<Rational> out;
    out.reserve(pairs.size());
    for (const auto& e : pairs) {
      Natural u = 1;
      Natural v = 1;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        const Natural pe = boost::multiprecision::pow(slots_[i].prime, e[i]);
        (slots_[i].in_denominator ? v : u) *= pe;
      }
      out.emplace_back(u, v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  double combine(double acc, double contribution) const {
    return t_.is_infinite() ? std::max(acc, contribution) : acc + contribution;
  }

  double tolerance() const { return kTieTolerance * std::max(1.0, best_objective_); }

  /// Admissible completion bound. Every unassigned occurrence ends up on
  /// its own side of some pair, and (sum log p)^t >= sum (log p)^t for t >= 1,
  /// so each side alone bounds the remaining cost.
  double remaining_bound() const {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (remaining_[i] == 0) continue;
      if (t_.is_infinite()) {
        (slots_[i].in_denominator ? den : num) =
            std::max(slots_[i].in_denominator ? den : num, slots_[i].weight);
      } else {
        (slots_[i].in_denominator ? den : num) += remaining_[i] * slots_[i].weight;
      }
    }
    return std::max(num, den);
  }

  /// Fewest further pairs that can complete a solution no worse than the
  /// incumbent: each pair has max(log u, log v) <= cap while the pairs must
  /// absorb the heavier side's total log.
  std::size_t min_more_pairs(double cost) const {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      (slots_[i].in_denominator ? den : num) += remaining_[i] * slots_[i].log;
    }
    const double heavier = std::max(num, den);
    if (heavier == 0.0) return 0;
    const double slack = best_objective_ + tolerance() - (t_.is_infinite() ? 0.0 : cost);
    if (slack <= 0.0) return slots_.size() + 1 + chosen_.size();
    const double cap = t_.is_infinite() ? slack : std::pow(slack, 1.0 / t_.value());
    const double ratio = heavier / cap;
    const auto n = static_cast<std::size_t>(std::ceil(ratio - 1e-9));
    return std::max<std::size_t>(1, n);
  }

  /// Could a node with this bound and pair count still win?
  bool worth_exploring(double bound, double cost, std::size_t pairs_so_far) const {
    if (!has_best_) return true;
    const double tol = tolerance();
    if (bound > best_objective_ + tol) return false;
    if (bound < best_objective_ - tol) return true;
    return pairs_so_far + min_more_pairs(cost) <= best_factors_.size();
  }

  void offer(double obj, const std::vector<Exponents>& pairs) {
    if (has_best_) {
      const double tol = tolerance();
      if (obj > best_objective_ + tol) return;
      if (obj >= best_objective_ - tol) {
        if (pairs.size() > best_factors_.size()) return;
        auto candidate = factors_of(pairs);
        if (pairs.size() == best_factors_.size() &&
            !std::lexicographical_compare(candidate.begin(), candidate.end(),
                                          best_factors_.begin(), best_factors_.end())) {
          return;
        }
        best_objective_ = std::min(obj, best_objective_);
        best_factors_ = std::move(candidate);
        return;
      }
    }
    has_best_ = true;
    best_objective_ = obj;
    best_factors_ = factors_of(pairs);
  }

  struct Child {
    double bound;
    double cost;
    Exponents exponents;
  };

  void enumerate(std::size_t top, std::size_t j, bool tight, const Exponents* prev,
                 Exponents& e, std::vector<Exponents>& out) const {
    if (j == slots_.size()) {
      out.push_back(e);
      return;
    }
    const unsigned lo = j == top ? 1u : 0u;
    unsigned hi = remaining_[j];
    if (tight) hi = std::min(hi, (*prev)[j]);
    for (unsigned v = hi + 1; v-- > lo;) {
      e[j] = v;
      enumerate(top, j + 1, tight && v == (*prev)[j], prev, e, out);
    }
    e[j] = 0;
  }

  void explore(double cost, std::size_t prev_top, const Exponents* prev) {
    std::size_t top = 0;
    while (top < slots_.size() && remaining_[top] == 0) ++top;
    if (top == slots_.size()) {
      offer(cost, chosen_);
      return;
    }
    std::vector<Exponents> options;
    Exponents e(slots_.size(), 0);
    enumerate(top, top, prev_top == top, prev, e, options);

    std::vector<Child> children;
    children.reserve(options.size());
    for (auto& opt : options) {
      const double c = combine(cost, pair_cost(opt));
      for (std::size_t i = top; i < slots_.size(); ++i) remaining_[i] -= opt[i];
      const double bound = combine(c, remaining_bound());
      for (std::size_t i = top; i < slots_.size(); ++i) remaining_[i] += opt[i];
      children.push_back({bound, c, std::move(opt)});
    }
    std::stable_sort(children.begin(), children.end(),
                     [](const Child& a, const Child& b) { return a.bound < b.bound; });

    for (const auto& child : children) {
      for (std::size_t i = top; i < slots_.size(); ++i) remaining_[i] -= child.exponents[i];
      if (worth_exploring(child.bound, child.cost, chosen_.size() + 1)) {
        chosen_.push_back(child.exponents);
        explore(child.cost, top, &chosen_.back());
        chosen_.pop_back();
      }
      for (std::size_t i = top; i < slots_.size(); ++i) remaining_[i] += child.exponents[i];
    }
  }

  std::vector<PrimeSlot> slots_;
  TParam t_;
  Exponents remaining_;
  std::vector<Exponents> chosen_;
  bool has_best_ = false;
  double best_objective_ = 0.0;
  std::vector<Rational> best_factors_;
};

/// Pairs blocks largest-with-largest. For f increasing, an exchange argument
/// shows this minimises sum f(max(a_i, b_i)) over all matchings.
inline std::vector<Exponents> zip_sorted(const std::vector<PrimeSlot>& slots,
                                         std::vector<Exponents> num_blocks,
                                         std::vector<Exponents> den_blocks) {
  auto load = [&](const Exponents& e) {
    double s = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * slots[i].log;
    return s;
  };
  auto by_load = [&](const Exponents& a, const Exponents& b) { return load(a) > load(b); };
  std::stable_sort(num_blocks.begin(), num_blocks.end(), by_load);
  std::stable_sort(den_blocks.begin(), den_blocks.end(), by_load);
  std::vector<Exponents> pairs;
  const std::size_t n = std::max(num_blocks.size(), den_blocks.size());
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(slots.size(), 0);
    if (i < num_blocks.size()) e = num_blocks[i];
    if (i < den_blocks.size()) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += den_blocks[i][j];
    }
    pairs.push_back(std::move(e));
  }
  return pairs;
}

/// First-fit decreasing with bin capacity log(largest prime): the packing
/// that realises the t = inf value with few factors.
inline std::vector<Exponents> first_fit_pairs(const std::vector<PrimeSlot>& slots) {
  const double cap = slots.front().log * (1.0 + 1e-12);
  std::vector<Exponents> sides[2];
  std::vector<double> loads[2];
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const int side = slots[i].in_denominator ? 1 : 0;
    for (unsigned k = 0; k < slots[i].multiplicity; ++k) {
      std::size_t b = 0;
      while (b < loads[side].size() && loads[side][b] + slots[i].log > cap) ++b;
      if (b == loads[side].size()) {
        sides[side].emplace_back(slots.size(), 0);
        loads[side].push_back(0.0);
      }
      ++sides[side][b][i];
      loads[side][b] += slots[i].log;
    }
  }
  return zip_sorted(slots, std::move(sides[0]), std::move(sides[1]));
}

inline std::vector<Exponents> singleton_pairs(const std::vector<PrimeSlot>& slots) {
  std::vector<Exponents> sides[2];
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (unsigned k = 0; k < slots[i].multiplicity; ++k) {
      Exponents e(slots.size(), 0);
      e[i] = 1;
      sides[slots[i].in_denominator ? 1 : 0].push_back(std::move(e));
    }
  }
  return zip_sorted(slots, std::move(sides[0]), std::move(sides[1]));
}

}  // namespace detail

/// M_t(q) for nonzero rational q, with a rational decomposition attaining it.
///
/// Rational points suffice for the infimum, and any attaining rational
/// factorisation can be rewritten so that every factor has numerator
/// dividing num(q) and denominator dividing den(q) without raising the cost.
/// The search space is therefore the pairs (u, v) of such divisors.
inline MetricResult metric_mahler_rational(const Rational& q, const TParam& t) {
  MetricResult result;
  auto slots = detail::prime_slots(q, t);
  if (slots.empty()) {
    result.witness = make_decomposition({}, t);
    return result;
  }

  detail::PairSearch search(slots, t);
  detail::Exponents all(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) all[i] = slots[i].multiplicity;
  search.seed({all});
  search.seed(detail::singleton_pairs(slots));
  search.seed(detail::first_fit_pairs(slots));
  search.run();

  std::vector<Rational> factors = search.best_factors();
  if (q.negative()) factors.front() = -factors.front();
  result.witness = make_decomposition(std::move(factors), t);
  result.value = result.witness.total_cost;
  return result;
}

/// (t, M_t(q)) for each grid point.
inline std::vector<std::pair<TParam, double>> mt_curve(const Rational& q,
                                                       const std::vector<TParam>& grid) {
  std::vector<std::pair<TParam, double>> out;
  out.reserve(grid.size());
  for (const auto& t : grid) out.emplace_back(t, metric_mahler_rational(q, t).value);
  return out;
}

}  // namespace mahler::ratopt
