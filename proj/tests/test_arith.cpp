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

#include <random>

#include <gtest/gtest.h>

#include "mahler/arith/factorize.hpp"
#include "mahler/arith/rational.hpp"
#include "mahler/arith/valuation.hpp"

namespace mahler::arith {
namespace {

std::vector<PrimePower> pp(std::initializer_list<std::pair<long long, unsigned>> list) {
  std::vector<PrimePower> out;
  for (auto [p, e] : list) out.push_back({Natural(p), e});
  return out;
}

TEST(Rational, ReducesEagerly) {
  const Rational r(Integer(-12), Integer(18));
  EXPECT_EQ(r.num(), 2);
  EXPECT_EQ(r.den(), 3);
  EXPECT_TRUE(r.negative());
  EXPECT_EQ(r.str(), "-2/3");
  EXPECT_EQ(Rational(Integer(5), Integer(-10)).str(), "-1/2");
}

TEST(Rational, ZeroIsRejected) {
  EXPECT_THROW(Rational(0), Error);
  EXPECT_THROW(Rational::parse("0/5"), Error);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), Error);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("360/7").str(), "360/7");
  EXPECT_EQ(Rational::parse("-90/77").str(), "-90/77");
  EXPECT_EQ(Rational::parse("4/2").str(), "2");
  EXPECT_THROW(Rational::parse("3/-4"), Error);
  EXPECT_THROW(Rational::parse("abc"), Error);
  EXPECT_THROW(Rational::parse(""), Error);
}

TEST(Rational, Arithmetic) {
  const Rational a(Integer(2), Integer(3));
  const Rational b(Integer(-9), Integer(4));
  EXPECT_EQ((a * b).str(), "-3/2");
  EXPECT_EQ((a / b).str(), "-8/27");
  EXPECT_EQ(a.inverse().str(), "3/2");
  EXPECT_EQ(b.pow(2).str(), "81/16");
  EXPECT_EQ(b.pow(-1).str(), "-4/9");
  EXPECT_TRUE(b < a);
}

TEST(Factorize, Examples) {
  EXPECT_TRUE(factorize(1).factors.empty());
  EXPECT_EQ(factorize(30).factors, pp({{2, 1}, {3, 1}, {5, 1}}));
  EXPECT_EQ(factorize(Natural(1) << 60).factors, pp({{2, 60}}));
}

TEST(Factorize, LargeSemiprimesAndBounds) {
  const Natural p("1000000000039");   // prime
  const Natural q("10000000000037");  // prime; p * q is above the Miller-Rabin-only range
  const auto f = factorize(p * q);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, p);
  EXPECT_EQ(f.factors[1].prime, q);
  EXPECT_EQ(f.product(), p * q);
  EXPECT_THROW(factorize(Natural(1) << 96), Error);
  EXPECT_NO_THROW(factorize((Natural(1) << 96) - 1));
  EXPECT_THROW(factorize(0), Error);
}

TEST(Primality, KnownValues) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(Natural("18446744073709551557")));  // largest prime < 2^64
  EXPECT_FALSE(is_prime(Natural("3317044064679887385961981")));  // strong pseudoprime to bases <= 41
  EXPECT_TRUE(is_prime(Natural("79228162514264337593543950319")));  // 2^96 - 17
  EXPECT_FALSE(is_prime(Natural(561)));
}

TEST(Factorize, RoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Natural n = 1;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < count; ++j) n *= Natural(1 + rng() % 1'000'000'000ULL);
    const auto f = factorize(n);
    EXPECT_EQ(f.product(), n);
    for (const auto& [p, e] : f.factors) {
      EXPECT_TRUE(is_prime(p));
      EXPECT_GE(e, 1u);
    }
    for (std::size_t k = 1; k < f.factors.size(); ++k) {
      EXPECT_LT(f.factors[k - 1].prime, f.factors[k].prime);
    }
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(nu(2, Rational(12)), 2);
  EXPECT_EQ(nu(5, Rational(Integer(7), Integer(50))), -2);
  EXPECT_EQ(nu(3, Rational(7)), 0);
  EXPECT_THROW(nu(4, Rational(12)), Error);
}

TEST(Valuation, Additivity) {
  std::mt19937_64 rng(11);
  const long long primes[] = {2, 3, 5, 7, 11, 13};
  for (int i = 0; i < 2000; ++i) {
    const Rational x(Integer(1 + rng() % 5000), Integer(1 + rng() % 5000));
    const Rational y(Integer(1 + rng() % 5000), Integer(1 + rng() % 5000));
    for (long long p : primes) EXPECT_EQ(nu(p, x * y), nu(p, x) + nu(p, y));
  }
}

TEST(DividesRational, Examples) {
  EXPECT_EQ(divides_rational(7, Rational(Integer(7), Integer(6))), DividesSide::kNumerator);
  EXPECT_EQ(divides_rational(5, Rational(Integer(7), Integer(50))), DividesSide::kDenominator);
  EXPECT_EQ(divides_rational(4, Rational(Integer(2), Integer(3))), DividesSide::kNo);
}

TEST(DividesRational, MatchesNumeratorDivisibility) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Natural d = 2 + rng() % 30;
    const Rational r(Integer(1 + rng() % 1000), Integer(1 + rng() % 1000));
    EXPECT_EQ(divides_rational(d, r) == DividesSide::kNumerator, r.num() % d == 0);
  }
}

TEST(GcdChain, Examples) {
  EXPECT_EQ(gcd_chain(6, {4, 9}), (std::vector<Natural>{2, 3}));
  EXPECT_EQ(gcd_chain(12, {8, 9, 5}), (std::vector<Natural>{4, 3, 1}));
  EXPECT_EQ(gcd_chain(1, {7, 7}), (std::vector<Natural>{1, 1}));
  EXPECT_THROW(gcd_chain(5, {4, 9}), Error);
}

TEST(GcdChain, Properties) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    std::vector<Natural> r;
    Natural product = 1;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < n; ++j) {
      r.push_back(1 + rng() % 200);
      product *= r.back();
    }
    // m: a random divisor of the product.
    Natural m = 1;
    for (const auto& [p, e] : factorize(product).factors) {
      for (unsigned k = rng() % (e + 1); k > 0; --k) m *= p;
    }
    const auto out = gcd_chain(m, r);
    ASSERT_EQ(out.size(), r.size());
    Natural prod = 1;
    for (std::size_t j = 0; j < out.size(); ++j) {
      EXPECT_EQ(r[j] % out[j], 0);
      prod *= out[j];
      EXPECT_EQ(m % prod, 0);
    }
    EXPECT_EQ(prod, m);
  }
}

}  // namespace
}  // namespace mahler::arith
