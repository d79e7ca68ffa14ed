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

#include <cmath>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "mahler/measure/mahler.hpp"

namespace mahler::measure {
namespace {

constexpr double kTol = 1e-9;
const double kLog2 = std::log(2.0);
const double kLog3 = std::log(3.0);
const double kLog7 = std::log(7.0);

Rational frac(long long m, long long n) { return Rational(Integer(m), Integer(n)); }

TEST(MahlerRational, Examples) {
  EXPECT_NEAR(mahler_rational(6), std::log(6.0), kTol);
  EXPECT_NEAR(mahler_rational(frac(-7, 6)), kLog7, kTol);
  EXPECT_EQ(mahler_rational(1), 0.0);
  EXPECT_EQ(mahler_rational(-1), 0.0);
}

TEST(WeilHeight, Examples) {
  EXPECT_NEAR(weil_height(AlgebraicNumber(Rational(6))), std::log(6.0), kTol);
  EXPECT_NEAR(weil_height(AlgebraicNumber(Surd(2, 2))), kLog2 / 2, kTol);
  EXPECT_NEAR(weil_height(AlgebraicNumber(QuadraticNumber(1, -7, 7))), kLog7 / 2, kTol);
}

TEST(WeilHeight, DoublingIndexHalvesHeight) {
  for (long long d : {2, 3, 6, 30, 105}) {
    for (unsigned k = 1; k <= 8; ++k) {
      const Surd s(d, k), s2(d, 2 * k);
      EXPECT_EQ(s2.degree(), 2 * s.degree());
      EXPECT_NEAR(weil_height(AlgebraicNumber(s2)), weil_height(AlgebraicNumber(s)) / 2, kTol);
    }
  }
}

TEST(MahlerQuadratic, Examples) {
  EXPECT_NEAR(mahler_quadratic(QuadraticNumber(1, -7, 7)), kLog7, 1e-12);
  const double m = mahler_quadratic(QuadraticNumber(1, -3, -3, Root::kMinus));
  EXPECT_GT(m, kLog3);
  EXPECT_LT(m, kLog7);
  EXPECT_NEAR(mahler_quadratic(QuadraticNumber(1, 0, 1)), 0.0, kTol);
}

TEST(QuadraticNumber, Validation) {
  EXPECT_THROW(QuadraticNumber(0, 1, 1), Error);
  EXPECT_THROW(QuadraticNumber(1, 2, 0), Error);
  EXPECT_THROW(QuadraticNumber(2, 4, 2), Error);   // content 2
  EXPECT_THROW(QuadraticNumber(1, -3, 2), Error);  // (x-1)(x-2)
  EXPECT_EQ(QuadraticNumber::normalized(-2, 14, -14).str(), "1,-7,7,-");
  EXPECT_EQ(QuadraticNumber::parse("1,-3,-3,-").root(), Root::kMinus);
  EXPECT_THROW(QuadraticNumber::parse("1,2"), Error);
}

TEST(Stability, Examples) {
  EXPECT_EQ(is_stable_quadratic(QuadraticNumber(1, -7, 7)), Stability::kStableOutside);
  EXPECT_EQ(is_stable_quadratic(QuadraticNumber(1, -3, -3)), Stability::kUnstable);
  EXPECT_EQ(is_stable_quadratic(QuadraticNumber(1, 0, 1)), Stability::kStableOnCircle);
  EXPECT_EQ(is_stable_quadratic(QuadraticNumber(7, -7, 1)), Stability::kStableInside);
  EXPECT_STREQ(to_string(Stability::kStableOutside), "stable_outside");
}

TEST(MahlerSurd, Examples) {
  EXPECT_NEAR(mahler_surd(Surd(2, 3)), kLog2, kTol);
  EXPECT_NEAR(mahler_surd(Surd(30, 2)), std::log(30.0), kTol);
  EXPECT_NEAR(mahler_surd(Surd(7, 1)), kLog7, kTol);
  try {
    mahler_surd(Surd(12, 2));
    FAIL() << "expected NotSquarefree";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSquarefree);
  }
}

TEST(Surd, DegreeRule) {
  EXPECT_EQ(Surd(2, 6).degree(), 6u);
  EXPECT_EQ(Surd(4, 2).degree(), 1u);
  EXPECT_EQ(Surd(8, 6).degree(), 2u);
  EXPECT_EQ(Surd(frac(9, 4), 4).degree(), 2u);
  EXPECT_EQ(Surd(64, 6).degree(), 1u);
  EXPECT_EQ(Surd(1, 5).degree(), 1u);
  EXPECT_NEAR(mahler(Surd(8, 6)), kLog2, kTol);
  EXPECT_NEAR(mahler(Surd(frac(7, 3), 2)), kLog7, kTol);
  EXPECT_EQ(Surd::parse("(7/6)^(1/2)"), Surd(frac(7, 6), 2));
  EXPECT_EQ(Surd::parse("30^(1/2)"), Surd(30, 2));
  EXPECT_THROW(Surd::parse("30^(1/0)"), Error);
}

TEST(Norm, Examples) {
  EXPECT_EQ(norm_quadratic(QuadraticNumber(1, -7, 7)).str(), "7");
  EXPECT_EQ(norm_quadratic(QuadraticNumber(3, 0, -7)).str(), "-7/3");
  EXPECT_EQ(norm_quadratic(QuadraticNumber(2, 0, -3)).str(), "-3/2");
  EXPECT_EQ(norm_surd(Surd(21, 2)).str(), "-21");
  EXPECT_EQ(norm_surd(Surd(frac(7, 3), 2)).str(), "-7/3");
  EXPECT_EQ(norm_surd(Surd(5, 1)).str(), "5");
}

TEST(Norm, SurdNormPreservesMeasure) {
  for (long long m : {1, 2, 3, 5, 6, 7, 12, 30, 64, 210}) {
    for (long long n : {1, 2, 3, 5, 11}) {
      for (unsigned k = 1; k <= 6; ++k) {
        const Surd s(frac(m, n), k);
        EXPECT_NEAR(mahler(s), mahler_rational(norm_surd(s)), kTol) << s.str();
      }
    }
  }
}

class RandomQuadratics : public ::testing::Test {
 protected:
  template <typename Visit>
  void for_each(int count, Visit visit) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coef(-300, 300);
    int made = 0;
    while (made < count) {
      const int a = coef(rng), b = coef(rng), c = coef(rng);
      if (a <= 0 || c == 0) continue;
      try {
        visit(QuadraticNumber(a, b, c, rng() % 2 ? Root::kPlus : Root::kMinus));
        ++made;
      } catch (const Error&) {
      }
    }
  }
};

TEST_F(RandomQuadratics, LowerBoundLaw) {
  for_each(5000, [](const QuadraticNumber& q) {
    const double floor = std::log(static_cast<double>(std::max(q.a(), std::abs(q.c()))));
    const double m = mahler_quadratic(q);
    EXPECT_GE(m, floor - kTol);
    if (is_stable_quadratic(q) == Stability::kUnstable) {
      EXPECT_GT(m, floor + kTol) << q.str();
    } else {
      EXPECT_NEAR(m, floor, kTol) << q.str();
    }
  });
}

TEST_F(RandomQuadratics, InvariantUnderReflectionAndRootChoice) {
  for_each(5000, [](const QuadraticNumber& q) {
    const double m = mahler_quadratic(q);
    EXPECT_NEAR(m, mahler_quadratic(QuadraticNumber(q.a(), -q.b(), q.c(), q.root())), kTol);
    const Root other = q.root() == Root::kPlus ? Root::kMinus : Root::kPlus;
    EXPECT_NEAR(m, mahler_quadratic(QuadraticNumber(q.a(), q.b(), q.c(), other)), kTol);
  });
}

TEST_F(RandomQuadratics, ConjugatesAreRoots) {
  for_each(2000, [](const QuadraticNumber& q) {
    const auto [r1, r2] = q.conjugates();
    for (const auto& r : {r1, r2}) {
      const std::complex<double> f =
          static_cast<double>(q.a()) * r * r + static_cast<double>(q.b()) * r + static_cast<double>(q.c());
      EXPECT_LT(std::abs(f), 1e-6 * (q.a() + std::abs(q.b()) + std::abs(q.c())) * (1 + std::norm(r)));
    }
  });
}

}  // namespace
}  // namespace mahler::measure
