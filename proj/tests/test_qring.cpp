#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tl/errors.hpp"
#include "tl/qring.hpp"

using namespace tl;
using tl::testing::random_laurent;
using tl::testing::random_nonzero_laurent;
using tl::testing::random_nonzero_scalar;
using tl::testing::random_scalar;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p += LaurentPoly::monomial(c, e);
  return p;
}

}  // namespace

TEST(LaurentPoly, ZeroAndConstants) {
  LaurentPoly z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, LaurentPoly(0));
  EXPECT_TRUE(LaurentPoly(7).is_constant());
  EXPECT_FALSE(LaurentPoly::q(1).is_constant());
  EXPECT_TRUE(LaurentPoly::q(-3).is_monomial());
  EXPECT_EQ(LaurentPoly::q(-3).low(), -3);
}

TEST(LaurentPoly, TrimsZerosOnBothEnds) {
  auto p = LaurentPoly::from_dense(-2, {0, 0, 3, 0, 5, 0});
  EXPECT_EQ(p.low(), 0);
  EXPECT_EQ(p.high(), 2);
  EXPECT_EQ(p, poly({{0, 3}, {2, 5}}));
  EXPECT_EQ(p.term_count(), 2u);
  EXPECT_EQ(LaurentPoly::from_dense(4, {0, 0}), LaurentPoly());
}

TEST(LaurentPoly, CancellationToZero) {
  auto p = poly({{-1, 1}, {3, 2}});
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p + (-p)).low(), 0);
}

TEST(LaurentPoly, Multiplication) {
  // (q^-1 + q)^2 = q^-2 + 2 + q^2
  auto two = quantum_int(2);
  EXPECT_EQ(two * two, poly({{-2, 1}, {0, 2}, {2, 1}}));
  EXPECT_EQ(two * LaurentPoly(), LaurentPoly());
  EXPECT_EQ(LaurentPoly::q(3) * LaurentPoly::q(-5), LaurentPoly::q(-2));
}

TEST(LaurentPoly, AddProductMatchesProduct) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto acc = random_laurent(rng);
    auto x = random_laurent(rng);
    auto y = random_laurent(rng);
    auto expect = acc + x * y;
    acc.add_product(x, y);
    EXPECT_EQ(acc, expect);
  }
}

TEST(LaurentPoly, ContentAndBigCoefficients) {
  EXPECT_EQ(poly({{0, 6}, {4, -9}}).content(), 3);
  Integer big("123456789012345678901234567890");
  auto p = LaurentPoly::monomial(big, 2);
  EXPECT_EQ((p * p).coeff(4), big * big);
}

TEST(QuantumInt, Examples) {
  EXPECT_EQ(quantum_int(0), LaurentPoly());
  EXPECT_EQ(quantum_int(1), LaurentPoly(1));
  EXPECT_EQ(quantum_int(2), poly({{-1, 1}, {1, 1}}));
  EXPECT_EQ(quantum_int(4), poly({{-3, 1}, {-1, 1}, {1, 1}, {3, 1}}));
}

TEST(QuantumInt, Recurrence) {
  for (int n = 1; n <= 20; ++n) {
    EXPECT_EQ(quantum_int(2) * quantum_int(n), quantum_int(n + 1) + quantum_int(n - 1)) << n;
  }
}

TEST(QuantumInt, ProductIdentity) {
  // [2]*[2] = [3] + 1
  EXPECT_EQ(arith(Scalar::quantum(2), Scalar::quantum(2), ArithOp::mul),
            Scalar::quantum(3) + Scalar(1));
}

TEST(Gcd, QuantumIntegers) {
  // gcd([2][3], [3][5]) is [3] up to a unit: q^-2 + 1 + q^2 -> 1 + q^2 + q^4
  auto g = gcd(quantum_int(2) * quantum_int(3), quantum_int(3) * quantum_int(5));
  EXPECT_EQ(g, quantum_int(3).shifted(2));
  // [2] divides [4]
  EXPECT_EQ(gcd(quantum_int(4), quantum_int(6)), quantum_int(2).shifted(1));
  EXPECT_EQ(gcd(LaurentPoly(), LaurentPoly()), LaurentPoly());
  EXPECT_EQ(gcd(poly({{0, 4}}), poly({{0, 6}})), LaurentPoly(2));
}

TEST(Gcd, DividesBothArguments) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    auto common = random_nonzero_laurent(rng, 3);
    auto a = common * random_nonzero_laurent(rng, 3);
    auto b = common * random_nonzero_laurent(rng, 3);
    auto g = gcd(a, b);
    ASSERT_TRUE(divides(g, a));
    ASSERT_TRUE(divides(g, b));
    EXPECT_TRUE(divides(common, g)) << to_string(g) << " vs " << to_string(common);
    EXPECT_EQ(exact_quotient(a, g) * g, a);
  }
}

TEST(Scalar, CanonicalFormExamples) {
  // 2q / 4q^3 = q^-2 / 2
  Scalar s(LaurentPoly::monomial(2, 1), LaurentPoly::monomial(4, 3));
  EXPECT_EQ(s.num(), LaurentPoly::q(-2));
  EXPECT_EQ(s.den(), LaurentPoly(2));

  // 1 / (-1 - q) = -1 / (1 + q)
  Scalar t(LaurentPoly(1), poly({{0, -1}, {1, -1}}));
  EXPECT_EQ(t.num(), LaurentPoly(-1));
  EXPECT_EQ(t.den(), poly({{0, 1}, {1, 1}}));

  // 1/[2] = q / (1 + q^2)
  auto half = Scalar::quantum(2).inverse();
  EXPECT_EQ(half.num(), LaurentPoly::q(1));
  EXPECT_EQ(half.den(), poly({{0, 1}, {2, 1}}));

  Scalar zero(LaurentPoly(), poly({{3, 5}}));
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.den(), LaurentPoly(1));
}

TEST(Scalar, RatioOfQuantumInts) {
  auto r = Scalar::quantum(3) / Scalar::quantum(4);
  EXPECT_EQ(to_string(r), "(q + q^3 + q^5) / (1 + q^2 + q^4 + q^6)");
  EXPECT_TRUE((r * (Scalar::quantum(4) / Scalar::quantum(3))).is_one());
}

TEST(Scalar, DivisionByZero) {
  EXPECT_THROW(Scalar(LaurentPoly(1), LaurentPoly()), DivisionByZero);
  EXPECT_THROW(Scalar().inverse(), DivisionByZero);
  EXPECT_THROW(arith(Scalar(1), Scalar(), ArithOp::div), DivisionByZero);
}

TEST(Scalar, ArithOps) {
  auto x = Scalar::quantum(3);
  EXPECT_TRUE(arith(x, x, ArithOp::sub).is_zero());
  EXPECT_EQ(arith(x, x, ArithOp::add), Scalar(2) * x);
  EXPECT_TRUE(arith(x, x, ArithOp::div).is_one());
}

TEST(Scalar, CanonicalIsIdempotent) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    auto s = random_scalar(rng);
    auto again = Scalar::canonical(s.num(), s.den());
    EXPECT_EQ(again.num(), s.num());
    EXPECT_EQ(again.den(), s.den());
    if (!s.is_zero()) {
      EXPECT_EQ(s.den().low(), 0);
      EXPECT_GT(sgn(s.den().leading()), 0);
      EXPECT_EQ(gcd(s.num(), s.den()), LaurentPoly(1));
    }
  }
}

TEST(Scalar, EqualFractionsShareFields) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    auto num = random_laurent(rng);
    auto den = random_nonzero_laurent(rng, 3);
    auto k = random_nonzero_laurent(rng, 2);
    EXPECT_EQ(Scalar(num, den), Scalar(num * k, den * k));
  }
}

TEST(Scalar, FieldAxioms) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    auto a = random_scalar(rng);
    auto b = random_scalar(rng);
    auto c = random_scalar(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    auto nz = random_nonzero_scalar(rng);
    EXPECT_TRUE((nz * nz.inverse()).is_one());
    EXPECT_EQ(a / nz * nz, a);
  }
}

TEST(Series, Examples) {
  // 1/[2] = q - q^3 + q^5 - q^7 + ...
  auto s = series_expand(Scalar::quantum(2).inverse(), 7);
  std::vector<std::pair<int, Integer>> expect = {{1, 1}, {3, -1}, {5, 1}, {7, -1}};
  EXPECT_EQ(s, expect);

  auto five = series_expand(Scalar(5), 3);
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0].first, 0);
  EXPECT_EQ(five[0].second, 5);

  // [2] itself starts at q^-1
  auto two = series_expand(Scalar::quantum(2), 0);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].first, -1);

  EXPECT_TRUE(series_expand(Scalar(), 10).empty());
}

TEST(Series, NotExpandable) {
  const Scalar bad(LaurentPoly(1), poly({{0, 2}, {1, 1}}));
  EXPECT_THROW(series_expand(bad, 4), NotExpandable);
  EXPECT_THROW(series_expand(Scalar(LaurentPoly(1), LaurentPoly(3)), 4), NotExpandable);
}

TEST(Series, MatchesLongDivision) {
  // f_(1,1,1,-1) = [3]/[4], an invertible-constant denominator
  auto r = Scalar::quantum(3) / Scalar::quantum(4);
  std::vector<long long> num, den;
  for (auto& c : r.num().dense()) num.push_back(c.get_si());
  for (auto& c : r.den().dense()) den.push_back(c.get_si());
  const int order = 25;
  auto oracle = tl::testing::long_division(num, den, order - r.num().low());
  auto got = series_expand(r, order);
  std::size_t at = 0;
  for (int i = 0; i + r.num().low() <= order; ++i) {
    if (oracle[i] == 0) continue;
    ASSERT_LT(at, got.size());
    EXPECT_EQ(got[at].first, i + r.num().low());
    EXPECT_EQ(got[at].second, Integer(static_cast<long>(oracle[i])));
    ++at;
  }
  EXPECT_EQ(at, got.size());
}

TEST(Series, TruncationIsConsistent) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto num = random_laurent(rng);
    std::uniform_int_distribution<int> c(-3, 3);
    auto den = LaurentPoly::from_dense(0, {1, c(rng), c(rng), c(rng)});
    Scalar s(num, den);
    try {
      auto longer = series_expand(s, 12);
      auto shorter = series_expand(s, 6);
      std::vector<std::pair<int, Integer>> cut;
      for (auto& t : longer)
        if (t.first <= 6) cut.push_back(t);
      EXPECT_EQ(shorter, cut);
    } catch (const NotExpandable&) {
      EXPECT_NE(abs(s.den().coeff(0)), 1);
    }
  }
}

TEST(Printing, Forms) {
  EXPECT_EQ(to_string(LaurentPoly()), "0");
  EXPECT_EQ(to_string(poly({{-1, 1}, {3, 2}})), "q^-1 + 2*q^3");
  EXPECT_EQ(to_string(Scalar::quantum(2)), "(q^-1 + q) / 1");
  EXPECT_EQ(to_string(Scalar::quantum(2).inverse()), "q / (1 + q^2)");
  EXPECT_EQ(to_string(Scalar(-1)), "-1 / 1");
}
