#include "support.hpp"

#include <gtest/gtest.h>

using namespace leib;
using testing_support::Rng;
using big = Rational::big_type;

namespace {

big as_big(const Rational& r) { return r.to_big(); }

} // namespace

TEST(Rational, NormalizesSignAndLowestTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(0, -7).to_string(), "0");
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
  EXPECT_TRUE(Rational(4, 4).is_one());
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-12/8").to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("+5").to_string(), "5");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1//2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  const std::string huge = "123456789012345678901234567890/11";
  EXPECT_EQ(Rational::parse(huge).to_string(), huge);
}

// the fast path must agree with plain multiprecision arithmetic everywhere,
// including across the int64 boundary
TEST(Rational, ArithmeticMatchesMultiprecisionOracle) {
  Rng rng(11);
  const std::int64_t edges[] = {INT64_MAX, INT64_MIN + 1, INT64_MAX / 3, 1LL << 40, -(1LL << 62), 7, -1, 1};
  auto pick = [&]() -> Rational {
    const auto k = rng.integer(0, 3);
    if (k == 0) return Rational(edges[rng.index(8)], rng.integer(1, 1000));
    if (k == 1) return Rational(rng.integer(-1000, 1000), edges[rng.index(4)]);
    return rng.rational(1000);
  };
  for (int t = 0; t < 2000; ++t) {
    const Rational a = pick(), b = pick();
    const big A = as_big(a), B = as_big(b);
    ASSERT_EQ(as_big(a + b), A + B);
    ASSERT_EQ(as_big(a - b), A - B);
    ASSERT_EQ(as_big(a * b), A * B);
    if (!b.is_zero()) {
      ASSERT_EQ(as_big(a / b), A / B);
    }
    ASSERT_EQ(a < b, A < B);
    ASSERT_EQ(a == b, A == B);
  }
}

TEST(Rational, BigValuesComeBackToFastPathEquality) {
  const Rational big_one = Rational(INT64_MAX) * Rational(INT64_MAX);
  const Rational back = big_one / Rational(INT64_MAX);
  EXPECT_EQ(back, Rational(INT64_MAX));
  EXPECT_TRUE((big_one - big_one).is_zero());
  EXPECT_TRUE((big_one / big_one).is_one());
}

TEST(Scalar, GaussianArithmetic) {
  const Scalar i = Scalar::i();
  EXPECT_EQ(i * i, Scalar(-1));
  const Scalar z = Scalar::parse("1/2+3i");
  EXPECT_EQ(z * z.inverse(), Scalar(1));
  EXPECT_EQ((z * z.conj()).to_string(), "37/4");
  EXPECT_TRUE(Scalar(3).is_real());
  EXPECT_FALSE(i.fits(Field::Q));
}

TEST(Scalar, TokenSyntaxRoundTrips) {
  for (const char* s : {"0", "-7", "3/4", "i", "-i", "1+i", "-1/2-3/5i", "2/3i", "1+1/2i"}) {
    const Scalar v = Scalar::parse(s);
    EXPECT_EQ(Scalar::parse(v.to_string()), v) << s;
  }
  EXPECT_EQ(Scalar::parse("i"), Scalar::i());
  EXPECT_EQ(Scalar::parse("-1/2-3/5i"), Scalar(Rational(-1, 2), Rational(-3, 5)));
  for (const char* bad : {"", "+", "1+", "i2", "1 /2", "1/2/3", "--1", "ii"}) EXPECT_THROW(Scalar::parse(bad), std::invalid_argument) << bad;
}

TEST(Scalar, RandomFieldAxioms) {
  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    const Scalar a = rng.scalar(Field::Qi), b = rng.scalar(Field::Qi), c = rng.scalar(Field::Qi);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), Scalar(1));
    }
  }
}

TEST(Matrix, RrefExamples) {
  const auto r = rref(Mat::from_rows({{Scalar(2), Scalar(4)}, {Scalar(1), Scalar(2)}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.reduced, Mat::from_rows({{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(0)}}));
  EXPECT_EQ(rref(Mat::identity(3)).reduced, Mat::identity(3));
  EXPECT_EQ(rref(Mat::identity(3)).rank, 3u);
}

TEST(Matrix, RrefPreservesRowSpace) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const Mat m = t % 2 ? rng.mat(5, 7) : rng.low_rank(5, 7, 3);
    const auto r = rref(m);
    std::vector<Vec> orig, red;
    for (std::size_t i = 0; i < 5; ++i) {
      auto row = m.row(i);
      orig.emplace_back(row.begin(), row.end());
    }
    for (std::size_t i = 0; i < r.rank; ++i) {
      auto row = r.reduced.row(i);
      red.emplace_back(row.begin(), row.end());
    }
    // oracle: solve each row of one matrix against the rows of the other
    const Mat O = Mat::from_rows(orig).transpose();
    const Mat R = Mat::from_rows(red).transpose();
    for (const auto& v : red) ASSERT_TRUE(solve(O, v).has_value());
    for (const auto& v : orig) ASSERT_TRUE(solve(R, v).has_value());
    for (std::size_t i = r.rank; i < 5; ++i) ASSERT_TRUE(is_zero(r.reduced.row(i)));
  }
}

TEST(Matrix, NullspaceExamples) {
  EXPECT_TRUE(nullspace(Mat::identity(4)).is_zero());
  EXPECT_EQ(nullspace(Mat::from_rows({{Scalar(1), Scalar(1), Scalar(0)}})).dim(), 2u);
}

TEST(Matrix, NullspaceVectorsAreAnnihilatedAndRankNullityHolds) {
  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    const Field f = t % 4 == 3 ? Field::Qi : Field::Q;
    const std::size_t r = 1 + rng.index(7), c = 1 + rng.index(7);
    const Mat m = t % 2 ? rng.mat(r, c, f) : rng.low_rank(r, c, 1 + rng.index(3));
    const Subspace N = nullspace(m);
    for (const auto& v : N.basis()) ASSERT_TRUE(is_zero(m.apply(v)));
    ASSERT_EQ(rank(m) + N.dim(), c);
  }
}

TEST(Matrix, SolveResidualIsExactlyZero) {
  Rng rng(9);
  for (int t = 0; t < 40; ++t) {
    const Mat m = rng.low_rank(6, 5, 4);
    const Vec x0 = rng.vec(5);
    const Vec b = m.apply(x0);
    const auto x = solve(m, b);
    ASSERT_TRUE(x.has_value());
    ASSERT_EQ(m.apply(*x), b);
  }
  EXPECT_EQ(*solve(Mat::identity(3), Vec{Scalar(1), Scalar(2), Scalar(3)}), (Vec{Scalar(1), Scalar(2), Scalar(3)}));
  const Mat one = Mat::from_rows({{Scalar(1), Scalar(1)}});
  const auto x = solve(one, Vec{Scalar(3)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0] + (*x)[1], Scalar(3));
  EXPECT_FALSE(solve(Mat::from_rows({{Scalar(1)}, {Scalar(1)}}), Vec{Scalar(1), Scalar(2)}));
}

TEST(Matrix, FieldMixingIsAnError) {
  const Mat q = Mat::identity(2);
  const Mat c = Mat::identity(2, Field::Qi);
  EXPECT_THROW((void)(q * c), field_mismatch);
  EXPECT_THROW((void)(Scalar::i() * q), field_mismatch);
}

TEST(Matrix, FlattenIsRowMajor) {
  const Mat m = Mat::from_rows({{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}});
  EXPECT_EQ(m.flatten(), (Vec{Scalar(1), Scalar(2), Scalar(3), Scalar(4)}));
  EXPECT_EQ(Mat::unflatten(m.flatten(), 2, 2, Field::Q), m);
}

TEST(Matrix, CharpolyOfCompanionMatchesCoefficients) {
  // (x - 2)^3 = x^3 - 6x^2 + 12x - 8
  const Mat c = companion({Scalar(-8), Scalar(12), Scalar(-6), Scalar(1)});
  EXPECT_EQ(charpoly(c), (Vec{Scalar(-8), Scalar(12), Scalar(-6), Scalar(1)}));
  EXPECT_EQ(charpoly(jordan(Scalar(2), 3)), charpoly(c));
}

TEST(Subspace, CanonicalUnderChangeOfSpanningSet) {
  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    const std::size_t k = 1 + rng.index(4);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(rng.vec(6));
    const Subspace U = Subspace::span(6, gens);
    // random invertible recombination plus redundant vectors
    std::vector<Vec> mixed;
    for (std::size_t i = 0; i < k + 2; ++i) {
      Vec v(6);
      for (std::size_t j = 0; j < k; ++j) {
        const Scalar c = i == j ? Scalar(1) : (j < i && i < k ? rng.scalar(Field::Q) : (i >= k ? rng.scalar(Field::Q) : Scalar(0)));
        for (std::size_t s = 0; s < 6; ++s) v[s] += c * gens[j][s];
      }
      mixed.push_back(v);
    }
    const Subspace V = Subspace::span(6, mixed);
    ASSERT_EQ(U, V);
    ASSERT_EQ(U.basis(), V.basis());
  }
}

TEST(Subspace, BasisIsReducedEchelon) {
  Rng rng(13);
  const Subspace U = Subspace::span(7, {rng.vec(7), rng.vec(7), rng.vec(7)});
  std::size_t last = 0;
  for (std::size_t r = 0; r < U.dim(); ++r) {
    const Vec& v = U.basis()[r];
    std::size_t p = 0;
    while (v[p].is_zero()) ++p;
    if (r) {
      ASSERT_GT(p, last);
    }
    ASSERT_TRUE(v[p].is_one());
    for (std::size_t o = 0; o < U.dim(); ++o)
      if (o != r) {
        ASSERT_TRUE(U.basis()[o][p].is_zero());
      }
    last = p;
  }
}

TEST(Subspace, SumAndIntersectionDimensions) {
  Rng rng(14);
  for (int t = 0; t < 40; ++t) {
    std::vector<Vec> shared{rng.vec(6)};
    std::vector<Vec> a = shared, b = shared;
    for (std::size_t i = 0; i < rng.index(3); ++i) a.push_back(rng.vec(6));
    for (std::size_t i = 0; i < rng.index(3); ++i) b.push_back(rng.vec(6));
    const Subspace U = Subspace::span(6, a), V = Subspace::span(6, b);
    const Subspace S = subspace_sum(U, V), I = subspace_intersect(U, V);
    ASSERT_EQ(S.dim() + I.dim(), U.dim() + V.dim());
    for (const auto& v : I.basis()) ASSERT_TRUE(U.contains(v) && V.contains(v));
    ASSERT_TRUE(S.contains(U) && S.contains(V));
  }
}

TEST(Subspace, TrivialLatticeFacts) {
  const Subspace e1 = Subspace::span(3, {unit_vector(3, 0)});
  const Subspace e2 = Subspace::span(3, {unit_vector(3, 1)});
  const Subspace zero(3);
  EXPECT_EQ(subspace_sum(e1, zero), e1);
  EXPECT_EQ(subspace_sum(e1, e2).dim(), 2u);
  EXPECT_EQ(subspace_intersect(e1, e1), e1);
  EXPECT_TRUE(subspace_intersect(e1, e2).is_zero());
  EXPECT_TRUE(e1.contains(Vec(3)));
  EXPECT_TRUE(e1.contains(e1.basis()[0]));
  EXPECT_THROW((void)subspace_sum(e1, Subspace(4)), std::invalid_argument);
}

TEST(Subspace, RationalInputsStayReal) {
  Rng rng(15);
  const Mat m = rng.low_rank(4, 6, 2);
  for (const auto& v : nullspace(m).basis())
    for (const auto& s : v) ASSERT_TRUE(s.is_real());
  for (const auto& s : rref(m).reduced.flatten()) ASSERT_TRUE(s.is_real());
}
