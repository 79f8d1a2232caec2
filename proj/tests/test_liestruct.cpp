#include "support.hpp"

#include <gtest/gtest.h>

using namespace leib;
using testing_support::is_nilpotent_matrix;
using testing_support::lie_from;
using testing_support::Rng;

namespace {

Algebra sl2() {
  AlgebraBuilder b(Field::Q, {"e", "f", "h"});
  b.add(0, 1, 2, Scalar(1)).add(1, 0, 2, Scalar(-1));
  b.add(2, 0, 0, Scalar(2)).add(0, 2, 0, Scalar(-2));
  b.add(2, 1, 1, Scalar(-2)).add(1, 2, 1, Scalar(2));
  return b.build();
}

// gl2 in the basis e, f, h, c with c central
Algebra gl2() {
  AlgebraBuilder b(Field::Q, {"e", "f", "h", "c"});
  b.add(0, 1, 2, Scalar(1)).add(1, 0, 2, Scalar(-1));
  b.add(2, 0, 0, Scalar(2)).add(0, 2, 0, Scalar(-2));
  b.add(2, 1, 1, Scalar(-2)).add(1, 2, 1, Scalar(2));
  return b.build();
}

Subspace span_of(std::size_t d, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> v;
  for (auto i : idx) v.push_back(unit_vector(d, i));
  return Subspace::span(d, v);
}

} // namespace

TEST(Killing, Examples) {
  const KillingForm k = killing(sl2());
  EXPECT_EQ(k.gram(0, 1), Scalar(4));
  EXPECT_EQ(k.gram(2, 2), Scalar(8));
  EXPECT_EQ(k.gram(0, 0), Scalar(0));
  EXPECT_TRUE(k.nondegenerate());
  EXPECT_EQ(killing(heisenberg_lie(2)).rank(), 0u);
  EXPECT_EQ(killing(gl2()).rank(), 3u);
  EXPECT_THROW((void)killing(kronecker(1)), not_lie);
}

TEST(Killing, InvariantUnderTheBracket) {
  Rng rng(2);
  const Algebra g = induced_structure(der_algebra(heisenberg_lie(1)));
  const KillingForm k = killing(g);
  for (int t = 0; t < 20; ++t) {
    const Vec x = rng.vec(g.dim()), y = rng.vec(g.dim()), z = rng.vec(g.dim());
    EXPECT_EQ(k(bracket(g, x, y), z), k(x, bracket(g, y, z)));
    EXPECT_EQ(k(x, y), k(y, x));
  }
}

TEST(Radical, Examples) {
  EXPECT_TRUE(radical(sl2()).is_zero());
  EXPECT_EQ(radical(gl2()), span_of(4, {3}));
  EXPECT_EQ(radical(heisenberg_lie(2)).dim(), 5u);
  // Der(h3) is gl2 acting on the plane, plus the maps into z
  const Algebra der_h = induced_structure(der_algebra(heisenberg_lie(1)));
  EXPECT_EQ(radical(der_h).dim(), 3u);
}

TEST(Radical, SolvableIdealWithSemisimpleQuotient) {
  std::vector<Algebra> gs{sl2(), gl2()};
  for (const auto& [name, L] : testing_support::catalog_sample(2))
    if (L.field() == Field::Q) gs.push_back(induced_structure(der_algebra(L)));
  for (const auto& g : gs) {
    const Subspace r = radical(g);
    EXPECT_TRUE(is_ideal(g, r));
    if (!r.is_zero()) {
      EXPECT_TRUE(is_solvable(restrict_to(g, r)).holds);
    }
    if (r.dim() < g.dim()) {
      EXPECT_TRUE(killing(quotient(g, r)).nondegenerate());
    }
  }
}

TEST(Nilradical, Examples) {
  EXPECT_TRUE(nilradical(sl2()).is_zero());
  EXPECT_EQ(nilradical(gl2()), span_of(4, {3}));
  EXPECT_EQ(nilradical(heisenberg_lie(1)).dim(), 3u);
  // ax + b group: nilradical is the translation line
  const Algebra aff = lie_from({"t", "x"}, {{0, 1, 1, 1}});
  EXPECT_EQ(nilradical(aff), span_of(2, {1}));
}

TEST(Nilradical, KillingKernelIsNotEnough) {
  // t scales x, x' and rotates u, v: the trace form vanishes identically
  const Algebra g = lie_from({"t", "x", "x2", "u", "v"}, {{0, 1, 1, 1}, {0, 2, 2, -1}, {0, 3, 4, 1}, {0, 4, 3, -1}});
  EXPECT_EQ(killing(g).rank(), 0u);
  EXPECT_EQ(nilradical(g), span_of(5, {1, 2, 3, 4}));
}

TEST(Nilradical, MatchesAdNilpotentElementsOfRandomSolvableAlgebras) {
  const auto r = testing_support::nilradical_oracle(31, 20);
  EXPECT_EQ(r.algebras, 20u);
  EXPECT_EQ(r.failures, std::vector<std::string>{});
}

TEST(Nilradical, SitsBetweenCommutatorOfRadicalAndRadical) {
  for (const auto& [name, L] : testing_support::catalog_sample(2)) {
    if (L.field() != Field::Q) continue;
    const Algebra g = induced_structure(der_algebra(L));
    const Subspace r = radical(g), nil = nilradical(g);
    EXPECT_TRUE(r.contains(nil)) << name;
    EXPECT_TRUE(nil.contains(product_space(g, g.whole(), r))) << name;
    EXPECT_TRUE(nil.contains(centers(g).center)) << name;
    if (!nil.is_zero()) {
      EXPECT_TRUE(is_nilpotent(restrict_to(g, nil)).holds) << name;
    }
  }
}

TEST(Levi, Statuses) {
  const Algebra g = gl2();
  EXPECT_EQ(verify_levi(g, span_of(4, {0, 1, 2})).status, LeviStatus::verified);
  EXPECT_EQ(verify_levi(g, span_of(4, {0, 1})).status, LeviStatus::not_subalgebra);
  EXPECT_EQ(verify_levi(g, span_of(4, {2})).status, LeviStatus::not_complement);
  EXPECT_EQ(verify_levi(g, span_of(4, {0, 1, 2, 3})).status, LeviStatus::not_complement);
  EXPECT_EQ(verify_levi(heisenberg_lie(1), Subspace(3)).status, LeviStatus::verified);
  EXPECT_THROW((void)verify_levi(g, Subspace(3)), std::invalid_argument);
  EXPECT_THROW((void)verify_levi(kronecker(1), Subspace(3)), not_lie);
  EXPECT_EQ(to_string(LeviStatus::not_complement), "not-complement");
}

TEST(Levi, ComplementInDerOfHeisenberg) {
  // Der(h3): the trace-free maps on e, f extended by zero on z
  const auto der = der_algebra(heisenberg_lie(1));
  const Algebra g = induced_structure(der);
  const auto unit = [](std::size_t i, std::size_t j) { return matrix_unit(3, i, j, Field::Q); };
  const Mat h = unit(0, 0) - unit(1, 1);
  std::vector<Vec> s;
  for (const Mat& m : {unit(0, 1), unit(1, 0), h}) s.push_back(*der.coordinates(m));
  EXPECT_EQ(verify_levi(g, Subspace::span(g.dim(), s)).status, LeviStatus::verified);
  // shifting h by the grading moves it into the radical direction
  const Mat grading = unit(0, 0) + unit(1, 1) + Scalar(2) * unit(2, 2);
  s[2] = *der.coordinates(h + grading);
  EXPECT_NE(verify_levi(g, Subspace::span(g.dim(), s)).status, LeviStatus::verified);
}

TEST(Semisimple, Examples) {
  EXPECT_TRUE(is_semisimple(sl2()));
  EXPECT_FALSE(is_semisimple(gl2()));
  EXPECT_FALSE(is_semisimple(heisenberg_lie(1)));
}

TEST(Analyze, ReportFields) {
  const StructureReport r = analyze(gl2(), span_of(4, {0, 1, 2}));
  EXPECT_EQ(r.derived_dims, (std::vector<std::size_t>{4, 3}));
  EXPECT_FALSE(r.solvable.holds);
  EXPECT_EQ(r.center_dim, 1u);
  EXPECT_EQ(r.killing_rank, 3u);
  EXPECT_EQ(r.radical.dim(), 1u);
  ASSERT_TRUE(r.levi.has_value());
  EXPECT_TRUE(r.levi->verified());
  const StructureReport h = analyze(heisenberg_lie(2));
  EXPECT_TRUE(h.nilpotent.holds);
  EXPECT_EQ(h.nilpotent.step_class, 2u);
  EXPECT_EQ(h.nilradical.dim(), 5u);
}
