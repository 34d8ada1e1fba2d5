#include <gtest/gtest.h>

#include "twistalg/geom.hpp"
#include "twistalg/random.hpp"

using namespace twistalg;

namespace {

Matrix wedge(int n, int a, int b, Rational s = 1) {
  Matrix C = zero_matrix(n, n);
  C[a][b] = s;
  C[b][a] = -s;
  return C;
}

Matrix madd(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

Matrix random_skew(int n, Rng& rng, int terms) {
  Matrix C = zero_matrix(n, n);
  for (int i = 0; i < terms; ++i) {
    const int a = uniform_int(rng, 0, n - 1), b = uniform_int(rng, 0, n - 1);
    if (a == b) continue;
    C = madd(C, wedge(n, a, b, random_nonzero(rng)));
  }
  return C;
}

}  // namespace

TEST(Geom, SupportOfSimpleWedge) {
  // X = e (x) c - c (x) e: (e* (x) I)X = c, (c* (x) I)X = -e, so b(c, -e) = X(e*, c*) = 1
  const auto s = support(wedge(3, 0, 2));
  EXPECT_EQ(s.space(), Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)}));
  EXPECT_EQ(s.form.m, (Matrix{{0, 1}, {-1, 0}}));
  EXPECT_EQ(s.form.eval(unit_vector(3, 0), unit_vector(3, 2)), 1);
}

TEST(Geom, SupportOfZero) {
  const auto s = support(zero_matrix(3, 3));
  EXPECT_EQ(s.space().dim(), 0);
  EXPECT_EQ(casimir_of(s.form), zero_matrix(3, 3));
}

TEST(Geom, SupportRejectsNonSkew) {
  Matrix C = zero_matrix(2, 2);
  C[0][1] = 1;
  EXPECT_THROW(support(C), DomainError);
}

TEST(Geom, CasimirRoundTrip) {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const int n = uniform_int(rng, 2, 6);
    const Matrix C = random_skew(n, rng, 4);
    const auto s = support(C);
    EXPECT_EQ(static_cast<size_t>(s.space().dim()), rank(C));
    EXPECT_TRUE(s.form.is_skew());
    EXPECT_TRUE(s.form.is_nondegenerate());
    EXPECT_EQ(casimir_of(s.form), C);
  }
}

TEST(Geom, GeometricAddMatchesDirectSupport) {
  Rng rng(22);
  for (int i = 0; i < 60; ++i) {
    const int n = uniform_int(rng, 3, 6);
    const Matrix C1 = random_skew(n, rng, 3), C2 = random_skew(n, rng, 3);
    const auto sum = geometric_add(support(C1), support(C2));
    const auto direct = support(madd(C1, C2));
    EXPECT_EQ(sum.result.space(), direct.space());
    EXPECT_EQ(sum.result.X, madd(C1, C2));
    EXPECT_EQ(sum.via_perp, sum.via_kernel);
  }
}

TEST(Geom, CancellingSum) {
  const Matrix C = wedge(4, 0, 1);
  const Matrix D = madd(wedge(4, 0, 1, -1), wedge(4, 2, 3));
  const auto sum = geometric_add(support(C), support(D));
  EXPECT_EQ(sum.result.space(), Subspace::span(4, {unit_vector(4, 2), unit_vector(4, 3)}));
  EXPECT_EQ(sum.K.dim(), 2);
}

TEST(Geom, ClassifyHeisenbergInvariants) {
  const auto hd = heisenberg(2);
  const auto alg = PbwAlgebra::enveloping(hd.g);
  Rng rng(23);
  const auto inv = invariant_skew2(hd.g);
  for (int i = 0; i < 20; ++i) {
    const Matrix C = random_combination(inv, 5, rng);
    if (is_zero(C)) continue;
    const auto cl = classify_invariant(hd.g, alg, C);
    EXPECT_TRUE(is_abelian_ideal(hd.g, cl.ideal));
    EXPECT_TRUE(cl.ideal.contains(unit_vector(5, 4)));
    EXPECT_EQ(cl.ideal.dim(), 2);
    EXPECT_EQ(casimir_of_ideal(hd.g, cl.form), C);
  }
  EXPECT_THROW(classify_invariant(hd.g, alg, wedge(5, 0, 2)), NotInvariant);
}

TEST(Geom, ThreeVectorOfHeisenbergPair) {
  const auto hd = heisenberg(1);
  const auto alg = PbwAlgebra::enveloping(hd.g);
  const auto tv = three_vector(hd.g, alg, 0, wedge(3, 0, 2), wedge(3, 1, 2));
  TensorElem c3(alg, 0, 1);
  c3.add(Mono{0, 0, 3}, rational(-1, 3));
  EXPECT_EQ(tv.a, c3);
  EXPECT_EQ(tv.b.dim(), 1);
  const auto X = tensor2_from_matrix(alg, 0, wedge(3, 0, 2)), Y = tensor2_from_matrix(alg, 0, wedge(3, 1, 2));
  EXPECT_EQ(differential(tv.a), commutator(X, Y));
  // commuting supports give a = 0
  EXPECT_TRUE(three_vector(hd.g, alg, 0, wedge(3, 0, 2), wedge(3, 0, 2, 5)).a.is_zero());
}

TEST(Geom, ThreeVectorCobcomOnRandomPairs) {
  const auto hd = heisenberg(2);
  const auto alg = PbwAlgebra::enveloping(hd.g);
  const auto inv = invariant_skew2(hd.g);
  Rng rng(24);
  for (int i = 0; i < 20; ++i) {
    const Matrix C1 = random_combination(inv, 5, rng), C2 = random_combination(inv, 5, rng);
    const auto tv = three_vector(hd.g, alg, 0, C1, C2);
    EXPECT_EQ(differential(tv.a), commutator(tensor2_from_matrix(alg, 0, C1), tensor2_from_matrix(alg, 0, C2)));
    EXPECT_TRUE(is_invariant(tv.a));
  }
}
