#include <gtest/gtest.h>

#include "twistalg/random.hpp"
#include "twistalg/rmatrix.hpp"

using namespace twistalg;

namespace {

constexpr int N = 3;

Matrix wedge(int n, int a, int b, Rational s = 1) {
  Matrix C = zero_matrix(n, n);
  C[a][b] = s;
  C[b][a] = -s;
  return C;
}

}  // namespace

TEST(RMatrix, ExponentialOfInvariantSkewTensor) {
  const auto alg = PbwAlgebra::enveloping(heisenberg(1).g);
  const auto X = tensor2_from_matrix(alg, N, wedge(3, 0, 2));
  for (const auto& R : {exp(X.mul_h(1)), exp((X * Rational(2)).mul_h(1)), TensorElem::unit(alg, N, 2)})
    EXPECT_TRUE(verify_triangular(R).ok());
  const auto F = exp(X.mul_h(1));
  EXPECT_EQ(inverse(flip(F)) * F, exp((X * Rational(2)).mul_h(1)));
}

TEST(RMatrix, SymmetricExponentialIsNotUnitary) {
  const auto alg = PbwAlgebra::enveloping(heisenberg(1).g);
  TensorElem cc(alg, N, 2);
  cc.add(Key{0, 0, 1, 0, 0, 1}, Rational(1), 1);
  const auto r = verify_triangular(exp(cc));
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure()->identity, "unitarity");
  EXPECT_EQ(r.first_failure()->detail, "first difference at h-degree 1");
}

TEST(RMatrix, TwistOfTrivialRIsTriangular) {
  const auto alg = PbwAlgebra::enveloping(heisenberg(1).g);
  Rng rng(41);
  const auto F0 = exp(tensor2_from_matrix(alg, N, wedge(3, 1, 2)).mul_h(1));
  for (int i = 0; i < 5; ++i) {
    const auto t = apply_gauge(random_gauge(alg, N, rng), TwistedEndo::pure_twist(F0));
    const auto R = twist_R(t, TensorElem::unit(alg, N, 2));
    EXPECT_EQ(R, inverse(flip(t.F)) * t.F);
    EXPECT_TRUE(verify_triangular(R).ok());
  }
}

TEST(RMatrix, DrinfeldElement) {
  const auto alg = PbwAlgebra::enveloping(heisenberg(1).g);
  const auto X = tensor2_from_matrix(alg, N, wedge(3, 0, 2));
  const auto d = drinfeld_element(exp(X.mul_h(1)));
  EXPECT_TRUE(d.checks.ok());
  // e and c commute, so u = exp(h (e S(c) - c S(e))) = 1
  EXPECT_EQ(d.u, TensorElem::unit(alg, N));
}

TEST(RMatrix, Cybe) {
  const auto sl = PbwAlgebra::enveloping(sl2());
  EXPECT_FALSE(cybe(sl, wedge(3, 0, 2)).is_zero());  // e ^ f
  EXPECT_TRUE(cybe(sl, wedge(3, 0, 1)).is_zero());   // e ^ h
  const auto heis = PbwAlgebra::enveloping(heisenberg(1).g);
  EXPECT_TRUE(cybe(heis, wedge(3, 0, 2)).is_zero());
  EXPECT_FALSE(cybe(heis, wedge(3, 0, 1)).is_zero());
}

TEST(RMatrix, AlternationOfDegreeTwoEquation) {
  // Alt_3 of (1 (x) r)(I (x) Delta)(r) - (r (x) 1)(Delta (x) I)(r) is -2/3 CYB(r)
  const auto alg = PbwAlgebra::enveloping(sl2());
  Rng rng(42);
  for (int i = 0; i < 10; ++i) {
    Matrix C = zero_matrix(3, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        C[a][b] = random_rational(rng);
        C[b][a] = -C[a][b];
      }
    const auto r = tensor2_from_matrix(alg, 0, C);
    EXPECT_EQ(alternation(cybe_degree2_lhs(r)), cybe(r) * rational(-2, 3));
  }
}

TEST(RMatrix, ClassicalLimit) {
  const auto alg = PbwAlgebra::enveloping(heisenberg(1).g);
  Rng rng(43);
  const auto F = apply_gauge(random_gauge(alg, N, rng),
                             TwistedEndo::pure_twist(exp(tensor2_from_matrix(alg, N, wedge(3, 0, 2)).mul_h(1))))
                     .F;
  EXPECT_EQ(classical_limit(F).r, wedge(3, 0, 2));
  // exp(h e (x) c) has classical limit Alt_2(e (x) c) = 1/2 e ^ c
  TensorElem ec(alg, N, 2);
  ec.add(Key{1, 0, 0, 0, 0, 1}, Rational(1), 1);
  EXPECT_EQ(classical_limit(exp(ec)).r, wedge(3, 0, 2, rational(1, 2)));
  TensorElem bad = TensorElem::unit(alg, N, 2);
  bad.add(Key{2, 0, 0, 0, 1, 0}, Rational(1), 1);
  EXPECT_THROW(classical_limit(bad), NotACocycle);
}

TEST(RMatrix, Centralizer) {
  const auto g = sl2();
  // ad_h(e ^ f) = 0, ad_e(e ^ f) = e ^ h, ad_f(e ^ f) = -h ^ f
  EXPECT_EQ(centralizer(g, wedge(3, 0, 2)), Subspace::span(3, {unit_vector(3, 1)}));
  EXPECT_EQ(centralizer(g, zero_matrix(3, 3)).dim(), 3);
  EXPECT_EQ(centralizer(heisenberg(1).g, wedge(3, 0, 2)).dim(), 3);
}

TEST(RMatrix, DrinfeldSupport) {
  const auto r = drinfeld_support(sl2(), wedge(3, 0, 1));
  EXPECT_TRUE(r.ok());
  const auto hd = heisenberg(1);
  const auto alg = PbwAlgebra::enveloping(hd.g);
  EXPECT_EQ(invariant_shift(hd.g, alg, wedge(3, 1, 2), wedge(3, 0, 2)), [] {
    Matrix s = wedge(3, 1, 2);
    s[0][2] = 1;
    s[2][0] = -1;
    return s;
  }());
}

TEST(RMatrix, HeisenbergDecomposition) {
  const auto hd = heisenberg(1);
  Matrix r = wedge(3, 0, 1, 2);
  r[0][2] = 3;
  r[2][0] = -3;
  const auto s = heisenberg_decomposition(hd, r);
  EXPECT_EQ(s.Y, wedge(3, 0, 1, 2));
  EXPECT_EQ(s.v, Vec({3, 0}));
}

TEST(RMatrix, GroupAlgebraOfZ2) {
  const Z2Tensor u = z2_involution();
  const Z2Tensor R = r_from_involution(u);
  EXPECT_TRUE(verify_triangular(R).ok());
  // mu (I (x) S)(R) = 1/2 (1 + u + u - 1) = u
  EXPECT_EQ(R.mu_id_s(), u);
  EXPECT_TRUE(verify_triangular(Z2Tensor::unit(2)).ok());
  EXPECT_EQ(R.flip() * R, Z2Tensor::unit(2));
}
