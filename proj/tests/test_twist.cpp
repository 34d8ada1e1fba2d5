#include <gtest/gtest.h>

#include "twistalg/random.hpp"
#include "twistalg/twist.hpp"

using namespace twistalg;

namespace {

constexpr int N = 3;

Matrix wedge(int n, int a, int b, Rational s = 1) {
  Matrix C = zero_matrix(n, n);
  C[a][b] = s;
  C[b][a] = -s;
  return C;
}

struct Heis {
  HeisenbergData hd = heisenberg(1);
  AlgebraPtr alg = PbwAlgebra::enveloping(hd.g);
  TensorElem X(const Matrix& C, int order = N) const { return tensor2_from_matrix(alg, order, C); }
};

}  // namespace

TEST(Twist, ExponentialOfInvariantTensor) {
  Heis H;
  const auto F = exp(H.X(wedge(3, 0, 2)).mul_h(1));
  const auto r = verify_twist(F);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.invariant);
}

TEST(Twist, AbelianSubalgebraTwistIsNotInvariant) {
  // e and c commute, so exp(h e (x) c) is a twist; it does not commute with Delta(f)
  Heis H;
  TensorElem ec(H.alg, N, 2);
  ec.add(Key{1, 0, 0, 0, 0, 1}, Rational(1), 1);
  const auto r = verify_twist(exp(ec));
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.invariant);
}

TEST(Twist, CorruptedTwistReportsDegree) {
  // F = 1 + e^2 (x) f h: d(e^2 (x) f) = -2 e (x) e (x) f
  Heis H;
  TensorElem F = TensorElem::unit(H.alg, N, 2);
  F.add(Key{2, 0, 0, 0, 1, 0}, Rational(1), 1);
  const auto r = verify_twist(F);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure()->identity, "twist_2cocycle");
  EXPECT_EQ(r.first_failure()->detail, "2-cocycle violation at h-degree 1");
}

TEST(Twist, UnitAndNormalizationFailures) {
  Heis H;
  const auto r1 = verify_twist(TensorElem::unit(H.alg, N, 2) * Rational(2));
  EXPECT_EQ(r1.first_failure()->identity, "unit_congruence");
  TensorElem F = TensorElem::unit(H.alg, N, 2);
  F.add(Key{0, 0, 0, 0, 1, 0}, Rational(1), 2);  // 1 (x) f h^2
  const auto r2 = verify_twist(F);
  EXPECT_EQ(r2.first_failure()->identity, "normalization_left");
  EXPECT_EQ(r2.first_failure()->detail, "first difference at h-degree 2");
  EXPECT_THROW(verify_twist(TensorElem::unit(H.alg, N, 3)), DomainError);
}

TEST(Twist, GaugePreservesTwistAxioms) {
  Heis H;
  Rng rng(31);
  const auto F = exp(H.X(wedge(3, 0, 2)).mul_h(1));
  for (int i = 0; i < 10; ++i) {
    const auto t = apply_gauge(random_gauge(H.alg, N, rng), TwistedEndo::pure_twist(F));
    EXPECT_TRUE(verify_endo(t).ok());
  }
}

TEST(Twist, ConjugatedCoproductIsCoassociative) {
  Heis H;
  TensorElem ec(H.alg, N, 2);
  ec.add(Key{1, 0, 0, 0, 0, 1}, Rational(1), 1);
  const auto F = exp(ec);
  Rng rng(32);
  for (int i = 0; i < 5; ++i) {
    const auto x = random_element(H.alg, N, rng, 2, 1, 2);
    const auto d = twisted_coproduct(F, x, TwistedCoproduct::conjugated);
    const auto Finv = inverse(F);
    const auto left = embed(F, {0, 1}, 3) * coproduct_at(d, 0) * embed(Finv, {0, 1}, 3);
    const auto right = embed(F, {1, 2}, 3) * coproduct_at(d, 1) * embed(Finv, {1, 2}, 3);
    // (Delta_F (x) I) Delta_F = (I (x) Delta_F) Delta_F
    EXPECT_EQ(left, right);
  }
  const auto x = TensorElem::generator(H.alg, N, 1);
  EXPECT_EQ(twisted_coproduct(F, x, TwistedCoproduct::galois), F * coproduct(x));
  EXPECT_EQ(F * twisted_coproduct(F, x, TwistedCoproduct::twisted_form), coproduct(x) * F);
}

TEST(Twist, OtherTwistedCoproducts) {
  Heis H;
  TensorElem ec(H.alg, N, 2);
  ec.add(Key{1, 0, 0, 0, 0, 1}, Rational(1), 1);
  const auto F = exp(ec), Finv = inverse(F);
  const auto F12 = embed(F, {0, 1}, 3), F23 = embed(F, {1, 2}, 3);
  Rng rng(37);
  for (int i = 0; i < 5; ++i) {
    const auto x = random_element(H.alg, N, rng, 2, 1, 2);
    // F^{-1} Delta F: conjugation by the twist F^{-1}
    const auto d = twisted_coproduct(F, x, TwistedCoproduct::twisted_form);
    EXPECT_EQ(embed(Finv, {0, 1}, 3) * coproduct_at(d, 0) * F12, embed(Finv, {1, 2}, 3) * coproduct_at(d, 1) * F23);
    // F Delta: (F (x) 1)(Delta (x) I)(F Delta(x)) = (1 (x) F)(I (x) Delta)(F Delta(x))
    const auto g = twisted_coproduct(F, x, TwistedCoproduct::galois);
    EXPECT_EQ(F12 * coproduct_at(g, 0), F23 * coproduct_at(g, 1));
  }
  const auto Fi = exp(H.X(wedge(3, 0, 2)).mul_h(1));
  for (int i = 0; i < 3; ++i) {
    const auto x = random_element(H.alg, N, rng, 2, 1, 3);
    EXPECT_EQ(twisted_coproduct(Fi, x, TwistedCoproduct::conjugated), coproduct(x));
    EXPECT_EQ(twisted_coproduct(Fi, x, TwistedCoproduct::twisted_form), coproduct(x));
  }
}

TEST(Twist, NormalizeRecoversInvariantPart) {
  Heis H;
  Rng rng(33);
  const Matrix A = wedge(3, 0, 2), B = wedge(3, 1, 2, rational(-2, 3));
  const auto F0 = exp(H.X(A).mul_h(1)) * exp(H.X(B).mul_h(2));
  for (int i = 0; i < 10; ++i) {
    const auto F = apply_gauge(random_central_gauge(H.alg, N, rng), TwistedEndo::pure_twist(F0)).F;
    const auto nf = normalize_invariant_twist(F);
    ASSERT_EQ(nf.X.size(), 3u);
    EXPECT_EQ(*lie_matrix(nf.X[0]), A);
    EXPECT_EQ(*lie_matrix(nf.X[1]), B);
    EXPECT_TRUE(nf.X[2].is_zero());
    EXPECT_EQ(apply_gauge(nf.gauge, TwistedEndo::pure_twist(F)).F, normal_form_product(nf.X));
  }
}

TEST(Twist, NormalizeRejects) {
  Heis H;
  TensorElem ec(H.alg, N, 2);
  ec.add(Key{1, 0, 0, 0, 0, 1}, Rational(1), 1);
  EXPECT_THROW(normalize_invariant_twist(exp(ec)), NotInvariant);
  // c^2 (x) c is invariant but not a cocycle
  TensorElem bad = TensorElem::unit(H.alg, N, 2);
  bad.add(Key{0, 0, 2, 0, 0, 1}, Rational(1), 1);
  EXPECT_THROW(normalize_invariant_twist(bad), MathViolation);
}

TEST(Twist, SeparateRecoversLiePartAndClass) {
  Heis H;
  Rng rng(34);
  const Matrix X = wedge(3, 1, 2);
  for (int i = 0; i < 8; ++i) {
    const Matrix A = random_heisenberg_automorphism(H.hd, rng);
    const auto t0 = compose(TwistedEndo::pure_twist(exp(H.X(X).mul_h(1))),
                            TwistedEndo::pure_map(AlgebraMap::from_matrix(H.alg, N, A)));
    const auto t = apply_gauge(random_gauge(H.alg, N, rng), t0);
    ASSERT_TRUE(verify_endo(t).ok());
    const auto s = separate(t);
    EXPECT_EQ(s.lie_part, A);
    EXPECT_EQ(*lie_matrix(normalize_invariant_twist(s.F_inv).X[0]), X);
  }
}

TEST(Twist, SeparateRejectsNonAutomorphism) {
  Heis H;
  Matrix A = identity_matrix(3);
  A[0][0] = 2;
  EXPECT_THROW(separate(TwistedEndo::pure_map(AlgebraMap::from_matrix(H.alg, N, A))), NotAnAutomorphism);
}

TEST(Twist, VerifyEndoFlagsBrokenConj) {
  Heis H;
  Matrix A = identity_matrix(3);
  A[0][0] = 2;
  A[2][2] = 2;
  TwistedEndo t = TwistedEndo::pure_map(AlgebraMap::from_matrix(H.alg, N, A));
  EXPECT_TRUE(verify_endo(t).ok());
  TensorElem ec(H.alg, N, 2);
  ec.add(Key{1, 0, 0, 0, 0, 1}, Rational(1), 1);
  t.F = exp(ec);
  const auto r = verify_endo(t);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure()->identity, "conj");
}

TEST(Twist, GroupLawCertificate) {
  Heis H;
  const auto X = H.X(wedge(3, 0, 2)), Y = H.X(wedge(3, 1, 2));
  const auto gl = group_law_cocycle(H.hd.g, X, Y);
  EXPECT_EQ(differential(gl.a_solver), commutator(X, Y));
  EXPECT_TRUE(group_law_certificate(X, Y, gl.a_geometric));
  EXPECT_TRUE(group_law_certificate(X, Y, gl.a_solver));
  // exp(Xh) exp(Yh) != exp((X+Y)h) without the gauge
  EXPECT_NE(exp(X.mul_h(1)) * exp(Y.mul_h(1)), exp((X + Y).mul_h(1)));
}

TEST(Twist, AssociatorAlternationVanishes) {
  const auto hd = heisenberg(2);
  const auto alg = PbwAlgebra::enveloping(hd.g);
  const auto inv = invariant_skew2(hd.g);
  const auto a = geometric_cocycle(hd.g);
  Rng rng(35);
  for (int i = 0; i < 5; ++i) {
    const auto X = tensor2_from_matrix(alg, N, random_combination(inv, 5, rng));
    const auto Y = tensor2_from_matrix(alg, N, random_combination(inv, 5, rng));
    const auto Z = tensor2_from_matrix(alg, N, random_combination(inv, 5, rng));
    EXPECT_TRUE(associator_alternation(a, X, Y, Z).is_zero());
    const auto p = associator_by_gauges(a, X, Y, Z);
    EXPECT_TRUE(p.path1_ok);
    EXPECT_TRUE(p.path2_ok);
    EXPECT_EQ(p.log_ratio, associator(a, X, Y, Z).mul_h(2));
  }
}

TEST(Twist, Pi0CompositionFormula) {
  Heis H;
  Rng rng(36);
  for (int i = 0; i < 5; ++i) {
    const Pi0Class c1{random_heisenberg_automorphism(H.hd, rng), {H.X(wedge(3, 0, 2)), H.X(zero_matrix(3, 3)), H.X(zero_matrix(3, 3))}};
    const Pi0Class c2{random_heisenberg_automorphism(H.hd, rng), {H.X(wedge(3, 1, 2)), H.X(wedge(3, 0, 2, 2)), H.X(zero_matrix(3, 3))}};
    EXPECT_TRUE(pi0_compose(H.alg, N, c1, c2).consistent);
  }
}
