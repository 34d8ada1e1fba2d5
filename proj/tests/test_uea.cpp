#include <gtest/gtest.h>

#include "twistalg/random.hpp"
#include "twistalg/uea.hpp"

using namespace twistalg;

namespace {

// Oracle: evaluate a degree-0-in-h element in a matrix representation, monomial by monomial.
Matrix represent(const TensorElem& x, const std::vector<Matrix>& rho) {
  const size_t d = rho[0].size();
  Matrix out = zero_matrix(d, d);
  for (const auto& [m, c] : x.terms()) {
    Matrix p = identity_matrix(d);
    for (size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) p = p * rho[i];
    for (size_t a = 0; a < d; ++a)
      for (size_t b = 0; b < d; ++b) out[a][b] += c[0] * p[a][b];
  }
  return out;
}

Matrix unit_matrix(size_t d, size_t a, size_t b) {
  Matrix m = zero_matrix(d, d);
  m[a][b] = 1;
  return m;
}

TensorElem gen(const AlgebraPtr& alg, int order, int i) { return TensorElem::generator(alg, order, i); }

TensorElem mono(const AlgebraPtr& alg, int order, Mono m, Rational c = 1, int hpow = 0) {
  TensorElem t(alg, order, 1);
  t.add(m, c, hpow);
  return t;
}

}  // namespace

TEST(Uea, HeisenbergStraightening) {
  const auto alg = PbwAlgebra::enveloping(heisenberg(1).g);
  const auto e = gen(alg, 0, 0), f = gen(alg, 0, 1), c = gen(alg, 0, 2);
  EXPECT_EQ(f * e, e * f - c);
  EXPECT_EQ(commutator(e, c), TensorElem(alg, 0, 1));
  // f e^2 = e^2 f - 2 e c
  EXPECT_EQ(f * e * e, mono(alg, 0, {2, 1, 0}) - mono(alg, 0, {1, 0, 1}, 2));
}

TEST(Uea, ProductsAgreeWithMatrixRepresentation) {
  // sl2 on C^2 and Heisenberg(1) on C^3 by strictly upper triangular matrices
  const std::vector<std::pair<LieAlgebraData, std::vector<Matrix>>> cases = {
      {sl2(), {unit_matrix(2, 0, 1), Matrix{{1, 0}, {0, -1}}, unit_matrix(2, 1, 0)}},
      {heisenberg(1).g, {unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2)}}};
  Rng rng(11);
  for (const auto& [g, rho] : cases) {
    const auto alg = PbwAlgebra::enveloping(g);
    for (int i = 0; i < 30; ++i) {
      const auto x = random_element(alg, 0, rng, 3, 0, 3), y = random_element(alg, 0, rng, 3, 0, 3);
      EXPECT_EQ(represent(x * y, rho), represent(x, rho) * represent(y, rho));
    }
  }
}

TEST(Uea, CoproductOfPowers) {
  const auto alg = PbwAlgebra::enveloping(heisenberg(1).g);
  const auto e = gen(alg, 0, 0), one = TensorElem::unit(alg, 0);
  EXPECT_EQ(coproduct(e * e), tensor(e * e, one) + tensor(e, e) * Rational(2) + tensor(one, e * e));
  EXPECT_EQ(counit(e * e + one * Rational(3)), HSeries::constant(0, 3));
}

TEST(Uea, Antipode) {
  const auto alg = PbwAlgebra::enveloping(heisenberg(1).g);
  const auto e = gen(alg, 0, 0), f = gen(alg, 0, 1), c = gen(alg, 0, 2);
  // S(ef) = S(f) S(e) = fe = ef - c
  EXPECT_EQ(antipode(e * f), e * f - c);
  EXPECT_EQ(antipode(antipode(e * f * c)), e * f * c);
}

TEST(Uea, HopfAxiomsOnRandomElements) {
  Rng rng(5);
  for (const auto& g : {heisenberg(1).g, sl2(), solvable2()}) {
    const auto alg = PbwAlgebra::enveloping(g);
    for (int i = 0; i < 15; ++i) {
      const auto x = random_element(alg, 2, rng, 3, 0, 3), y = random_element(alg, 2, rng, 3, 0, 3);
      EXPECT_EQ(coproduct(x * y), coproduct(x) * coproduct(y));
      EXPECT_EQ(coproduct_at(coproduct(x), 0), coproduct_at(coproduct(x), 1));
      EXPECT_EQ(multiply_at(antipode_at(coproduct(x), 0), 0), lift_scalar(x, counit(x)));
      EXPECT_EQ(counit_at(coproduct(x), 0), x);
      EXPECT_EQ(antipode(x * y), antipode(y) * antipode(x));
    }
  }
}

TEST(Uea, ExpLogInverse) {
  const auto alg = PbwAlgebra::enveloping(heisenberg(1).g);
  Rng rng(2);
  for (int i = 0; i < 10; ++i) {
    const auto y = random_element(alg, 3, rng, 3, 1, 2, 1);
    const auto g = exp(y);
    EXPECT_EQ(log(g), y);
    EXPECT_EQ(g * inverse(g), TensorElem::unit(alg, 3));
  }
  // exp(e h) = 1 + e h + e^2 h^2 / 2
  const auto e = gen(alg, 2, 0);
  EXPECT_EQ(exp(e.mul_h(1)), TensorElem::unit(alg, 2) + e.mul_h(1) + mono(alg, 2, {2, 0, 0}, rational(1, 2), 2));
  EXPECT_THROW(exp(e), DomainError);
}

TEST(Uea, Invariance) {
  const auto alg = PbwAlgebra::enveloping(heisenberg(1).g);
  EXPECT_TRUE(is_invariant(gen(alg, 0, 2)));
  EXPECT_FALSE(is_invariant(gen(alg, 0, 0)));
  Matrix C = zero_matrix(3, 3);
  C[0][2] = 1;
  C[2][0] = -1;
  EXPECT_TRUE(is_invariant(tensor2_from_matrix(alg, 0, C)));
  C[0][1] = 1;
  C[1][0] = -1;
  EXPECT_FALSE(is_invariant(tensor2_from_matrix(alg, 0, C)));
  EXPECT_EQ(*lie_matrix(tensor2_from_matrix(alg, 2, C)), C);
  EXPECT_FALSE(lie_matrix(tensor2_from_matrix(alg, 2, C).mul_h(1)));
}

TEST(Uea, CenterBasis) {
  // center of U(heisenberg) in degree <= 3 is spanned by c, c^2, c^3
  const auto alg = PbwAlgebra::enveloping(heisenberg(1).g);
  EXPECT_EQ(center_basis(alg, 0, 3).size(), 3u);
  // Casimir e f + f e + h^2 / 2 lies in degree 2 for sl2
  EXPECT_EQ(center_basis(PbwAlgebra::enveloping(sl2()), 0, 2).size(), 1u);
}

TEST(Uea, AlgebraMapIsMultiplicative) {
  const auto hd = heisenberg(1);
  const auto alg = PbwAlgebra::enveloping(hd.g);
  Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    const AlgebraMap f = AlgebraMap::from_matrix(alg, 2, random_heisenberg_automorphism(hd, rng));
    const auto x = random_element(alg, 2, rng, 3, 0, 3), y = random_element(alg, 2, rng, 3, 0, 3);
    EXPECT_EQ(f.apply(x * y), f.apply(x) * f.apply(y));
    EXPECT_EQ(f.apply(coproduct(x)), coproduct(f.apply(x)));
  }
}

TEST(Uea, OrderMismatch) {
  const auto alg = PbwAlgebra::enveloping(heisenberg(1).g);
  EXPECT_THROW(gen(alg, 1, 0) + gen(alg, 2, 0), ConfigError);
  EXPECT_THROW(gen(alg, 1, 0) + TensorElem::unit(alg, 1, 2), ConfigError);
}
