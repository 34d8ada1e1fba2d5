#include <gtest/gtest.h>

#include "twistalg/cochain.hpp"
#include "twistalg/random.hpp"

using namespace twistalg;

namespace {

AlgebraPtr heis() { return PbwAlgebra::enveloping(heisenberg(1).g); }

TensorElem mono(const AlgebraPtr& alg, int order, Mono m, Rational c = 1) {
  TensorElem t(alg, order, 1);
  t.add(m, c);
  return t;
}

}  // namespace

TEST(Cochain, DifferentialOfLowDegree) {
  const auto alg = heis();
  const auto e = TensorElem::generator(alg, 0, 0);
  EXPECT_TRUE(differential(e).is_zero());
  // d(e^2) = 1 (x) e^2 - Delta(e^2) + e^2 (x) 1 = -2 e (x) e
  EXPECT_EQ(differential(e * e), tensor(e, e) * Rational(-2));
  // d(1) = 1 (x) 1
  EXPECT_EQ(differential(TensorElem::unit(alg, 0)), TensorElem::unit(alg, 0, 2));
}

TEST(Cochain, DifferentialSquaresToZero) {
  Rng rng(1);
  for (const auto& g : {heisenberg(1).g, sl2()}) {
    const auto alg = PbwAlgebra::enveloping(g);
    for (int k = 1; k <= 3; ++k)
      for (int i = 0; i < 5; ++i) EXPECT_TRUE(differential(differential(random_tensor(alg, 1, k, rng, 3, 2))).is_zero());
  }
}

TEST(Cochain, Alternation) {
  const auto alg = heis();
  const auto e = TensorElem::generator(alg, 0, 0), f = TensorElem::generator(alg, 0, 1);
  EXPECT_EQ(alternation(tensor(e, f)), (tensor(e, f) - tensor(f, e)) * rational(1, 2));
  EXPECT_TRUE(alternation(tensor(e, e)).is_zero());
  Rng rng(4);
  for (int i = 0; i < 5; ++i) {
    const auto x = random_tensor(alg, 0, 3, rng, 4, 2);
    EXPECT_EQ(alternation(alternation(x)), alternation(x));
    EXPECT_EQ(permute(alternation(x), {1, 0, 2}), -alternation(x));
  }
  EXPECT_EQ(permutation_sign({2, 0, 1}), 1);
  EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
}

TEST(Cochain, SolveCoboundaryRecoversExactPart) {
  Rng rng(8);
  const auto alg = heis();
  Matrix C = zero_matrix(3, 3);
  C[0][1] = 1;
  C[1][0] = -1;
  const TensorElem X = tensor2_from_matrix(alg, 2, C);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_element(alg, 2, rng, 3, 2, 3);
    const auto x = differential(a) + X;
    const auto sol = solve_coboundary(x, false);
    EXPECT_EQ(differential(sol), x - alternation(x));
    EXPECT_EQ(alternation(x), X);
  }
}

TEST(Cochain, SolveCoboundaryInvariantShift) {
  // x = d(c^2) is invariant; the invariant solution is central
  const auto alg = heis();
  const auto x = differential(mono(alg, 0, {0, 0, 2}));
  const auto a = solve_coboundary(x, true);
  EXPECT_EQ(differential(a), x);
  EXPECT_TRUE(is_invariant(a));
}

TEST(Cochain, CohomologyIsExteriorPower) {
  // H^n of the cobar complex of U(g) is Lambda^n g
  for (int dim : {2, 3}) {
    const auto alg = PbwAlgebra::enveloping(abelian_lie(dim));
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(cohomology_dimension(alg, n, n), binomial(dim, n)) << dim << " " << n;
  }
  const auto alg = heis();
  EXPECT_EQ(cohomology_dimension(alg, 2, 2), 3);
  EXPECT_EQ(cohomology_dimension(alg, 2, 3), 3);
  EXPECT_EQ(cohomology_dimension(alg, 3, 3), 1);
  EXPECT_THROW(cohomology_dimension(alg, 0, 2), ConfigError);
}

TEST(Cochain, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(6, 0), 1);
}
