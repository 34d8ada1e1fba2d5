#include <gtest/gtest.h>

#include "twistalg/crossedprod.hpp"

using namespace twistalg;

namespace {

constexpr int N = 3;

Matrix wedge(int n, int a, int b, Rational s = 1) {
  Matrix C = zero_matrix(n, n);
  C[a][b] = s;
  C[b][a] = -s;
  return C;
}

std::vector<Lattice> cube(int r) {
  std::vector<Lattice> out{Lattice(r, -1)};
  while (true) {
    Lattice k = out.back();
    int i = 0;
    while (i < r && k[i] == 1) k[i++] = -1;
    if (i == r) return out;
    ++k[i];
    out.push_back(k);
  }
}

struct HeisAction {
  HeisenbergData hd = heisenberg(1);
  AlgebraPtr alg = PbwAlgebra::enveloping(hd.g);
  TwistedActionData d{hd.g, alg, N, {wedge(3, 0, 2), wedge(3, 1, 2)}};
  TensorElem one(int arity = 1) const { return TensorElem::unit(alg, N, arity); }
};

}  // namespace

TEST(CrossedProduct, ActionData) {
  HeisAction s;
  EXPECT_EQ(cube(2).size(), 9u);
  EXPECT_TRUE(verify_action(s.d, cube(2)).ok());
  // a(X(k), X(k')) is bilinear: a((1,0),(0,1)) = a(e^c, f^c) = -1/3 c^3
  TensorElem c3(s.alg, N, 1);
  c3.add(Mono{0, 0, 3}, rational(-1, 3));
  EXPECT_EQ(s.d.a({1, 0}, {0, 1}), c3);
  EXPECT_EQ(s.d.a({2, 0}, {0, -1}), c3 * Rational(-2));
  EXPECT_EQ(s.d.F({1, 1}), exp((-tensor2_from_matrix(s.alg, N, s.d.X({1, 1}))).mul_h(1)));
}

TEST(CrossedProduct, NonInvariantGeneratorRejected) {
  const auto hd = heisenberg(1);
  EXPECT_THROW(TwistedActionData(hd.g, PbwAlgebra::enveloping(hd.g), N, {wedge(3, 0, 1)}), NotInvariant);
  EXPECT_THROW(TwistedActionData(hd.g, PbwAlgebra::enveloping(hd.g), 1, {wedge(3, 0, 2)}), ConfigError);
}

TEST(CrossedProduct, CorruptedThetaBreaksCobound) {
  HeisAction s;
  // exp(e h^2) would be group-like; exp(e^2 h^2) is not
  const TensorElem e = TensorElem::generator(s.alg, N, 0);
  s.d.set_theta([&](const Lattice& k, const Lattice& kp) {
    return exp((s.d.a(kp, k) * rational(1, 2)).mul_h(2)) * exp((e * e * Rational(k[0] * kp[1])).mul_h(2));
  });
  const auto r = verify_action(s.d, cube(2));
  EXPECT_FALSE(r.ok());
  for (const auto& c : r.checks) {
    if (c.identity == "cobound") EXPECT_FALSE(c.ok);
    if (c.identity == "2coc") EXPECT_TRUE(c.ok);
  }
}

TEST(CrossedProduct, TrivialActionIsGroupAlgebraTensor) {
  const auto hd = heisenberg(1);
  const auto alg = PbwAlgebra::enveloping(hd.g);
  TwistedActionData d(hd.g, alg, N, {zero_matrix(3, 3)});
  EXPECT_TRUE(verify_action(d, cube(1)).ok());
  const TensorElem e = TensorElem::generator(alg, N, 0), f = TensorElem::generator(alg, N, 1);
  EXPECT_EQ(cp_multiply(cp_single(e, {1}), cp_single(f, {-2}), d), cp_single(e * f, {-1}));
  CPElem de;
  de.arity = 2;
  de.add({{1}, {1}}, coproduct(e));
  EXPECT_EQ(cp_coproduct(cp_single(e, {1}), d), de);
}

TEST(CrossedProduct, UnitAndCounitLikeBehaviour) {
  HeisAction s;
  const CPElem unit = cp_single(s.one(), {0, 0});
  Rng rng(51);
  for (int i = 0; i < 5; ++i) {
    const CPElem u = random_cp(s.d, rng);
    EXPECT_EQ(cp_multiply(unit, u, s.d), u);
    EXPECT_EQ(cp_multiply(u, unit, s.d), u);
  }
  CPElem du;
  du.arity = 2;
  du.add({{0, 0}, {0, 0}}, s.one(2));
  EXPECT_EQ(cp_coproduct(unit, s.d), du);
}

TEST(CrossedProduct, CoproductOfGroupElement) {
  HeisAction s;
  CPElem expected;
  expected.arity = 2;
  expected.add({{1, 0}, {1, 0}}, s.d.F_inv({1, 0}));
  EXPECT_EQ(cp_coproduct(cp_single(s.one(), {1, 0}), s.d), expected);
}

TEST(CrossedProduct, ThetaTwistsGroupProduct) {
  HeisAction s;
  // (1 * e1)(1 * e2) = theta(e1, e2) * (1,1) = exp(1/2 a(X2, X1) h^2) * (1,1)
  const CPElem p = cp_multiply(cp_single(s.one(), {1, 0}), cp_single(s.one(), {0, 1}), s.d);
  EXPECT_EQ(p, cp_single(exp((s.d.a({0, 1}, {1, 0}) * rational(1, 2)).mul_h(2)), {1, 1}));
  const CPElem q = cp_multiply(cp_single(s.one(), {0, 1}), cp_single(s.one(), {1, 0}), s.d);
  EXPECT_NE(p, q);
}

TEST(CrossedProduct, BialgebraAxiomsOnSamples) {
  HeisAction s;
  Rng rng(52);
  for (int i = 0; i < 10; ++i) {
    const auto r = cp_bialgebra_checks(random_cp(s.d, rng), random_cp(s.d, rng), random_cp(s.d, rng), s.d);
    EXPECT_TRUE(r.ok()) << r.first_failure()->identity;
  }
}

TEST(CrossedProduct, ExtensionRelations) {
  const auto hd = heisenberg(1);
  const Extension e = extension_algebra(hd.g, {wedge(3, 0, 2), wedge(3, 1, 2)}, {"l_e", "l_f"});
  EXPECT_TRUE(extension_checks(e).ok());
  // [l_e, l_f] = -a(e^c, f^c) = 1/3 c^3
  TensorElem c3(e.alg, 0, 1);
  Mono m(5, 0);
  m[2] = 3;
  c3.add(m, rational(1, 3));
  EXPECT_EQ(commutator(e.l(0, 0), e.l(1, 0)), c3);
  EXPECT_TRUE(commutator(e.l(0, 0), e.x(1, 0)).is_zero());
  // Delta(l_e) = e (x) c - c (x) e + l_e (x) 1 + 1 (x) l_e
  const TensorElem one = TensorElem::unit(e.alg, 0);
  const TensorElem ex = e.x(0, 0), c = e.x(2, 0), le = e.l(0, 0);
  EXPECT_EQ(coproduct(le), tensor(ex, c) - tensor(c, ex) + tensor(le, one) + tensor(one, le));
  EXPECT_EQ(antipode(le), -le + ex * c - c * ex);
}

TEST(CrossedProduct, ExtensionRewritingIsConfluent) {
  const auto hd = heisenberg(1);
  const Extension e = extension_algebra(hd.g, {wedge(3, 0, 2), wedge(3, 1, 2)});
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    std::vector<int> word;
    const int len = uniform_int(rng, 2, 6);
    for (int k = 0; k < len; ++k) word.push_back(uniform_int(rng, 0, 4));
    const Poly first = extension_normalize(e, word, rng);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(extension_normalize(e, word, rng), first);
  }
}
