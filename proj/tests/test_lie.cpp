#include <gtest/gtest.h>

#include "twistalg/lie.hpp"
#include "twistalg/random.hpp"

using namespace twistalg;

namespace {

Matrix wedge(int n, int a, int b) {
  Matrix C = zero_matrix(n, n);
  C[a][b] = 1;
  C[b][a] = -1;
  return C;
}

}  // namespace

TEST(Lie, BuiltinsSatisfyJacobi) {
  for (const auto& g : {heisenberg(1).g, heisenberg(3).g, sl2(), solvable2(), abelian_lie(4), meta_abelian(1, {1}).g})
    EXPECT_TRUE(validate_lie(g).ok);
}

TEST(Lie, HeisenbergBracket) {
  const auto hd = heisenberg(2);
  // [e1, f1] = c, [e2, f2] = c, [e1, f2] = 0
  EXPECT_EQ(hd.g.bracket_basis(0, 2), unit_vector(5, 4));
  EXPECT_EQ(hd.g.bracket_basis(1, 3), unit_vector(5, 4));
  EXPECT_TRUE(is_zero(hd.g.bracket_basis(0, 3)));
  EXPECT_EQ(hd.g.bracket_basis(2, 0), Vec({0, 0, 0, 0, -1}));
}

TEST(Lie, JacobiViolationLocation) {
  // [e,f] = e, [f,c] = f: the cyclic sum at (e, f, c) is e
  const auto g = lie_from_brackets(3, {"e", "f", "c"}, {{0, 1, {{0, 1}}}, {1, 2, {{1, 1}}}});
  const auto v = validate_lie(g);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.kind, "jacobi");
  EXPECT_EQ(v.at, (std::array<int, 3>{1, 2, 3}));
}

TEST(Lie, AntisymmetryViolation) {
  LieAlgebraData g(2);
  g.sc(0, 1, 0) = 1;
  const auto v = validate_lie(g);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.kind, "antisymmetry");
}

TEST(Lie, InvariantSkewTensorsOfHeisenberg) {
  // ad_x(u ^ c) = [x,u] ^ c, so (Lambda^2 g)^g = V ^ c for Heisenberg(m)
  for (int m = 1; m <= 3; ++m) {
    const auto hd = heisenberg(m);
    const auto inv = invariant_skew2(hd.g);
    ASSERT_EQ(static_cast<int>(inv.size()), 2 * m);
    for (int v = 0; v < 2 * m; ++v) EXPECT_EQ(inv[v], wedge(2 * m + 1, v, 2 * m));
  }
}

TEST(Lie, InvariantSkewTensorsOfOtherAlgebras) {
  EXPECT_TRUE(invariant_skew2(sl2()).empty());
  EXPECT_TRUE(invariant_skew2(solvable2()).empty());
  EXPECT_EQ(invariant_skew2(abelian_lie(3)).size(), 3u);
}

TEST(Lie, Center) {
  EXPECT_EQ(center(heisenberg(2).g).dim(), 1);
  EXPECT_TRUE(center(heisenberg(2).g).contains(unit_vector(5, 4)));
  EXPECT_EQ(center(sl2()).dim(), 0);
  EXPECT_EQ(center(abelian_lie(3)).dim(), 3);
}

TEST(Lie, HeisenbergIdealsAndForm) {
  const auto hd = heisenberg(1);
  const Subspace ec = Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)});
  EXPECT_TRUE(is_abelian_ideal(hd.g, ec));
  EXPECT_FALSE(is_abelian_ideal(hd.g, Subspace::whole(3)));
  EXPECT_TRUE(is_ideal(hd.g, Subspace::whole(3)));
  const SkewForm b{ec, Matrix{{0, 1}, {-1, 0}}};
  EXPECT_TRUE(form_is_invariant(hd.g, b));
  EXPECT_TRUE(form_is_cocycle(hd.g, b));
}

TEST(Lie, Automorphisms) {
  const auto hd = heisenberg(1);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(is_automorphism(hd.g, random_heisenberg_automorphism(hd, rng)));
  // e -> 2e fixes f and c: breaks [e, f] = c
  Matrix A = identity_matrix(3);
  A[0][0] = 2;
  EXPECT_FALSE(is_automorphism(hd.g, A));
  A[2][2] = 2;
  EXPECT_TRUE(is_automorphism(hd.g, A));
  EXPECT_TRUE(is_derivation(hd.g, hd.g.ad(0)));
}

TEST(Lie, MetaAbelian) {
  const auto ma = meta_abelian(1, {1});
  EXPECT_EQ(ma.g.dim, 3);
  EXPECT_TRUE(form_is_invariant(ma.g, ma.b1));
  EXPECT_TRUE(form_is_invariant(ma.g, ma.b2));
  // c must be symmetric
  EXPECT_THROW(meta_abelian(2, {0, 1, 0, 0, 0, 0, 0, 0}), DomainError);
  EXPECT_THROW(heisenberg(0), ConfigError);
}
