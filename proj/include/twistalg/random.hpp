#pragma once

#include <functional>
#include <string>
#include <vector>

#include "uea.hpp"

namespace twistalg {

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Small nonzero rational p/q with |p| <= 3, q in {1, 2}.
inline Rational random_nonzero(Rng& rng) {
  int p = 0;
  while (p == 0) p = uniform_int(rng, -3, 3);
  return rational(p, uniform_int(rng, 1, 2));
}

inline Rational random_rational(Rng& rng) { return uniform_int(rng, 0, 3) ? random_nonzero(rng) : Rational(0); }

inline Mono random_mono(Rng& rng, int n, int min_deg, int max_deg) {
  Mono m(n, 0);
  const int d = uniform_int(rng, min_deg, max_deg);
  for (int i = 0; i < d; ++i) ++m[uniform_int(rng, 0, n - 1)];
  return m;
}

/// Sparse element with up to `terms` monomials of degree in [min_deg, max_deg],
/// each carrying h^k for a random k in [min_h, order].
inline TensorElem random_element(const AlgebraPtr& alg, int order, Rng& rng, int terms, int min_deg, int max_deg,
                                 int min_h = 0) {
  TensorElem t(alg, order, 1);
  const int count = uniform_int(rng, 1, terms);
  for (int i = 0; i < count; ++i)
    t.add(random_mono(rng, alg->ngens(), min_deg, max_deg), random_nonzero(rng), uniform_int(rng, min_h, order));
  return t;
}

inline TensorElem random_tensor(const AlgebraPtr& alg, int order, int arity, Rng& rng, int terms, int max_deg,
                                int min_h = 0) {
  TensorElem t(alg, order, arity);
  const int count = uniform_int(rng, 1, terms);
  for (int i = 0; i < count; ++i) {
    Key k;
    for (int f = 0; f < arity; ++f) {
      const Mono m = random_mono(rng, alg->ngens(), 0, max_deg);
      k.insert(k.end(), m.begin(), m.end());
    }
    t.add(k, random_nonzero(rng), uniform_int(rng, min_h, order));
  }
  return t;
}

/// exp(sum_k h^k y_k) with sparse y_k of degree 1..2: invertible, counit 1, not central.
inline TensorElem random_gauge(const AlgebraPtr& alg, int order, Rng& rng) {
  return exp(random_element(alg, order, rng, 3, 1, 2, 1));
}

/// exp(sum_k h^k z_k) with z_k random central of degree <= d.
inline TensorElem random_central_gauge(const AlgebraPtr& alg, int order, Rng& rng, int d = 3) {
  const auto basis = center_basis(alg, order, d);
  TensorElem z(alg, order, 1);
  if (basis.empty()) return TensorElem::unit(alg, order);
  for (int k = 1; k <= order; ++k)
    for (int j = 0; j < 2; ++j) {
      const auto& b = basis[uniform_int(rng, 0, static_cast<int>(basis.size()) - 1)];
      z += (HSeries::monomial(order, k, random_nonzero(rng)) * b);
    }
  return exp(z);
}

inline Matrix random_combination(const std::vector<Matrix>& basis, int n, Rng& rng) {
  Matrix C = zero_matrix(n, n);
  for (const auto& b : basis) {
    const Rational s = random_rational(rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) C[i][j] += s * b[i][j];
  }
  return C;
}

inline Matrix random_invertible(int n, Rng& rng) {
  while (true) {
    Matrix A = zero_matrix(n, n);
    for (auto& row : A)
      for (auto& v : row) v = Rational(uniform_int(rng, -2, 2));
    if (inverse(A)) return A;
  }
}

/// Random Lie automorphism of Heisenberg(m): a symplectic transvection, a
/// conformal scaling of V (c scales by the same factor) and a shift by c.
inline Matrix random_heisenberg_automorphism(const HeisenbergData& hd, Rng& rng) {
  const int m = hd.m, n = 2 * m + 1;
  Matrix A = identity_matrix(n);
  // u -> u + s b(w, u) w on V
  Vec w(2 * m);
  for (auto& x : w) x = Rational(uniform_int(rng, -1, 1));
  const Rational s = random_rational(rng);
  Matrix T = identity_matrix(2 * m);
  for (int j = 0; j < 2 * m; ++j) {
    Rational bwu = 0;
    for (int k = 0; k < 2 * m; ++k) bwu += w[k] * hd.form[k][j];
    for (int i = 0; i < 2 * m; ++i) T[i][j] += s * bwu * w[i];
  }
  // e_i -> alpha e_i, f_i -> beta f_i, c -> alpha beta c
  const Rational alpha = random_nonzero(rng), beta = random_nonzero(rng);
  for (int i = 0; i < 2 * m; ++i)
    for (int j = 0; j < 2 * m; ++j) A[i][j] = T[i][j] * (i < m ? alpha : beta);
  A[n - 1][n - 1] = alpha * beta;
  for (int j = 0; j < 2 * m; ++j) A[n - 1][j] = random_rational(rng);
  return A;
}

/// e -> alpha e + lambda z, f -> beta f + mu z, z -> alpha beta z for b_dim = 1
/// (c = 1); for other c only the pure shifts are used.
inline Matrix random_meta_automorphism(const MetaAbelian& ma, Rng& rng) {
  const int b = ma.b_dim, n = 3 * b;
  Matrix A = identity_matrix(n);
  if (b == 1) {
    const Rational alpha = random_nonzero(rng), beta = random_nonzero(rng);
    const Rational k = ma.g.sc(0, 1, 2);
    A[0][0] = alpha;
    A[1][1] = beta;
    A[2][2] = alpha * beta;
    if (sgn(k) == 0) A[2][2] = random_nonzero(rng);
  }
  for (int j = 0; j < 2 * b; ++j)
    for (int z = 2 * b; z < n; ++z) A[z][j] = random_rational(rng);
  return A;
}

/// A named test algebra with a sampler of its Lie automorphisms.
struct TestAlgebra {
  std::string name;
  LieAlgebraData g;
  std::function<Matrix(Rng&)> automorphism;
};

inline TestAlgebra heisenberg_test(int m) {
  auto hd = std::make_shared<HeisenbergData>(heisenberg(m));
  return {"heisenberg" + std::to_string(m), hd->g, [hd](Rng& rng) { return random_heisenberg_automorphism(*hd, rng); }};
}

inline TestAlgebra abelian_test(int n) {
  return {"abelian" + std::to_string(n), abelian_lie(n), [n](Rng& rng) { return random_invertible(n, rng); }};
}

inline TestAlgebra meta_test() {
  auto ma = std::make_shared<MetaAbelian>(meta_abelian(1, {Rational(1)}));
  return {"meta_abelian1", ma->g, [ma](Rng& rng) { return random_meta_automorphism(*ma, rng); }};
}

/// The four algebras of the acceptance suite.
inline std::vector<TestAlgebra> standard_test_algebras() {
  return {heisenberg_test(1), heisenberg_test(2), abelian_test(3), meta_test()};
}

}  // namespace twistalg
