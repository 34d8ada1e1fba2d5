#pragma once

#include <vector>

#include "cochain.hpp"

namespace twistalg {

/// Support a(X) of a skew 2-tensor X = sum C_ab x_a (x) x_b with its form
/// b((l (x) I)X, (l' (x) I)X) = (l (x) l')(X).
struct SupportData {
  Matrix X;
  SkewForm form;

  const Subspace& space() const { return form.space; }
};

namespace detail {

inline std::vector<size_t> pivots_of(const Subspace& s) {
  std::vector<size_t> piv;
  for (const auto& row : s.basis) {
    size_t j = 0;
    while (sgn(row[j]) == 0) ++j;
    piv.push_back(j);
  }
  return piv;
}

inline bool is_skew(const Matrix& C) {
  for (size_t i = 0; i < C.size(); ++i)
    for (size_t j = 0; j < C.size(); ++j)
      if (C[i][j] != -C[j][i]) return false;
  return true;
}

inline Matrix add(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

}  // namespace detail

inline SupportData support(const Matrix& C) {
  if (!detail::is_skew(C)) throw DomainError("support needs a skew 2-tensor");
  const int n = static_cast<int>(C.size());
  SupportData s;
  s.X = C;
  s.form.space = Subspace::span(n, C);
  const auto piv = detail::pivots_of(s.form.space);
  const size_t r = piv.size();
  if (r == 0) return s;
  // In the adapted coordinates X = sum Y_km s_k (x) s_m with Y the pivot minor
  // of C, and the form is B = (Y^T)^{-1}.
  Matrix Y = zero_matrix(r, r);
  for (size_t k = 0; k < r; ++k)
    for (size_t m = 0; m < r; ++m) Y[k][m] = C[piv[k]][piv[m]];
  auto Yinv = inverse(Y);
  if (!Yinv) throw MathViolation("support", "pivot minor is singular");
  s.form.m = transpose(*Yinv, r);
  // The defining display, on the contraction images of the dual basis.
  Matrix M = zero_matrix(n, r);
  for (int a = 0; a < n; ++a)
    for (size_t k = 0; k < r; ++k) M[a][k] = C[a][piv[k]];
  if (M * s.form.m * transpose(M, r) != C)
    throw MathViolation("support", "b(phi(l), phi(l')) != (l (x) l')(X)");
  // Casimir identity sum_ab Y_ab b(s_a, u) s_b = u.
  if (transpose(Y, r) * s.form.m != identity_matrix(r))
    throw MathViolation("support", "X is not the Casimir element of b");
  return s;
}

/// Inverse of support: the Casimir element of a nondegenerate skew form.
inline Matrix casimir_of(const SkewForm& b) {
  const size_t r = b.m.size();
  if (r == 0) return zero_matrix(b.space.ambient, b.space.ambient);
  auto inv = inverse(transpose(b.m, r));
  if (!inv || !b.is_skew()) throw DomainError("casimir_of needs a nondegenerate skew form");
  const Matrix& S = b.space.basis;
  return transpose(S, b.space.ambient) * *inv * S;
}

/// [X_13, X_23] in the triple tensor power.
inline TensorElem x13_x23(const AlgebraPtr& alg, int order, const Matrix& C) {
  const TensorElem X = tensor2_from_matrix(alg, order, C);
  return commutator(embed(X, {0, 2}, 3), embed(X, {1, 2}, 3));
}

struct Classification {
  Subspace ideal;
  SkewForm form;
};

inline Classification classify_invariant(const LieAlgebraData& g, const AlgebraPtr& alg, const Matrix& C) {
  const TensorElem X = tensor2_from_matrix(alg, 0, C);
  if (!is_invariant(X)) throw NotInvariant("X is not g-invariant");
  SupportData s = support(C);
  if (!is_abelian_ideal(g, s.space())) throw MathViolation("abelian_ideal", "support is not an abelian ideal");
  if (!form_is_invariant(g, s.form)) throw MathViolation("form_invariant", "support form is not invariant");
  if (!x13_x23(alg, 0, C).is_zero()) throw MathViolation("x13_x23", "[X_13, X_23] != 0");
  return {s.space(), s.form};
}

/// Builds the Casimir of an invariant symplectic form on an abelian ideal.
inline Matrix casimir_of_ideal(const LieAlgebraData& g, const SkewForm& b) {
  if (!is_abelian_ideal(g, b.space)) throw MathViolation("abelian_ideal", "not an abelian ideal");
  if (!form_is_invariant(g, b)) throw MathViolation("form_invariant", "form is not invariant");
  return casimir_of(b);
}

struct GeometricSum {
  Subspace intersection;
  Subspace K;       // ker of (b_1 + b_2) restricted to a_1 cap a_2
  Subspace via_perp;   // sum-image of (a_1 cap a_2)^perp
  Subspace via_kernel; // kernel of a_1 + a_2 -> K*
  SupportData result;
};

namespace detail {

// Coordinates of the rows of T in the basis of s.
inline Matrix coords_rows(const Subspace& s, const Matrix& T) {
  Matrix P;
  for (const auto& t : T) P.push_back(s.coords(t));
  return P;
}

}  // namespace detail

/// Support of X_1 + X_2 assembled from the two supports.
inline GeometricSum geometric_add(const SupportData& s1, const SupportData& s2) {
  const int n = s1.space().ambient;
  const Subspace& a1 = s1.space();
  const Subspace& a2 = s2.space();
  const size_t r1 = a1.dim(), r2 = a2.dim();
  const Matrix& B1 = s1.form.m;
  const Matrix& B2 = s2.form.m;
  GeometricSum out;
  if (r1 == 0 || r2 == 0) {
    out.intersection = Subspace(n);
    out.K = Subspace(n);
    out.result = r1 == 0 ? s2 : s1;
    out.via_perp = out.via_kernel = out.result.space();
    return out;
  }
  out.intersection = subspace_intersect(a1, a2);
  const Matrix& T = out.intersection.basis;
  const size_t t = T.size();
  const Matrix P1 = detail::coords_rows(a1, T), P2 = detail::coords_rows(a2, T);
  const Matrix G1 = B1 * transpose(P1, r1), G2 = B2 * transpose(P2, r2);  // r_i x t

  auto sum_vec = [&](const Vec& z) {
    Vec u = a1.from_coords(Vec(z.begin(), z.begin() + r1));
    const Vec w = a2.from_coords(Vec(z.begin() + r1, z.end()));
    for (int k = 0; k < n; ++k) u[k] += w[k];
    return u;
  };
  auto sum_image = [&](const std::vector<Vec>& zs) {
    Matrix vs;
    for (const auto& z : zs) vs.push_back(sum_vec(z));
    return Subspace::span(n, std::move(vs));
  };
  // Conditions alpha^T B1 P1^T k - gamma^T B2 P2^T k = 0 for the columns k of Kc.
  auto pairing_kernel = [&](const Matrix& Kc) {
    Matrix sys;
    for (const auto& k : Kc) {
      Vec row(r1 + r2);
      const Vec g1 = G1 * k, g2 = G2 * k;
      for (size_t p = 0; p < r1; ++p) row[p] = g1[p];
      for (size_t q = 0; q < r2; ++q) row[r1 + q] = -g2[q];
      sys.push_back(std::move(row));
    }
    return nullspace(std::move(sys), r1 + r2);
  };

  const std::vector<Vec> perp = pairing_kernel(identity_matrix(t));
  out.via_perp = sum_image(perp);

  const Matrix MI = detail::add(P1 * B1 * transpose(P1, r1), P2 * B2 * transpose(P2, r2));
  const std::vector<Vec> kvecs = nullspace(transpose(MI, t), t);
  Matrix kamb;
  for (const auto& k : kvecs) kamb.push_back(out.intersection.from_coords(k));
  out.K = Subspace::span(n, std::move(kamb));
  out.via_kernel = sum_image(pairing_kernel(Matrix(kvecs.begin(), kvecs.end())));
  if (!(out.via_perp == out.via_kernel))
    throw MathViolation("geometric_add", "image of the orthogonal complement differs from the kernel to K*");

  // Form on a via lifts to the orthogonal complement.
  const Subspace& a = out.via_perp;
  Matrix images;
  for (const auto& z : perp) images.push_back(sum_vec(z));
  std::vector<Vec> lifts;
  for (const auto& v : a.basis) {
    auto wts = solve(transpose(images, n), v, perp.size());
    if (!wts) throw MathViolation("geometric_add", "basis vector has no lift");
    Vec z(r1 + r2);
    for (size_t i = 0; i < perp.size(); ++i)
      for (size_t j = 0; j < r1 + r2; ++j) z[j] += (*wts)[i] * perp[i][j];
    lifts.push_back(std::move(z));
  }
  const size_t r = a.dim();
  Matrix form = zero_matrix(r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      Rational v = 0;
      for (size_t p = 0; p < r1; ++p)
        for (size_t q = 0; q < r1; ++q) v += lifts[i][p] * B1[p][q] * lifts[j][q];
      for (size_t p = 0; p < r2; ++p)
        for (size_t q = 0; q < r2; ++q) v += lifts[i][r1 + p] * B2[p][q] * lifts[j][r1 + q];
      form[i][j] = v;
    }
  out.result.form = {a, form};
  out.result.X = r ? casimir_of(out.result.form) : zero_matrix(n, n);
  return out;
}

struct ThreeVector {
  Subspace b;                 // [a_1, a_2]
  std::vector<Rational> c;    // c^{stu} in the basis of b, index (s*q + t)*q + u
  TensorElem a;               // from c
  TensorElem a_lagrangian;    // from Lagrangian bases
};

namespace detail {

// x in s with b(x, y_u) = target_u for the listed y.
inline Vec dual_lift(const SkewForm& f, const Matrix& ys, const Vec& target) {
  Matrix sys;
  for (const auto& y : ys) {
    const Vec cy = f.space.coords(y);
    sys.push_back(f.m * cy);
  }
  auto x = solve(sys, target, f.space.dim());
  if (!x) throw MathViolation("three_vector", "no dual lift");
  return f.space.from_coords(*x);
}

// b-orthogonal complement of W inside the space of f.
inline Subspace orthogonal(const SkewForm& f, const Matrix& W) {
  Matrix sys;
  for (const auto& w : W) {
    const Vec cw = f.space.coords(w);
    Vec row(f.space.dim());
    for (int p = 0; p < f.space.dim(); ++p)
      for (int q = 0; q < f.space.dim(); ++q) row[p] += f.m[p][q] * cw[q];
    sys.push_back(row);
  }
  Matrix out;
  for (const auto& v : nullspace(std::move(sys), f.space.dim())) out.push_back(f.space.from_coords(v));
  return Subspace::span(f.space.ambient, std::move(out));
}

struct Darboux {
  Matrix e, e_dual;  // b(e_i, e_dual_j) = delta_ij, both spans isotropic
};

// Greedy Lagrangian containing the isotropic rows of `start` (kept first), and
// an isotropic dual complement.
inline Darboux darboux(const SkewForm& f, const Matrix& start) {
  Darboux d;
  d.e = start;
  const int half = f.space.dim() / 2;
  while (static_cast<int>(d.e.size()) < half) {
    const Subspace perp = orthogonal(f, d.e);
    const Subspace have = Subspace::span(f.space.ambient, d.e);
    bool grown = false;
    for (const auto& v : perp.basis)
      if (!have.contains(v)) {
        d.e.push_back(v);
        grown = true;
        break;
      }
    if (!grown) throw MathViolation("three_vector", "LagrangianNotFound");
  }
  const size_t p = d.e.size();
  Matrix w;
  for (size_t j = 0; j < p; ++j) {
    Vec target(p);
    target[j] = -1;  // b(w_j, e_i) = -delta_ij
    w.push_back(dual_lift(f, d.e, target));
  }
  for (size_t j = 0; j < p; ++j) {
    Vec v = w[j];
    for (size_t k = 0; k < p; ++k) {
      const Rational s = f.eval(w[j], w[k]) / 2;
      for (int a = 0; a < f.space.ambient; ++a) v[a] -= s * d.e[k][a];
    }
    d.e_dual.push_back(std::move(v));
  }
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j) {
      if (f.eval(d.e[i], d.e_dual[j]) != (i == j ? 1 : 0) || sgn(f.eval(d.e_dual[i], d.e_dual[j])) != 0 ||
          sgn(f.eval(d.e[i], d.e[j])) != 0)
        throw MathViolation("three_vector", "Darboux basis construction failed");
    }
  return d;
}

inline TensorElem product3(const AlgebraPtr& alg, int order, const Vec& x, const Vec& y, const Vec& z) {
  return lie_element(alg, order, x) * lie_element(alg, order, y) * lie_element(alg, order, z);
}

}  // namespace detail

/// Central a with d(a) = [X_1, X_2] from the symmetric 3-vector c on [a_1, a_2]:
/// a = -(1/3) sum c^{stu} y_s y_t y_u.
inline ThreeVector three_vector(const LieAlgebraData& g, const AlgebraPtr& alg, int order, const Matrix& C1,
                                const Matrix& C2) {
  const SupportData s1 = support(C1), s2 = support(C2);
  ThreeVector out;
  out.b = commutant(g, s1.space(), s2.space());
  out.a = TensorElem(alg, order, 1);
  out.a_lagrangian = out.a;
  const TensorElem X1 = tensor2_from_matrix(alg, order, C1), X2 = tensor2_from_matrix(alg, order, C2);
  const TensorElem comm = commutator(X1, X2);
  const int q = out.b.dim();
  if (q == 0) {
    if (!comm.is_zero()) throw MathViolation("three_vector", "[a_1, a_2] = 0 but [X_1, X_2] != 0");
    return out;
  }
  if (!s1.space().contains(out.b) || !s2.space().contains(out.b))
    throw MathViolation("three_vector", "[a_1, a_2] is not inside a_1 and a_2");
  const Matrix& Y = out.b.basis;
  const Subspace perp1 = detail::orthogonal(s1.form, Y), perp2 = detail::orthogonal(s2.form, Y);
  if (commutant(g, perp1, s2.space()).dim() != 0 || commutant(g, s1.space(), perp2).dim() != 0)
    throw MathViolation("three_vector", "commutation property [b^perp, a_2] = [a_1, b^perp] = 0 fails");

  std::vector<Vec> x1, x2;
  for (int s = 0; s < q; ++s) {
    Vec target(q);
    target[s] = 1;
    x1.push_back(detail::dual_lift(s1.form, Y, target));
    x2.push_back(detail::dual_lift(s2.form, Y, target));
  }
  out.c.assign(static_cast<size_t>(q) * q * q, Rational(0));
  for (int s = 0; s < q; ++s)
    for (int t = 0; t < q; ++t) {
      const Vec br = g.bracket(x1[s], x2[t]);
      const Vec co = out.b.coords(br);
      for (int u = 0; u < q; ++u) out.c[(s * q + t) * q + u] = co[u];
    }
  auto at = [&](int s, int t, int u) { return out.c[(s * q + t) * q + u]; };
  for (int s = 0; s < q; ++s)
    for (int t = 0; t < q; ++t)
      for (int u = 0; u < q; ++u)
        if (at(s, t, u) != at(u, t, s) || at(s, t, u) != at(s, u, t))
          throw MathViolation("three_vector", "c is not symmetric");
  for (int s = 0; s < q; ++s)
    for (int t = 0; t < q; ++t)
      for (int u = 0; u < q; ++u)
        if (sgn(at(s, t, u)) != 0) out.a += detail::product3(alg, order, Y[s], Y[t], Y[u]) * at(s, t, u);
  out.a *= Rational(-1, 3);

  const auto d1 = detail::darboux(s1.form, Y), d2 = detail::darboux(s2.form, Y);
  for (size_t i = 0; i < d1.e.size(); ++i)
    for (size_t j = 0; j < d2.e.size(); ++j) {
      const Vec br = g.bracket(d1.e_dual[i], d2.e_dual[j]);
      if (is_zero(br)) continue;
      out.a_lagrangian += detail::product3(alg, order, d1.e[i], d2.e[j], br);
    }
  out.a_lagrangian *= Rational(-1, 3);

  if (out.a != out.a_lagrangian) throw MathViolation("three_vector", "Lagrangian-basis formula disagrees");
  if (differential(out.a) != comm) throw MathViolation("three_vector", "d(a) != [X_1, X_2]");
  return out;
}

}  // namespace twistalg
