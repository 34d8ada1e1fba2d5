#pragma once

#include <map>
#include <vector>

#include "twist.hpp"

namespace twistalg {

inline TensorElem leg(const TensorElem& r, int i, int j) { return embed(r, {i, j}, 3); }

/// Invariance, the triangle equations, normalization, unitarity and the
/// 2-cocycle identity in both forms.
inline Report verify_triangular(const TensorElem& R) {
  if (R.arity() != 2) throw DomainError("an R-matrix is a 2-tensor");
  Report r;
  const auto& alg = R.algebra();
  const int N = R.order();
  bool invertible = true;
  try {
    constant_scalar(R);
  } catch (const NotInvertible&) {
    invertible = false;
  }
  r.add("invertible", invertible);
  if (!invertible) return r;
  // R Delta(x) = Delta^op(x) R; Delta is cocommutative on U(g)
  bool inv = true;
  for (int i = 0; i < alg->ngens() && inv; ++i) {
    const TensorElem d = coproduct(TensorElem::generator(alg, N, i));
    inv = R * d == flip(d) * R;
  }
  r.add("intertwining", inv);
  const TensorElem R12 = leg(R, 0, 1), R13 = leg(R, 0, 2), R23 = leg(R, 1, 2);
  const TensorElem d1 = coproduct_at(R, 1) - R13 * R12;
  r.add("triangle_left", d1.is_zero(), detail::at_degree(d1));
  const TensorElem d2 = coproduct_at(R, 0) - R13 * R23;
  r.add("triangle_right", d2.is_zero(), detail::at_degree(d2));
  const TensorElem one1 = TensorElem::unit(alg, N, 1);
  r.add("normalization", counit_at(R, 0) == one1 && counit_at(R, 1) == one1);
  const TensorElem u = flip(R) * R - TensorElem::unit(alg, N, 2);
  r.add("unitarity", u.is_zero(), detail::at_degree(u));
  const TensorElem c = twist_cocycle_lhs(R) - twist_cocycle_rhs(R);
  r.add("r_2cocycle", c.is_zero(), detail::at_degree(c));
  const TensorElem disp = R12 * R13 * R23 - coproduct_at(R, 1) * embed(R, {1, 2}, 3);
  r.add("r_2cocycle_display", disp.is_zero(), detail::at_degree(disp));
  return r;
}

struct DrinfeldElement {
  TensorElem u;
  Report checks;
};

/// u = mu (I (x) S)(R), with group-likeness, centrality and u^2 = 1 checked.
inline DrinfeldElement drinfeld_element(const TensorElem& R) {
  DrinfeldElement d;
  d.u = multiply_at(antipode_at(R, 1), 0);
  const auto& alg = R.algebra();
  d.checks.add("group_like", coproduct(d.u) == tensor(d.u, d.u));
  bool central = true;
  for (int i = 0; i < alg->ngens(); ++i)
    central = central && commutator(TensorElem::generator(alg, R.order(), i), d.u).is_zero();
  d.checks.add("central", central);
  d.checks.add("involution", d.u * d.u == TensorElem::unit(alg, R.order(), 1));
  return d;
}

/// R^{(f,F)} = F_21^{-1} (f (x) f)(R) F, the transport of R along (f, F)
/// under F Delta(f(x)) = (f (x) f)(Delta(x)) F. For F = G^{-1} this is
/// G_21 (f (x) f)(R) G^{-1}.
inline TensorElem twist_R(const TwistedEndo& t, const TensorElem& R) {
  return inverse(flip(t.F)) * t.f.apply(R) * t.F;
}

/// [r12, r13] + [r12, r23] + [r13, r23] for a Lie-level 2-tensor.
inline TensorElem cybe(const TensorElem& r) {
  const TensorElem r12 = leg(r, 0, 1), r13 = leg(r, 0, 2), r23 = leg(r, 1, 2);
  return commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
}

inline TensorElem cybe(const AlgebraPtr& alg, const Matrix& C) { return cybe(tensor2_from_matrix(alg, 0, C)); }

struct ClassicalLimit {
  Matrix r;
  TensorElem gauge;  // exp(-a h) bringing F_1 to Alt_2(F_1)
};

/// (1 (x) f1)(I (x) Delta)(f1) - (f1 (x) 1)(Delta (x) I)(f1).
inline TensorElem cybe_degree2_lhs(const TensorElem& f1) {
  return embed(f1, {1, 2}, 3) * coproduct_at(f1, 1) - embed(f1, {0, 1}, 3) * coproduct_at(f1, 0);
}

/// r = Alt_2(F_1) after gauging, with the degree-2 part of the cocycle
/// equation forcing the CYBE.
inline ClassicalLimit classical_limit(const TensorElem& F) {
  const auto rep = verify_twist(F);
  if (!rep.ok()) throw NotACocycle(rep.first_failure()->identity + ": " + rep.first_failure()->detail);
  const auto& alg = F.algebra();
  const int N = F.order();
  if (N < 2) throw ConfigError("classical limit needs h-order >= 2");
  ClassicalLimit cl;
  const TensorElem X = detail::leading_part(F, 1);
  const TensorElem a = solve_coboundary(X, false);
  cl.gauge = exp((-a).mul_h(1));
  const TensorElem G = apply_gauge(cl.gauge, TwistedEndo::pure_twist(F)).F;
  const TensorElem f1 = detail::leading_part(G, 1);
  const TensorElem f2 = (G - TensorElem::unit(alg, N, 2)).coeff(2);
  auto r = lie_matrix(f1);
  if (!r || f1 != alternation(X)) throw MathViolation("classical_limit", "F_1 is not Alt_2 after gauging");
  cl.r = *r;
  const TensorElem lhs = cybe_degree2_lhs(f1.coeff(0));
  const TensorElem df2 = differential(f2.coeff(0));
  if (lhs != -df2) throw MathViolation("classical_limit", "degree-2 cocycle equation fails");
  if (!alternation(df2).is_zero()) throw MathViolation("classical_limit", "Alt_3 d(f2) != 0");
  const TensorElem cyb = cybe(f1.coeff(0));
  if (alternation(lhs) != cyb * Rational(-2, 3))
    throw MathViolation("classical_limit", "Alt_3 identity with the CYBE fails");
  if (!cyb.is_zero()) throw CYBEViolation("classical limit does not satisfy the CYBE");
  return cl;
}

/// {x in g : [r, x (x) 1 + 1 (x) x] = 0}.
inline Subspace centralizer(const LieAlgebraData& g, const Matrix& C) {
  const int n = g.dim;
  // Column i: entries of ad_i C + C ad_i^T.
  Matrix sys = zero_matrix(static_cast<size_t>(n) * n, n);
  for (int i = 0; i < n; ++i) {
    const Matrix A = g.ad(i);
    const Matrix D = A * C, E = C * transpose(A, n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) sys[p * n + q][i] = D[p][q] + E[p][q];
  }
  Subspace s = Subspace::span(n, nullspace(std::move(sys), n));
  if (!is_subalgebra(g, s)) throw MathViolation("centralizer", "centralizer is not a subalgebra");
  return s;
}

/// Stabilizer of the support form inside the normalizer of the support.
inline Subspace support_stabilizer(const LieAlgebraData& g, const SupportData& s) {
  const int n = g.dim;
  const Subspace& a = s.space();
  const int r = a.dim();
  // x in N_g(a): [x, a] in a; then b([x,u],w) + b(u,[x,w]) = 0.
  Matrix sys;
  // A vector v lies in a iff v minus its a-part (read on pivot columns) vanishes.
  const auto piv = detail::pivots_of(a);
  auto residual = [&](const Vec& v) {
    Vec res = v;
    for (size_t k = 0; k < piv.size(); ++k)
      for (int j = 0; j < n; ++j) res[j] -= v[piv[k]] * a.basis[k][j];
    return res;
  };
  std::vector<std::vector<Vec>> br(n);  // br[i][k] = [x_i, a_k]
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < r; ++k) br[i].push_back(g.bracket(unit_vector(n, i), a.basis[k]));
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < n; ++j) {
      Vec row(n);
      for (int i = 0; i < n; ++i) row[i] = residual(br[i][k])[j];
      sys.push_back(row);
    }
  const Subspace normalizer = Subspace::span(n, nullspace(sys, n));
  // Form condition on the normalizer, in its coordinates.
  Matrix fsys;
  const int m = normalizer.dim();
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l) {
      Vec row(m);
      for (int t = 0; t < m; ++t) {
        const Vec& x = normalizer.basis[t];
        row[t] = s.form.eval(g.bracket(x, a.basis[k]), a.basis[l]) + s.form.eval(a.basis[k], g.bracket(x, a.basis[l]));
      }
      fsys.push_back(row);
    }
  Matrix out;
  for (const auto& v : nullspace(std::move(fsys), m)) out.push_back(normalizer.from_coords(v));
  return Subspace::span(n, std::move(out));
}

/// For a CYBE solution: the support is a subalgebra and its form a Lie 2-cocycle.
inline Report drinfeld_support(const LieAlgebraData& g, const Matrix& C) {
  Report r;
  const SupportData s = support(C);
  r.add("support_subalgebra", is_subalgebra(g, s.space()));
  r.add("support_form_cocycle", form_is_cocycle(g, s.form));
  return r;
}

/// X + r for invariant X and a CYBE solution r.
inline Matrix invariant_shift(const LieAlgebraData& g, const AlgebraPtr& alg, const Matrix& X, const Matrix& r) {
  if (!is_invariant(tensor2_from_matrix(alg, 0, X))) throw NotInvariant("shift must be invariant");
  if (!cybe(alg, r).is_zero()) throw CYBEViolation("r is not a CYBE solution");
  Matrix s = detail::add(X, r);
  if (!cybe(alg, s).is_zero()) throw CYBEViolation("X + r fails the CYBE");
  (void)g;
  return s;
}

/// r = Y + v wedge c with Y in Lambda^2 V, for Heisenberg(m).
struct HeisenbergSplit {
  Matrix Y;
  Vec v;  // coordinates on e_1..e_m, f_1..f_m
};

inline HeisenbergSplit heisenberg_decomposition(const HeisenbergData& hd, const Matrix& r) {
  const int n = hd.g.dim, c = n - 1;
  HeisenbergSplit out;
  out.Y = r;
  out.v.assign(c, Rational(0));
  for (int i = 0; i < c; ++i) {
    out.v[i] = r[i][c];
    out.Y[i][c] = 0;
    out.Y[c][i] = 0;
  }
  if (sgn(r[c][c]) != 0 || !detail::is_skew(r)) throw DomainError("r is not skew");
  return out;
}

/// Toy Hopf algebra k[Z/2] = span{1, u}, u group-like with u^2 = 1; an
/// element of its k-th tensor power maps bit strings to coefficients.
class Z2Tensor {
 public:
  using Bits = std::vector<uint8_t>;

  explicit Z2Tensor(int arity) : arity_(arity) {}

  static Z2Tensor unit(int arity) {
    Z2Tensor t(arity);
    t.add(Bits(arity, 0), 1);
    return t;
  }

  int arity() const { return arity_; }
  const std::map<Bits, Rational>& terms() const { return terms_; }

  void add(const Bits& b, const Rational& v) {
    auto& x = terms_[b];
    x += v;
    if (sgn(x) == 0) terms_.erase(b);
  }

  friend Z2Tensor operator*(const Z2Tensor& a, const Z2Tensor& b) {
    Z2Tensor r(a.arity_);
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_) {
        Bits k(a.arity_);
        for (int i = 0; i < a.arity_; ++i) k[i] = ka[i] ^ kb[i];
        r.add(k, va * vb);
      }
    return r;
  }
  friend Z2Tensor operator+(Z2Tensor a, const Z2Tensor& b) {
    for (const auto& [k, v] : b.terms_) a.add(k, v);
    return a;
  }
  friend Z2Tensor operator*(Z2Tensor a, const Rational& s) {
    Z2Tensor r(a.arity_);
    for (const auto& [k, v] : a.terms_) r.add(k, v * s);
    return r;
  }
  friend bool operator==(const Z2Tensor& a, const Z2Tensor& b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }

  /// Factor i goes to positions[i] of an arity-k tensor, 1 elsewhere.
  Z2Tensor embed(const std::vector<int>& positions, int k) const {
    Z2Tensor r(k);
    for (const auto& [b, v] : terms_) {
      Bits out(k, 0);
      for (int i = 0; i < arity_; ++i) out[positions[i]] = b[i];
      r.add(out, v);
    }
    return r;
  }
  Z2Tensor coproduct_at(int i) const {
    Z2Tensor r(arity_ + 1);
    for (const auto& [b, v] : terms_) {
      Bits out(b.begin(), b.begin() + i + 1);
      out.insert(out.end(), b.begin() + i, b.end());
      r.add(out, v);
    }
    return r;
  }
  Z2Tensor counit_at(int i) const {
    Z2Tensor r(arity_ - 1);
    for (const auto& [b, v] : terms_) {
      Bits out(b);
      out.erase(out.begin() + i);
      r.add(out, v);
    }
    return r;
  }
  Z2Tensor flip() const { return embed({1, 0}, 2); }
  /// mu (I (x) S) on a 2-tensor; S(u) = u.
  Z2Tensor mu_id_s() const {
    Z2Tensor r(1);
    for (const auto& [b, v] : terms_) r.add(Bits{static_cast<uint8_t>(b[0] ^ b[1])}, v);
    return r;
  }

 private:
  int arity_;
  std::map<Bits, Rational> terms_;
};

inline Z2Tensor z2_involution() {
  Z2Tensor u(1);
  u.add({1}, 1);
  return u;
}

/// R_u = 1/2 (1 (x) 1 + 1 (x) u + u (x) 1 - u (x) u) for a group-like involution u.
inline Z2Tensor r_from_involution(const Z2Tensor& u) {
  if (u.arity() != 1) throw DomainError("u must be an algebra element");
  const Z2Tensor one = Z2Tensor::unit(1);
  if (!(u * u == one) || !(u.coproduct_at(0) == u.embed({0}, 2) * u.embed({1}, 2)))
    throw DomainError("u must be a group-like involution");
  const Z2Tensor u1 = u.embed({0}, 2), u2 = u.embed({1}, 2);
  return (Z2Tensor::unit(2) + u2 + u1 + u1 * u2 * Rational(-1)) * Rational(1, 2);
}

inline Report verify_triangular(const Z2Tensor& R) {
  Report r;
  const Z2Tensor R12 = R.embed({0, 1}, 3), R13 = R.embed({0, 2}, 3), R23 = R.embed({1, 2}, 3);
  r.add("triangle_left", R.coproduct_at(1) == R13 * R12);
  r.add("triangle_right", R.coproduct_at(0) == R13 * R23);
  r.add("normalization", R.counit_at(0) == Z2Tensor::unit(1) && R.counit_at(1) == Z2Tensor::unit(1));
  r.add("unitarity", R.flip() * R == Z2Tensor::unit(2));
  r.add("r_2cocycle", R12 * R.coproduct_at(0) == R23 * R.coproduct_at(1));
  r.add("r_2cocycle_display", R12 * R13 * R23 == R.coproduct_at(1) * R23);
  return r;
}

}  // namespace twistalg
