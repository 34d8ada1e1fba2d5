#pragma once

#include <functional>
#include <string>
#include <vector>

#include "geom.hpp"

namespace twistalg {

/// One asserted identity and its outcome.
struct Check {
  std::string identity;
  bool ok = true;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string identity, bool ok, std::string detail = {}) {
    checks.push_back({std::move(identity), ok, std::move(detail)});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }
};

namespace detail {

inline std::string at_degree(const TensorElem& diff) {
  return diff.is_zero() ? std::string{} : "first difference at h-degree " + std::to_string(diff.valuation());
}

}  // namespace detail

inline TensorElem twist_cocycle_lhs(const TensorElem& F) {
  return embed(F, {0, 1}, 3) * coproduct_at(F, 0);
}

inline TensorElem twist_cocycle_rhs(const TensorElem& F) {
  return embed(F, {1, 2}, 3) * coproduct_at(F, 1);
}

struct TwistReport : Report {
  bool invariant = false;
};

/// Unit congruence, normalization, 2-cocycle condition; invariance reported separately.
inline TwistReport verify_twist(const TensorElem& F) {
  TwistReport r;
  if (F.arity() != 2) throw DomainError("a twist is a 2-tensor");
  const TensorElem one2 = TensorElem::unit(F.algebra(), F.order(), 2);
  const TensorElem one1 = TensorElem::unit(F.algebra(), F.order(), 1);
  const TensorElem c0 = F.coeff(0);
  r.add("unit_congruence", c0 == one2, c0 == one2 ? "" : "F is not 1 (x) 1 mod h");
  const TensorElem nl = counit_at(F, 0) - one1, nr = counit_at(F, 1) - one1;
  r.add("normalization_left", nl.is_zero(), detail::at_degree(nl));
  r.add("normalization_right", nr.is_zero(), detail::at_degree(nr));
  const TensorElem d = twist_cocycle_lhs(F) - twist_cocycle_rhs(F);
  r.add("twist_2cocycle", d.is_zero(), d.is_zero() ? "" : "2-cocycle violation at h-degree " + std::to_string(d.valuation()));
  r.invariant = is_invariant(F);
  return r;
}

/// A twisted endomorphism (f, F) of U(g)[h]/(h^{N+1}).
struct TwistedEndo {
  AlgebraMap f;
  TensorElem F;

  static TwistedEndo identity(const AlgebraPtr& alg, int order) {
    return {AlgebraMap::identity(alg, order), TensorElem::unit(alg, order, 2)};
  }
  static TwistedEndo pure_twist(const TensorElem& F) { return {AlgebraMap::identity(F.algebra(), F.order()), F}; }
  static TwistedEndo pure_map(const AlgebraMap& f) { return {f, TensorElem::unit(f.algebra(), f.order(), 2)}; }

  friend bool operator==(const TwistedEndo& a, const TwistedEndo& b) { return a.f == b.f && a.F == b.F; }
  friend bool operator!=(const TwistedEndo& a, const TwistedEndo& b) { return !(a == b); }
};

/// Bracket compatibility of f on generators, (conj) F Delta(f(x)) = (f (x) f)(Delta(x)) F,
/// and the twist axioms of F.
inline Report verify_endo(const TwistedEndo& t) {
  Report r;
  const auto& alg = t.f.algebra();
  const int n = alg->ngens(), N = t.f.order();
  const auto& ims = t.f.images();
  bool brackets = true;
  std::string where;
  for (int i = 0; i < n && brackets; ++i)
    for (int j = i + 1; j < n && brackets; ++j) {
      TensorElem br(alg, N, 1);
      for (const auto& [m, v] : alg->bracket(j, i)) br += t.f.apply(TensorElem::from_poly(alg, N, 1, PolyK{{m, v}}));
      if (commutator(ims[j], ims[i]) != br) {
        brackets = false;
        where = "fails on pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      }
    }
  r.add("algebra_map", brackets, where);
  bool conj = true;
  where.clear();
  for (int i = 0; i < n && conj; ++i) {
    const TensorElem lhs = t.F * coproduct(ims[i]);
    const TensorElem rhs = t.f.apply(coproduct(TensorElem::generator(alg, N, i))) * t.F;
    if (lhs != rhs) {
      conj = false;
      where = "generator " + alg->names()[i] + ", " + detail::at_degree(lhs - rhs);
    }
  }
  r.add("conj", conj, where);
  for (auto& c : verify_twist(t.F).checks) r.checks.push_back(c);
  return r;
}

/// (f', F') o (f, F) = (f' f, f'(F) F').
inline TwistedEndo compose(const TwistedEndo& t2, const TwistedEndo& t1) {
  return {t2.f.after(t1.f), t2.f.apply(t1.F) * t2.F};
}

/// f' = a f a^{-1}, F' = (a (x) a) F Delta(a)^{-1}, i.e. F' Delta(a) = (a (x) a) F.
inline TwistedEndo apply_gauge(const TensorElem& a, const TwistedEndo& t) {
  const TensorElem ai = inverse(a);
  return {t.f.conjugated(a, ai), tensor(a, a) * t.F * coproduct(ai)};
}

inline TwistedEndo transpose(const TwistedEndo& t) { return {t.f, flip(t.F)}; }
inline bool is_symmetric(const TwistedEndo& t) { return flip(t.F) == t.F; }

/// Twisted coproducts of x by F.
enum class TwistedCoproduct { conjugated, twisted_form, galois };

inline TensorElem twisted_coproduct(const TensorElem& F, const TensorElem& x, TwistedCoproduct which) {
  const TensorElem d = coproduct(x);
  switch (which) {
    case TwistedCoproduct::conjugated:
      return F * d * inverse(F);
    case TwistedCoproduct::twisted_form:
      return inverse(F) * d * F;
    case TwistedCoproduct::galois:
      return F * d;
  }
  throw DomainError("unknown twisted coproduct");
}

/// prod_{i=1..N} exp(X_i h^i) with a gauge certificate.
struct NormalForm {
  std::vector<TensorElem> X;  // X[i-1] is the coefficient of h^i, h-independent
  TensorElem gauge;
};

inline TensorElem normal_form_product(const std::vector<TensorElem>& X) {
  if (X.empty()) throw DomainError("empty normal form");
  TensorElem r = TensorElem::unit(X[0].algebra(), X[0].order(), 2);
  for (size_t i = 0; i < X.size(); ++i)
    if (!X[i].is_zero()) r = r * exp(X[i].mul_h(static_cast<int>(i) + 1));
  return r;
}

namespace detail {

// h^l coefficient of F, which must be 1 (x) 1 mod h^l.
inline TensorElem leading_part(const TensorElem& F, int l) {
  const TensorElem one = TensorElem::unit(F.algebra(), F.order(), F.arity());
  const TensorElem d = F - one;
  if (d.valuation() < l) throw MathViolation("normalize", "twist is not 1 mod h^" + std::to_string(l));
  return d.coeff(l);
}

}  // namespace detail

/// Gauge an invariant twist to prod exp(X_i h^i), X_i in (Lambda^2 g)^g.
/// The cocycle condition is not checked up front: a leading part that is not
/// a cocycle raises NotACocycle, and the final certificate proves F a twist.
inline NormalForm normalize_invariant_twist(const TensorElem& F) {
  if (F.arity() != 2) throw DomainError("a twist is a 2-tensor");
  if (!is_invariant(F)) throw NotInvariant("twist is not invariant");
  const auto& alg = F.algebra();
  const int N = F.order();
  NormalForm nf;
  nf.gauge = TensorElem::unit(alg, N, 1);
  TensorElem cur = F;
  for (int l = 1; l <= N; ++l) {
    const TensorElem X = detail::leading_part(cur, l);
    TensorElem Xl(alg, N, 2);
    if (!X.is_zero()) {
      const TensorElem a = solve_coboundary(X, true);
      const TensorElem g = exp((-a).mul_h(l));
      cur = apply_gauge(g, TwistedEndo::pure_twist(cur)).F;
      nf.gauge = g * nf.gauge;
      Xl = alternation(X);
      if (!lie_matrix(Xl) || !is_invariant(Xl))
        throw MathViolation("normalize", "Alt_2 of the leading part is not in (Lambda^2 g)^g");
      if (detail::leading_part(cur, l) != Xl) throw MathViolation("normalize", "gauge did not remove d(a)");
      cur = exp((-Xl).mul_h(l)) * cur;
    }
    nf.X.push_back(Xl);
  }
  if (cur != TensorElem::unit(alg, N, 2)) throw MathViolation("normalize", "residual twist after peeling");
  if (apply_gauge(nf.gauge, TwistedEndo::pure_twist(F)).F != normal_form_product(nf.X))
    throw MathViolation("normalize", "gauge certificate fails");
  return nf;
}

/// Result of separation: apply_gauge(gauge, t) == compose((iota, F_inv), (automorphism, 1)).
struct Separated {
  Matrix lie_part;
  AlgebraMap automorphism;
  TensorElem F_inv;
  TensorElem gauge;
};

inline Separated separate(const TwistedEndo& t) {
  const auto& alg = t.f.algebra();
  const int N = t.f.order();
  const auto& lie = alg->lie();
  if (!lie) throw DomainError("separation needs an enveloping algebra");
  auto A = t.f.constant_linear_part();
  if (!A || !is_automorphism(*lie, *A)) throw NotAnAutomorphism("constant term is not a Lie automorphism");
  const AlgebraMap g0 = AlgebraMap::from_matrix(alg, N, *A);
  const AlgebraMap g0i = AlgebraMap::from_matrix(alg, N, *inverse(*A));
  TwistedEndo cur = compose(t, TwistedEndo::pure_map(g0i));
  TensorElem P = TensorElem::unit(alg, N, 2);
  TensorElem B = TensorElem::unit(alg, N, 1);
  for (int l = 1; l <= N; ++l) {
    const TensorElem X = detail::leading_part(cur.F, l);
    if (X.is_zero()) continue;
    const TensorElem a = solve_coboundary(X, false);
    const TensorElem b = exp((-a).mul_h(l));
    cur = apply_gauge(b, cur);
    B = b * B;
    const TensorElem Xl = alternation(X);
    if (detail::leading_part(cur.F, l) != Xl) throw MathViolation("separate", "gauge did not remove d(a)");
    if (!is_invariant(Xl)) throw MathViolation("separate", "antisymmetric part is not invariant");
    const TensorElem El = exp(Xl.mul_h(l));
    cur.F = cur.F * inverse(El);
    P = El * P;
  }
  if (cur.F != TensorElem::unit(alg, N, 2)) throw MathViolation("separate", "residual twist after peeling");
  for (int i = 0; i < alg->ngens(); ++i) {
    const TensorElem& y = cur.f.images()[i];
    if (coproduct(y) != tensor(y, TensorElem::unit(alg, N, 1)) + tensor(TensorElem::unit(alg, N, 1), y))
      throw MathViolation("separate", "separated map is not a bialgebra map");
  }
  Separated s{*A, cur.f.after(g0), P, B};
  const TwistedEndo lhs = apply_gauge(B, t);
  const TwistedEndo rhs = compose(TwistedEndo::pure_twist(P), TwistedEndo::pure_map(s.automorphism));
  if (lhs != rhs) throw MathViolation("separate", "reconstruction identity fails");
  return s;
}

/// Central a(X,Y) with d(a) = [X,Y], by the solver and by the 3-vector construction.
struct GroupLaw {
  TensorElem a_solver;
  TensorElem a_geometric;
  TensorElem commutator;
};

inline GroupLaw group_law_cocycle(const LieAlgebraData& g, const TensorElem& X, const TensorElem& Y) {
  auto CX = lie_matrix(X), CY = lie_matrix(Y);
  if (!CX || !CY) throw DomainError("group law expects Lie-level 2-tensors");
  if (!is_invariant(X) || !is_invariant(Y)) throw NotInvariant("group law expects invariant tensors");
  GroupLaw r;
  r.commutator = commutator(X, Y);
  r.a_solver = solve_coboundary(r.commutator, true);
  r.a_geometric = three_vector(g, X.algebra(), X.order(), *CX, *CY).a;
  if (differential(r.a_solver) != r.commutator || differential(r.a_geometric) != r.commutator)
    throw MathViolation("cobcom", "d(a) != [X, Y]");
  return r;
}

/// exp(1/2 a h^2) is a gauge transformation from exp((X+Y)h) to exp(Xh) exp(Yh).
inline bool group_law_certificate(const TensorElem& X, const TensorElem& Y, const TensorElem& a) {
  const TwistedEndo sum = TwistedEndo::pure_twist(exp((X + Y).mul_h(1)));
  const TensorElem g = exp((a * Rational(1, 2)).mul_h(2));
  return apply_gauge(g, sum).F == exp(X.mul_h(1)) * exp(Y.mul_h(1));
}

using CocycleFn = std::function<TensorElem(const TensorElem&, const TensorElem&)>;

/// The geometric a(X,Y) as a function of Lie-level tensors.
inline CocycleFn geometric_cocycle(const LieAlgebraData& g) {
  return [g](const TensorElem& X, const TensorElem& Y) {
    return three_vector(g, X.algebra(), X.order(), *lie_matrix(X), *lie_matrix(Y)).a;
  };
}

/// 1/2 (a(X,Y) + a(X+Y,Z) - a(Y,Z) - a(X,Y+Z)).
inline TensorElem associator(const CocycleFn& a, const TensorElem& X, const TensorElem& Y, const TensorElem& Z) {
  return (a(X, Y) + a(X + Y, Z) - a(Y, Z) - a(X, Y + Z)) * Rational(1, 2);
}

/// Signed sum of the associator over the six orderings of its arguments.
inline TensorElem associator_alternation(const CocycleFn& a, const TensorElem& X, const TensorElem& Y,
                                         const TensorElem& Z) {
  const std::vector<const TensorElem*> args{&X, &Y, &Z};
  std::vector<int> p{0, 1, 2};
  TensorElem r(X.algebra(), X.order(), 1);
  do {
    const TensorElem t = associator(a, *args[p[0]], *args[p[1]], *args[p[2]]);
    if (permutation_sign(p) > 0) r += t;
    else r -= t;
  } while (std::next_permutation(p.begin(), p.end()));
  return r;
}

/// The associator read off two gauge paths from exp((X+Y+Z)h) to
/// exp(Xh)exp(Yh)exp(Zh): h^2 times it equals log(G_1 G_2^{-1}).
struct AssociatorPaths {
  bool path1_ok = false;
  bool path2_ok = false;
  TensorElem log_ratio;
};

inline AssociatorPaths associator_by_gauges(const CocycleFn& a, const TensorElem& X, const TensorElem& Y,
                                            const TensorElem& Z) {
  auto half = [&](const TensorElem& u, const TensorElem& v) { return exp((a(u, v) * Rational(1, 2)).mul_h(2)); };
  const TensorElem G1 = half(X, Y) * half(X + Y, Z);
  const TensorElem G2 = half(Y, Z) * half(X, Y + Z);
  const TwistedEndo start = TwistedEndo::pure_twist(exp((X + Y + Z).mul_h(1)));
  const TensorElem target = exp(X.mul_h(1)) * exp(Y.mul_h(1)) * exp(Z.mul_h(1));
  AssociatorPaths r;
  r.path1_ok = apply_gauge(G1, start).F == target;
  r.path2_ok = apply_gauge(G2, start).F == target;
  r.log_ratio = log(G1 * inverse(G2));
  return r;
}

/// Class of a twisted automorphism: a Lie automorphism and a normal form.
struct Pi0Class {
  Matrix automorphism;
  std::vector<TensorElem> X;
};

inline TwistedEndo realize(const AlgebraPtr& alg, int order, const Pi0Class& c) {
  return compose(TwistedEndo::pure_twist(normal_form_product(c.X)),
                 TwistedEndo::pure_map(AlgebraMap::from_matrix(alg, order, c.automorphism)));
}

struct Pi0Product {
  Pi0Class result;
  Pi0Class formula;  // (g1 g2, X + (g1 (x) g1) Y)
  bool consistent = false;
};

/// Composes the realizations, separates and normalizes, and compares with the crossed-product formula.
inline Pi0Product pi0_compose(const AlgebraPtr& alg, int order, const Pi0Class& c1, const Pi0Class& c2) {
  const TwistedEndo t = compose(realize(alg, order, c1), realize(alg, order, c2));
  const Separated s = separate(t);
  const NormalForm nf = normalize_invariant_twist(s.F_inv);
  Pi0Product p;
  p.result = {s.lie_part, nf.X};
  p.formula.automorphism = c1.automorphism * c2.automorphism;
  const AlgebraMap g1 = AlgebraMap::from_matrix(alg, order, c1.automorphism);
  for (size_t i = 0; i < c1.X.size(); ++i) p.formula.X.push_back(c1.X[i] + g1.apply(c2.X[i]));
  p.consistent = p.result.automorphism == p.formula.automorphism && p.result.X == p.formula.X;
  if (!p.consistent) throw MathViolation("pi0_compose", "composition disagrees with the crossed-product formula");
  return p;
}

}  // namespace twistalg
