#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "random.hpp"
#include "twist.hpp"

namespace twistalg {

/// Integer coordinates of an element of the lattice A = Z^r.
using Lattice = std::vector<int>;

inline Lattice lattice_add(const Lattice& a, const Lattice& b) {
  Lattice r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// A lattice of invariant skew 2-tensors acting on U(g)[h]/(h^{N+1}) by the
/// twisted automorphisms (iota, F_k), F_k = exp(-X(k) h), with
/// theta(k, k') = exp(1/2 a(X(k'), X(k)) h^2).
class TwistedActionData {
 public:
  using ThetaFn = std::function<TensorElem(const Lattice&, const Lattice&)>;

  TwistedActionData(LieAlgebraData g, AlgebraPtr alg, int order, std::vector<Matrix> generators)
      : g_(std::move(g)), alg_(std::move(alg)), order_(order), gens_(std::move(generators)),
        cache_(std::make_shared<Cache>()) {
    if (order_ < 2) throw ConfigError("crossed products need h-order >= 2");
    for (const auto& X : gens_)
      if (!is_invariant(tensor2_from_matrix(alg_, 0, X))) throw NotInvariant("lattice generator is not invariant");
    const size_t r = gens_.size();
    a_.assign(r, std::vector<TensorElem>(r));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) a_[i][j] = three_vector(g_, alg_, order_, gens_[i], gens_[j]).a;
  }

  const LieAlgebraData& lie() const { return g_; }
  const AlgebraPtr& algebra() const { return alg_; }
  int order() const { return order_; }
  int rank() const { return static_cast<int>(gens_.size()); }
  const std::vector<Matrix>& generators() const { return gens_; }

  /// Replaces theta, e.g. to exhibit a violation.
  void set_theta(ThetaFn fn) { theta_override_ = std::move(fn); }

  Matrix X(const Lattice& k) const {
    const int n = g_.dim;
    Matrix C = zero_matrix(n, n);
    for (size_t i = 0; i < gens_.size(); ++i)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) C[p][q] += k[i] * gens_[i][p][q];
    return C;
  }

  /// a(X(k), X(k')) by bilinearity from the generator values.
  TensorElem a(const Lattice& k, const Lattice& kp) const {
    TensorElem r(alg_, order_, 1);
    for (size_t i = 0; i < gens_.size(); ++i)
      for (size_t j = 0; j < gens_.size(); ++j)
        if (k[i] && kp[j]) r += a_[i][j] * Rational(k[i] * kp[j]);
    return r;
  }

  const TensorElem& F(const Lattice& k) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->F.find(k);
    if (it != cache_->F.end()) return it->second;
    TensorElem f = exp((-tensor2_from_matrix(alg_, order_, X(k))).mul_h(1));
    return cache_->F.emplace(k, std::move(f)).first->second;
  }

  const TensorElem& F_inv(const Lattice& k) const {
    Lattice m(k.size());
    for (size_t i = 0; i < k.size(); ++i) m[i] = -k[i];
    return F(m);
  }

  TensorElem theta(const Lattice& k, const Lattice& kp) const {
    if (theta_override_) return theta_override_(k, kp);
    std::lock_guard<std::mutex> lock(cache_->mu);
    const auto key = std::make_pair(k, kp);
    auto it = cache_->theta.find(key);
    if (it != cache_->theta.end()) return it->second;
    TensorElem t = exp((a(kp, k) * Rational(1, 2)).mul_h(2));
    return cache_->theta.emplace(key, std::move(t)).first->second;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<Lattice, TensorElem> F;
    std::map<std::pair<Lattice, Lattice>, TensorElem> theta;
  };

  LieAlgebraData g_;
  AlgebraPtr alg_;
  int order_;
  std::vector<Matrix> gens_;
  std::vector<std::vector<TensorElem>> a_;
  ThetaFn theta_override_;
  std::shared_ptr<Cache> cache_;
};

/// Conditions (2coc) and (cobound) for the trivial algebra part, on all
/// triples and pairs from `sample`, and bilinearity of a against the direct
/// construction.
inline Report verify_action(const TwistedActionData& d, const std::vector<Lattice>& sample) {
  Report r;
  bool coc = true, cob = true, bil = true;
  std::string where_coc, where_cob, where_bil;
  auto name = [](const Lattice& k) {
    std::string s = "(";
    for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + ")";
  };
  for (const auto& f : sample)
    for (const auto& g : sample) {
      const TensorElem th = d.theta(f, g);
      const TensorElem lhs = d.F(g) * d.F(f) * coproduct(th);
      const TensorElem rhs = tensor(th, th) * d.F(lattice_add(f, g));
      if (cob && lhs != rhs) {
        cob = false;
        where_cob = "pair " + name(f) + " " + name(g);
      }
      const TensorElem direct = three_vector(d.lie(), d.algebra(), d.order(), d.X(f), d.X(g)).a;
      if (bil && direct != d.a(f, g)) {
        bil = false;
        where_bil = "pair " + name(f) + " " + name(g);
      }
      for (const auto& h : sample) {
        if (!coc) break;
        if (d.theta(g, h) * d.theta(f, lattice_add(g, h)) != d.theta(f, g) * d.theta(lattice_add(f, g), h)) {
          coc = false;
          where_coc = "triple " + name(f) + " " + name(g) + " " + name(h);
        }
      }
    }
  r.add("2coc", coc, where_coc);
  r.add("cobound", cob, where_cob);
  r.add("a_bilinear", bil, where_bil);
  return r;
}

/// Element of the k-th tensor power of the crossed product: sums of
/// (x_1 * f_1) (x) ... (x) (x_k * f_k), stored by the tuple (f_1..f_k).
struct CPElem {
  int arity = 1;
  std::map<std::vector<Lattice>, TensorElem> terms;

  void add(const std::vector<Lattice>& ks, const TensorElem& x) {
    auto it = terms.find(ks);
    if (it == terms.end()) {
      if (!x.is_zero()) terms.emplace(ks, x);
      return;
    }
    it->second += x;
    if (it->second.is_zero()) terms.erase(it);
  }

  friend CPElem operator+(CPElem a, const CPElem& b) {
    for (const auto& [k, x] : b.terms) a.add(k, x);
    return a;
  }
  friend CPElem operator-(CPElem a, const CPElem& b) {
    for (const auto& [k, x] : b.terms) a.add(k, -x);
    return a;
  }
  friend bool operator==(const CPElem& a, const CPElem& b) { return a.arity == b.arity && a.terms == b.terms; }
  friend bool operator!=(const CPElem& a, const CPElem& b) { return !(a == b); }
};

inline CPElem cp_single(const TensorElem& x, const Lattice& k) {
  CPElem e;
  e.add({k}, x);
  return e;
}

/// (x * f)(y * g) = x y theta(f, g) * (f + g), factorwise on tensor powers.
inline CPElem cp_multiply(const CPElem& u, const CPElem& v, const TwistedActionData& d) {
  if (u.arity != v.arity) throw ConfigError("arity mismatch");
  CPElem r;
  r.arity = u.arity;
  for (const auto& [ks, x] : u.terms)
    for (const auto& [ls, y] : v.terms) {
      TensorElem th = TensorElem::scalar(d.algebra(), d.order(), HSeries::constant(d.order(), 1), 0);
      std::vector<Lattice> sum;
      for (int i = 0; i < u.arity; ++i) {
        th = tensor(th, d.theta(ks[i], ls[i]));
        sum.push_back(lattice_add(ks[i], ls[i]));
      }
      r.add(sum, x * y * th);
    }
  return r;
}

/// Delta(x * f) = (Delta(x) F_f^{-1}) * (f (x) f) applied to factor i.
inline CPElem cp_coproduct_at(const CPElem& u, int i, const TwistedActionData& d) {
  CPElem r;
  r.arity = u.arity + 1;
  for (const auto& [ks, x] : u.terms) {
    std::vector<int> pos(2);
    pos[0] = i;
    pos[1] = i + 1;
    const TensorElem Finv = embed(d.F_inv(ks[i]), pos, u.arity + 1);
    std::vector<Lattice> out(ks.begin(), ks.begin() + i + 1);
    out.insert(out.end(), ks.begin() + i, ks.end());
    r.add(out, coproduct_at(x, i) * Finv);
  }
  return r;
}

inline CPElem cp_coproduct(const CPElem& u, const TwistedActionData& d) {
  if (u.arity != 1) throw DomainError("cp_coproduct expects a crossed-product element");
  return cp_coproduct_at(u, 0, d);
}

struct CPSample {
  CPElem u, v, w;
};

/// Random elements with lattice points in [-1, 1]^r and sparse coefficients.
inline CPElem random_cp(const TwistedActionData& d, Rng& rng, int terms = 2) {
  CPElem e;
  const int count = uniform_int(rng, 1, terms);
  for (int t = 0; t < count; ++t) {
    Lattice k(d.rank());
    for (auto& c : k) c = uniform_int(rng, -1, 1);
    e.add({k}, random_element(d.algebra(), d.order(), rng, 2, 0, 2));
  }
  return e;
}

/// Associativity, coassociativity and multiplicativity of Delta on one sample.
inline Report cp_bialgebra_checks(const CPElem& u, const CPElem& v, const CPElem& w, const TwistedActionData& d) {
  Report r;
  r.add("cp_associative", cp_multiply(cp_multiply(u, v, d), w, d) == cp_multiply(u, cp_multiply(v, w, d), d));
  const CPElem du = cp_coproduct(u, d);
  r.add("cp_coassociative", cp_coproduct_at(du, 0, d) == cp_coproduct_at(du, 1, d));
  r.add("cp_multiplicative", cp_coproduct(cp_multiply(u, v, d), d) == cp_multiply(du, cp_coproduct(v, d), d));
  return r;
}

/// U(g)[A, a]: generators x_1..x_n then l_1..l_r with [l, x] = 0,
/// [l_i, l_j] = -a(X_i, X_j), Delta(l_i) = X_i + l_i (x) 1 + 1 (x) l_i.
struct Extension {
  AlgebraPtr base;
  AlgebraPtr alg;
  int n = 0, r = 0;
  std::vector<Matrix> generators;
  std::vector<std::vector<TensorElem>> a;  // a(X_i, X_j) in U(g)

  /// Element of U(g) (or its tensor powers) carried into the extension.
  TensorElem lift(const TensorElem& x) const {
    const int k = x.arity(), N = x.order();
    TensorElem out(alg, N, k);
    for (const auto& [key, c] : x.terms()) {
      Key nk(static_cast<size_t>(k) * (n + r), 0);
      for (int f = 0; f < k; ++f) std::copy(key.begin() + f * n, key.begin() + (f + 1) * n, nk.begin() + f * (n + r));
      out.add(nk, c);
    }
    return out;
  }

  TensorElem l(int i, int order) const { return TensorElem::generator(alg, order, n + i); }
  TensorElem x(int i, int order) const { return TensorElem::generator(alg, order, i); }
};

inline Extension extension_algebra(const LieAlgebraData& g, const std::vector<Matrix>& generators,
                                   std::vector<std::string> l_names = {}) {
  Extension e;
  e.base = PbwAlgebra::enveloping(g);
  e.n = g.dim;
  e.r = static_cast<int>(generators.size());
  e.generators = generators;
  const int n = e.n, r = e.r, m = n + r;
  e.a.assign(r, std::vector<TensorElem>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      e.a[i][j] = three_vector(g, e.base, 0, generators[i], generators[j]).a;
      if (!e.a[i][j].is_constant()) throw MathViolation("extension", "a(X,Y) depends on h");
    }
  auto widen = [&](const Mono& mono) {
    Mono w(m, 0);
    std::copy(mono.begin(), mono.end(), w.begin());
    return w;
  };
  PbwAlgebra::Spec s;
  s.names = g.names;
  if (l_names.empty())
    for (int i = 1; i <= r; ++i) l_names.push_back("l" + std::to_string(i));
  s.names.insert(s.names.end(), l_names.begin(), l_names.end());
  s.bracket.assign(m, std::vector<Poly>(m));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (const auto& [mono, v] : e.base->bracket(j, i)) add_to(s.bracket[j][i], widen(mono), v);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i)
      for (const auto& [key, c] : e.a[j][i].terms()) add_to(s.bracket[n + j][n + i], widen(key), -c[0]);
  PbwAlgebra::fill_primitive(s, m);
  for (int i = 0; i < r; ++i) {
    PolyK cop;
    const Matrix& C = generators[i];
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (sgn(C[p][q]) == 0) continue;
        Key k(2 * m, 0);
        k[p] = 1;
        k[m + q] = 1;
        add_to(cop, k, C[p][q]);
      }
    Key left(2 * m, 0), right(2 * m, 0);
    left[n + i] = 1;
    right[m + n + i] = 1;
    add_to(cop, left, 1);
    add_to(cop, right, 1);
    s.coproduct[n + i] = cop;
    // S(l) = -l - mu(S (x) I)(X) = -l + sum C_pq x_p x_q
    Poly anti;
    add_to(anti, PbwAlgebra::unit_mono(m, n + i), -1);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (sgn(C[p][q]) == 0) continue;
        for (const auto& [mono, v] : e.base->mul(PbwAlgebra::unit_mono(n, p), PbwAlgebra::unit_mono(n, q)))
          add_to(anti, widen(mono), C[p][q] * v);
      }
    s.antipode[n + i] = anti;
  }
  e.alg = std::make_shared<const PbwAlgebra>(std::move(s));
  return e;
}

/// Relations of U(g)[A, a] and the compatibility of Delta with them.
inline Report extension_checks(const Extension& e) {
  Report rep;
  const int N = 0;
  bool rel = true, comp = true, coassoc = true, anti = true, central = true;
  for (int i = 0; i < e.r; ++i) {
    const TensorElem li = e.l(i, N);
    const TensorElem dli = coproduct(li);
    coassoc = coassoc && coproduct_at(dli, 0) == coproduct_at(dli, 1);
    anti = anti && multiply_at(antipode_at(dli, 0), 0).is_zero();
    for (int k = 0; k < e.n; ++k) central = central && commutator(li, e.x(k, N)).is_zero();
    for (int j = 0; j < e.r; ++j) {
      const TensorElem lj = e.l(j, N);
      const TensorElem aij = e.lift(e.a[i][j]);
      rel = rel && commutator(li, lj) == -aij;
      const TensorElem dlj = coproduct(lj);
      comp = comp && commutator(dli, dlj) == -coproduct(aij);
    }
  }
  rep.add("commuta", rel);
  rep.add("l_commutes_with_g", central);
  rep.add("comulti_relation_compatible", comp);
  rep.add("coassociative_on_l", coassoc);
  rep.add("antipode_on_l", anti);
  return rep;
}

/// Normal form of a word in the generators of the extension, rewritten in a random order.
inline Poly extension_normalize(const Extension& e, const std::vector<int>& word, Rng& rng) {
  return e.alg->normalize_word_random(word, rng);
}

}  // namespace twistalg
