#pragma once

#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "pbw.hpp"

namespace twistalg {

/// Element of the k-fold tensor power of a PBW algebra over Q[h]/(h^{N+1}):
/// a sparse map from k-tuples of ordered monomials to h-series. Arity 1 is
/// an element of the algebra itself.
class TensorElem {
 public:
  TensorElem() = default;
  TensorElem(AlgebraPtr alg, int order, int arity) : alg_(std::move(alg)), order_(order), arity_(arity) {
    if (arity_ < 0) throw DomainError("negative arity");
    if (order_ < 0) throw ConfigError("negative truncation order");
  }

  static TensorElem unit(AlgebraPtr alg, int order, int arity = 1) {
    TensorElem t(alg, order, arity);
    t.terms_[Key(static_cast<size_t>(arity) * alg->ngens(), 0)] = HSeries::constant(order, 1);
    return t;
  }

  static TensorElem generator(AlgebraPtr alg, int order, int i) {
    TensorElem t(alg, order, 1);
    t.terms_[PbwAlgebra::unit_mono(alg->ngens(), i)] = HSeries::constant(order, 1);
    return t;
  }

  static TensorElem scalar(AlgebraPtr alg, int order, const HSeries& v, int arity = 1) {
    TensorElem t(alg, order, arity);
    t.add(Key(static_cast<size_t>(arity) * alg->ngens(), 0), v);
    return t;
  }

  static TensorElem from_poly(AlgebraPtr alg, int order, int arity, const PolyK& p, int hpow = 0) {
    TensorElem t(alg, order, arity);
    for (const auto& [k, v] : p) t.add(k, HSeries::monomial(order, hpow, v));
    return t;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  int order() const { return order_; }
  int arity() const { return arity_; }
  int ngens() const { return alg_->ngens(); }
  const std::map<Key, HSeries>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const Key& k, const HSeries& v) {
    if (v.order() != order_) throw ConfigError("truncation order mismatch");
    if (v.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const Key& k, const Rational& v, int hpow = 0) {
    if (hpow > order_ || sgn(v) == 0) return;
    add(k, HSeries::monomial(order_, hpow, v));
  }

  HSeries coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? HSeries(order_) : it->second;
  }

  /// Lowest h-power present (order+1 for zero).
  int valuation() const {
    int v = order_ + 1;
    for (const auto& [k, c] : terms_) v = std::min(v, c.valuation());
    return v;
  }

  /// Coefficient of h^l as an element with constant coefficients.
  TensorElem coeff(int l) const {
    TensorElem r(alg_, order_, arity_);
    for (const auto& [k, c] : terms_)
      if (l <= order_ && sgn(c[l]) != 0) r.terms_[k] = HSeries::constant(order_, c[l]);
    return r;
  }

  /// True when no coefficient depends on h.
  bool is_constant() const {
    for (const auto& [k, c] : terms_)
      for (int i = 1; i <= order_; ++i)
        if (sgn(c[i]) != 0) return false;
    return true;
  }

  TensorElem mul_h(int k) const {
    TensorElem r(alg_, order_, arity_);
    for (const auto& [key, c] : terms_) r.add(key, c.shifted(k));
    return r;
  }

  Mono factor(const Key& k, int f) const { return alg_->factor(k, f); }

  TensorElem& operator+=(const TensorElem& o) {
    compatible(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  TensorElem& operator-=(const TensorElem& o) {
    compatible(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  TensorElem& operator*=(const Rational& v) {
    if (sgn(v) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= v;
    return *this;
  }

  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend TensorElem operator-(TensorElem a) { return a *= Rational(-1); }
  friend TensorElem operator*(TensorElem a, const Rational& v) { return a *= v; }
  friend TensorElem operator*(const Rational& v, TensorElem a) { return a *= v; }

  friend TensorElem operator*(const HSeries& v, const TensorElem& a) {
    TensorElem r(a.alg_, a.order_, a.arity_);
    for (const auto& [k, c] : a.terms_) r.add(k, v * c);
    return r;
  }

  friend TensorElem operator*(const TensorElem& a, const TensorElem& b) {
    a.compatible(b);
    const int n = a.ngens(), N = a.order_;
    TensorElem r(a.alg_, N, a.arity_);
    Key acc(static_cast<size_t>(a.arity_) * n, 0);
    for (const auto& [ka, ca] : a.terms_) {
      const int va = ca.valuation();
      for (const auto& [kb, cb] : b.terms_) {
        if (va + cb.valuation() > N) continue;
        const HSeries c = ca * cb;
        if (c.is_zero()) continue;
        a.expand(ka, kb, 0, c, Rational(1), acc, r);
      }
    }
    return r;
  }

  friend bool operator==(const TensorElem& a, const TensorElem& b) {
    return a.arity_ == b.arity_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorElem& a, const TensorElem& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(";
      bool f2 = true;
      for (int i = 0; i <= order_; ++i) {
        if (sgn(c[i]) == 0) continue;
        if (!f2) os << " + ";
        f2 = false;
        os << to_string(c[i]);
        if (i == 1) os << "h";
        if (i > 1) os << "h^" << i;
      }
      os << ")";
      for (int f = 0; f < arity_; ++f) os << (f ? " (x) " : " ") << alg_->mono_name(factor(k, f));
    }
    return os.str();
  }

 private:
  void compatible(const TensorElem& o) const {
    if (o.order_ != order_) throw ConfigError("truncation order mismatch");
    if (o.arity_ != arity_) throw ConfigError("arity mismatch");
    if (o.alg_ != alg_ && o.alg_ && alg_) throw ConfigError("elements of different algebras");
  }

  void expand(const Key& ka, const Key& kb, int f, const HSeries& c, const Rational& coef, Key& acc,
              TensorElem& out) const {
    const int n = ngens();
    if (f == arity_) {
      out.add(acc, coef == 1 ? c : c * coef);
      return;
    }
    if (alg_->ordered_product(ka, kb, f, acc)) return expand(ka, kb, f + 1, c, coef, acc, out);
    const Poly& p = alg_->mul(factor(ka, f), factor(kb, f));
    for (const auto& [m, v] : p) {
      std::copy(m.begin(), m.end(), acc.begin() + f * n);
      expand(ka, kb, f + 1, c, coef * v, acc, out);
    }
  }

  AlgebraPtr alg_;
  int order_ = 0;
  int arity_ = 0;
  std::map<Key, HSeries> terms_;
};

using UEAElem = TensorElem;

inline TensorElem commutator(const TensorElem& a, const TensorElem& b) { return a * b - b * a; }

/// Linear map applied independently to each term, given on keys.
inline TensorElem map_terms(const TensorElem& a, int out_arity,
                            const std::function<void(const Key&, const HSeries&, TensorElem&)>& fn) {
  TensorElem r(a.algebra(), a.order(), out_arity);
  for (const auto& [k, c] : a.terms()) fn(k, c, r);
  return r;
}

/// Factor j of the result is factor sigma[j] of a.
inline TensorElem permute(const TensorElem& a, const std::vector<int>& sigma) {
  const int n = a.ngens(), k = a.arity();
  if (static_cast<int>(sigma.size()) != k) throw DomainError("permutation length differs from arity");
  return map_terms(a, k, [&](const Key& key, const HSeries& c, TensorElem& r) {
    Key out(key.size());
    for (int j = 0; j < k; ++j) std::copy(key.begin() + sigma[j] * n, key.begin() + (sigma[j] + 1) * n, out.begin() + j * n);
    r.add(out, c);
  });
}

inline TensorElem flip(const TensorElem& a) { return permute(a, {1, 0}); }

/// Place factor i of a at position positions[i] (0-based) of an arity-k tensor, 1 elsewhere.
inline TensorElem embed(const TensorElem& a, const std::vector<int>& positions, int k) {
  const int n = a.ngens();
  if (static_cast<int>(positions.size()) != a.arity()) throw DomainError("embedding size differs from arity");
  return map_terms(a, k, [&](const Key& key, const HSeries& c, TensorElem& r) {
    Key out(static_cast<size_t>(k) * n, 0);
    for (int i = 0; i < a.arity(); ++i) {
      if (positions[i] < 0 || positions[i] >= k) throw DomainError("embedding position out of range");
      std::copy(key.begin() + i * n, key.begin() + (i + 1) * n, out.begin() + positions[i] * n);
    }
    r.add(out, c);
  });
}

/// a (x) b.
inline TensorElem tensor(const TensorElem& a, const TensorElem& b) {
  if (a.order() != b.order()) throw ConfigError("truncation order mismatch");
  TensorElem r(a.algebra(), a.order(), a.arity() + b.arity());
  for (const auto& [ka, ca] : a.terms()) {
    const int va = ca.valuation();
    for (const auto& [kb, cb] : b.terms()) {
      if (va + cb.valuation() > a.order()) continue;
      Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add(k, ca * cb);
    }
  }
  return r;
}

/// Delta applied to factor i (0-based); arity grows by one.
inline TensorElem coproduct_at(const TensorElem& a, int i) {
  const int n = a.ngens(), k = a.arity();
  const auto& alg = *a.algebra();
  return map_terms(a, k + 1, [&](const Key& key, const HSeries& c, TensorElem& r) {
    const PolyK& d = alg.coproduct_mono(a.factor(key, i));
    for (const auto& [dk, v] : d) {
      Key out(key.begin(), key.begin() + i * n);
      out.insert(out.end(), dk.begin(), dk.end());
      out.insert(out.end(), key.begin() + (i + 1) * n, key.end());
      r.add(out, c * v);
    }
  });
}

inline TensorElem coproduct(const TensorElem& a) {
  if (a.arity() != 1) throw DomainError("coproduct expects an algebra element");
  return coproduct_at(a, 0);
}

/// Iterated coproduct into arity k (k >= 1).
inline TensorElem iterated_coproduct(const TensorElem& a, int k) {
  TensorElem r = a;
  for (int i = 1; i < k; ++i) r = coproduct_at(r, i - 1);
  return r;
}

/// epsilon applied to factor i; arity drops by one.
inline TensorElem counit_at(const TensorElem& a, int i) {
  const int n = a.ngens(), k = a.arity();
  return map_terms(a, k - 1, [&](const Key& key, const HSeries& c, TensorElem& r) {
    for (int g = 0; g < n; ++g)
      if (key[i * n + g] != 0) return;
    Key out(key.begin(), key.begin() + i * n);
    out.insert(out.end(), key.begin() + (i + 1) * n, key.end());
    r.add(out, c);
  });
}

inline HSeries counit(const TensorElem& a) {
  if (a.arity() != 1) throw DomainError("counit expects an algebra element");
  return counit_at(a, 0).coefficient(Key{});
}

inline TensorElem antipode_at(const TensorElem& a, int i) {
  const int n = a.ngens();
  const auto& alg = *a.algebra();
  return map_terms(a, a.arity(), [&](const Key& key, const HSeries& c, TensorElem& r) {
    for (const auto& [m, v] : alg.antipode_mono(a.factor(key, i))) {
      Key out = key;
      std::copy(m.begin(), m.end(), out.begin() + i * n);
      r.add(out, c * v);
    }
  });
}

inline TensorElem antipode(const TensorElem& a) {
  if (a.arity() != 1) throw DomainError("antipode expects an algebra element");
  return antipode_at(a, 0);
}

/// Multiplication of factors i and i+1.
inline TensorElem multiply_at(const TensorElem& a, int i) {
  const int n = a.ngens(), k = a.arity();
  const auto& alg = *a.algebra();
  return map_terms(a, k - 1, [&](const Key& key, const HSeries& c, TensorElem& r) {
    for (const auto& [m, v] : alg.mul(a.factor(key, i), a.factor(key, i + 1))) {
      Key out(key.begin(), key.begin() + i * n);
      out.insert(out.end(), m.begin(), m.end());
      out.insert(out.end(), key.begin() + (i + 2) * n, key.end());
      r.add(out, c * v);
    }
  });
}

inline TensorElem lift_scalar(const TensorElem& like, const HSeries& v) {
  return TensorElem::scalar(like.algebra(), like.order(), v, like.arity());
}

/// The h^0 part must be lambda * 1 with lambda != 0.
inline Rational constant_scalar(const TensorElem& a) {
  const TensorElem c0 = a.coeff(0);
  const Key one(static_cast<size_t>(a.arity()) * a.ngens(), 0);
  if (c0.size() != 1 || c0.terms().begin()->first != one)
    throw NotInvertible("constant term is not a nonzero scalar");
  return c0.terms().begin()->second[0];
}

inline TensorElem inverse(const TensorElem& a) {
  const Rational lambda = constant_scalar(a);
  const TensorElem one = TensorElem::unit(a.algebra(), a.order(), a.arity());
  const TensorElem b = a * (1 / lambda) - one;  // divisible by h
  // (1 + b)^{-1} = 1 - b + b^2 - ...
  TensorElem r = one, term = one;
  for (int k = 1; k <= a.order(); ++k) {
    term = -(term * b);
    if (term.is_zero()) break;
    r += term;
  }
  return r * (1 / lambda);
}

inline TensorElem exp(const TensorElem& a) {
  if (a.valuation() < 1) throw DomainError("exp needs an argument divisible by h");
  TensorElem r = TensorElem::unit(a.algebra(), a.order(), a.arity()), term = r;
  for (int k = 1; k <= a.order(); ++k) {
    term = term * a * Rational(1, k);
    if (term.is_zero()) break;
    r += term;
  }
  return r;
}

inline TensorElem log(const TensorElem& a) {
  const TensorElem one = TensorElem::unit(a.algebra(), a.order(), a.arity());
  const TensorElem b = a - one;
  if (b.valuation() < 1) throw DomainError("log needs an argument congruent to 1 mod h");
  TensorElem r(a.algebra(), a.order(), a.arity()), power = b;
  for (int k = 1; k <= a.order() && !power.is_zero(); ++k) {
    r += power * Rational(k % 2 ? 1 : -1, k);
    power = power * b;
  }
  return r;
}

/// Sum of x placed in each factor: Delta^{(k)}(x) for a primitive x.
inline TensorElem spread_generator(const AlgebraPtr& alg, int order, int i, int k) {
  const TensorElem x = TensorElem::generator(alg, order, i);
  return iterated_coproduct(x, k);
}

/// [Delta^{(k)}(x), a] = 0 for every generator x.
inline bool is_invariant(const TensorElem& a) {
  for (int i = 0; i < a.ngens(); ++i) {
    const TensorElem d = spread_generator(a.algebra(), a.order(), i, a.arity());
    if (!commutator(d, a).is_zero()) return false;
  }
  return true;
}

/// Algebra endomorphism given by the images of the generators, extended
/// multiplicatively to ordered monomials and factorwise to tensors.
class AlgebraMap {
 public:
  AlgebraMap() = default;
  AlgebraMap(AlgebraPtr alg, int order, std::vector<TensorElem> images)
      : alg_(std::move(alg)), order_(order), images_(std::move(images)), cache_(std::make_shared<Cache>()) {
    if (static_cast<int>(images_.size()) != alg_->ngens()) throw ConfigError("one image per generator required");
    for (const auto& im : images_)
      if (im.arity() != 1 || im.order() != order_) throw ConfigError("generator image has wrong shape");
  }

  static AlgebraMap identity(AlgebraPtr alg, int order) {
    std::vector<TensorElem> im;
    for (int i = 0; i < alg->ngens(); ++i) im.push_back(TensorElem::generator(alg, order, i));
    return AlgebraMap(alg, order, std::move(im));
  }

  /// Linear map on generators: x_j -> sum_i A_ij x_i.
  static AlgebraMap from_matrix(AlgebraPtr alg, int order, const Matrix& A) {
    const int n = alg->ngens();
    std::vector<TensorElem> im;
    for (int j = 0; j < n; ++j) {
      TensorElem t(alg, order, 1);
      for (int i = 0; i < n; ++i) t.add(PbwAlgebra::unit_mono(n, i), A[i][j]);
      im.push_back(std::move(t));
    }
    return AlgebraMap(alg, order, std::move(im));
  }

  const AlgebraPtr& algebra() const { return alg_; }
  int order() const { return order_; }
  const std::vector<TensorElem>& images() const { return images_; }

  const TensorElem& image(const Mono& m) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return image_locked(m);
  }

  TensorElem apply(const TensorElem& a) const {
    TensorElem r(a.algebra(), a.order(), a.arity());
    const int k = a.arity();
    for (const auto& [key, c] : a.terms()) {
      TensorElem t = TensorElem::scalar(a.algebra(), a.order(), c, 0);
      for (int f = 0; f < k; ++f) t = tensor(t, image(a.factor(key, f)));
      r += t;
    }
    return r;
  }

  /// this o inner.
  AlgebraMap after(const AlgebraMap& inner) const {
    std::vector<TensorElem> im;
    for (const auto& x : inner.images_) im.push_back(apply(x));
    return AlgebraMap(alg_, order_, std::move(im));
  }

  /// x -> a f(x) a^{-1}.
  AlgebraMap conjugated(const TensorElem& a, const TensorElem& a_inv) const {
    std::vector<TensorElem> im;
    for (const auto& x : images_) im.push_back(a * x * a_inv);
    return AlgebraMap(alg_, order_, std::move(im));
  }

  /// The linear part of the h^0 term of each image, as a matrix, when every
  /// such term is linear in the generators.
  std::optional<Matrix> constant_linear_part() const {
    const int n = alg_->ngens();
    Matrix A = zero_matrix(n, n);
    for (int j = 0; j < n; ++j) {
      const TensorElem c0 = images_[j].coeff(0);
      for (const auto& [k, c] : c0.terms()) {
        if (degree(k) != 1) return std::nullopt;
        for (int i = 0; i < n; ++i)
          if (k[i]) A[i][j] = c[0];
      }
    }
    return A;
  }

  friend bool operator==(const AlgebraMap& a, const AlgebraMap& b) { return a.images_ == b.images_; }
  friend bool operator!=(const AlgebraMap& a, const AlgebraMap& b) { return !(a == b); }

 private:
  struct Cache {
    std::mutex mu;
    std::map<Mono, TensorElem> images;
  };

  const TensorElem& image_locked(const Mono& m) const {
    auto it = cache_->images.find(m);
    if (it != cache_->images.end()) return it->second;
    const int n = alg_->ngens();
    TensorElem r;
    int j = n - 1;
    while (j >= 0 && m[j] == 0) --j;
    if (j < 0) {
      r = TensorElem::unit(alg_, order_, 1);
    } else {
      Mono mp = m;
      --mp[j];
      r = image_locked(mp) * images_[j];
    }
    return cache_->images.emplace(m, std::move(r)).first->second;
  }

  AlgebraPtr alg_;
  int order_ = 0;
  std::vector<TensorElem> images_;
  std::shared_ptr<Cache> cache_;
};

/// Ordered monomials of total degree <= d in n variables, by degree then lexicographically.
inline std::vector<Mono> monomials_up_to(int n, int d) {
  std::vector<Mono> out;
  Mono m(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (int a = left; a >= 0; --a) {
      m[i] = a;
      rec(i + 1, left - a);
    }
  };
  for (int deg = 0; deg <= d; ++deg) {
    if (n == 0) {
      if (deg == 0) out.push_back(m);
      continue;
    }
    rec(0, deg);
  }
  return out;
}

/// Basis of the central elements of degree <= d with zero constant term,
/// row-reduced over the monomial basis.
inline std::vector<TensorElem> center_basis(const AlgebraPtr& alg, int order, int d) {
  const int n = alg->ngens();
  std::vector<Mono> monos = monomials_up_to(n, d);
  monos.erase(monos.begin());  // no constants
  std::map<Mono, size_t> row_of;
  std::vector<std::map<size_t, Rational>> cols(monos.size());
  for (size_t c = 0; c < monos.size(); ++c)
    for (int i = 0; i < n; ++i) {
      const Mono x = PbwAlgebra::unit_mono(n, i);
      Poly br = alg->mul(x, monos[c]);
      for (const auto& [m, v] : alg->mul(monos[c], x)) add_to(br, m, -v);
      for (const auto& [m, v] : br) {
        Mono tagged = m;
        tagged.push_back(static_cast<uint16_t>(i));
        auto [it, fresh] = row_of.try_emplace(tagged, row_of.size());
        cols[c][it->second] = v;
      }
    }
  Matrix sys = zero_matrix(row_of.size(), monos.size());
  for (size_t c = 0; c < monos.size(); ++c)
    for (const auto& [r, v] : cols[c]) sys[r][c] = v;
  Matrix ker = nullspace(std::move(sys), monos.size());
  rref_in_place(ker);
  std::vector<TensorElem> out;
  for (const auto& v : ker) {
    TensorElem t(alg, order, 1);
    for (size_t c = 0; c < monos.size(); ++c) t.add(monos[c], v[c]);
    out.push_back(std::move(t));
  }
  return out;
}

/// Lie-level 2-tensor sum C_ab x_a (x) x_b.
inline TensorElem tensor2_from_matrix(const AlgebraPtr& alg, int order, const Matrix& C) {
  const int n = alg->ngens();
  TensorElem t(alg, order, 2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (sgn(C[a][b]) == 0) continue;
      Key k(2 * n, 0);
      k[a] = 1;
      k[n + b] = 1;
      t.add(k, C[a][b]);
    }
  return t;
}

/// Inverse of tensor2_from_matrix; nothing when the tensor has a non-Lie
/// component or depends on h.
inline std::optional<Matrix> lie_matrix(const TensorElem& t) {
  const int n = t.ngens();
  if (t.arity() != 2 || !t.is_constant()) return std::nullopt;
  Matrix C = zero_matrix(n, n);
  for (const auto& [k, c] : t.terms()) {
    const Mono a = t.factor(k, 0), b = t.factor(k, 1);
    if (degree(a) != 1 || degree(b) != 1) return std::nullopt;
    int ia = 0, ib = 0;
    while (!a[ia]) ++ia;
    while (!b[ib]) ++ib;
    C[ia][ib] = c[0];
  }
  return C;
}

/// Linear Lie element sum v_i x_i.
inline TensorElem lie_element(const AlgebraPtr& alg, int order, const Vec& v) {
  TensorElem t(alg, order, 1);
  for (int i = 0; i < alg->ngens(); ++i) t.add(PbwAlgebra::unit_mono(alg->ngens(), i), v[i]);
  return t;
}

}  // namespace twistalg
