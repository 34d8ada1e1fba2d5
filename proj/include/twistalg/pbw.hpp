#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lie.hpp"

namespace twistalg {

/// Exponent vector of an ordered monomial x_1^{e_1} ... x_n^{e_n}.
using Mono = std::vector<uint16_t>;
using Poly = std::map<Mono, Rational>;
/// Flattened k-tuple of monomials (factor f occupies [f*n, (f+1)*n)); same
/// representation as Mono, so Poly doubles as PolyK.
using Key = Mono;
using PolyK = Poly;

using Rng = std::mt19937_64;

inline int degree(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

inline void add_to(Poly& p, const Mono& m, const Rational& v) {
  if (sgn(v) == 0) return;
  auto [it, fresh] = p.try_emplace(m, v);
  if (!fresh) {
    it->second += v;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

/// Algebra with an ordered generating set x_1 < ... < x_n and relations
/// x_j x_i = x_i x_j + [x_j, x_i] for j > i, where each bracket is a
/// polynomial in ordered monomials. The ordered monomials form a basis
/// (PBW); products are straightened by rewriting. U(g) and its extension
/// by the l_X generators are both instances.
class PbwAlgebra {
 public:
  struct Spec {
    std::vector<std::string> names;
    std::vector<std::vector<Poly>> bracket;  // bracket[j][i] = [x_j, x_i] (used for j > i)
    std::vector<PolyK> coproduct;            // Delta(x_i) as 2-tensor polynomial
    std::vector<Poly> antipode;              // S(x_i)
    std::optional<LieAlgebraData> lie;       // present for U(g)
  };

  explicit PbwAlgebra(Spec s) : s_(std::move(s)) {
    n_ = static_cast<int>(s_.names.size());
    primitive_ = true;
    for (int i = 0; i < n_; ++i) {
      PolyK prim;
      add_to(prim, gen_key(2, 0, i), 1);
      add_to(prim, gen_key(2, 1, i), 1);
      if (s_.coproduct[i] != prim) primitive_ = false;
    }
    commutes_.assign(static_cast<size_t>(n_) * n_, 1);
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < j; ++i) commutes_[j * n_ + i] = s_.bracket[j][i].empty();
  }

  static std::shared_ptr<const PbwAlgebra> enveloping(const LieAlgebraData& g) {
    Spec s;
    const int n = g.dim;
    s.names = g.names;
    s.lie = g;
    s.bracket.assign(n, std::vector<Poly>(n));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) add_to(s.bracket[j][i], unit_mono(n, k), g.sc(j, i, k));
    fill_primitive(s, n);
    return std::make_shared<const PbwAlgebra>(std::move(s));
  }

  /// Generators with primitive coproduct and S(x) = -x.
  static void fill_primitive(Spec& s, int n) {
    s.coproduct.assign(n, {});
    s.antipode.assign(n, {});
    for (int i = 0; i < n; ++i) {
      Key a(2 * n, 0), b(2 * n, 0);
      a[i] = 1;
      b[n + i] = 1;
      s.coproduct[i][a] = 1;
      s.coproduct[i][b] = 1;
      s.antipode[i][unit_mono(n, i)] = -1;
    }
  }

  static Mono unit_mono(int n, int i) {
    Mono m(n, 0);
    m[i] = 1;
    return m;
  }

  Key gen_key(int arity, int factor, int i) const {
    Key k(static_cast<size_t>(arity) * n_, 0);
    k[factor * n_ + i] = 1;
    return k;
  }

  int ngens() const { return n_; }
  const std::vector<std::string>& names() const { return s_.names; }
  const std::optional<LieAlgebraData>& lie() const { return s_.lie; }
  const Poly& bracket(int j, int i) const { return s_.bracket[j][i]; }
  const PolyK& generator_coproduct(int i) const { return s_.coproduct[i]; }
  const Poly& generator_antipode(int i) const { return s_.antipode[i]; }
  bool primitive_generators() const { return primitive_; }

  std::string mono_name(const Mono& m) const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += s_.names[i];
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
  }

  /// m1 * m2 straightened by peeling generators off the right.
  const Poly& mul(const Mono& a, const Mono& b) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(a, b);
    auto it = mul_cache_.find(key);
    if (it != mul_cache_.end()) return it->second;
    Poly p{{a, 1}};
    for (int i = 0; i < n_; ++i)
      for (int r = 0; r < b[i]; ++r) p = times_gen(p, i);
    return mul_cache_.emplace(std::move(key), std::move(p)).first->second;
  }

  /// Same product, straightened by pushing generators of a in from the left.
  Poly mul_left(const Mono& a, const Mono& b) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Poly p{{b, 1}};
    for (int i = n_ - 1; i >= 0; --i)
      for (int r = 0; r < a[i]; ++r) p = gen_times(i, p);
    return p;
  }

  /// Normal form of a word x_{w_1} ... x_{w_k}, rewriting a randomly chosen
  /// out-of-order adjacent pair at every step. Used as an independent oracle.
  Poly normalize_word_random(const std::vector<int>& word, Rng& rng) const {
    std::map<std::vector<int>, Rational> words{{word, 1}};
    Poly out;
    while (!words.empty()) {
      auto it = words.begin();
      std::uniform_int_distribution<size_t> pickw(0, words.size() - 1);
      std::advance(it, pickw(rng));
      std::vector<int> w = it->first;
      const Rational coef = it->second;
      words.erase(it);
      std::vector<size_t> inv;
      for (size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p] > w[p + 1]) inv.push_back(p);
      if (inv.empty()) {
        Mono m(n_, 0);
        for (int g : w) ++m[g];
        add_to(out, m, coef);
        continue;
      }
      std::uniform_int_distribution<size_t> pick(0, inv.size() - 1);
      const size_t p = inv[pick(rng)];
      const int j = w[p], i = w[p + 1];
      auto push = [&](std::vector<int> nw, const Rational& v) {
        if (sgn(v) == 0) return;
        auto [jt, fresh] = words.try_emplace(std::move(nw), v);
        if (!fresh) {
          jt->second += v;
          if (sgn(jt->second) == 0) words.erase(jt);
        }
      };
      std::vector<int> swapped = w;
      std::swap(swapped[p], swapped[p + 1]);
      push(std::move(swapped), coef);
      for (const auto& [m, v] : s_.bracket[j][i]) {
        std::vector<int> nw(w.begin(), w.begin() + p);
        for (int g = 0; g < n_; ++g)
          for (int r = 0; r < m[g]; ++r) nw.push_back(g);
        nw.insert(nw.end(), w.begin() + p + 2, w.end());
        push(std::move(nw), coef * v);
      }
    }
    return out;
  }

  /// Delta of an ordered monomial.
  const PolyK& coproduct_mono(const Mono& m) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = cop_cache_.find(m);
    if (it != cop_cache_.end()) return it->second;
    PolyK out;
    if (primitive_) {
      // Delta(x^e) = sum_k prod_i C(e_i, k_i) x^k (x) x^{e-k}; already ordered.
      Key k(2 * n_, 0);
      split(m, 0, Rational(1), k, out);
    } else {
      out[Key(2 * n_, 0)] = 1;
      for (int i = 0; i < n_; ++i)
        for (int r = 0; r < m[i]; ++r) out = mul_k(out, s_.coproduct[i], 2);
    }
    return cop_cache_.emplace(m, std::move(out)).first->second;
  }

  /// S of an ordered monomial: S(x_n)^{e_n} ... S(x_1)^{e_1}.
  const Poly& antipode_mono(const Mono& m) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = ant_cache_.find(m);
    if (it != ant_cache_.end()) return it->second;
    Poly p{{Mono(n_, 0), 1}};
    for (int i = n_ - 1; i >= 0; --i)
      for (int r = 0; r < m[i]; ++r) p = mul_p(p, s_.antipode[i]);
    return ant_cache_.emplace(m, std::move(p)).first->second;
  }

  Poly mul_p(const Poly& a, const Poly& b) const {
    Poly out;
    for (const auto& [ma, va] : a)
      for (const auto& [mb, vb] : b)
        for (const auto& [m, v] : mul(ma, mb)) add_to(out, m, va * vb * v);
    return out;
  }

  /// Product in the k-fold tensor power at the polynomial level.
  PolyK mul_k(const PolyK& a, const PolyK& b, int arity) const {
    PolyK out;
    for (const auto& [ka, va] : a)
      for (const auto& [kb, vb] : b) {
        Key acc(static_cast<size_t>(arity) * n_, 0);
        expand(ka, kb, 0, arity, va * vb, acc, out);
      }
    return out;
  }

  Mono factor(const Key& k, int f) const { return Mono(k.begin() + f * n_, k.begin() + (f + 1) * n_); }

  /// When no x_j of factor f of kb has to move past a non-commuting x_i
  /// (i > j) of factor f of ka, writes the exponent sum into acc and
  /// returns true.
  bool ordered_product(const Key& ka, const Key& kb, int f, Key& acc) const {
    const int off = f * n_;
    for (int i = 1; i < n_; ++i) {
      if (ka[off + i] == 0) continue;
      for (int j = 0; j < i; ++j)
        if (kb[off + j] && !commutes_[i * n_ + j]) return false;
    }
    for (int i = 0; i < n_; ++i) acc[off + i] = ka[off + i] + kb[off + i];
    return true;
  }

 private:
  void split(const Mono& m, int i, Rational coef, Key& k, PolyK& out) const {
    if (i == n_) {
      add_to(out, k, coef);
      return;
    }
    mpz_class binom = 1;
    for (int a = 0; a <= m[i]; ++a) {
      if (a > 0) binom = binom * (m[i] - a + 1) / a;
      k[i] = a;
      k[n_ + i] = m[i] - a;
      split(m, i + 1, coef * binom, k, out);
    }
    k[i] = k[n_ + i] = 0;
  }

  void expand(const Key& ka, const Key& kb, int f, int arity, const Rational& coef, Key& acc,
              PolyK& out) const {
    if (f == arity) {
      add_to(out, acc, coef);
      return;
    }
    if (ordered_product(ka, kb, f, acc)) return expand(ka, kb, f + 1, arity, coef, acc, out);
    const Poly& p = mul(factor(ka, f), factor(kb, f));
    for (const auto& [m, v] : p) {
      std::copy(m.begin(), m.end(), acc.begin() + f * n_);
      expand(ka, kb, f + 1, arity, coef * v, acc, out);
    }
  }

  Poly times_gen(const Poly& p, int i) const {
    Poly out;
    for (const auto& [m, v] : p)
      for (const auto& [mm, vv] : right_gen(m, i)) add_to(out, mm, v * vv);
    return out;
  }

  Poly gen_times(int i, const Poly& p) const {
    Poly out;
    for (const auto& [m, v] : p)
      for (const auto& [mm, vv] : left_gen(i, m)) add_to(out, mm, v * vv);
    return out;
  }

  // m * x_i
  const Poly& right_gen(const Mono& m, int i) const {
    auto key = std::make_pair(m, i);
    auto it = right_cache_.find(key);
    if (it != right_cache_.end()) return it->second;
    int j = n_ - 1;
    while (j > i && m[j] == 0) --j;
    Poly out;
    if (j <= i) {
      Mono r = m;
      ++r[i];
      out[r] = 1;
    } else {
      // m = m' x_j and x_j x_i = x_i x_j + [x_j, x_i]
      Mono mp = m;
      --mp[j];
      out = times_gen(right_gen_copy(mp, i), j);
      for (const auto& [b, v] : s_.bracket[j][i])
        for (const auto& [mm, vv] : mul(mp, b)) add_to(out, mm, v * vv);
    }
    return right_cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  Poly right_gen_copy(const Mono& m, int i) const { return right_gen(m, i); }

  // x_i * m
  const Poly& left_gen(int i, const Mono& m) const {
    auto key = std::make_pair(m, i);
    auto it = left_cache_.find(key);
    if (it != left_cache_.end()) return it->second;
    int j = 0;
    while (j < i && m[j] == 0) ++j;
    Poly out;
    if (j >= i) {
      Mono r = m;
      ++r[i];
      out[r] = 1;
    } else {
      // m = x_j m'' and x_i x_j = x_j x_i + [x_i, x_j]
      Mono mpp = m;
      --mpp[j];
      Poly inner = left_gen(i, mpp);
      out = gen_times(j, inner);
      for (const auto& [b, v] : s_.bracket[i][j]) {
        Poly bm{{mpp, 1}};
        for (int g = n_ - 1; g >= 0; --g)
          for (int r = 0; r < b[g]; ++r) bm = gen_times(g, bm);
        for (const auto& [mm, vv] : bm) add_to(out, mm, v * vv);
      }
    }
    return left_cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  Spec s_;
  int n_ = 0;
  bool primitive_ = true;
  std::vector<char> commutes_;  // commutes_[j*n + i]: [x_j, x_i] = 0 for j > i
  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<Mono, Mono>, Poly> mul_cache_;
  mutable std::map<std::pair<Mono, int>, Poly> right_cache_;
  mutable std::map<std::pair<Mono, int>, Poly> left_cache_;
  mutable std::map<Mono, PolyK> cop_cache_;
  mutable std::map<Mono, Poly> ant_cache_;
};

using AlgebraPtr = std::shared_ptr<const PbwAlgebra>;

}  // namespace twistalg
