#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "uea.hpp"

namespace twistalg {

/// d X = 1 (x) X + sum_{i=1..n} (-1)^i Delta_i X + (-1)^{n+1} X (x) 1.
/// At n = 1 this is 1 (x) a - Delta(a) + a (x) 1.
inline TensorElem differential(const TensorElem& x) {
  const int n = x.arity();
  TensorElem r = embed(x, [&] {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
  }(), n + 1);
  for (int i = 1; i <= n; ++i) {
    const TensorElem d = coproduct_at(x, i - 1);
    if (i % 2) r -= d;
    else r += d;
  }
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  const TensorElem tail = embed(x, p, n + 1);
  if ((n + 1) % 2) r -= tail;
  else r += tail;
  return r;
}

inline int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

/// Alt_n(X) = (1/n!) sum_sigma sgn(sigma) sigma(X).
inline TensorElem alternation(const TensorElem& x) {
  const int n = x.arity();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  TensorElem r(x.algebra(), x.order(), n);
  long count = 0;
  do {
    const TensorElem t = permute(x, p);
    if (permutation_sign(p) > 0) r += t;
    else r -= t;
    ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return r * Rational(1, count);
}

/// Solves d(a) = x - Alt_2(x) for a 2-cocycle x.
///
/// d preserves the exponent vector summed over factors, and on an ordered
/// monomial x^e it reads d(x^e) = x^e (x) 1 + 1 (x) x^e - sum_k C(e,k) x^k (x) x^{e-k}.
/// So the (k, e-k) entry of d(a) involves a_e alone and the system is
/// diagonal: a_e is read off any split with k, e-k both nonzero. Degree-1
/// components lie in the kernel and are set to zero. With invariant = true
/// the result is shifted by a Lie element so that it becomes central.
inline TensorElem solve_coboundary(const TensorElem& x, bool invariant) {
  if (x.arity() != 2) throw DomainError("solve_coboundary expects a 2-cochain");
  if (!differential(x).is_zero()) throw NotACocycle("d(x) != 0");
  if (invariant && !is_invariant(x)) throw NotInvariant("2-cocycle is not g-invariant");
  const int n = x.ngens();
  const TensorElem y = x - alternation(x);
  TensorElem a(x.algebra(), x.order(), 1);
  for (const auto& [k, c] : y.terms()) {
    const Mono left = x.factor(k, 0), right = x.factor(k, 1);
    Mono e(n);
    for (int i = 0; i < n; ++i) e[i] = left[i] + right[i];
    const int d = degree(e);
    if (d == 0) {
      a.add(e, c);  // d(1) = 1 (x) 1
      continue;
    }
    int first = 0;
    while (e[first] == 0) ++first;
    if (d < 2 || degree(left) != 1 || left[first] != 1) continue;
    a.add(e, c * Rational(-1, e[first]));
  }
  if (differential(a) != y) throw NoSolution("x - Alt_2(x) is not a coboundary");
  if (!invariant) return a;

  // Find p in g (x) Q[h] with [x_i, a] = [x_i, p] for all i, then a - p is central.
  const auto& lie = x.algebra()->lie();
  if (!lie) throw DomainError("invariant solve needs an enveloping algebra");
  const int N = x.order();
  Matrix sys;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Vec row(n);
      for (int j = 0; j < n; ++j) row[j] = lie->sc(i, j, k);
      sys.push_back(row);
    }
  TensorElem p(x.algebra(), N, 1);
  std::vector<TensorElem> comms;
  for (int i = 0; i < n; ++i) comms.push_back(commutator(TensorElem::generator(x.algebra(), N, i), a));
  for (int l = 0; l <= N; ++l) {
    Vec rhs;
    for (int i = 0; i < n; ++i) {
      const TensorElem ci = comms[i].coeff(l);
      Vec part(n);
      for (const auto& [key, c] : ci.terms()) {
        if (degree(key) != 1) throw NoSolution("no central solution: commutator leaves g");
        for (int k = 0; k < n; ++k)
          if (key[k]) part[k] = c[0];
      }
      rhs.insert(rhs.end(), part.begin(), part.end());
    }
    auto sol = solve(sys, rhs, n);
    if (!sol) throw NoSolution("no central solution at h^" + std::to_string(l));
    for (int j = 0; j < n; ++j) p.add(PbwAlgebra::unit_mono(n, j), (*sol)[j], l);
  }
  TensorElem central = a - p;
  for (int i = 0; i < n; ++i)
    if (!commutator(TensorElem::generator(x.algebra(), N, i), central).is_zero())
      throw NoSolution("correction failed to produce a central element");
  return central;
}

namespace detail {

// All ways of writing alpha as an ordered sum of k exponent vectors.
inline void splits(const Mono& alpha, int k, std::vector<Key>& out) {
  const int n = static_cast<int>(alpha.size());
  Key cur(static_cast<size_t>(k) * n, 0);
  std::function<void(int, int, int)> rec = [&](int var, int slot, int left) {
    if (var == n) {
      out.push_back(cur);
      return;
    }
    if (slot == k - 1) {
      cur[slot * n + var] = left;
      rec(var + 1, 0, var + 1 < n ? alpha[var + 1] : 0);
      cur[slot * n + var] = 0;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[slot * n + var] = a;
      rec(var, slot + 1, left - a);
    }
    cur[slot * n + var] = 0;
  };
  if (k == 0) {
    if (std::all_of(alpha.begin(), alpha.end(), [](int v) { return v == 0; })) out.push_back(Key{});
    return;
  }
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  rec(0, 0, alpha[0]);
}

// Rank of d: C^k_alpha -> C^{k+1}_alpha.
inline size_t block_rank(const AlgebraPtr& alg, const Mono& alpha, int k) {
  if (k == 0) return 0;  // d(1) = 1 - 1 = 0 on scalars
  std::vector<Key> src, dst;
  splits(alpha, k, src);
  splits(alpha, k + 1, dst);
  std::map<Key, size_t> row;
  for (size_t i = 0; i < dst.size(); ++i) row[dst[i]] = i;
  Matrix m = zero_matrix(dst.size(), src.size());
  for (size_t j = 0; j < src.size(); ++j) {
    TensorElem t(alg, 0, k);
    t.add(src[j], Rational(1));
    const TensorElem d = differential(t);
    for (const auto& [key, c] : d.terms()) m[row.at(key)][j] = c[0];
  }
  return rank(std::move(m));
}

}  // namespace detail

/// dim H^n of the complex restricted to cochains of total PBW degree <= cap.
/// The complex splits into blocks indexed by the total exponent vector.
inline long cohomology_dimension(const AlgebraPtr& alg, int n, int cap) {
  if (n < 1) throw ConfigError("cohomology degree must be >= 1");
  long total = 0;
  for (const Mono& alpha : monomials_up_to(alg->ngens(), cap)) {
    std::vector<Key> basis;
    detail::splits(alpha, n, basis);
    total += static_cast<long>(basis.size()) - static_cast<long>(detail::block_rank(alg, alpha, n)) -
             static_cast<long>(detail::block_rank(alg, alpha, n - 1));
  }
  return total;
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace twistalg
