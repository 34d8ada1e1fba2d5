#pragma once

#include <array>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace twistalg {

/// Finite-dimensional Lie algebra by structure constants:
/// [x_i, x_j] = sum_k c(i,j,k) x_k.
struct LieAlgebraData {
  int dim = 0;
  std::vector<std::string> names;
  std::vector<Rational> c;  // flattened, (i*dim + j)*dim + k

  LieAlgebraData() = default;
  explicit LieAlgebraData(int n) : dim(n), c(static_cast<size_t>(n) * n * n) {
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }

  const Rational& sc(int i, int j, int k) const { return c[(static_cast<size_t>(i) * dim + j) * dim + k]; }
  Rational& sc(int i, int j, int k) { return c[(static_cast<size_t>(i) * dim + j) * dim + k]; }

  Vec bracket_basis(int i, int j) const {
    Vec v(dim);
    for (int k = 0; k < dim; ++k) v[k] = sc(i, j, k);
    return v;
  }

  Vec bracket(const Vec& u, const Vec& w) const {
    Vec r(dim);
    for (int i = 0; i < dim; ++i) {
      if (sgn(u[i]) == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (sgn(w[j]) == 0) continue;
        const Rational f = u[i] * w[j];
        for (int k = 0; k < dim; ++k) r[k] += f * sc(i, j, k);
      }
    }
    return r;
  }

  /// Matrix of ad(x_i): column a holds [x_i, x_a].
  Matrix ad(int i) const {
    Matrix m = zero_matrix(dim, dim);
    for (int a = 0; a < dim; ++a)
      for (int k = 0; k < dim; ++k) m[k][a] = sc(i, a, k);
    return m;
  }

  bool is_abelian() const {
    for (const auto& x : c)
      if (sgn(x) != 0) return false;
    return true;
  }
};

inline Vec unit_vector(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

struct LieValidation {
  bool ok = true;
  std::string kind;              // "antisymmetry" or "jacobi"
  std::array<int, 3> at{0, 0, 0};  // 1-based basis indices of the first violation
};

inline LieValidation validate_lie(const LieAlgebraData& g) {
  const int n = g.dim;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.sc(i, j, k) + g.sc(j, i, k) != 0) return {false, "antisymmetry", {i + 1, j + 1, k + 1}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Vec xi = unit_vector(n, i), xj = unit_vector(n, j), xk = unit_vector(n, k);
        Vec s = g.bracket(xi, g.bracket_basis(j, k));
        const Vec t = g.bracket(xj, g.bracket_basis(k, i));
        const Vec u = g.bracket(xk, g.bracket_basis(i, j));
        for (int a = 0; a < n; ++a) s[a] += t[a] + u[a];
        if (!is_zero(s)) return {false, "jacobi", {i + 1, j + 1, k + 1}};
      }
  return {};
}

struct BracketEntry {
  int i, j;                                  // 0-based
  std::vector<std::pair<int, Rational>> out;  // [x_i, x_j] = sum coef x_k
};

/// Omitted brackets are zero; a bracket given only one way round is completed
/// antisymmetrically. The result is not validated here.
inline LieAlgebraData lie_from_brackets(int dim, std::vector<std::string> names,
                                        const std::vector<BracketEntry>& entries) {
  LieAlgebraData g(dim);
  if (!names.empty()) {
    if (static_cast<int>(names.size()) != dim) throw ConfigError("basis name count differs from dim");
    g.names = std::move(names);
  }
  std::vector<char> given(static_cast<size_t>(dim) * dim, 0);
  for (const auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.i >= dim || e.j >= dim) throw ConfigError("bracket index out of range");
    given[e.i * dim + e.j] = 1;
    for (const auto& [k, v] : e.out) {
      if (k < 0 || k >= dim) throw ConfigError("bracket index out of range");
      g.sc(e.i, e.j, k) += v;
    }
  }
  for (const auto& e : entries) {
    if (given[e.j * dim + e.i]) continue;
    for (int k = 0; k < dim; ++k) g.sc(e.j, e.i, k) = -g.sc(e.i, e.j, k);
  }
  return g;
}

inline LieAlgebraData abelian_lie(int n) { return LieAlgebraData(n); }

/// sl2 in the basis e, h, f.
inline LieAlgebraData sl2() {
  return lie_from_brackets(3, {"e", "h", "f"},
                           {{0, 2, {{1, 1}}}, {1, 0, {{0, 2}}}, {1, 2, {{2, -2}}}});
}

/// The 2-dimensional non-abelian algebra [x, y] = y.
inline LieAlgebraData solvable2() { return lie_from_brackets(2, {"x", "y"}, {{0, 1, {{1, 1}}}}); }

/// Row-reduced basis of a subspace of k^n.
struct Subspace {
  int ambient = 0;
  Matrix basis;

  Subspace() = default;
  explicit Subspace(int n) : ambient(n) {}

  static Subspace span(int n, Matrix vectors) {
    Subspace s(n);
    for (auto& v : vectors)
      if (static_cast<int>(v.size()) != n) throw DomainError("vector length differs from ambient dimension");
    rref_in_place(vectors);
    s.basis = std::move(vectors);
    return s;
  }

  static Subspace whole(int n) { return span(n, identity_matrix(n)); }

  int dim() const { return static_cast<int>(basis.size()); }

  bool contains(const Vec& v) const {
    Matrix m = basis;
    m.push_back(v);
    return static_cast<int>(rank(std::move(m))) == dim();
  }

  bool contains(const Subspace& o) const {
    for (const auto& v : o.basis)
      if (!contains(v)) return false;
    return true;
  }

  /// Coordinates of v in the stored basis; throws if v is outside.
  Vec coords(const Vec& v) const {
    auto x = solve(transpose(basis, ambient), v, basis.size());
    if (!x) throw DomainError("vector not in subspace");
    return *x;
  }

  Vec from_coords(const Vec& a) const {
    Vec v(ambient);
    for (size_t i = 0; i < basis.size(); ++i)
      for (int k = 0; k < ambient; ++k) v[k] += a[i] * basis[i][k];
    return v;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
};

inline Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  Matrix m = s.basis;
  m.insert(m.end(), t.basis.begin(), t.basis.end());
  return Subspace::span(s.ambient, std::move(m));
}

inline Subspace subspace_intersect(const Subspace& s, const Subspace& t) {
  // (alpha, beta) with alpha.S + beta.T = 0 give the vectors alpha.S.
  Matrix stacked = s.basis;
  stacked.insert(stacked.end(), t.basis.begin(), t.basis.end());
  const auto ker = nullspace(transpose(stacked, s.ambient), stacked.size());
  Matrix out;
  for (const auto& k : ker) out.push_back(s.from_coords(Vec(k.begin(), k.begin() + s.dim())));
  return Subspace::span(s.ambient, std::move(out));
}

/// Span of all [u, w] with u in s, w in t.
inline Subspace commutant(const LieAlgebraData& g, const Subspace& s, const Subspace& t) {
  Matrix out;
  for (const auto& u : s.basis)
    for (const auto& w : t.basis) out.push_back(g.bracket(u, w));
  return Subspace::span(g.dim, std::move(out));
}

inline bool is_subalgebra(const LieAlgebraData& g, const Subspace& s) {
  return s.contains(commutant(g, s, s));
}

inline bool is_ideal(const LieAlgebraData& g, const Subspace& s) {
  return s.contains(commutant(g, Subspace::whole(g.dim), s));
}

inline bool is_abelian_ideal(const LieAlgebraData& g, const Subspace& s) {
  return is_ideal(g, s) && commutant(g, s, s).dim() == 0;
}

inline Subspace center(const LieAlgebraData& g) {
  // x with [x_i, x] = 0 for every i
  Matrix m;
  for (int i = 0; i < g.dim; ++i) {
    const Matrix a = g.ad(i);
    m.insert(m.end(), a.begin(), a.end());
  }
  return Subspace::span(g.dim, nullspace(std::move(m), g.dim));
}

/// Skew form on a subspace, as a matrix in the subspace basis.
struct SkewForm {
  Subspace space;
  Matrix m;

  Rational eval(const Vec& u, const Vec& w) const {
    const Vec a = space.coords(u), b = space.coords(w);
    Rational r = 0;
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r += a[i] * m[i][j] * b[j];
    return r;
  }

  bool is_skew() const {
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j)
        if (m[i][j] != -m[j][i]) return false;
    return true;
  }

  bool is_nondegenerate() const { return rank(m) == m.size(); }

  friend bool operator==(const SkewForm& a, const SkewForm& b) { return a.space == b.space && a.m == b.m; }
};

/// b([x,u],w) + b(u,[x,w]) = 0 for all x in g and u, w in the (ideal) space.
inline bool form_is_invariant(const LieAlgebraData& g, const SkewForm& b) {
  if (!is_ideal(g, b.space)) return false;
  for (int i = 0; i < g.dim; ++i) {
    const Vec x = unit_vector(g.dim, i);
    for (const auto& u : b.space.basis)
      for (const auto& w : b.space.basis)
        if (b.eval(g.bracket(x, u), w) + b.eval(u, g.bracket(x, w)) != 0) return false;
  }
  return true;
}

/// Lie 2-cocycle condition on a subalgebra.
inline bool form_is_cocycle(const LieAlgebraData& g, const SkewForm& b) {
  const auto& B = b.space.basis;
  for (const auto& x : B)
    for (const auto& y : B)
      for (const auto& z : B)
        if (b.eval(g.bracket(x, y), z) + b.eval(g.bracket(y, z), x) + b.eval(g.bracket(z, x), y) != 0)
          return false;
  return true;
}

struct HeisenbergData {
  LieAlgebraData g;
  int m = 0;
  Subspace V;
  Matrix form;  // b on V in the basis e_1..e_m, f_1..f_m
};

/// Basis e_1..e_m, f_1..f_m, c with [u, v] = b(u, v) c and b(e_i, f_i) = 1.
inline HeisenbergData heisenberg(int m) {
  if (m < 1) throw ConfigError("heisenberg needs m >= 1");
  const int n = 2 * m + 1;
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("e" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("f" + std::to_string(i));
  names.push_back("c");
  if (m == 1) names = {"e", "f", "c"};
  std::vector<BracketEntry> br;
  for (int i = 0; i < m; ++i) br.push_back({i, m + i, {{2 * m, 1}}});
  HeisenbergData d;
  d.g = lie_from_brackets(n, names, br);
  d.m = m;
  Matrix vb;
  for (int i = 0; i < 2 * m; ++i) vb.push_back(unit_vector(n, i));
  d.V = Subspace::span(n, vb);
  d.form = zero_matrix(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    d.form[i][m + i] = 1;
    d.form[m + i][i] = -1;
  }
  return d;
}

struct MetaAbelian {
  LieAlgebraData g;
  int b_dim = 0;
  SkewForm b1, b2;  // on a_1 = b* + 0 + b and a_2 = 0 + b* + b
};

/// g(b, c) on b* + b* + b with basis e_i, f_i, z_k and [e_i, f_j] = sum_k c_ijk z_k.
/// c is indexed (i*b + j)*b + k and must be fully symmetric.
inline MetaAbelian meta_abelian(int b_dim, const std::vector<Rational>& c) {
  const int b = b_dim;
  if (b < 1) throw ConfigError("meta_abelian needs b_dim >= 1");
  if (static_cast<int>(c.size()) != b * b * b) throw ConfigError("3-tensor has wrong size");
  auto at = [&](int i, int j, int k) -> const Rational& { return c[(i * b + j) * b + k]; };
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      for (int k = 0; k < b; ++k)
        if (at(i, j, k) != at(j, i, k) || at(i, j, k) != at(i, k, j))
          throw DomainError("3-tensor is not symmetric");
  std::vector<std::string> names;
  for (int i = 1; i <= b; ++i) names.push_back("e" + std::to_string(i));
  for (int i = 1; i <= b; ++i) names.push_back("f" + std::to_string(i));
  for (int i = 1; i <= b; ++i) names.push_back("z" + std::to_string(i));
  std::vector<BracketEntry> br;
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      BracketEntry e{i, b + j, {}};
      for (int k = 0; k < b; ++k)
        if (sgn(at(i, j, k)) != 0) e.out.push_back({2 * b + k, at(i, j, k)});
      br.push_back(e);
    }
  MetaAbelian r;
  r.b_dim = b;
  r.g = lie_from_brackets(3 * b, names, br);
  const int n = 3 * b;
  Matrix a1, a2;
  for (int i = 0; i < b; ++i) a1.push_back(unit_vector(n, i));
  for (int i = 0; i < b; ++i) a2.push_back(unit_vector(n, b + i));
  for (int i = 0; i < b; ++i) {
    a1.push_back(unit_vector(n, 2 * b + i));
    a2.push_back(unit_vector(n, 2 * b + i));
  }
  // b_1((l1,0,x1),(l2,0,x2)) = l1(x2) - l2(x1), likewise b_2
  Matrix form = zero_matrix(2 * b, 2 * b);
  for (int i = 0; i < b; ++i) {
    form[i][b + i] = 1;
    form[b + i][i] = -1;
  }
  r.b1 = {Subspace::span(n, a1), form};
  r.b2 = {Subspace::span(n, a2), form};
  if (validate_lie(r.g).ok == false) throw MathViolation("meta_abelian", "bracket fails Jacobi");
  if (!is_abelian_ideal(r.g, r.b1.space) || !is_abelian_ideal(r.g, r.b2.space))
    throw MathViolation("meta_abelian", "a_1 or a_2 is not an abelian ideal");
  if (!form_is_invariant(r.g, r.b1) || !form_is_invariant(r.g, r.b2))
    throw MathViolation("meta_abelian", "b_1 or b_2 is not invariant");
  return r;
}

/// Skew matrices C (X = sum C_ab x_a (x) x_b) spanning (Lambda^2 g)^g, row-reduced
/// over the coordinates C_ab, a < b.
inline std::vector<Matrix> invariant_skew2(const LieAlgebraData& g) {
  const int n = g.dim;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
  const size_t unknowns = pairs.size();
  // ad_k(C) = A_k C + C A_k^T must vanish; one row per (k, p, q).
  Matrix sys;
  for (int k = 0; k < n; ++k)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        Vec row(unknowns);
        for (size_t u = 0; u < unknowns; ++u) {
          const auto [a, b] = pairs[u];
          // C = E_ab - E_ba; (A C)_pq = A_pa [q==b] - A_pb [q==a]; (C A^T)_pq = [p==a] A_qb - [p==b] A_qa
          Rational v = 0;
          if (q == b) v += g.sc(k, a, p);
          if (q == a) v -= g.sc(k, b, p);
          if (p == a) v += g.sc(k, b, q);
          if (p == b) v -= g.sc(k, a, q);
          row[u] = v;
        }
        if (!is_zero(row)) sys.push_back(std::move(row));
      }
  Matrix ker = nullspace(std::move(sys), unknowns);
  rref_in_place(ker);
  std::vector<Matrix> out;
  for (const auto& v : ker) {
    Matrix c = zero_matrix(n, n);
    for (size_t u = 0; u < unknowns; ++u) {
      c[pairs[u].first][pairs[u].second] = v[u];
      c[pairs[u].second][pairs[u].first] = -v[u];
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// A is an automorphism when invertible and A[x_i,x_j] = [A x_i, A x_j]
/// (column j of A is the image of x_j).
inline bool is_automorphism(const LieAlgebraData& g, const Matrix& A) {
  if (static_cast<int>(A.size()) != g.dim) return false;
  if (g.dim > 0 && !inverse(A)) return false;
  const Matrix At = transpose(A, g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j)
      if (A * g.bracket_basis(i, j) != g.bracket(At[i], At[j])) return false;
  return true;
}

inline bool is_derivation(const LieAlgebraData& g, const Matrix& D) {
  if (static_cast<int>(D.size()) != g.dim) return false;
  const Matrix Dt = transpose(D, g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      Vec rhs = g.bracket(Dt[i], unit_vector(g.dim, j));
      const Vec t = g.bracket(unit_vector(g.dim, i), Dt[j]);
      for (int k = 0; k < g.dim; ++k) rhs[k] += t[k];
      if (D * g.bracket_basis(i, j) != rhs) return false;
    }
  return true;
}

/// (A (x) A) acting on the coefficient matrix of a 2-tensor.
inline Matrix act_on_2tensor(const Matrix& A, const Matrix& C) { return A * C * transpose(A); }

}  // namespace twistalg
