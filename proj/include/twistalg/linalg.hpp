#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scalars.hpp"

namespace twistalg {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;

inline Matrix zero_matrix(size_t rows, size_t cols) { return Matrix(rows, Vec(cols)); }

inline Matrix identity_matrix(size_t n) {
  Matrix m = zero_matrix(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline size_t cols_of(const Matrix& m, size_t fallback = 0) { return m.empty() ? fallback : m[0].size(); }

inline Matrix transpose(const Matrix& m, size_t cols = 0) {
  const size_t c = cols_of(m, cols);
  Matrix t = zero_matrix(c, m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < c; ++j) t[j][i] = m[i][j];
  return t;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  const size_t inner = b.size(), cols = cols_of(b);
  Matrix r = zero_matrix(a.size(), cols);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

inline Vec operator*(const Matrix& a, const Vec& v) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline bool is_zero(const Matrix& m) {
  for (const auto& r : m)
    if (!is_zero(r)) return false;
  return true;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<size_t> rref_in_place(Matrix& m) {
  std::vector<size_t> pivots;
  const size_t rows = m.size(), cols = cols_of(m);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

inline Matrix rref(Matrix m) {
  rref_in_place(m);
  return m;
}

inline size_t rank(Matrix m) { return rref_in_place(m).size(); }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<Vec> nullspace(Matrix m, size_t cols) {
  if (!m.empty()) cols = m[0].size();
  const auto piv = rref_in_place(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of m x = b, or nothing when inconsistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b, size_t cols) {
  if (!m.empty()) cols = m[0].size();
  Matrix aug(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    aug[i] = m[i];
    aug[i].push_back(b[i]);
  }
  const auto piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Vec x(cols);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][cols];
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  const size_t n = m.size();
  if (n == 0) return Matrix{};
  Matrix aug(n);
  for (size_t i = 0; i < n; ++i) {
    aug[i] = m[i];
    aug[i].resize(2 * n);
    aug[i][n + i] = 1;
  }
  const auto piv = rref_in_place(aug);
  if (piv.size() < n || piv[n - 1] >= n) return std::nullopt;
  Matrix inv(n);
  for (size_t i = 0; i < n; ++i) inv[i] = Vec(aug[i].begin() + n, aug[i].end());
  return inv;
}

}  // namespace twistalg
