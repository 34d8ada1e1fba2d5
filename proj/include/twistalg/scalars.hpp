#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace twistalg {

using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational r;
  try {
    r = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    throw ConfigError("malformed rational '" + s + "'");
  }
  if (r.get_den() == 0) throw ConfigError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

/// Element of Q[h]/(h^{N+1}).
class HSeries {
 public:
  HSeries() : c_(1) {}
  explicit HSeries(int order) : c_(check_order(order) + 1) {}

  static HSeries constant(int order, const Rational& v) {
    HSeries s(order);
    s.c_[0] = v;
    return s;
  }

  /// v * h^k (zero when k > order).
  static HSeries monomial(int order, int k, const Rational& v = 1) {
    HSeries s(order);
    if (k <= order) s.c_[k] = v;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  // Lowest h-power with a nonzero coefficient; order()+1 for zero.
  int valuation() const {
    for (int i = 0; i <= order(); ++i)
      if (sgn(c_[i]) != 0) return i;
    return order() + 1;
  }

  HSeries& operator+=(const HSeries& o) {
    same_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  HSeries& operator-=(const HSeries& o) {
    same_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  HSeries& operator*=(const Rational& v) {
    for (auto& x : c_) x *= v;
    return *this;
  }
  HSeries& operator*=(const HSeries& o) {
    *this = *this * o;
    return *this;
  }

  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
  friend HSeries operator*(HSeries a, const Rational& v) { return a *= v; }
  friend HSeries operator*(const Rational& v, HSeries a) { return a *= v; }
  friend HSeries operator-(HSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend HSeries operator*(const HSeries& a, const HSeries& b) {
    a.same_order(b);
    const int n = a.order();
    HSeries r(n);
    const int va = a.valuation(), vb = b.valuation();
    for (int i = va; i <= n; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (int j = vb; i + j <= n; ++j)
        if (sgn(b.c_[j]) != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  friend bool operator==(const HSeries& a, const HSeries& b) {
    return a.order() == b.order() && a.c_ == b.c_;
  }
  friend bool operator!=(const HSeries& a, const HSeries& b) { return !(a == b); }

  /// Multiply by h^k, dropping what falls past the truncation.
  HSeries shifted(int k) const {
    HSeries r(order());
    for (int i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
    return r;
  }

  HSeries inverse() const {
    if (sgn(c_[0]) == 0) throw NotInvertible("h-series with zero constant term");
    const int n = order();
    HSeries r(n);
    r.c_[0] = 1 / c_[0];
    for (int k = 1; k <= n; ++k) {
      Rational acc = 0;
      for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -acc / c_[0];
    }
    return r;
  }

  HSeries exp() const {
    if (sgn(c_[0]) != 0) throw DomainError("exp needs zero constant term");
    HSeries r = constant(order(), 1), term = r;
    for (int k = 1; k <= order(); ++k) {
      term = term * *this * Rational(1, k);
      r += term;
    }
    return r;
  }

  HSeries log() const {
    if (c_[0] != 1) throw DomainError("log needs constant term 1");
    HSeries x = *this - constant(order(), 1), r(order()), power = x;
    for (int k = 1; k <= order(); ++k) {
      r += power * Rational(k % 2 ? 1 : -1, k);
      power = power * x;
    }
    return r;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw ConfigError("negative truncation order");
    return order;
  }
  void same_order(const HSeries& o) const {
    if (o.order() != order())
      throw ConfigError("truncation order mismatch: " + std::to_string(order()) + " vs " +
                        std::to_string(o.order()));
  }

  std::vector<Rational> c_;
};

}  // namespace twistalg
