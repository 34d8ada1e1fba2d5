#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "crossedprod.hpp"
#include "geom.hpp"
#include "twist.hpp"

namespace twistalg {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ConfigError("rational must be a \"p/q\" string or an integer");
}

inline Json to_json(const HSeries& s) {
  Json a = Json::array();
  for (int i = 0; i <= s.order(); ++i) a.push_back(to_string(s[i]));
  return a;
}

/// Coefficients past the truncation order are dropped.
inline HSeries hseries_from_json(const Json& j, int order) {
  HSeries s(order);
  if (!j.is_array()) return HSeries::constant(order, rational_from_json(j));
  for (size_t i = 0; i < j.size() && static_cast<int>(i) <= order; ++i)
    s += HSeries::monomial(order, static_cast<int>(i), rational_from_json(j[i]));
  return s;
}

inline Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    a.push_back(std::move(r));
  }
  return a;
}

inline Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("matrix must be an array of rows");
  Matrix m;
  for (const auto& row : j) {
    Vec r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    if (!m.empty() && r.size() != m[0].size()) throw ConfigError("ragged matrix");
    m.push_back(std::move(r));
  }
  return m;
}

// ---- Lie algebras

inline Json to_json(const LieAlgebraData& g) {
  Json br = Json::array();
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      Json out = Json::array();
      for (int k = 0; k < g.dim; ++k)
        if (sgn(g.sc(i, j, k)) != 0) out.push_back(Json::array({k, to_string(g.sc(i, j, k))}));
      if (!out.empty()) br.push_back(Json::array({i, j, out}));
    }
  return Json{{"dim", g.dim}, {"basis", g.names}, {"brackets", br}};
}

/// "heisenbergM", "abelianN", "meta1", "sl2", "solvable2".
inline LieAlgebraData builtin_lie(const std::string& name) {
  auto num = [&](const std::string& prefix) {
    try {
      const int v = std::stoi(name.substr(prefix.size()));
      if (v < 1) throw ConfigError("builtin algebra index must be positive: " + name);
      return v;
    } catch (const std::logic_error&) {
      throw ConfigError("bad builtin algebra name: " + name);
    }
  };
  if (name.rfind("heisenberg", 0) == 0) return heisenberg(num("heisenberg")).g;
  if (name.rfind("abelian", 0) == 0) return abelian_lie(num("abelian"));
  if (name == "meta1") return meta_abelian(1, {Rational(1)}).g;
  if (name == "sl2") return sl2();
  if (name == "solvable2") return solvable2();
  throw ConfigError("unknown builtin algebra: " + name);
}

/// Parses the bracket schema without validating the Jacobi identity.
inline LieAlgebraData lie_from_json_unchecked(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    return builtin_lie(s.rfind("builtin:", 0) == 0 ? s.substr(8) : s);
  }
  if (j.contains("builtin")) return builtin_lie(j["builtin"].get<std::string>());
  if (!j.contains("dim")) throw ConfigError("algebra JSON needs \"dim\"");
  const int dim = j["dim"].get<int>();
  if (dim < 0) throw ConfigError("negative dimension");
  std::vector<std::string> names;
  if (j.contains("basis")) names = j["basis"].get<std::vector<std::string>>();
  std::vector<BracketEntry> entries;
  if (j.contains("brackets"))
    for (const auto& b : j["brackets"]) {
      if (!b.is_array() || b.size() != 3) throw ConfigError("bracket entry must be [i, j, [[k, \"p/q\"], ...]]");
      BracketEntry e{b[0].get<int>(), b[1].get<int>(), {}};
      for (const auto& kv : b[2]) e.out.emplace_back(kv[0].get<int>(), rational_from_json(kv[1]));
      entries.push_back(std::move(e));
    }
  return lie_from_brackets(dim, std::move(names), entries);
}

inline LieAlgebraData lie_from_json(const Json& j) {
  LieAlgebraData g = lie_from_json_unchecked(j);
  const auto v = validate_lie(g);
  if (!v.ok)
    throw ConfigError(v.kind + " fails at (" + std::to_string(v.at[0]) + ", " + std::to_string(v.at[1]) + ", " +
                      std::to_string(v.at[2]) + ")");
  return g;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

/// A path to a JSON file, or "builtin:NAME".
inline Json algebra_source(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) return Json(source);
  return read_json_file(source);
}

// ---- tensors

inline Json to_json(const TensorElem& t) {
  Json terms = Json::array();
  const int k = t.arity();
  for (const auto& [key, c] : t.terms()) {
    Json mons = Json::array();
    for (int f = 0; f < k; ++f) mons.push_back(t.factor(key, f));
    terms.push_back(Json{{"mons", mons}, {"coef", to_json(c)}});
  }
  return Json{{"arity", k}, {"terms", terms}};
}

inline TensorElem tensor_from_json(const AlgebraPtr& alg, int order, const Json& j) {
  if (!j.contains("arity") || !j.contains("terms")) throw ConfigError("tensor JSON needs \"arity\" and \"terms\"");
  const int k = j["arity"].get<int>();
  const int n = alg->ngens();
  TensorElem t(alg, order, k);
  for (const auto& term : j["terms"]) {
    const auto& mons = term.at("mons");
    if (static_cast<int>(mons.size()) != k) throw ConfigError("term has wrong number of factors");
    Key key;
    for (const auto& m : mons) {
      const auto e = m.get<std::vector<int>>();
      if (static_cast<int>(e.size()) != n) throw ConfigError("exponent vector has wrong length");
      for (int x : e)
        if (x < 0) throw ConfigError("negative exponent");
      key.insert(key.end(), e.begin(), e.end());
    }
    t.add(key, hseries_from_json(term.at("coef"), order));
  }
  return t;
}

// ---- twists and endomorphisms

inline Json to_json(const TwistedEndo& t) {
  Json im = Json::array();
  for (const auto& x : t.f.images()) im.push_back(to_json(x));
  return Json{{"images", im}, {"F", to_json(t.F)}};
}

/// {"F": tensor} or a bare tensor for a twist.
inline TensorElem twist_from_json(const AlgebraPtr& alg, int order, const Json& j) {
  const TensorElem F = tensor_from_json(alg, order, j.contains("F") ? j["F"] : j);
  if (F.arity() != 2) throw ConfigError("a twist is a 2-tensor");
  return F;
}

/// {"images": [...], "F": ...}; {"matrix": A, "F": ...} for a linear automorphism;
/// missing images mean the identity, missing F means 1.
inline TwistedEndo endo_from_json(const AlgebraPtr& alg, int order, const Json& j) {
  TwistedEndo t = TwistedEndo::identity(alg, order);
  if (j.contains("images")) {
    std::vector<TensorElem> im;
    for (const auto& x : j["images"]) im.push_back(tensor_from_json(alg, order, x));
    t.f = AlgebraMap(alg, order, std::move(im));
  } else if (j.contains("matrix")) {
    const Matrix A = matrix_from_json(j["matrix"]);
    if (static_cast<int>(A.size()) != alg->ngens()) throw ConfigError("automorphism matrix has wrong size");
    t.f = AlgebraMap::from_matrix(alg, order, A);
  }
  if (j.contains("F")) t.F = twist_from_json(alg, order, j["F"]);
  return t;
}

inline Json to_json(const NormalForm& nf) {
  Json X = Json::array();
  for (const auto& x : nf.X) X.push_back(to_json(x));
  return Json{{"X", X}, {"gauge", to_json(nf.gauge)}};
}

inline NormalForm normal_form_from_json(const AlgebraPtr& alg, int order, const Json& j) {
  NormalForm nf;
  for (const auto& x : j.at("X")) nf.X.push_back(tensor_from_json(alg, order, x));
  nf.gauge = tensor_from_json(alg, order, j.at("gauge"));
  return nf;
}

inline Json to_json(const SupportData& s) {
  return Json{{"X", to_json(s.X)}, {"basis", to_json(s.form.space.basis)}, {"form", to_json(s.form.m)}};
}

inline Json to_json(const Check& c) {
  Json j{{"identity", c.identity}, {"ok", c.ok}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

inline Json to_json(const Report& r) {
  Json a = Json::array();
  for (const auto& c : r.checks) a.push_back(to_json(c));
  return a;
}

// ---- crossed products

inline Json to_json(const CPElem& u) {
  Json a = Json::array();
  for (const auto& [ks, x] : u.terms) {
    Json g = Json::array();
    for (const auto& k : ks) g.push_back(k);
    a.push_back(Json{{"group", u.arity == 1 ? Json(ks[0]) : g}, {"elem", to_json(x)}});
  }
  return a;
}

inline CPElem cp_from_json(const AlgebraPtr& alg, int order, const Json& j) {
  CPElem u;
  for (const auto& t : j) {
    const TensorElem x = tensor_from_json(alg, order, t.at("elem"));
    u.arity = x.arity();
    std::vector<Lattice> ks;
    if (u.arity == 1)
      ks.push_back(t.at("group").get<Lattice>());
    else
      ks = t.at("group").get<std::vector<Lattice>>();
    u.add(ks, x);
  }
  return u;
}

}  // namespace twistalg
