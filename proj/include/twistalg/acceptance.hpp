#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "crossedprod.hpp"
#include "geom.hpp"
#include "random.hpp"
#include "rmatrix.hpp"
#include "serialize.hpp"

namespace twistalg {

struct AcceptanceConfig {
  std::uint64_t seed = 0;
  int order = 4;
};

struct CriterionResult {
  CriterionResult() = default;
  CriterionResult(int i, std::string t) : id(i), title(std::move(t)) {}

  int id = 0;
  std::string title;
  bool ok = false;
  std::string detail;
  Json data = Json::object();
};

namespace detail {

inline Rng criterion_rng(const AcceptanceConfig& cfg, int id) { return Rng(cfg.seed * 1000003ULL + id); }

inline std::vector<TensorElem> random_invariant_list(const AlgebraPtr& alg, int order, const LieAlgebraData& g,
                                                     int count, Rng& rng) {
  const auto basis = invariant_skew2(g);
  std::vector<TensorElem> X;
  for (int i = 0; i < count; ++i) X.push_back(tensor2_from_matrix(alg, order, random_combination(basis, g.dim, rng)));
  return X;
}

inline bool same_span(const Subspace& a, const Subspace& b) {
  const size_t s = subspace_sum(a, b).basis.size();
  return s == a.basis.size() && s == b.basis.size();
}

// Tracks the first failing sample of a batch.
struct Tally {
  int samples = 0, failures = 0;
  std::string first;
  void record(bool ok, const std::string& what) {
    ++samples;
    if (!ok && failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0; }
  std::string summary() const {
    return std::to_string(samples - failures) + "/" + std::to_string(samples) + (ok() ? "" : ", first failure: " + first);
  }
};

inline std::string pair_name(const LieAlgebraData& g, int v, int u) { return "(" + g.names[v] + ", " + g.names[u] + ")"; }

}  // namespace detail

/// 1: [v^c, u^c] = b(v,u)(c (x) c^2 + c^2 (x) c) for Heisenberg(1), Heisenberg(2).
inline CriterionResult criterion_heisenberg_commutator(const AcceptanceConfig&) {
  CriterionResult r{1, "Heisenberg commutator identity"};
  detail::Tally t;
  for (int m : {1, 2}) {
    const HeisenbergData hd = heisenberg(m);
    const auto alg = PbwAlgebra::enveloping(hd.g);
    const int n = hd.g.dim, c = n - 1;
    Key cc2(2 * n, 0), c2c(2 * n, 0);
    cc2[c] = 1;
    cc2[n + c] = 2;
    c2c[c] = 2;
    c2c[n + c] = 1;
    for (int v = 0; v < 2 * m; ++v)
      for (int u = 0; u < 2 * m; ++u) {
        Matrix Cv = zero_matrix(n, n), Cu = zero_matrix(n, n);
        Cv[v][c] = 1, Cv[c][v] = -1, Cu[u][c] = 1, Cu[c][u] = -1;
        const TensorElem lhs = commutator(tensor2_from_matrix(alg, 0, Cv), tensor2_from_matrix(alg, 0, Cu));
        TensorElem rhs(alg, 0, 2);
        rhs.add(cc2, hd.form[v][u]);
        rhs.add(c2c, hd.form[v][u]);
        t.record(lhs == rhs, "m=" + std::to_string(m) + " " + detail::pair_name(hd.g, v, u));
      }
  }
  r.ok = t.ok();
  r.detail = t.summary() + " pairs";
  r.data["pairs"] = t.samples;
  return r;
}

/// 2: d(b(u,v)/3 c^3) = [v^c, u^c], also the geometric a.
inline CriterionResult criterion_heisenberg_coboundary(const AcceptanceConfig&) {
  CriterionResult r{2, "Heisenberg coboundary"};
  detail::Tally t;
  for (int m : {1, 2}) {
    const HeisenbergData hd = heisenberg(m);
    const auto alg = PbwAlgebra::enveloping(hd.g);
    const int n = hd.g.dim, c = n - 1;
    Mono c3(n, 0);
    c3[c] = 3;
    for (int v = 0; v < 2 * m; ++v)
      for (int u = 0; u < 2 * m; ++u) {
        Matrix Cv = zero_matrix(n, n), Cu = zero_matrix(n, n);
        Cv[v][c] = 1, Cv[c][v] = -1, Cu[u][c] = 1, Cu[c][u] = -1;
        const TensorElem comm = commutator(tensor2_from_matrix(alg, 0, Cv), tensor2_from_matrix(alg, 0, Cu));
        TensorElem a(alg, 0, 1);
        a.add(c3, hd.form[u][v] / 3);
        const bool direct = differential(a) == comm;
        const bool geometric = three_vector(hd.g, alg, 0, Cv, Cu).a == a;
        t.record(direct && geometric, "m=" + std::to_string(m) + " " + detail::pair_name(hd.g, v, u) +
                                          (direct ? " (geometric a differs)" : " (coboundary differs)"));
      }
  }
  r.ok = t.ok();
  r.detail = t.summary() + " pairs, sign +";
  r.data["pairs"] = t.samples;
  r.data["sign"] = "+";
  return r;
}

/// 3: normal forms of centrally gauged products of exp(X_i h^i).
inline CriterionResult criterion_normal_form(const AcceptanceConfig& cfg) {
  CriterionResult r{3, "Normal-form theorem"};
  auto rng = detail::criterion_rng(cfg, 3);
  const int N = 4, per = 25;
  detail::Tally t;
  for (const auto& ta : standard_test_algebras()) {
    const auto alg = PbwAlgebra::enveloping(ta.g);
    for (int s = 0; s < per; ++s) {
      const auto X = detail::random_invariant_list(alg, N, ta.g, N, rng);
      const TensorElem F = apply_gauge(random_central_gauge(alg, N, rng), TwistedEndo::pure_twist(normal_form_product(X))).F;
      const NormalForm nf = normalize_invariant_twist(F);
      const bool cert = apply_gauge(nf.gauge, TwistedEndo::pure_twist(F)).F == normal_form_product(nf.X);
      t.record(nf.X == X && cert, ta.name + " sample " + std::to_string(s) + (cert ? " (X differs)" : " (certificate)"));
    }
  }
  r.ok = t.ok();
  r.detail = t.summary() + " twists";
  r.data["twists"] = t.samples;
  return r;
}

/// 4: exp(Xh)exp(Yh) gauge-equal to exp((X+Y)h) on the invariant basis of Heisenberg(2).
inline CriterionResult criterion_group_law(const AcceptanceConfig& cfg) {
  CriterionResult r{4, "Group law"};
  const LieAlgebraData g = heisenberg(2).g;
  const auto alg = PbwAlgebra::enveloping(g);
  const auto basis = invariant_skew2(g);
  detail::Tally t;
  Json as = Json::array();
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      const TensorElem X = tensor2_from_matrix(alg, cfg.order, basis[i]);
      const TensorElem Y = tensor2_from_matrix(alg, cfg.order, basis[j]);
      const GroupLaw gl = group_law_cocycle(g, X, Y);
      const bool ok = group_law_certificate(X, Y, gl.a_geometric) && group_law_certificate(X, Y, gl.a_solver);
      t.record(ok, "pair " + std::to_string(i) + "," + std::to_string(j));
      as.push_back(gl.a_geometric.coeff(0).str());
    }
  r.ok = t.ok();
  r.detail = t.summary() + " pairs";
  r.data["a"] = as;
  return r;
}

/// 5: the alternation of the associator vanishes.
inline CriterionResult criterion_associator(const AcceptanceConfig& cfg) {
  CriterionResult r{5, "Associator triviality"};
  auto rng = detail::criterion_rng(cfg, 5);
  const LieAlgebraData g = heisenberg(2).g;
  const auto alg = PbwAlgebra::enveloping(g);
  const CocycleFn a = geometric_cocycle(g);
  detail::Tally t;
  for (int s = 0; s < 20; ++s) {
    const auto X = detail::random_invariant_list(alg, cfg.order, g, 3, rng);
    t.record(associator_alternation(a, X[0], X[1], X[2]).is_zero(), "triple " + std::to_string(s));
  }
  r.ok = t.ok();
  r.detail = t.summary() + " triples";
  r.data["triples"] = t.samples;
  return r;
}

/// 6: separation of gauged (A, F) back to (iota, F') o (A', 1).
inline CriterionResult criterion_separation(const AcceptanceConfig& cfg) {
  CriterionResult r{6, "Separation"};
  auto rng = detail::criterion_rng(cfg, 6);
  const auto algebras = standard_test_algebras();
  detail::Tally t;
  for (int s = 0; s < 50; ++s) {
    const auto& ta = algebras[s % algebras.size()];
    const auto alg = PbwAlgebra::enveloping(ta.g);
    const int N = cfg.order;
    const Matrix A = ta.automorphism(rng);
    const auto X = detail::random_invariant_list(alg, N, ta.g, N, rng);
    const TwistedEndo base = compose(TwistedEndo::pure_twist(normal_form_product(X)),
                                     TwistedEndo::pure_map(AlgebraMap::from_matrix(alg, N, A)));
    const TwistedEndo t0 = apply_gauge(random_gauge(alg, N, rng), base);
    const Separated sep = separate(t0);
    const TwistedEndo rebuilt = compose(TwistedEndo::pure_twist(sep.F_inv), TwistedEndo::pure_map(sep.automorphism));
    const bool recon = apply_gauge(sep.gauge, t0) == rebuilt;
    const bool endo = verify_endo(t0).ok();
    t.record(recon && endo, ta.name + " sample " + std::to_string(s) + (endo ? " (reconstruction)" : " (input endo)"));
  }
  r.ok = t.ok();
  r.detail = t.summary() + " twisted automorphisms";
  r.data["samples"] = t.samples;
  return r;
}

/// 7: H^n of the tangent complex has dimension binom(dim g, n).
inline CriterionResult criterion_cohomology(const AcceptanceConfig&) {
  CriterionResult r{7, "Cohomology ranks"};
  detail::Tally t;
  Json dims = Json::object();
  for (const auto& ta : standard_test_algebras()) {
    const auto alg = PbwAlgebra::enveloping(ta.g);
    Json row = Json::array();
    for (int n = 1; n <= 3; ++n) {
      const long d = cohomology_dimension(alg, n, n);
      row.push_back(d);
      t.record(d == binomial(ta.g.dim, n), ta.name + " n=" + std::to_string(n) + " got " + std::to_string(d));
    }
    dims[ta.name] = row;
  }
  r.ok = t.ok();
  r.detail = t.summary() + " ranks";
  r.data["dims"] = dims;
  return r;
}

/// 8: classical limits of gauged twists are the Lie part X_1 and solve the CYBE.
inline CriterionResult criterion_cybe(const AcceptanceConfig& cfg) {
  CriterionResult r{8, "CYBE pipeline"};
  auto rng = detail::criterion_rng(cfg, 8);
  const auto algebras = standard_test_algebras();
  detail::Tally t;
  for (int s = 0; s < 30; ++s) {
    const auto& ta = algebras[s % algebras.size()];
    const auto alg = PbwAlgebra::enveloping(ta.g);
    const int N = std::max(2, cfg.order);
    const auto X = detail::random_invariant_list(alg, N, ta.g, N, rng);
    const TwistedEndo base = TwistedEndo::pure_twist(normal_form_product(X));
    const TensorElem F1 = apply_gauge(random_gauge(alg, N, rng), base).F;
    const TensorElem F2 = apply_gauge(random_gauge(alg, N, rng), base).F;
    bool ok = false;
    std::string why;
    try {
      const Matrix r1 = classical_limit(F1).r, r2 = classical_limit(F2).r;
      ok = r1 == r2 && lie_matrix(X[0]) == r1;
      why = r1 == r2 ? " (r differs from X_1)" : " (gauge changed r)";
    } catch (const MathViolation& e) {
      why = std::string(" (") + e.what() + ")";
    }
    t.record(ok, ta.name + " sample " + std::to_string(s) + why);
  }
  r.ok = t.ok();
  r.detail = t.summary() + " twists";
  r.data["twists"] = t.samples;
  return r;
}

/// 9: R = exp(rh) axioms, Drinfeld element on orbits, the Z/2 round trip.
inline CriterionResult criterion_triangular(const AcceptanceConfig& cfg) {
  CriterionResult r{9, "Triangular suite"};
  auto rng = detail::criterion_rng(cfg, 9);
  const int N = std::min(cfg.order, 3);  // arity-3 checks per orbit move
  detail::Tally axioms, orbit;
  const auto algebras = standard_test_algebras();
  std::vector<TensorElem> Rs;
  for (const auto& ta : algebras) {
    const auto alg = PbwAlgebra::enveloping(ta.g);
    for (const auto& C : invariant_skew2(ta.g)) {
      const TensorElem R = exp(tensor2_from_matrix(alg, N, C).mul_h(1));
      const Report rep = verify_triangular(R);
      axioms.record(rep.ok(), ta.name + ": " + (rep.ok() ? "" : rep.first_failure()->identity));
      Rs.push_back(R);
    }
  }
  for (int s = 0; s < 50; ++s) {
    const TensorElem& R = Rs[uniform_int(rng, 0, static_cast<int>(Rs.size()) - 1)];
    const auto& alg = R.algebra();
    const auto X = detail::random_invariant_list(alg, N, *alg->lie(), N, rng);
    const TwistedEndo move = apply_gauge(random_gauge(alg, N, rng), TwistedEndo::pure_twist(normal_form_product(X)));
    const TensorElem R2 = twist_R(move, R);
    const TensorElem F = normal_form_product(X);
    const TensorElem R3 = flip(F) * R * inverse(F);
    const DrinfeldElement d1 = drinfeld_element(R), d2 = drinfeld_element(R2), d3 = drinfeld_element(R3);
    const bool ok = d1.u == d2.u && d1.u == d3.u && d2.checks.ok() && verify_triangular(R2).ok() &&
                    verify_triangular(R3).ok();
    orbit.record(ok, "move " + std::to_string(s));
  }
  const Z2Tensor u = z2_involution();
  const Z2Tensor Ru = r_from_involution(u);
  const bool toy = verify_triangular(Ru).ok() && Ru.mu_id_s() == u;
  r.ok = axioms.ok() && orbit.ok() && toy;
  r.detail = "axioms " + axioms.summary() + "; orbit " + orbit.summary() + "; Z/2 round trip " + (toy ? "ok" : "failed");
  r.data["r_matrices"] = axioms.samples;
  r.data["orbit_moves"] = orbit.samples;
  r.data["z2_round_trip"] = toy;
  return r;
}

/// 10: geometric_add against the direct support; classify / Casimir round trip.
inline CriterionResult criterion_geometry(const AcceptanceConfig& cfg) {
  CriterionResult r{10, "Geometric oracle equivalence"};
  auto rng = detail::criterion_rng(cfg, 10);
  const auto algebras = standard_test_algebras();
  detail::Tally t;
  for (int s = 0; s < 100; ++s) {
    const auto& ta = algebras[s % algebras.size()];
    const auto alg = PbwAlgebra::enveloping(ta.g);
    const auto basis = invariant_skew2(ta.g);
    const Matrix C1 = random_combination(basis, ta.g.dim, rng), C2 = random_combination(basis, ta.g.dim, rng);
    const GeometricSum gs = geometric_add(support(C1), support(C2));
    const SupportData direct = support(detail::add(C1, C2));
    const bool sum_ok = gs.result.X == direct.X && detail::same_span(gs.result.space(), direct.space());
    const Classification cl = classify_invariant(ta.g, alg, C1);
    const bool round = casimir_of_ideal(ta.g, cl.form) == C1;
    t.record(sum_ok && round, ta.name + " pair " + std::to_string(s) + (sum_ok ? " (round trip)" : " (sum)"));
  }
  r.ok = t.ok();
  r.detail = t.summary() + " pairs";
  r.data["pairs"] = t.samples;
  return r;
}

/// 11: crossed product U(Heisenberg(1)) * A and the relations of U(g)[A, a].
inline CriterionResult criterion_crossed_product(const AcceptanceConfig& cfg) {
  CriterionResult r{11, "Crossed product"};
  auto rng = detail::criterion_rng(cfg, 11);
  const HeisenbergData hd = heisenberg(1);
  const auto alg = PbwAlgebra::enveloping(hd.g);
  const auto gens = invariant_skew2(hd.g);
  const TwistedActionData d(hd.g, alg, cfg.order, gens);
  const Report action = verify_action(d, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {-1, 2}});
  detail::Tally bialg;
  for (int s = 0; s < 100; ++s) {
    const CPElem u = random_cp(d, rng), v = random_cp(d, rng), w = random_cp(d, rng);
    const Report rep = cp_bialgebra_checks(u, v, w, d);
    bialg.record(rep.ok(), "sample " + std::to_string(s) + (rep.ok() ? "" : ": " + rep.first_failure()->identity));
  }
  const Extension e = extension_algebra(hd.g, gens, {"l_e", "l_f"});
  const Report rel = extension_checks(e);
  // Displays of the Heisenberg example, with v = e (l_e), u = f (l_f).
  const int n = hd.g.dim;
  TensorElem c3(e.alg, 0, 1);
  Mono m(e.alg->ngens(), 0);
  m[n - 1] = 3;
  const int v = 0, u = 1;
  c3.add(m, hd.form[u][v] / 3);
  const bool bracket_display = commutator(e.l(v, 0), e.l(u, 0)) == c3;
  const TensorElem dl = coproduct(e.l(v, 0));
  TensorElem expect(e.alg, 0, 2);
  const int ng = e.alg->ngens();
  auto key = [&](int i, int j) {
    Key k(2 * ng, 0);
    k[i] = 1;
    k[ng + j] = 1;
    return k;
  };
  Key l1(2 * ng, 0), l2(2 * ng, 0);
  l1[n + v] = 1;
  l2[ng + n + v] = 1;
  expect.add(key(v, n - 1), 1);
  expect.add(key(n - 1, v), -1);
  expect.add(l1, 1);
  expect.add(l2, 1);
  const bool coproduct_display = dl == expect;
  Rng conf = detail::criterion_rng(cfg, 111);
  const std::vector<int> word{n + 1, n, 0, 1, n + 1, 2, n};
  const bool confluent = extension_normalize(e, word, conf) == extension_normalize(e, word, conf);
  r.ok = action.ok() && bialg.ok() && rel.ok() && bracket_display && coproduct_display && confluent;
  r.detail = "action " + std::string(action.ok() ? "ok" : action.first_failure()->identity) + "; bialgebra " +
             bialg.summary() + "; relations " + (rel.ok() ? "ok" : rel.first_failure()->identity) +
             "; [l_v,l_u] = b(u,v)/3 c^3 " + (bracket_display ? "holds" : "fails, computed " +
                                                 commutator(e.l(v, 0), e.l(u, 0)).str()) +
             "; Delta(l_v) display " + (coproduct_display ? "holds" : "fails") + "; confluence " +
             (confluent ? "ok" : "fails");
  r.data["samples"] = bialg.samples;
  r.data["bracket_l_v_l_u"] = commutator(e.l(v, 0), e.l(u, 0)).str();
  r.data["bracket_display"] = bracket_display;
  r.data["coproduct_display"] = coproduct_display;
  return r;
}

using CriterionFn = std::function<CriterionResult(const AcceptanceConfig&)>;

inline std::vector<CriterionFn> acceptance_criteria() {
  return {criterion_heisenberg_commutator, criterion_heisenberg_coboundary, criterion_normal_form,
          criterion_group_law,             criterion_associator,            criterion_separation,
          criterion_cohomology,            criterion_cybe,                  criterion_triangular,
          criterion_geometry,              criterion_crossed_product};
}

inline CriterionResult run_criterion(const CriterionFn& fn, int id, const AcceptanceConfig& cfg) {
  try {
    return fn(cfg);
  } catch (const std::exception& e) {
    CriterionResult r{id, "criterion " + std::to_string(id)};
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
    return r;
  }
}

inline Json to_json(const CriterionResult& r) {
  return Json{{"id", r.id}, {"title", r.title}, {"ok", r.ok}, {"detail", r.detail}, {"data", r.data}};
}

inline Json criteria_report(const std::vector<CriterionResult>& rs, const AcceptanceConfig& cfg) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return Json{{"seed", cfg.seed}, {"h_order", cfg.order}, {"criteria", a}};
}

/// Criteria 1-11, then 12: a second run with the same seed must serialize
/// byte-identically. `on_result` sees each result as it completes.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg,
                                                   const std::function<void(const CriterionResult&)>& on_result = {}) {
  std::vector<CriterionResult> out;
  const auto fns = acceptance_criteria();
  for (size_t i = 0; i < fns.size(); ++i) {
    out.push_back(run_criterion(fns[i], static_cast<int>(i) + 1, cfg));
    if (on_result) on_result(out.back());
  }
  std::vector<CriterionResult> again;
  for (size_t i = 0; i < fns.size(); ++i) again.push_back(run_criterion(fns[i], static_cast<int>(i) + 1, cfg));
  const std::string first = criteria_report(out, cfg).dump(), second = criteria_report(again, cfg).dump();
  CriterionResult det{12, "Determinism"};
  det.ok = first == second;
  det.detail = det.ok ? "two runs with seed " + std::to_string(cfg.seed) + " serialize identically (" +
                            std::to_string(first.size()) + " bytes)"
                      : "reports differ between runs";
  det.data["bytes"] = first.size();
  out.push_back(det);
  if (on_result) on_result(out.back());
  return out;
}

}  // namespace twistalg
