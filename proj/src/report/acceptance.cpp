#include "hsalg/report/acceptance.hpp"

#include <chrono>
#include <random>
#include <set>

#include "hsalg/conformal/conformal.hpp"
#include "hsalg/liealg/algebras.hpp"
#include "hsalg/superweyl/superweyl.hpp"
#include "hsalg/verma/verma.hpp"
#include "hsalg/weyl/howe.hpp"
#include "hsalg/youngdim/young.hpp"

namespace hsalg {

namespace {

std::size_t u(int k) { return static_cast<std::size_t>(k); }

const GaussRational I = GaussRational::i();

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

bool quick(const AcceptanceOptions& o) { return o.profile == Profile::Quick; }

Integer binom(int a, int b) {
  if (b < 0 || a < b) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}
  Rational next(int range, int max_den) {
    std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
    return frac(num(rng_), den(rng_));
  }
  Rational positive(int range, int max_den) {
    std::uniform_int_distribution<int> num(1, range), den(1, max_den);
    return frac(num(rng_), den(rng_));
  }
  RVector vec(int n) {
    RVector v;
    for (int k = 0; k < n; ++k) v.push_back(next(4, 3));
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

std::string str(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- 1
CheckReport jacobi_suite(const AcceptanceOptions& o) {
  CheckReport rep;
  std::vector<LieAlgebra> algebras;
  for (int n : quick(o) ? range(3, 4) : range(3, 8)) {
    LieAlgebra base = o_n2(n);
    if (n == 3 && o.faults.corrupt_structure_constant) {
      int a = base.index_of("J[0,0']"), b = base.index_of("J[0,1]");
      base.set_bracket_entry(a, b, base.structure(a, b) + base.basis("J[1,2]"));
    }
    algebras.push_back(base);
    algebras.push_back(compact_basis(n).algebra);
    algebras.push_back(conformal_basis(n).change.algebra);
    algebras.push_back(poincare(n));
  }
  algebras.push_back(sp2());
  algebras.push_back(osp(1));
  algebras.push_back(osp(2));
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& alg : algebras) {
    auto viol = alg.check_jacobi();
    auto anti = alg.check_antisymmetry();
    rows.push_back({{"algebra", alg.name()}, {"dim", alg.dim()}, {"violations", viol.size()}, {"antisymmetry", anti.size()}});
    if (!viol.empty()) {
      auto [i, j, k] = viol.front();
      rep.fail({{"algebra", alg.name()}, {"triple", {alg.label(i), alg.label(j), alg.label(k)}},
                {"jacobiator", alg.element_string(alg.jacobiator(i, j, k))}});
    }
    if (!anti.empty())
      rep.fail({{"algebra", alg.name()}, {"antisymmetry", {alg.label(anti.front().first), alg.label(anti.front().second)}}});
  }
  rep.payload["algebras"] = rows;
  return rep;
}

// ---------------------------------------------------------------- 2
CheckReport compact_fidelity(const AcceptanceOptions& o) {
  CheckReport rep;
  int checked = 0;
  for (int n : quick(o) ? range(3, 4) : range(3, 6)) {
    const LieAlgebra c = compact_basis(n).algebra;
    auto pm = [&](int i, char s) { return c.basis(std::string("J") + s + "[" + std::to_string(i) + "]"); };
    auto rot = [&](int i, int j) {
      if (i == j) return c.zero();
      if (i < j) return c.basis("J[" + std::to_string(i) + "," + std::to_string(j) + "]");
      return c.basis("J[" + std::to_string(j) + "," + std::to_string(i) + "]") * GaussRational(-1);
    };
    auto E = c.basis("E");
    auto expect = [&](const std::string& rel, const AlgebraElement& got, const AlgebraElement& want) {
      ++checked;
      if (!(got == want)) rep.fail({{"n", n}, {"relation", rel}, {"got", c.element_string(got)}, {"want", c.element_string(want)}});
    };
    for (int i = 1; i <= n; ++i) {
      std::string si = std::to_string(i);
      expect("[E,J+[" + si + "]]", c.bracket(E, pm(i, '+')), pm(i, '+'));
      expect("[E,J-[" + si + "]]", c.bracket(E, pm(i, '-')), pm(i, '-') * GaussRational(-1));
      for (int j = 1; j <= n; ++j) {
        std::string sj = std::to_string(j);
        AlgebraElement want = (rot(i, j) * I + E * GaussRational(i == j ? 1 : 0)) * GaussRational(2);
        expect("[J-[" + si + "],J+[" + sj + "]]", c.bracket(pm(i, '-'), pm(j, '+')), want);
        expect("[J+[" + si + "],J+[" + sj + "]]", c.bracket(pm(i, '+'), pm(j, '+')), c.zero());
        expect("[J-[" + si + "],J-[" + sj + "]]", c.bracket(pm(i, '-'), pm(j, '-')), c.zero());
      }
    }
  }
  rep.payload["relations_checked"] = checked;
  return rep;
}

// ---------------------------------------------------------------- 3
CheckReport unitarity_threshold(const AcceptanceOptions& o) {
  CheckReport rep;
  RationalSource src(o.seed);
  int level = quick(o) ? 3 : 4;
  nlohmann::json rows = nlohmann::json::array();
  for (int n : quick(o) ? range(3, 4) : range(3, 8)) {
    Rational e0 = singleton_energy(n);
    auto roots = rational_roots(gram_determinant(n, 2));
    bool has_root = std::find(roots.begin(), roots.end(), e0) != roots.end();
    auto nulls = null_vectors(n, 2, GaussRational(e0));
    bool trace = false;
    if (nulls.size() == 1) {
      ModuleVector tr = trace_vector(n);
      GaussRational scale = nulls[0].at(tr.begin()->first) / tr.begin()->second;
      ModuleVector scaled;
      for (auto& [m, c] : tr) scaled[m] = c * scale;
      trace = nulls[0] == scaled;
    }
    nlohmann::json probes = nlohmann::json::array();
    bool positive = true;
    for (int k = 0; k < 5; ++k) {
      Rational e = e0 + src.positive(20, 7);
      bool ok = true;
      for (const auto& r : unitarity_scan(n, level, GaussRational(e))) ok = ok && r.positive_definite;
      positive = positive && ok;
      probes.push_back({{"e0", str(e)}, {"positive", ok}});
      if (!ok) rep.fail({{"n", n}, {"e0", str(e)}, {"reason", "Gram form not positive definite"}});
    }
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : roots) rs.push_back(str(r));
    rows.push_back({{"n", n}, {"roots", rs}, {"threshold_is_root", has_root}, {"kernel_dim", nulls.size()},
                    {"kernel_is_trace", trace}, {"probes", probes}});
    if (!has_root) rep.fail({{"n", n}, {"reason", "n/2-1 is not a root"}, {"roots", rs}});
    if (!trace) rep.fail({{"n", n}, {"reason", "level-2 kernel is not the trace line"}, {"kernel_dim", nulls.size()}});
  }
  rep.payload["positivity_level"] = level;
  rep.payload["rows"] = rows;
  return rep;
}

// ---------------------------------------------------------------- 4
CheckReport scalar_branching(const AcceptanceOptions& o) {
  CheckReport rep;
  int tmax = quick(o) ? 3 : 6;
  nlohmann::json rows = nlohmann::json::array();
  for (int n : quick(o) ? range(3, 4) : range(3, 8)) {
    nlohmann::json dims = nlohmann::json::array(), energies = nlohmann::json::array();
    for (int t = 0; t <= tmax; ++t) {
      Integer q = quotient_dim(n, t);
      Integer weyl = o_dim(YoungDiagram({t}), n);
      Integer closed = binom(n + t - 1, t) - binom(n + t - 3, t - 2);
      auto e = level_energy(n, t);
      GaussRational want(singleton_energy(n) + t);
      dims.push_back(q.get_str());
      energies.push_back(e ? e->to_string() : "none");
      if (q != weyl || q != closed)
        rep.fail({{"n", n}, {"t", t}, {"quotient", q.get_str()}, {"o_dim", weyl.get_str()}, {"closed", closed.get_str()}});
      if (!e || !(*e == want)) rep.fail({{"n", n}, {"t", t}, {"energy", e ? e->to_string() : "not scalar"}});
    }
    rows.push_back({{"n", n}, {"dims", dims}, {"energies", energies}});
  }
  // represent(): E and the o(n) Casimir on each level
  for (int n : quick(o) ? range(3, 4) : range(3, 5))
    for (const auto& row : branching_check(n, quick(o) ? 3 : 4))
      if (!row.pass) rep.fail({{"n", n}, {"t", row.t}, {"reason", "represent() level check"}});
  rep.payload["tmax"] = tmax;
  rep.payload["rows"] = rows;
  return rep;
}

// ---------------------------------------------------------------- 5
CheckReport truncated_representation(const AcceptanceOptions& o) {
  CheckReport rep;
  int lmax = quick(o) ? 3 : 4;
  nlohmann::json rows = nlohmann::json::array();
  for (int n : {3, 4}) {
    GaussRational e0(singleton_energy(n));
    TruncatedModule big(n, lmax, e0), small(n, lmax - 1, e0);
    auto failures = big.check_relations();
    auto cb = big.casimir().scalar_on(lmax - 1);
    auto cs = small.casimir().scalar_on(lmax - 2);
    GaussRational want = e0 * (e0 - GaussRational(n));
    bool agree = cb && cs && *cb == *cs && *cb == want;
    rows.push_back({{"n", n}, {"relation_failures", failures.size()}, {"casimir", cb ? cb->to_string() : "not scalar"},
                    {"casimir_smaller_truncation", cs ? cs->to_string() : "not scalar"}});
    if (!failures.empty()) rep.fail({{"n", n}, {"relation", {failures.front().x, failures.front().y}}});
    if (!agree) rep.fail({{"n", n}, {"reason", "Casimir disagrees between truncations"}});
  }
  rep.payload["lmax"] = lmax;
  rep.payload["rows"] = rows;
  return rep;
}

// ---------------------------------------------------------------- 6
CheckReport howe_pair(const AcceptanceOptions& o) {
  CheckReport rep;
  nlohmann::json rows = nlohmann::json::array();
  for (int n : quick(o) ? range(3, 4) : range(3, 6)) {
    auto r = howe_check(n);
    rows.push_back(r.to_json());
    int N = n + 2;
    if (!r.pass) rep.fail(r.counterexample);
    if (r.payload["commutant_of_U_dim"] != N * (N - 1) / 2 || r.payload["commutant_of_L_dim"] != 3)
      rep.fail({{"n", n}, {"reason", "commutant dimensions"}});
  }
  rep.payload["rows"] = rows;
  return rep;
}

// ---------------------------------------------------------------- 7
CheckReport hs_dimensions(const AcceptanceOptions& o) {
  CheckReport rep;
  nlohmann::json rows = nlohmann::json::array();
  int top = quick(o) ? 2 : 4;
  auto r3 = centralizer_mod_ideal(3, top);
  rows.push_back(r3.to_json(false));
  std::vector<int> want3{1, 10, 35};
  for (std::size_t k = 0; k < r3.graded.size(); ++k)
    if (r3.graded[k] != want3[k] || Integer(r3.graded[k]) != o_dim(YoungDiagram({static_cast<int>(k), static_cast<int>(k)}), 5))
      rep.fail({{"n", 3}, {"degree", 2 * k}, {"graded", r3.graded[k]}});
  auto s3 = l_polynomial_span_check(3, top);
  if (!s3.pass) rep.fail(s3.counterexample);
  for (int n : quick(o) ? range(4, 4) : range(4, 6)) {
    auto r = centralizer_mod_ideal(n, 2);
    rows.push_back(r.to_json(false));
    if (r.graded.at(1) != (n + 2) * (n + 1) / 2 || !r.pass) rep.fail({{"n", n}, {"degree", 2}, {"graded", r.graded}});
    auto s = l_polynomial_span_check(n, 2);
    if (!s.pass) rep.fail(s.counterexample);
  }
  rep.payload["rows"] = rows;
  return rep;
}

// ---------------------------------------------------------------- 8
CheckReport super_howe(const AcceptanceOptions& o) {
  CheckReport rep;
  nlohmann::json rows = nlohmann::json::array();
  for (auto [s, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 4}}) {
    auto a = osp_check(n, s);
    auto b = super_howe_check(n, s);
    rows.push_back({{"s", s}, {"n", n}, {"osp", a.pass}, {"howe", b.pass}});
    if (!a.pass) rep.fail(a.counterexample);
    if (!b.pass) rep.fail(b.counterexample);
  }
  for (int n : quick(o) ? range(3, 4) : range(3, 6)) {
    bool same = super_howe_check(n, 0).to_json().dump() == howe_check(n).to_json().dump();
    if (!same) rep.fail({{"n", n}, {"reason", "s=0 output differs from the bosonic Howe check"}});
  }
  rep.payload["rows"] = rows;
  return rep;
}

// ---------------------------------------------------------------- 9
CheckReport multiform(const AcceptanceOptions& o) {
  CheckReport rep;
  nlohmann::json rows = nlohmann::json::array();
  for (int n : quick(o) ? range(4, 4) : range(3, 4)) {
    auto r = multiform_ops_check(n, 2);
    rows.push_back(r.to_json());
    if (!r.pass) rep.fail(r.counterexample);
  }
  rep.payload["rows"] = rows;
  return rep;
}

// ---------------------------------------------------------------- 10
CheckReport conformal_dictionary(const AcceptanceOptions& o) {
  CheckReport rep;
  RationalSource src(o.seed + 10);
  int points = 0;
  for (int n : quick(o) ? range(3, 4) : range(3, 5)) {
    RMatrix boost = RMatrix::identity(n);
    boost(0, 0) = boost(1, 1) = frac(5, 4);
    boost(0, 1) = boost(1, 0) = frac(3, 4);
    for (int trial = 0; trial < 20; ++trial) {
      ++points;
      RVector a = src.vec(n), x = src.vec(n);
      Rational lambda = src.positive(5, 3);
      BoundaryPoint p = BoundaryPoint::finite(x);
      auto bad = [&](const std::string& family) {
        nlohmann::json xs = nlohmann::json::array();
        for (auto& q : x) xs.push_back(str(q));
        rep.fail({{"n", n}, {"family", family}, {"x", xs}});
      };
      AmbientMap T = translation(a), D = dilatation(n, lambda), L = lorentz(boost), Inv = inversion(n),
                 K = special_conformal(a);
      for (const auto* m : {&T, &D, &L, &Inv, &K})
        if (!preserves_metric(m->matrix(), n)) bad("metric");

      RVector want;
      for (int k = 0; k < n; ++k) want.push_back(x[u(k)] + a[u(k)]);
      if (!(act(T, p) == BoundaryPoint::finite(want))) bad("translation");
      want.clear();
      for (auto& q : x) want.push_back(lambda * q);
      if (!(act(D, p) == BoundaryPoint::finite(want))) bad("dilatation");
      want.assign(u(n), Rational(0));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) want[u(r)] += boost(r, c) * x[u(c)];
      if (!(act(L, p) == BoundaryPoint::finite(want))) bad("lorentz");
      Rational x2 = boundary_dot(x, x);
      if (sgn(x2) == 0) {
        if (!act(Inv, p).at_infinity) bad("inversion");
      } else {
        want.clear();
        for (auto& q : x) want.push_back(q / x2);
        if (!(act(Inv, p) == BoundaryPoint::finite(want))) bad("inversion");
      }
      Rational den = 1 + 2 * boundary_dot(a, x) + boundary_dot(a, a) * x2;
      if (sgn(den) == 0) {
        if (!act(K, p).at_infinity) bad("special_conformal");
      } else {
        want.clear();
        for (int k = 0; k < n; ++k) want.push_back((x[u(k)] + x2 * a[u(k)]) / den);
        if (!(act(K, p) == BoundaryPoint::finite(want))) bad("special_conformal");
      }
      AmbientMap conj = Inv * T * Inv;
      if (!conj.projectively_equal(K)) bad("inversion_conjugacy");
    }
  }
  rep.payload["points"] = points;
  return rep;
}

// ---------------------------------------------------------------- 11
CheckReport contraction(const AcceptanceOptions& o) {
  CheckReport rep;
  nlohmann::json rows = nlohmann::json::array();
  for (int n : quick(o) ? range(3, 4) : range(3, 5)) {
    ParametricLieAlgebra c = contract_inonu_wigner(n);
    LieAlgebra flat = specialize(c, GaussRational(0));
    LieAlgebra curved = specialize(c, GaussRational(1));
    std::set<int> G, J;
    for (int k = 0; k < flat.dim(); ++k) (flat.label(k)[0] == 'G' ? G : J).insert(k);
    bool jacobi = c.check_jacobi().empty() && flat.check_jacobi().empty() && curved.check_jacobi().empty();
    bool commuting = true, ideal = true, lorentz_closed = true;
    for (int a = 0; a < flat.dim(); ++a)
      for (int b = 0; b < flat.dim(); ++b) {
        const auto& v = flat.structure(a, b);
        if (G.count(a) && G.count(b) && !v.is_zero()) commuting = false;
        if (G.count(a) || G.count(b))
          for (const auto& [k, x] : v.terms) ideal = ideal && G.count(k);
        if (J.count(a) && J.count(b))
          for (const auto& [k, x] : v.terms) lorentz_closed = lorentz_closed && J.count(k);
      }
    // curvature survives at t = 1: transvections close on rotations
    bool curved_ok = !curved.structure(*G.begin(), *std::next(G.begin())).is_zero();
    bool dims = static_cast<int>(G.size()) == n + 1 && static_cast<int>(J.size()) == n * (n + 1) / 2;
    rows.push_back({{"n", n}, {"jacobi", jacobi}, {"transvections_commute", commuting}, {"translations_ideal", ideal},
                    {"lorentz_closed", lorentz_closed}, {"dims", dims}});
    if (!(jacobi && commuting && ideal && lorentz_closed && curved_ok && dims)) rep.fail(rows.back());
  }
  rep.payload["rows"] = rows;
  return rep;
}

// ---------------------------------------------------------------- 12
CheckReport majorana(const AcceptanceOptions& o) {
  CheckReport rep;
  nlohmann::json rows = nlohmann::json::array();
  int smax = quick(o) ? 2 : 4;
  for (int n : quick(o) ? range(3, 3) : range(3, 4))
    for (const Rational& M : {Rational(1), frac(3, 2)}) {
      auto spectrum = majorana_spectrum(n, M, smax);
      nlohmann::json masses = nlohmann::json::array();
      for (std::size_t k = 0; k < spectrum.size(); ++k) {
        const auto& row = spectrum[k];
        Rational e = singleton_energy(n) + row.s;
        masses.push_back(row.mass.to_string());
        if (!(row.energy == GaussRational(e)) || !(row.mass == GaussRational(M / e)))
          rep.fail({{"n", n}, {"M", str(M)}, {"s", row.s}, {"mass", row.mass.to_string()}});
        if (k > 0 && !(row.mass.re() < spectrum[k - 1].mass.re())) rep.fail({{"n", n}, {"reason", "not decreasing"}});
      }
      rows.push_back({{"n", n}, {"M", str(M)}, {"masses", masses}});
    }
  rep.payload["rows"] = rows;
  return rep;
}

// ---------------------------------------------------------------- 13
CheckReport hs_table(const AcceptanceOptions& o) {
  CheckReport rep;
  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::pair<int, int>> cases{{3, quick(o) ? 2 : 4}};
  for (int n : quick(o) ? range(4, 4) : range(4, 6)) cases.emplace_back(n, 2);
  for (auto [n, boxes] : cases) {
    auto table = hs_adjoint_diagrams(n, 0, boxes);
    auto cent = centralizer_mod_ideal(n, boxes);
    std::vector<YoungDiagram> want;
    for (int k = 0; 2 * k <= boxes; ++k) want.push_back(YoungDiagram(k ? std::vector<int>{k, k} : std::vector<int>{}));
    std::vector<YoungDiagram> got;
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& d : table) {
      got.push_back(d.diagram);
      dims.push_back(d.dim.get_str());
    }
    bool shapes = got == want;
    bool match = shapes && cent.graded.size() == table.size();
    for (std::size_t k = 0; match && k < table.size(); ++k) match = Integer(cent.graded[k]) == table[k].dim;
    rows.push_back({{"n", n}, {"max_boxes", boxes}, {"dims", dims}, {"centralizer_graded", cent.graded}});
    if (!shapes) rep.fail({{"n", n}, {"reason", "diagrams are not exactly the two-row rectangles"}});
    else if (!match) rep.fail({{"n", n}, {"reason", "dimensions differ from the centralizer"}});
  }
  rep.payload["rows"] = rows;
  return rep;
}

}  // namespace

Profile parse_profile(const std::string& name) {
  if (name == "quick") return Profile::Quick;
  if (name == "full") return Profile::Full;
  throw Error("unknown profile: " + name);
}

std::string profile_name(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

std::string criterion_title(int id) {
  static const char* titles[] = {"Jacobi suite",
                                 "Compact-basis fidelity",
                                 "Unitarity threshold",
                                 "Multiplicity-free branching",
                                 "Truncated representation",
                                 "Howe pair",
                                 "Higher-spin algebra dimensions",
                                 "Super Howe",
                                 "Multiform algebras",
                                 "Conformal dictionary",
                                 "Contraction",
                                 "Majorana",
                                 "Adjoint diagram table"};
  if (id < 1 || id > kCriterionCount) throw Error("criterion id out of range");
  return titles[id - 1];
}

double criterion_budget(int id) {
  if (id == 1) return 30;
  if (id == 7) return 600;
  return 0;
}

CheckReport run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) throw Error("criterion id out of range: " + std::to_string(id));
  CheckReport rep;
  try {
    switch (id) {
      case 1: rep = jacobi_suite(options); break;
      case 2: rep = compact_fidelity(options); break;
      case 3: rep = unitarity_threshold(options); break;
      case 4: rep = scalar_branching(options); break;
      case 5: rep = truncated_representation(options); break;
      case 6: rep = howe_pair(options); break;
      case 7: rep = hs_dimensions(options); break;
      case 8: rep = super_howe(options); break;
      case 9: rep = multiform(options); break;
      case 10: rep = conformal_dictionary(options); break;
      case 11: rep = contraction(options); break;
      case 12: rep = majorana(options); break;
      default: rep = hs_table(options); break;
    }
  } catch (const std::exception& e) {
    rep.fail({{"exception", e.what()}});
  }
  rep.name = "criterion_" + std::to_string(id);
  rep.payload["title"] = criterion_title(id);
  return rep;
}

std::vector<CriterionOutcome> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionOutcome> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = run_criterion(id, options);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back({id, std::move(rep), secs});
  }
  return out;
}

}  // namespace hsalg
