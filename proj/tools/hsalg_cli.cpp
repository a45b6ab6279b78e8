#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hsalg/conformal/conformal.hpp"
#include "hsalg/liealg/algebras.hpp"
#include "hsalg/report/acceptance.hpp"
#include "hsalg/superweyl/superweyl.hpp"
#include "hsalg/verma/verma.hpp"
#include "hsalg/weyl/howe.hpp"
#include "hsalg/youngdim/young.hpp"

using namespace hsalg;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "hsalg.report/1";

struct Usage : Error {
  using Error::Error;
};

Rational rational_arg(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
}

RVector vector_arg(const std::string& text) {
  RVector out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(rational_arg(part));
  return out;
}

json strings(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(q.get_str());
  return out;
}

json matrix_json(const PolyMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(row);
  }
  return out;
}

json matrix_json(const QMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(row);
  }
  return out;
}

// ------------------------------------------------------------ algebra
CheckReport algebra_check(const std::string& name, int n, int s, bool export_table) {
  LieAlgebra alg = [&]() -> LieAlgebra {
    if (name == "o_n2") return o_n2(n);
    if (name == "compact") return compact_basis(n).algebra;
    if (name == "conformal") return conformal_basis(n).change.algebra;
    if (name == "poincare") return poincare(n);
    if (name == "sp2") return sp2();
    if (name == "osp") return osp(s);
    if (name == "gl") return gl(s);
    if (name == "contraction") return specialize(contract_inonu_wigner(n), GaussRational(0));
    throw Usage("unknown algebra: " + name);
  }();
  CheckReport rep;
  rep.name = "algebra_check";
  auto viol = alg.check_jacobi();
  auto anti = alg.check_antisymmetry();
  json triples = json::array();
  for (auto [i, j, k] : viol) triples.push_back({alg.label(i), alg.label(j), alg.label(k)});
  rep.require("jacobi", viol.empty(), triples);
  rep.require("antisymmetry", anti.empty());
  rep.payload["algebra"] = alg.name();
  rep.payload["dim"] = alg.dim();
  rep.payload["jacobi_violations"] = viol.size();
  if (export_table) rep.payload["presentation"] = alg.to_json();
  return rep;
}

// ------------------------------------------------------------ conformal
CheckReport conformal_orbit(int n, const std::string& map, const std::string& param, const std::string& point, int count,
                            std::uint64_t seed) {
  auto need = [&]() {
    RVector v = vector_arg(param);
    if (static_cast<int>(v.size()) != n) throw Usage("--param needs " + std::to_string(n) + " components");
    return v;
  };
  AmbientMap m = [&]() -> AmbientMap {
    if (map == "translation") return translation(need());
    if (map == "special") return special_conformal(need());
    if (map == "inversion") return inversion(n);
    if (map == "dilatation") {
      Rational l = rational_arg(param.empty() ? "1" : param);
      if (sgn(l) == 0) throw Usage("dilatation factor must be nonzero");
      return dilatation(n, l);
    }
    if (map == "boost") {
      RMatrix L = RMatrix::identity(n);
      L(0, 0) = L(1, 1) = frac(5, 4);
      L(0, 1) = L(1, 0) = frac(3, 4);
      return lorentz(L);
    }
    throw Usage("unknown map: " + map);
  }();
  std::vector<BoundaryPoint> pts;
  if (!point.empty()) {
    RVector x = vector_arg(point);
    if (static_cast<int>(x.size()) != n) throw Usage("--point needs " + std::to_string(n) + " components");
    pts.push_back(BoundaryPoint::finite(x));
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (int k = 0; k < count; ++k) {
      RVector x;
      for (int c = 0; c < n; ++c) x.push_back(frac(num(rng), den(rng)));
      pts.push_back(BoundaryPoint::finite(x));
    }
  }
  CheckReport rep;
  rep.name = "conformal_orbit";
  rep.require("preserves_metric", preserves_metric(m.matrix(), n));
  json rows = json::array();
  bool on_cone = true;
  for (const auto& p : pts) {
    RVector Y = m.apply(lift(p));
    on_cone = on_cone && sgn(ambient_dot(Y, Y)) == 0;
    rows.push_back({{"point", p.to_json()}, {"image", act(m, p).to_json()}});
  }
  rep.require("image_on_cone", on_cone);
  rep.payload["n"] = n;
  rep.payload["map"] = map;
  rep.payload["rows"] = rows;
  return rep;
}

// ------------------------------------------------------------ verma
CheckReport verma_gram(int n, int level, const std::string& e0) {
  CheckReport rep;
  rep.name = "verma_gram";
  rep.payload["n"] = n;
  rep.payload["level"] = level;
  rep.payload["basis"] = level_basis(n, level);
  if (e0.empty()) {
    PolyMatrix g = gram_matrix(n, level);
    UPoly det = gram_determinant(n, level);
    rep.payload["gram"] = matrix_json(g);
    rep.payload["determinant"] = det.to_string();
    rep.payload["rational_roots"] = strings(rational_roots(det));
    rep.require("hermitian", g == g.transpose());
  } else {
    GaussRational e(rational_arg(e0));
    QMatrix g = gram_matrix_at(n, level, e);
    auto pd = positive_definite(g);
    rep.payload["e0"] = e.to_string();
    rep.payload["gram"] = matrix_json(g);
    rep.payload["positive_definite"] = pd.positive_definite;
    rep.payload["rank"] = rank(g);
  }
  return rep;
}

CheckReport verma_null(int n, int level, const std::string& e0) {
  CheckReport rep;
  rep.name = "verma_null";
  GaussRational e(rational_arg(e0));
  auto nulls = null_vectors(n, level, e);
  json vecs = json::array();
  for (const auto& v : nulls) vecs.push_back(to_json(v));
  rep.payload["n"] = n;
  rep.payload["level"] = level;
  rep.payload["e0"] = e.to_string();
  rep.payload["null_count"] = nulls.size();
  rep.payload["null_vectors"] = vecs;
  if (level == 2 && nulls.size() == 1) {
    ModuleVector tr = trace_vector(n);
    GaussRational scale = nulls[0].at(tr.begin()->first) / tr.begin()->second;
    ModuleVector scaled;
    for (auto& [m, c] : tr) scaled[m] = c * scale;
    rep.payload["is_trace_vector"] = nulls[0] == scaled;
  }
  return rep;
}

CheckReport verma_branch(int n, int tmax) {
  CheckReport rep;
  rep.name = "verma_branch";
  json rows = json::array();
  for (int t = 0; t <= tmax; ++t) {
    Integer q = quotient_dim(n, t), od = o_dim(YoungDiagram({t}), n);
    auto e = level_energy(n, t);
    Rational want = singleton_energy(n) + t;
    bool ok = q == od && e && *e == GaussRational(want);
    rows.push_back({{"t", t}, {"quotient_dim", q.get_str()}, {"o_dim", od.get_str()},
                    {"energy", e ? e->to_string() : "not scalar"}, {"expected_energy", want.get_str()}, {"pass", ok}});
    if (!ok) rep.fail(rows.back());
  }
  rep.payload["n"] = n;
  rep.payload["e0"] = singleton_energy(n).get_str();
  rep.payload["rows"] = rows;
  return rep;
}

CheckReport verma_majorana(int n, const std::string& mass, int smax) {
  CheckReport rep;
  rep.name = "verma_majorana";
  Rational M = rational_arg(mass);
  if (sgn(M) <= 0) throw Usage("--mass must be positive");
  json rows = json::array();
  for (const auto& r : majorana_spectrum(n, M, smax))
    rows.push_back({{"s", r.s}, {"energy", r.energy.to_string()}, {"mass", r.mass.to_string()}});
  rep.payload["n"] = n;
  rep.payload["M"] = M.get_str();
  rep.payload["rows"] = rows;
  return rep;
}

// ------------------------------------------------------------ weyl
CheckReport weyl_hs_dim(int n, int deg, bool basis) {
  auto r = centralizer_mod_ideal(n, deg);
  CheckReport rep;
  rep.name = "weyl_hs_dim";
  rep.payload = r.to_json(basis);
  rep.payload.erase("pass");
  json rows = json::array();
  for (std::size_t k = 0; k < r.graded.size(); ++k) {
    rep.payload["deg" + std::to_string(2 * k)] = r.graded[k];
    rows.push_back({{"degree", 2 * k}, {"dimension", r.graded[k]}, {"expected", r.expected[k].get_str()}});
  }
  rep.payload["rows"] = rows;
  rep.require("matches_two_row_rectangles", r.pass);
  return rep;
}

// ------------------------------------------------------------ young
CheckReport young_dim(const std::string& group, int N, const std::string& diagram) {
  YoungDiagram d = YoungDiagram::parse(diagram);
  CheckReport rep;
  rep.name = "young_dim";
  Integer dim;
  if (group == "o") dim = o_dim(d, N);
  else if (group == "gl") dim = gl_dim(d, N);
  else throw Usage("--group must be o or gl");
  rep.payload = {{"group", group}, {"N", N}, {"diagram", d.to_string()}, {"dim", dim.get_str()}};
  return rep;
}

CheckReport young_singleton(int n, const std::string& s, int tmax) {
  SingletonLabel l = singleton_label(n, rational_arg(s));
  CheckReport rep;
  rep.name = "young_singleton";
  rep.payload = l.to_json();
  json rows = json::array();
  for (const auto& r : branching_table(n, l.s, tmax))
    rows.push_back({{"t", r.t}, {"energy", r.energy.get_str()}, {"diagram", r.diagram.to_string()},
                    {"dim", r.dim ? json(r.dim->get_str()) : json(nullptr)}, {"multiplicity", r.multiplicity}});
  rep.payload["rows"] = rows;
  return rep;
}

CheckReport young_hs(int n, int s, int max_boxes) {
  CheckReport rep;
  rep.name = "young_hs";
  json rows = json::array();
  for (const auto& h : hs_adjoint_diagrams(n, s, max_boxes))
    rows.push_back({{"diagram", h.diagram.to_string()}, {"boxes", h.diagram.boxes()}, {"dim", h.dim.get_str()},
                    {"readings_differ", h.readings_differ}});
  rep.payload = {{"n", n}, {"s", s}, {"max_boxes", max_boxes}, {"rows", rows}};
  return rep;
}

// ------------------------------------------------------------ verify-all
CheckReport verify_all(const std::string& profile, bool fault, std::uint64_t seed) {
  AcceptanceOptions opts;
  opts.profile = parse_profile(profile);
  opts.seed = seed;
  opts.faults.corrupt_structure_constant = fault;
  CheckReport rep;
  rep.name = "verify_all";
  json rows = json::array();
  for (const auto& o : run_acceptance(opts)) {
    rows.push_back({{"criterion", o.id}, {"title", criterion_title(o.id)}, {"status", o.report.pass ? "pass" : "fail"}});
    if (!o.report.pass) rep.fail({{"criterion", o.id}, {"counterexample", o.report.counterexample}});
  }
  rep.payload = {{"profile", profile}, {"seed", seed}, {"rows", rows}};
  return rep;
}

// ------------------------------------------------------------ output
std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

const json* table_of(const json& payload) {
  auto it = payload.find("rows");
  if (it == payload.end() || !it->is_array() || it->empty() || !(*it)[0].is_object()) return nullptr;
  return &*it;
}

std::vector<std::string> columns_of(const json& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (auto it = r.begin(); it != r.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  return cols;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_text(const json& doc) {
  std::cout << "status: " << doc["status"].get<std::string>() << "\n";
  const json& payload = doc["payload"];
  for (auto it = payload.begin(); it != payload.end(); ++it)
    if (it.key() != "rows") std::cout << it.key() << ": " << cell(it.value()) << "\n";
  if (const json* rows = table_of(payload)) {
    auto cols = columns_of(*rows);
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    for (const auto& r : *rows)
      for (std::size_t k = 0; k < cols.size(); ++k)
        width[k] = std::max(width[k], r.contains(cols[k]) ? cell(r[cols[k]]).size() : 0);
    auto line = [&](const std::function<std::string(std::size_t)>& f) {
      for (std::size_t k = 0; k < cols.size(); ++k) {
        std::string v = f(k);
        std::cout << v;
        if (k + 1 < cols.size()) std::cout << std::string(width[k] - v.size() + 2, ' ');
      }
      std::cout << "\n";
    };
    line([&](std::size_t k) { return cols[k]; });
    for (const auto& r : *rows) line([&](std::size_t k) { return r.contains(cols[k]) ? cell(r[cols[k]]) : ""; });
  }
  if (doc.contains("counterexample")) std::cout << "counterexample: " << doc["counterexample"].dump() << "\n";
  if (doc.contains("timing")) std::cout << "timing_seconds: " << doc["timing"]["seconds"].dump() << "\n";
}

void print_csv(const json& doc) {
  const json& payload = doc["payload"];
  if (const json* rows = table_of(payload)) {
    auto cols = columns_of(*rows);
    for (std::size_t k = 0; k < cols.size(); ++k) std::cout << (k ? "," : "") << csv_escape(cols[k]);
    std::cout << "\n";
    for (const auto& r : *rows) {
      for (std::size_t k = 0; k < cols.size(); ++k)
        std::cout << (k ? "," : "") << csv_escape(r.contains(cols[k]) ? cell(r[cols[k]]) : "");
      std::cout << "\n";
    }
    return;
  }
  std::cout << "key,value\n";
  std::cout << "status," << doc["status"].get<std::string>() << "\n";
  for (auto it = payload.begin(); it != payload.end(); ++it)
    std::cout << csv_escape(it.key()) << "," << csv_escape(cell(it.value())) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("HSALG_THREADS")) {
    int t = std::atoi(threads);
    if (t > 0) omp_set_num_threads(t);
  }

  CLI::App app{"Exact checks for the o(n,2) higher-spin algebra toolkit"};
  app.require_subcommand(1);
  std::string format = "json";
  std::uint64_t seed = 1;
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_flag("--timing", timing, "Include wall-clock timing in the report");
  app.fallthrough();

  std::function<CheckReport()> action;
  int n = 3, s = 0, level = 2, tmax = 4, smax = 3, deg = 2, max_boxes = 4, N = 3, count = 5;
  std::string e0, name = "o_n2", map, param, point, which = "howe", group = "o", diagram, mass = "1", s_text = "0",
                  profile = "quick";
  bool export_table = false, basis = false, fault = false;

  auto* algebra = app.add_subcommand("algebra", "Lie (super)algebra presentations")->require_subcommand(1);
  auto* acheck = algebra->add_subcommand("check", "Jacobi and antisymmetry of a presentation");
  acheck->add_option("--name", name)->check(
      CLI::IsMember({"o_n2", "compact", "conformal", "poincare", "sp2", "osp", "gl", "contraction"}));
  acheck->add_option("--n", n)->check(CLI::Range(1, 12));
  acheck->add_option("--s", s)->check(CLI::Range(0, 6));
  acheck->add_flag("--export", export_table, "Include the bracket table");
  acheck->callback([&] { action = [&] { return algebra_check(name, n, s, export_table); }; });

  auto* conf = app.add_subcommand("conformal", "Ambient conformal maps")->require_subcommand(1);
  auto* orbit = conf->add_subcommand("orbit", "Images of boundary points under a map");
  orbit->add_option("--n", n)->check(CLI::Range(2, 12));
  orbit->add_option("--map", map)->required()->check(
      CLI::IsMember({"translation", "dilatation", "boost", "inversion", "special"}));
  orbit->add_option("--param", param, "Comma-separated rationals (vector) or a rational (dilatation)");
  orbit->add_option("--point", point, "Comma-separated rationals");
  orbit->add_option("--count", count, "Number of random points")->check(CLI::Range(1, 1000));
  orbit->callback([&] { action = [&] { return conformal_orbit(n, map, param, point, count, seed); }; });

  auto* verma = app.add_subcommand("verma", "Scalar lowest-weight modules")->require_subcommand(1);
  auto* vg = verma->add_subcommand("gram", "Gram matrix at a level");
  vg->add_option("--n", n)->check(CLI::Range(1, 12));
  vg->add_option("--level", level)->check(CLI::Range(0, 8));
  vg->add_option("--e0", e0, "Exact rational; omit for the symbolic matrix");
  vg->callback([&] { action = [&] { return verma_gram(n, level, e0); }; });
  auto* vn = verma->add_subcommand("null", "Null vectors at a level");
  vn->add_option("--n", n)->check(CLI::Range(1, 12));
  vn->add_option("--level", level)->check(CLI::Range(0, 8));
  vn->add_option("--e0", e0)->required();
  vn->callback([&] { action = [&] { return verma_null(n, level, e0); }; });
  auto* vb = verma->add_subcommand("branch", "Level dimensions and energies of the scalar singleton");
  vb->add_option("--n", n)->check(CLI::Range(3, 12));
  vb->add_option("--tmax", tmax)->check(CLI::Range(0, 10));
  vb->callback([&] { action = [&] { return verma_branch(n, tmax); }; });
  auto* vm = verma->add_subcommand("majorana", "Majorana-type mass spectrum");
  vm->add_option("--n", n)->check(CLI::Range(3, 12));
  vm->add_option("--mass", mass);
  vm->add_option("--smax", smax)->check(CLI::Range(0, 8));
  vm->callback([&] { action = [&] { return verma_majorana(n, mass, smax); }; });

  auto* weyl = app.add_subcommand("weyl", "Ambient phase space")->require_subcommand(1);
  auto* wh = weyl->add_subcommand("howe", "Howe pair o(n,2) x sp(2)");
  wh->add_option("--n", n)->check(CLI::Range(1, 10));
  wh->callback([&] { action = [&] { return howe_check(n); }; });
  auto* wd = weyl->add_subcommand("hs-dim", "Graded centralizer dimensions modulo the ideal");
  wd->add_option("--n", n)->check(CLI::Range(1, 10));
  wd->add_option("--deg", deg)->check(CLI::Range(0, 8));
  wd->add_flag("--basis", basis, "Include representatives");
  wd->callback([&] { action = [&] { return weyl_hs_dim(n, deg, basis); }; });

  auto* super = app.add_subcommand("super", "Phase superspace")->require_subcommand(1);
  auto* sc = super->add_subcommand("check", "osp closure, super Howe pair or multiform operators");
  sc->add_option("--n", n)->check(CLI::Range(1, 10));
  sc->add_option("--s", s)->check(CLI::Range(0, 4));
  sc->add_option("--which", which)->check(CLI::IsMember({"osp", "howe", "multiform"}));
  sc->callback([&] {
    action = [&] {
      if (which == "osp") return osp_check(n, s);
      if (which == "howe") return super_howe_check(n, s);
      if (s < 1) throw Usage("multiform operators need --s >= 1");
      return multiform_ops_check(n, s);
    };
  });

  auto* young = app.add_subcommand("young", "Young diagram bookkeeping")->require_subcommand(1);
  auto* yd = young->add_subcommand("dim", "Irreducible dimension");
  yd->add_option("--group", group)->check(CLI::IsMember({"o", "gl"}));
  yd->add_option("--N", N)->check(CLI::Range(1, 64));
  yd->add_option("--diagram", diagram)->required();
  yd->callback([&] { action = [&] { return young_dim(group, N, diagram); }; });
  auto* ys = young->add_subcommand("singleton", "Singleton label and its branching table");
  ys->add_option("--n", n)->check(CLI::Range(2, 64));
  ys->add_option("--s", s_text);
  ys->add_option("--tmax", tmax)->check(CLI::Range(0, 20));
  ys->callback([&] { action = [&] { return young_singleton(n, s_text, tmax); }; });
  auto* yh = young->add_subcommand("hs", "Adjoint diagrams of the higher-spin algebra");
  yh->add_option("--n", n)->check(CLI::Range(2, 64));
  yh->add_option("--s", s)->check(CLI::Range(0, 20));
  yh->add_option("--max-boxes", max_boxes)->check(CLI::Range(0, 40));
  yh->callback([&] { action = [&] { return young_hs(n, s, max_boxes); }; });

  auto* va = app.add_subcommand("verify-all", "Run the acceptance suite");
  va->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));
  va->add_flag("--inject-fault", fault, "Corrupt a structure constant first");
  va->callback([&] { action = [&] { return verify_all(profile, fault, seed); }; });

  std::string command;
  for (int k = 1; k < argc; ++k) command += (k > 1 ? " " : "") + std::string(argv[k]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  json doc = {{"schema", kSchema}, {"command", command}};
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  try {
    rep = action();
  } catch (const std::exception& e) {
    // invalid inputs rejected by the library are usage errors
    doc["status"] = "error";
    doc["error"] = e.what();
    std::cerr << "error: " << e.what() << "\n";
    std::cout << doc.dump(2) << "\n";
    return 2;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  doc["status"] = rep.pass ? "pass" : "fail";
  doc["name"] = rep.name;
  doc["payload"] = rep.payload;
  if (!rep.pass) doc["counterexample"] = rep.counterexample;
  if (timing) doc["timing"] = {{"seconds", secs}};

  if (format == "json") std::cout << doc.dump(2) << "\n";
  else if (format == "text") print_text(doc);
  else print_csv(doc);
  return rep.pass ? 0 : 1;
}
