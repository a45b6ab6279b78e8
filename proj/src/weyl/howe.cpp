#include "hsalg/weyl/howe.hpp"

#include <algorithm>

#include "hsalg/liealg/algebras.hpp"
#include "hsalg/youngdim/young.hpp"

namespace hsalg {

namespace {

std::size_t u(int k) { return static_cast<std::size_t>(k); }

void enumerate(const VariableTable& vars, const std::vector<int>& variables, std::size_t pos, int left, Monomial& cur,
               std::vector<Monomial>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  if (pos == variables.size()) return;
  int v = variables[pos];
  int slot = vars.slot(v);
  int most = vars.parity(v) == Parity::Odd ? 1 : left;
  for (int e = most; e >= 0; --e) {
    if (vars.parity(v) == Parity::Odd) {
      if (e) cur.odd |= std::uint64_t{1} << slot;
      else cur.odd &= ~(std::uint64_t{1} << slot);
    } else {
      cur.even[u(slot)] = static_cast<std::uint8_t>(e);
    }
    enumerate(vars, variables, pos + 1, left - e, cur, out);
  }
  if (vars.parity(v) == Parity::Odd) cur.odd &= ~(std::uint64_t{1} << slot);
  else cur.even[u(slot)] = 0;
}

SuperPolynomial monomial_poly(const VarTablePtr& vars, const Monomial& m) {
  SuperPolynomial p(vars);
  p.add_term(m, GaussRational(1));
  return p;
}

// Assigns columns to monomials on first sight.
class MonomialIndex {
 public:
  int column(const Monomial& m) {
    auto [it, inserted] = index_.try_emplace(m, static_cast<int>(index_.size()));
    return it->second;
  }
  SparseVec vector(const SuperPolynomial& f, int offset = 0) {
    SparseVec v;
    for (const auto& [m, c] : f.terms()) v[offset + column(m)] = c;
    return v;
  }
  int size() const { return static_cast<int>(index_.size()); }

 private:
  std::map<Monomial, int> index_;
};

std::vector<int> even_variables(const PhaseSpace& ps) {
  std::vector<int> out;
  for (int A = 0; A < ps.ambient_dim(); ++A) {
    out.push_back(ps.x_var(A));
    out.push_back(ps.p_var(A));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SuperPolynomial> quadratics(const PhaseSpace& ps) {
  std::vector<SuperPolynomial> out;
  for (const auto& m : monomials_of_degree(*ps.vars(), even_variables(ps), 2)) out.push_back(monomial_poly(ps.vars(), m));
  return out;
}

nlohmann::json poly_list(const std::vector<SuperPolynomial>& polys) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const VariableTable& vars, const std::vector<int>& variables, int d) {
  if (d < 0) throw Error("negative degree");
  Monomial cur;
  cur.even.assign(u(vars.even_count()), 0);
  std::vector<Monomial> out;
  enumerate(vars, variables, 0, d, cur, out);
  return out;
}

SuperPolynomial image_of(const AlgebraElement& x, const std::vector<SuperPolynomial>& images) {
  if (images.empty()) throw Error("no images");
  SuperPolynomial out(images.front().vars());
  for (const auto& [k, c] : x.terms) out += images.at(u(k)) * c;
  return out;
}

std::vector<RealizationFailure> check_realization(const PhaseSpace& ps, const LieAlgebra& alg,
                                                  const std::vector<SuperPolynomial>& images) {
  if (static_cast<int>(images.size()) != alg.dim()) throw Error("one image per basis element required");
  int d = alg.dim();
  std::vector<std::vector<char>> bad(u(d), std::vector<char>(u(d), 0));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      SuperPolynomial lhs = ps.star_commutator(images[u(i)], images[u(j)]);
      bad[u(i)][u(j)] = !(lhs == image_of(alg.structure(i, j), images));
    }
  std::vector<RealizationFailure> out;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      if (bad[u(i)][u(j)]) out.push_back({alg.label(i), alg.label(j)});
  return out;
}

std::vector<SuperPolynomial> o_n2_symbols(const PhaseSpace& ps) {
  std::vector<SuperPolynomial> out;
  for (int A = 0; A < ps.ambient_dim(); ++A)
    for (int B = A + 1; B < ps.ambient_dim(); ++B) out.push_back(ps.L(A, B));
  return out;
}

std::vector<SuperPolynomial> sp2_symbols(const PhaseSpace& ps) { return {ps.U(1, 1), ps.U(1, 2), ps.U(2, 2)}; }

Dependencies linear_dependencies(const std::vector<SparseVec>& vectors) {
  int offset = 0;
  for (const auto& v : vectors)
    if (!v.empty()) offset = std::max(offset, v.rbegin()->first + 1);
  SparseEchelon ech;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    SparseVec row = vectors[k];
    row[offset + static_cast<int>(k)] = GaussRational(1);
    ech.insert(row);
  }
  Dependencies out;
  for (const auto& [pivot, row] : ech.rows()) {
    if (pivot < offset) {
      ++out.rank;
      continue;
    }
    std::vector<GaussRational> rel(vectors.size());
    for (const auto& [col, c] : row) rel[u(col - offset)] = c;
    out.relations.push_back(std::move(rel));
  }
  return out;
}

std::vector<SuperPolynomial> star_commutant(const PhaseSpace& ps, const std::vector<SuperPolynomial>& candidates,
                                            const std::vector<SuperPolynomial>& generators) {
  int nc = static_cast<int>(candidates.size());
  int ng = static_cast<int>(generators.size());
  std::vector<SuperPolynomial> comm(u(nc * ng), ps.zero());
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < nc * ng; ++k) comm[u(k)] = ps.star_commutator(candidates[u(k / ng)], generators[u(k % ng)]);
  MonomialIndex index;
  for (const auto& c : comm)
    for (const auto& [m, x] : c.terms()) index.column(m);
  std::vector<SparseVec> vectors(u(nc));
  for (int j = 0; j < nc; ++j)
    for (int g = 0; g < ng; ++g) {
      SparseVec part = index.vector(comm[u(j * ng + g)], g * index.size());
      vectors[u(j)].insert(part.begin(), part.end());
    }
  std::vector<SuperPolynomial> out;
  for (const auto& rel : linear_dependencies(vectors).relations) {
    SuperPolynomial f = ps.zero();
    for (int j = 0; j < nc; ++j)
      if (!rel[u(j)].is_zero()) f += candidates[u(j)] * rel[u(j)];
    out.push_back(std::move(f));
  }
  return out;
}

int polynomial_rank(const std::vector<SuperPolynomial>& polys) {
  MonomialIndex index;
  SparseEchelon ech;
  for (const auto& p : polys) ech.insert(index.vector(p));
  return ech.rank();
}

CheckReport howe_check(int n) {
  PhaseSpace ps(n);
  CheckReport rep;
  rep.name = "howe_duality";
  auto Ls = o_n2_symbols(ps);
  auto Us = sp2_symbols(ps);
  rep.require("o_n2_realized", check_realization(ps, o_n2(n), Ls).empty());
  rep.require("sp2_realized", check_realization(ps, sp2(), Us).empty());

  bool commute = true;
  nlohmann::json witness;
  for (std::size_t a = 0; a < Ls.size() && commute; ++a)
    for (std::size_t b = 0; b < Us.size() && commute; ++b)
      if (!ps.star_commutator(Ls[a], Us[b]).is_zero()) {
        commute = false;
        witness = {{"L", o_n2(n).label(static_cast<int>(a))}, {"U", sp2().label(static_cast<int>(b))}};
      }
  rep.require("L_commutes_with_U", commute, witness);

  auto quad = quadratics(ps);
  auto commU = star_commutant(ps, quad, Us);
  auto commL = star_commutant(ps, quad, Ls);
  auto span_with = [](std::vector<SuperPolynomial> a, const std::vector<SuperPolynomial>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return polynomial_rank(a);
  };
  int nL = static_cast<int>(Ls.size());
  bool u_comm = static_cast<int>(commU.size()) == nL && polynomial_rank(Ls) == nL && span_with(commU, Ls) == nL;
  bool l_comm = commL.size() == 3 && polynomial_rank(Us) == 3 && span_with(commL, Us) == 3;
  rep.require("commutant_of_U_is_span_L", u_comm, {{"dimension", commU.size()}});
  rep.require("commutant_of_L_is_span_U", l_comm, {{"dimension", commL.size()}});
  rep.payload["n"] = n;
  rep.payload["quadratic_space_dim"] = quad.size();
  rep.payload["commutant_of_U_dim"] = commU.size();
  rep.payload["commutant_of_L_dim"] = commL.size();
  rep.payload["o_n2_dim"] = nL;
  return rep;
}

CentralizerQuotient::CentralizerQuotient(int n, int m) : ps_(n), m_(m) {
  if (m < 0) throw Error("degree must be nonnegative");
  auto vars = even_variables(ps_);
  for (int d = 2 * m; d >= 0; d -= 2)
    for (const auto& mono : monomials_of_degree(*ps_.vars(), vars, d)) {
      column_[mono] = static_cast<int>(W_.size());
      W_.push_back(mono);
    }
  U_ = sp2_symbols(ps_);

  std::vector<Monomial> lower;
  for (const auto& mono : W_)
    if (mono.degree() <= 2 * m - 2) lower.push_back(mono);
  int nl = static_cast<int>(lower.size());
  std::vector<SuperPolynomial> gens(u(3 * nl), ps_.zero());
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < 3 * nl; ++k) gens[u(k)] = ps_.star(U_[u(k % 3)], monomial_poly(ps_.vars(), lower[u(k / 3)]), false);
  for (const auto& g : gens) ideal_.insert(to_vector(g));

  for (int c = 0; c < static_cast<int>(W_.size()); ++c)
    if (!ideal_.is_pivot(c)) Q_.push_back(c);

  int nq = static_cast<int>(Q_.size());
  int w = static_cast<int>(W_.size());
  std::vector<SparseVec> rows(u(nq));
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < nq; ++k) {
    SuperPolynomial q = monomial_poly(ps_.vars(), W_[u(Q_[u(k)])]);
    SparseVec row;
    for (int a = 0; a < 3; ++a) {
      SuperPolynomial c = ps_.star(q, U_[u(a)], false) - ps_.star(U_[u(a)], q, false);
      for (const auto& [col, x] : normal_form(c)) row[a * w + col] = x;
    }
    rows[u(k)] = std::move(row);
  }
  SparseEchelon kernel;
  for (int k = 0; k < nq; ++k) {
    SparseVec row = rows[u(k)];
    row[3 * w + k] = GaussRational(1);
    kernel.insert(row);
  }
  for (const auto& [pivot, row] : kernel.rows()) {
    if (pivot < 3 * w) continue;
    SuperPolynomial f = ps_.zero();
    for (const auto& [col, c] : row) {
      SuperPolynomial mono = monomial_poly(ps_.vars(), W_[u(Q_[u(col - 3 * w)])]);
      f += mono * c;
    }
    basis_.push_back(std::move(f));
  }
  std::sort(basis_.begin(), basis_.end(),
            [](const SuperPolynomial& a, const SuperPolynomial& b) { return a.degree() < b.degree(); });
}

SparseVec CentralizerQuotient::to_vector(const SuperPolynomial& f) const {
  SparseVec v;
  for (const auto& [m, c] : f.terms()) {
    auto it = column_.find(m);
    if (it == column_.end()) throw Error("symbol outside the truncated space: " + f.monomial_string(m));
    v[it->second] = c;
  }
  return v;
}

SuperPolynomial CentralizerQuotient::from_vector(const SparseVec& v) const {
  SuperPolynomial f = ps_.zero();
  for (const auto& [col, c] : v) f.add_term(W_.at(u(col)), c);
  return f;
}

SparseVec CentralizerQuotient::normal_form(const SuperPolynomial& f) const { return ideal_.reduce(to_vector(f)); }

bool CentralizerQuotient::in_centralizer(const SuperPolynomial& f) const {
  for (const auto& U : U_)
    if (!normal_form(ps_.star(f, U) - ps_.star(U, f)).empty()) return false;
  return true;
}

nlohmann::json CentralizerResult::to_json(bool with_basis) const {
  nlohmann::json j = {{"n", n}, {"degree", degree}, {"dimension", dimension}, {"cumulative", cumulative},
                      {"graded", graded}, {"pass", pass}};
  nlohmann::json exp = nlohmann::json::array();
  for (const auto& e : expected) exp.push_back(e.get_str());
  j["expected_graded"] = exp;
  if (with_basis) j["basis"] = poly_list(basis);
  return j;
}

CentralizerResult centralizer_mod_ideal(int n, int degree) {
  if (degree < 0 || degree % 2 != 0) throw Error("centralizer degree must be even and nonnegative");
  int m = degree / 2;
  CentralizerQuotient cq(n, m);
  CentralizerResult out;
  out.n = n;
  out.degree = degree;
  out.dimension = cq.dimension();
  out.basis = cq.basis();
  for (int k = 0; k <= m; ++k) {
    int count = 0;
    for (const auto& b : out.basis)
      if (b.degree() <= 2 * k) ++count;
    out.cumulative.push_back(count);
    out.graded.push_back(count - (k ? out.cumulative[u(k - 1)] : 0));
    out.expected.push_back(o_dim(YoungDiagram({k, k}), n + 2));
  }
  out.pass = true;
  for (int k = 0; k <= m; ++k) out.pass = out.pass && Integer(out.graded[u(k)]) == out.expected[u(k)];
  return out;
}

CheckReport l_polynomial_span_check(int n, int degree) {
  if (degree < 0 || degree % 2 != 0) throw Error("degree must be even and nonnegative");
  int m = degree / 2;
  CentralizerQuotient cq(n, m);
  const PhaseSpace& ps = cq.phase_space();
  CheckReport rep;
  rep.name = "l_polynomial_span";
  auto Ls = o_n2_symbols(ps);
  int nL = static_cast<int>(Ls.size());

  // products of k L's, k = 0..m, over multisets
  std::vector<std::vector<SuperPolynomial>> by_order(u(m + 1));
  by_order[0].push_back(ps.constant(GaussRational(1)));
  std::vector<std::vector<int>> last(1, std::vector<int>{0});
  for (int k = 1; k <= m; ++k) {
    std::vector<int> next_last;
    for (std::size_t p = 0; p < by_order[u(k - 1)].size(); ++p)
      for (int a = last[u(k - 1)][p]; a < nL; ++a) {
        by_order[u(k)].push_back(by_order[u(k - 1)][p] * Ls[u(a)]);
        next_last.push_back(a);
      }
    last.push_back(next_last);
  }

  SparseEchelon span;
  std::vector<int> ranks;
  bool central = true;
  for (int k = 0; k <= m; ++k) {
    for (const auto& f : by_order[u(k)]) {
      span.insert(cq.normal_form(f));
      central = central && cq.in_centralizer(f);
    }
    ranks.push_back(span.rank());
  }
  int before = span.rank();
  for (const auto& b : cq.basis()) span.insert(cq.normal_form(b));
  rep.require("products_in_centralizer", central);
  rep.require("rank_equals_centralizer_dimension", before == cq.dimension(),
              {{"rank", before}, {"dimension", cq.dimension()}});
  rep.require("centralizer_in_span", span.rank() == before, {{"rank_with_basis", span.rank()}});

  bool antisym = true;
  nlohmann::json witness;
  int N = ps.ambient_dim();
  for (int A = 0; A < N && antisym; ++A)
    for (int B = A + 1; B < N && antisym; ++B)
      for (int C = B + 1; C < N && antisym; ++C)
        for (int D = C + 1; D < N && antisym; ++D) {
          SuperPolynomial s = ps.L(A, B) * ps.L(C, D) - ps.L(A, C) * ps.L(B, D) + ps.L(A, D) * ps.L(B, C);
          if (!s.is_zero()) {
            antisym = false;
            witness = {{"indices", {A, B, C, D}}};
          }
        }
  rep.require("antisymmetrized_LL_vanishes", antisym, witness);
  rep.payload["n"] = n;
  rep.payload["degree"] = degree;
  rep.payload["centralizer_dimension"] = cq.dimension();
  rep.payload["rank_by_order"] = ranks;
  return rep;
}

CheckReport constraint_algebra_check(int n) {
  PhaseSpace ps(n);
  CheckReport rep;
  rep.name = "constraint_algebra";
  auto failures = check_realization(ps, sp2(), sp2_symbols(ps));
  nlohmann::json w = nlohmann::json::array();
  for (const auto& f : failures) w.push_back({f.x, f.y});
  rep.require("U_closes_on_sp2", failures.empty(), w);

  SuperPolynomial x2 = ps.zero(), p2 = ps.zero(), xp = ps.zero();
  for (int A = 0; A < ps.ambient_dim(); ++A) {
    x2 += ps.X(A) * ps.X(A) * GaussRational(ps.eta(A));
    p2 += ps.P_lower(A) * ps.P_upper(A);
    xp += ps.X(A) * ps.P_lower(A);
  }
  rep.require("X2_P2_commutator", ps.star_commutator(x2, p2) == xp * (GaussRational::i() * GaussRational(4)));

  std::vector<int> xs;
  for (int A = 0; A < ps.ambient_dim(); ++A) xs.push_back(ps.x_var(A));
  bool euler = true;
  nlohmann::json ew;
  for (int h = 0; h <= 3 && euler; ++h)
    for (const auto& m : monomials_of_degree(*ps.vars(), xs, h)) {
      SuperPolynomial f = monomial_poly(ps.vars(), m);
      if (!(ps.poisson(f, xp) == f * GaussRational(h))) {
        euler = false;
        ew = {{"f", f.to_string()}, {"h", h}};
        break;
      }
    }
  rep.require("euler_homogeneity", euler, ew);
  rep.payload["n"] = n;
  return rep;
}

}  // namespace hsalg
