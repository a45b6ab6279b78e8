#include "hsalg/superweyl/superweyl.hpp"

#include "hsalg/liealg/algebras.hpp"

namespace hsalg {

namespace {

std::size_t u(int k) { return static_cast<std::size_t>(k); }

GaussRational I() { return GaussRational::i(); }

nlohmann::json failure_list(const std::vector<RealizationFailure>& fs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : fs) out.push_back({f.x, f.y});
  return out;
}

// Every graded commutator of the family stays in its span.
bool closes(const PhaseSpace& ps, const std::vector<SuperPolynomial>& family, nlohmann::json& witness) {
  int r = polynomial_rank(family);
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a; b < family.size(); ++b) {
      auto extended = family;
      extended.push_back(ps.star_commutator(family[a], family[b]));
      if (polynomial_rank(extended) != r) {
        witness = {{"x", family[a].to_string()}, {"y", family[b].to_string()}};
        return false;
      }
    }
  return true;
}

std::vector<SuperPolynomial> graded_quadratics(const PhaseSpace& ps) {
  std::vector<int> all;
  for (int v = 0; v < ps.vars()->size(); ++v) all.push_back(v);
  std::vector<SuperPolynomial> out;
  for (const auto& m : monomials_of_degree(*ps.vars(), all, 2)) {
    SuperPolynomial p = ps.zero();
    p.add_term(m, GaussRational(1));
    out.push_back(std::move(p));
  }
  return out;
}

int span_rank(std::vector<SuperPolynomial> a, const std::vector<SuperPolynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return polynomial_rank(a);
}

}  // namespace

SuperPolynomial super_coordinate(const PhaseSpace& ps, int A, int a) {
  int s = ps.s();
  if (a < 0 || a >= osp_index_count(s)) throw Error("osp index out of range");
  if (a == 0) return ps.X(A);
  if (a == 1) return ps.P_upper(A);
  if (a < 2 + s) return ps.theta(A, a - 1);
  return ps.pi_upper(a - s - 1, A);
}

SuperPolynomial super_bilinear(const PhaseSpace& ps, int a, int b) {
  SuperPolynomial out = ps.zero();
  for (int A = 0; A < ps.ambient_dim(); ++A)
    out += super_coordinate(ps, A, a) * super_coordinate(ps, A, b) * GaussRational(ps.eta(A));
  return out;
}

std::vector<SuperPolynomial> osp_symbols(const PhaseSpace& ps) {
  int s = ps.s();
  int m = osp_index_count(s);
  std::vector<SuperPolynomial> out(u(osp(s).dim()), ps.zero());
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      auto [k, sign] = osp_generator(s, a, b);
      if (k >= 0) out[u(k)] = super_bilinear(ps, a, b) * GaussRational(sign);
    }
  return out;
}

SuperPolynomial super_generator(const PhaseSpace& ps, int A, int B) {
  SuperPolynomial out = ps.L(A, B);
  for (int i = 1; i <= ps.s(); ++i) out += ps.theta(A, i) * ps.pi_upper(i, B) - ps.theta(B, i) * ps.pi_upper(i, A);
  return out;
}

std::vector<SuperPolynomial> super_o_n2_symbols(const PhaseSpace& ps) {
  std::vector<SuperPolynomial> out;
  for (int A = 0; A < ps.ambient_dim(); ++A)
    for (int B = A + 1; B < ps.ambient_dim(); ++B) out.push_back(super_generator(ps, A, B));
  return out;
}

SuperPolynomial operator_generator_apply(const PhaseSpace& ps, int A, int B, const SuperPolynomial& psi) {
  GaussRational mi = GaussRational(-1) * I();
  auto xp = [&](int a, int b) { return ps.X(a) * psi.left_derivative(ps.x_var(b)) * (mi * GaussRational(ps.eta(b))); };
  SuperPolynomial out = xp(A, B) - xp(B, A);
  for (int i = 1; i <= ps.s(); ++i) {
    out += ps.theta(A, i) * psi.left_derivative(ps.theta_var(B, i)) * (mi * GaussRational(ps.eta(B)));
    out -= ps.theta(B, i) * psi.left_derivative(ps.theta_var(A, i)) * (mi * GaussRational(ps.eta(A)));
  }
  return out;
}

CheckReport osp_check(int n, int s) {
  if (s < 0) throw Error("s must be non-negative");
  PhaseSpace ps(n, s);
  LieAlgebra alg = osp(s);
  auto images = osp_symbols(ps);
  CheckReport rep;
  rep.name = "osp_closure";
  auto failures = check_realization(ps, alg, images);
  rep.require("osp_realized", failures.empty(), failure_list(failures));

  // even-even block is the sp(2) of the bosonic constraints
  bool sp2_block = true;
  for (int a = 0; a < 2; ++a)
    for (int b = a; b < 2; ++b) sp2_block = sp2_block && super_bilinear(ps, a, b) == ps.U(a + 1, b + 1);
  rep.require("even_block_is_sp2", sp2_block);

  nlohmann::json odd = nlohmann::json::object();
  for (int k = 0; k < alg.dim(); ++k)
    if (alg.parity(k) == Parity::Odd) odd[alg.label(k)] = images[u(k)].to_string();
  rep.payload["n"] = n;
  rep.payload["s"] = s;
  rep.payload["algebra"] = alg.name();
  rep.payload["dim"] = alg.dim();
  rep.payload["odd_generators"] = odd;
  return rep;
}

CheckReport super_howe_check(int n, int s) {
  if (s < 0) throw Error("s must be non-negative");
  if (s == 0) return howe_check(n);
  PhaseSpace ps(n, s);
  CheckReport rep;
  rep.name = "super_howe_duality";
  auto Js = super_o_n2_symbols(ps);
  auto Ts = osp_symbols(ps);
  auto jf = check_realization(ps, o_n2(n), Js);
  rep.require("o_n2_realized", jf.empty(), failure_list(jf));
  auto tf = check_realization(ps, osp(s), Ts);
  rep.require("osp_realized", tf.empty(), failure_list(tf));

  int nj = static_cast<int>(Js.size()), nt = static_cast<int>(Ts.size());
  std::vector<char> bad(u(nj * nt), 0);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < nj * nt; ++k) bad[u(k)] = !ps.star_commutator(Js[u(k / nt)], Ts[u(k % nt)]).is_zero();
  nlohmann::json witness;
  bool commute = true;
  for (int k = 0; k < nj * nt && commute; ++k)
    if (bad[u(k)]) {
      commute = false;
      witness = {{"J", o_n2(n).label(k / nt)}, {"T", osp(s).label(k % nt)}};
    }
  rep.require("J_commutes_with_T", commute, witness);

  // action on functions of (X, theta): [J, psi]* = -J_op psi
  std::vector<int> config;
  for (int A = 0; A < ps.ambient_dim(); ++A) {
    config.push_back(ps.x_var(A));
    for (int i = 1; i <= s; ++i) config.push_back(ps.theta_var(A, i));
  }
  std::vector<SuperPolynomial> probes;
  for (int d = 0; d <= 2; ++d)
    for (const auto& m : monomials_of_degree(*ps.vars(), config, d)) {
      SuperPolynomial p = ps.zero();
      p.add_term(m, GaussRational(1));
      probes.push_back(std::move(p));
    }
  bool op_match = true;
  nlohmann::json ow;
  for (int A = 0; A < ps.ambient_dim() && op_match; ++A)
    for (int B = A + 1; B < ps.ambient_dim() && op_match; ++B) {
      SuperPolynomial J = super_generator(ps, A, B);
      for (const auto& psi : probes) {
        SuperPolynomial lhs = ps.star(J, psi) - ps.star(psi, J);
        if (!(lhs == -operator_generator_apply(ps, A, B, psi))) {
          op_match = false;
          ow = {{"J", o_n2(n).label(o_n2_index(n, A, B))}, {"psi", psi.to_string()}};
          break;
        }
      }
    }
  rep.require("operator_form_matches", op_match, ow);

  auto quad = graded_quadratics(ps);
  auto commT = star_commutant(ps, quad, Ts);
  auto commJ = star_commutant(ps, quad, Js);
  bool t_comm = static_cast<int>(commT.size()) == nj && span_rank(commT, Js) == nj;
  bool j_comm = static_cast<int>(commJ.size()) == nt && span_rank(commJ, Ts) == nt;
  rep.require("commutant_of_T_is_span_J", t_comm, {{"dimension", commT.size()}});
  rep.require("commutant_of_J_is_span_T", j_comm, {{"dimension", commJ.size()}});
  rep.payload["n"] = n;
  rep.payload["s"] = s;
  rep.payload["quadratic_space_dim"] = quad.size();
  rep.payload["commutant_of_T_dim"] = commT.size();
  rep.payload["commutant_of_J_dim"] = commJ.size();
  return rep;
}

SuperPolynomial number_operator_symbol(const PhaseSpace& ps, int i, int j, const Rational& shift) {
  SuperPolynomial out = ps.zero();
  for (int A = 0; A < ps.ambient_dim(); ++A) out += ps.theta(A, i) * ps.pi_lower(j, A);
  out *= GaussRational(-1) * I();
  if (i == j) out += ps.constant(GaussRational(frac(ps.ambient_dim(), 2) - shift));
  return out;
}

SuperPolynomial d_symbol(const PhaseSpace& ps, int i) {
  SuperPolynomial out = ps.zero();
  for (int A = 0; A < ps.ambient_dim(); ++A) out += ps.theta(A, i) * ps.P_lower(A);
  return out * I();
}

SuperPolynomial d_dagger_symbol(const PhaseSpace& ps, int i) {
  SuperPolynomial out = ps.zero();
  for (int A = 0; A < ps.ambient_dim(); ++A) out += ps.pi_lower(i, A) * ps.P_upper(A);
  return out;
}

CheckReport multiform_ops_check(int n, int s) {
  if (s < 1) throw Error("multiform operators need s >= 1");
  CheckReport rep;
  rep.name = "multiform_operators";
  PhaseSpace bnd = PhaseSpace::boundary(n, s);
  PhaseSpace amb(n, s);
  LieAlgebra g = gl(s);

  auto gl_images = [&](const PhaseSpace& ps, const Rational& shift) {
    std::vector<SuperPolynomial> out;
    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= s; ++j) out.push_back(number_operator_symbol(ps, i, j, shift));
    return out;
  };
  Rational shift_b = frac(n, 2), shift_a = frac(n + 2, 2);
  auto nb = gl_images(bnd, shift_b);
  auto na = gl_images(amb, shift_a);
  auto fb = check_realization(bnd, g, nb);
  auto fa = check_realization(amb, g, na);
  rep.require("gl_closes_boundary", fb.empty(), failure_list(fb));
  rep.require("gl_closes_ambient", fa.empty(), failure_list(fa));
  bool traceless_shift = true;
  for (int i = 0; i < s; ++i) {
    const auto& b = nb[u(i * s + i)];
    const auto& a = na[u(i * s + i)];
    traceless_shift = traceless_shift && b.homogeneous_part(0).is_zero() && a.homogeneous_part(0).is_zero();
  }
  rep.require("shift_symmetrizes", traceless_shift);

  std::vector<SuperPolynomial> o2s = nb;
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j) {
      SuperPolynomial tt = bnd.zero(), dd = bnd.zero();
      for (int A = 0; A < bnd.ambient_dim(); ++A) {
        tt += bnd.theta(A, i) * bnd.theta(A, j) * GaussRational(bnd.eta(A));
        dd += bnd.pi_lower(i, A) * bnd.pi_upper(j, A);
      }
      o2s.push_back(tt);
      o2s.push_back(-dd);
    }
  nlohmann::json cw;
  int dim = polynomial_rank(o2s);
  bool o_ok = closes(bnd, o2s, cw) && dim == s * (2 * s - 1);
  rep.require("o2s_closes", o_ok, cw);

  SuperPolynomial box = bnd.zero();
  for (int A = 0; A < bnd.ambient_dim(); ++A) box -= bnd.P_lower(A) * bnd.P_upper(A);
  bool dd_ok = true;
  nlohmann::json dw;
  for (int i = 1; i <= s && dd_ok; ++i)
    for (int j = 1; j <= s && dd_ok; ++j) {
      auto di = d_symbol(bnd, i), dj = d_symbol(bnd, j);
      auto ei = d_dagger_symbol(bnd, i), ej = d_dagger_symbol(bnd, j);
      bool ok = bnd.star_commutator(di, dj).is_zero() && bnd.star_commutator(ei, ej).is_zero() &&
                bnd.star_commutator(di, ej) == (i == j ? box : bnd.zero());
      // gl(s) moves d_k among themselves
      for (int k = 1; k <= s; ++k) {
        auto nij = number_operator_symbol(bnd, i, j, shift_b);
        ok = ok && bnd.star_commutator(nij, d_symbol(bnd, k)) == (j == k ? d_symbol(bnd, i) : bnd.zero());
      }
      if (!ok) {
        dd_ok = false;
        dw = {{"i", i}, {"j", j}};
      }
    }
  rep.require("d_anticommutators", dd_ok, dw);
  rep.payload["n"] = n;
  rep.payload["s"] = s;
  rep.payload["o2s_dim"] = dim;
  rep.payload["shift_boundary"] = shift_b.get_str();
  rep.payload["shift_ambient"] = shift_a.get_str();
  return rep;
}

}  // namespace hsalg
