#include "hsalg/weyl/phase_space.hpp"

#include <omp.h>

#include "hsalg/liealg/algebras.hpp"

namespace hsalg {

namespace {

std::size_t u(int k) { return static_cast<std::size_t>(k); }

struct Bivector {
  int a, b;
  int omega;
};

// d/dv acting from the right (right = true) or from the left on a canonical monomial.
bool derive(const VariableTable& vars, const Monomial& m, int v, bool right, Monomial& out, int& factor) {
  int slot = vars.slot(v);
  out = m;
  if (vars.parity(v) == Parity::Even) {
    int e = m.even[u(slot)];
    if (e == 0) return false;
    out.even[u(slot)] = static_cast<std::uint8_t>(e - 1);
    factor = e;
    return true;
  }
  std::uint64_t bit = std::uint64_t{1} << slot;
  if (!(m.odd & bit)) return false;
  out.odd = m.odd & ~bit;
  std::uint64_t others = right ? (slot >= 63 ? 0 : m.odd & ~((std::uint64_t{2} << slot) - 1)) : m.odd & (bit - 1);
  factor = (__builtin_popcountll(others) & 1) ? -1 : 1;
  return true;
}

using Tensor = std::map<std::pair<Monomial, Monomial>, GaussRational>;

void accumulate(SuperPolynomial::TermMap& out, const Monomial& m, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// sum_k c^k/k! mu(P^k (f (x) g)) with P = sum w^{ab} <d_a (x) d_b>.
SuperPolynomial reference_star(const VarTablePtr& vars, const std::vector<Bivector>& bivectors, const GaussRational& c,
                               const SuperPolynomial& f, const SuperPolynomial& g) {
  Tensor cur;
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) cur[{mf, mg}] += cf * cg;
  SuperPolynomial out(vars);
  GaussRational weight(1);
  for (int k = 0; !cur.empty(); ++k) {
    if (k > 0) weight = weight * c / GaussRational(k);
    for (const auto& [mm, coef] : cur) {
      auto prod = multiply_monomials(mm.first, mm.second);
      if (!prod) continue;
      out.add_term(prod->first, coef * weight * GaussRational(prod->second));
    }
    Tensor next;
    for (const auto& [mm, coef] : cur) {
      for (const auto& bv : bivectors) {
        Monomial da, db;
        int fa = 0, fb = 0;
        if (!derive(*vars, mm.first, bv.a, true, da, fa)) continue;
        if (!derive(*vars, mm.second, bv.b, false, db, fb)) continue;
        GaussRational& slot = next[{da, db}];
        slot += coef * GaussRational(fa * fb * bv.omega);
      }
    }
    for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
    cur = std::move(next);
  }
  return out;
}

std::vector<Bivector> bivectors_of(const PhaseSpace& ps) {
  std::vector<Bivector> out;
  for (int A = 0; A < ps.ambient_dim(); ++A) {
    out.push_back({ps.x_var(A), ps.p_var(A), 1});
    out.push_back({ps.p_var(A), ps.x_var(A), -1});
  }
  for (int A = 0; A < ps.ambient_dim(); ++A)
    for (int i = 1; i <= ps.s(); ++i) {
      out.push_back({ps.theta_var(A, i), ps.pi_var(A, i), 1});
      out.push_back({ps.pi_var(A, i), ps.theta_var(A, i), 1});
    }
  return out;
}

Integer falling(int x, int r) {
  Integer out = 1;
  for (int k = 0; k < r; ++k) out *= x - k;
  return out;
}

}  // namespace

PhaseSpace::PhaseSpace(int n, int s) : PhaseSpace(n, s, false) {}

PhaseSpace PhaseSpace::boundary(int n, int s) { return PhaseSpace(n, s, true); }

PhaseSpace::PhaseSpace(int n, int s, bool boundary) : n_(n), s_(s), boundary_(boundary) {
  if (n < 1) throw Error("phase space needs n >= 1");
  if (s < 0) throw Error("number of odd families must be non-negative");
  int N = boundary ? n : n + 2;
  if (2 * N * s > VariableTable::kMaxOdd) throw Error("too many odd variables");
  for (int A = 0; A < N; ++A) metric_.push_back(boundary ? (A == 0 ? -1 : 1) : ambient_metric(A));
  auto index = [boundary](int A) { return boundary ? std::to_string(A) : ambient_index_name(A); };
  std::string xs = boundary ? "x" : "X", ps = boundary ? "p" : "P";
  std::vector<std::pair<std::string, Parity>> names;
  for (int A = 0; A < N; ++A) {
    std::string a = index(A);
    names.emplace_back(xs + a, Parity::Even);
    names.emplace_back(ps + a, Parity::Even);
  }
  for (int A = 0; A < N; ++A)
    for (int i = 1; i <= s; ++i) {
      std::string a = index(A);
      names.emplace_back("th" + std::to_string(i) + a, Parity::Odd);
      names.emplace_back("pi" + std::to_string(i) + a, Parity::Odd);
    }
  vars_ = std::make_shared<const VariableTable>(names);
  table_.eta.resize(u(N));
  for (int A = 0; A < N; ++A) table_.eta[u(A)] = metric_[u(A)];
  table_.c = GaussRational(Rational(0), Rational(1, 2));
  for (int A = 0; A < N; ++A) pairs_.push_back({x_var(A), p_var(A), false});
  for (int A = 0; A < N; ++A)
    for (int i = 1; i <= s; ++i) pairs_.push_back({theta_var(A, i), pi_var(A, i), true});

  // c^k/k!; series order is bounded by the smaller total degree in one pair
  GaussRational w(1);
  for (int k = 0; k <= 128; ++k) {
    if (k > 0) w = w * table_.c / GaussRational(k);
    c_pow_over_fact_.push_back(w);
  }

  if (s > 0) {
    auto pv = std::make_shared<const VariableTable>(
        std::vector<std::pair<std::string, Parity>>{{"th", Parity::Odd}, {"pi", Parity::Odd}});
    std::vector<Bivector> bv{{0, 1, 1}, {1, 0, 1}};
    auto basis = [&](int code) {
      SuperPolynomial p = SuperPolynomial::constant(pv, GaussRational(1));
      if (code & 1) p = p * SuperPolynomial::variable(pv, 0);
      if (code & 2) p = p * SuperPolynomial::variable(pv, 1);
      return p;
    };
    odd_table_.assign(4, std::vector<std::vector<PairTerm>>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        SuperPolynomial prod = reference_star(pv, bv, table_.c, basis(a), basis(b));
        for (const auto& [m, c] : prod.terms()) odd_table_[u(a)][u(b)].push_back({static_cast<int>(m.odd), c});
      }
  }
}

int PhaseSpace::x_var(int A) const {
  if (A < 0 || A >= ambient_dim()) throw Error("ambient index out of range");
  return 2 * A;
}

int PhaseSpace::p_var(int A) const { return x_var(A) + 1; }

int PhaseSpace::theta_var(int A, int i) const {
  if (A < 0 || A >= ambient_dim() || i < 1 || i > s_) throw Error("odd variable index out of range");
  return 2 * ambient_dim() + 2 * (A * s_ + i - 1);
}

int PhaseSpace::pi_var(int A, int i) const { return theta_var(A, i) + 1; }

SuperPolynomial PhaseSpace::Y(int A, int alpha) const {
  if (alpha == 1) return X(A);
  if (alpha == 2) return P_upper(A);
  throw Error("sp(2) index must be 1 or 2");
}

SuperPolynomial PhaseSpace::L(int A, int B) const { return X(B) * P_upper(A) - X(A) * P_upper(B); }

SuperPolynomial PhaseSpace::U(int alpha, int beta) const {
  SuperPolynomial out = zero();
  for (int A = 0; A < ambient_dim(); ++A) out += Y(A, alpha) * Y(A, beta) * GaussRational(eta(A));
  return out;
}

void PhaseSpace::check(const SuperPolynomial& f) const {
  if (f.vars() != vars_ && !(*f.vars() == *vars_)) throw Error("symbol from a different phase space");
}

SuperPolynomial PhaseSpace::poisson(const SuperPolynomial& f, const SuperPolynomial& g) const {
  check(f);
  check(g);
  SuperPolynomial out = zero();
  for (const auto& bv : bivectors_of(*this)) {
    SuperPolynomial df = f.right_derivative(bv.a);
    if (df.is_zero()) continue;
    SuperPolynomial dg = g.left_derivative(bv.b);
    if (dg.is_zero()) continue;
    out += df * dg * GaussRational(bv.omega);
  }
  return out;
}

SuperPolynomial PhaseSpace::star_reference(const SuperPolynomial& f, const SuperPolynomial& g) const {
  check(f);
  check(g);
  return reference_star(vars_, bivectors_of(*this), table_.c, f, g);
}

// Factor f = f_1 f_2 ... and g = g_1 g_2 ... over canonical pairs; the product
// is sign * prod_k (f_k *_k g_k) with sign (-1)^{sum_k |g_k| sum_{l>k} |f_l|}.
void PhaseSpace::star_monomials(const Monomial& f, const Monomial& g, const GaussRational& coeff,
                                SuperPolynomial::TermMap& out) const {
  struct Partial {
    Monomial m;
    GaussRational c;
  };
  int sign_bits = 0;
  int f_odd_above = 0;
  for (int k = pair_count() - 1; k >= 0; --k) {
    const Pair& pr = pairs_[u(k)];
    if (!pr.odd) continue;
    int sa = vars_->slot(pr.a), sb = vars_->slot(pr.b);
    int fk = ((f.odd >> sa) & 1) + ((f.odd >> sb) & 1);
    int gk = ((g.odd >> sa) & 1) + ((g.odd >> sb) & 1);
    sign_bits += (gk & 1) * f_odd_above;
    f_odd_above += fk & 1;
  }
  Monomial unit;
  unit.even.assign(u(vars_->even_count()), 0);
  std::vector<Partial> acc{{unit, (sign_bits & 1) ? GaussRational(0) - coeff : coeff}};
  for (const Pair& pr : pairs_) {
    std::vector<Partial> next;
    if (!pr.odd) {
      int sq = vars_->slot(pr.a), sp = vars_->slot(pr.b);
      int a = f.even[u(sq)], b = f.even[u(sp)], c = g.even[u(sq)], d = g.even[u(sp)];
      if (a + b == 0 || c + d == 0) {
        for (auto& p : acc) {
          p.m.even[u(sq)] = static_cast<std::uint8_t>(a + c);
          p.m.even[u(sp)] = static_cast<std::uint8_t>(b + d);
        }
        continue;
      }
      struct T {
        int eq, ep;
        GaussRational c;
      };
      std::vector<T> terms;
      int kmax = std::min(a + b, c + d);
      if (kmax >= static_cast<int>(c_pow_over_fact_.size())) throw Error("star product degree too large");
      for (int k = 0; k <= kmax; ++k) {
        Integer binom = 1;
        for (int j = 0; j <= k; ++j) {
          if (j > 0) binom = binom * (k - j + 1) / j;
          int r = k - j;
          if (j > a || r > b || j > d || r > c) continue;
          Integer mult = binom * falling(a, j) * falling(b, r) * falling(d, j) * falling(c, r);
          if (r % 2) mult = -mult;
          terms.push_back({a - j + c - r, b - r + d - j, c_pow_over_fact_[u(k)] * GaussRational(Rational(mult))});
        }
      }
      for (const auto& p : acc)
        for (const auto& t : terms) {
          Partial q = p;
          q.m.even[u(sq)] = static_cast<std::uint8_t>(t.eq);
          q.m.even[u(sp)] = static_cast<std::uint8_t>(t.ep);
          q.c = p.c * t.c;
          next.push_back(std::move(q));
        }
    } else {
      int sa = vars_->slot(pr.a), sb = vars_->slot(pr.b);
      int fc = static_cast<int>(((f.odd >> sa) & 1) | (((f.odd >> sb) & 1) << 1));
      int gc = static_cast<int>(((g.odd >> sa) & 1) | (((g.odd >> sb) & 1) << 1));
      if (fc == 0 && gc == 0) continue;
      for (const auto& p : acc)
        for (const auto& t : odd_table_[u(fc)][u(gc)]) {
          Partial q = p;
          if (t.out & 1) q.m.odd |= std::uint64_t{1} << sa;
          if (t.out & 2) q.m.odd |= std::uint64_t{1} << sb;
          q.c = p.c * t.coeff;
          next.push_back(std::move(q));
        }
    }
    acc = std::move(next);
  }
  for (const auto& p : acc) accumulate(out, p.m, p.c);
}

SuperPolynomial PhaseSpace::star(const SuperPolynomial& f, const SuperPolynomial& g, bool parallel) const {
  check(f);
  check(g);
  std::vector<std::pair<const Monomial*, const GaussRational*>> ft, gt;
  for (const auto& [m, c] : f.terms()) ft.emplace_back(&m, &c);
  for (const auto& [m, c] : g.terms()) gt.emplace_back(&m, &c);
  long total = static_cast<long>(ft.size() * gt.size());
  SuperPolynomial::TermMap merged;
  if (!parallel || total < 64) {
    for (long t = 0; t < total; ++t) {
      auto& a = ft[u(static_cast<int>(t / static_cast<long>(gt.size())))];
      auto& b = gt[u(static_cast<int>(t % static_cast<long>(gt.size())))];
      star_monomials(*a.first, *b.first, *a.second * *b.second, merged);
    }
  } else {
    int threads = omp_get_max_threads();
    std::vector<SuperPolynomial::TermMap> local(u(threads));
#pragma omp parallel
    {
      auto& mine = local[u(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
      for (long t = 0; t < total; ++t) {
        auto& a = ft[u(static_cast<int>(t / static_cast<long>(gt.size())))];
        auto& b = gt[u(static_cast<int>(t % static_cast<long>(gt.size())))];
        star_monomials(*a.first, *b.first, *a.second * *b.second, mine);
      }
    }
    for (auto& part : local)
      for (auto& [m, c] : part) accumulate(merged, m, c);
  }
  SuperPolynomial out = zero();
  for (auto& [m, c] : merged) out.add_term(m, c);
  return out;
}

SuperPolynomial PhaseSpace::star_commutator(const SuperPolynomial& f, const SuperPolynomial& g) const {
  if (f.is_zero() || g.is_zero()) return zero();
  auto pf = f.parity(), pg = g.parity();
  if (!pf || !pg) throw Error("graded commutator needs homogeneous parity");
  SuperPolynomial fg = star(f, g), gf = star(g, f);
  if (*pf == Parity::Odd && *pg == Parity::Odd) return fg + gf;
  return fg - gf;
}

}  // namespace hsalg
