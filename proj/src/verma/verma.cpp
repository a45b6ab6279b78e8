#include "hsalg/verma/verma.hpp"

#include <algorithm>
#include <functional>

#include "hsalg/youngdim/young.hpp"

namespace hsalg {

namespace {

std::size_t u(int k) { return static_cast<std::size_t>(k); }

Integer binomial(int top, int bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return r;
}

unsigned parity_class(const std::vector<int>& e) {
  unsigned mask = 0;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] % 2) mask |= 1u << k;
  return mask;
}

template <class S>
S affine_value(const Affine& a, const S& e0) {
  return S(GaussRational(a.c0)) + e0 * GaussRational(a.c1);
}

}  // namespace

std::vector<RaisingMonomial> level_basis(int n, int L) {
  if (n < 1 || L < 0) throw Error("level_basis needs n >= 1 and L >= 0");
  std::vector<RaisingMonomial> out;
  RaisingMonomial cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == L) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

VermaModule::VermaModule(int n, int max_level) : n_(n), max_level_(max_level) {
  if (n < 3) throw Error("Verma modules of o(n,2) need n >= 3");
  if (max_level < 0) throw Error("max_level must be non-negative");
  for (int L = 0; L <= max_level; ++L) {
    std::vector<Exponent> lev;
    std::map<Exponent, int> idx;
    for (const auto& m : level_basis(n, L)) {
      Exponent e(u(n));
      for (int i : m) ++e[u(i - 1)];
      idx.emplace(e, static_cast<int>(lev.size()));
      lev.push_back(std::move(e));
    }
    levels_.push_back(std::move(lev));
    index_.push_back(std::move(idx));
  }
  // J-_i (x_k w) = x_k J-_i w - 2(x_i d_k w - x_k d_i w) + 2 delta_ik (E0 + deg w) w
  lowering_.resize(u(max_level + 1));
  for (int L = 1; L <= max_level; ++L) {
    lowering_[u(L)].assign(u(n), std::vector<std::vector<Term>>(levels_[u(L)].size()));
    for (int i = 0; i < n; ++i) {
      for (std::size_t idx = 0; idx < levels_[u(L)].size(); ++idx) {
        const Exponent& m = levels_[u(L)][idx];
        int k = 0;
        while (m[u(k)] == 0) ++k;
        Exponent w = m;
        --w[u(k)];
        int w_idx = index_[u(L - 1)].at(w);
        std::map<int, Affine> acc;
        if (L >= 2) {
          for (const Term& t : lowering_[u(L - 1)][u(i)][u(w_idx)]) {
            Exponent up = levels_[u(L - 2)][u(t.index)];
            ++up[u(k)];
            acc[index_[u(L - 1)].at(up)] += t.coeff;
          }
        }
        auto shift = [&](int from, int to, int sign) {
          if (w[u(from)] == 0) return;
          Exponent e = w;
          --e[u(from)];
          ++e[u(to)];
          Affine a;
          a.c0 = sign * 2 * w[u(from)];
          acc[index_[u(L - 1)].at(e)] += a;
        };
        shift(k, i, -1);
        shift(i, k, +1);
        if (i == k) {
          Affine a;
          a.c0 = 2 * (L - 1);
          a.c1 = 2;
          acc[w_idx] += a;
        }
        auto& dst = lowering_[u(L)][u(i)][idx];
        for (auto& [j, a] : acc)
          if (!a.is_zero()) dst.push_back({j, a});
      }
    }
  }
}

const std::vector<VermaModule::Exponent>& VermaModule::level_at(int L) const {
  if (L < 0 || L > max_level_) throw Error("level " + std::to_string(L) + " outside the constructed range");
  return levels_[u(L)];
}

int VermaModule::index_of(const Exponent& e) const {
  int L = 0;
  for (int x : e) L += x;
  auto it = index_.at(u(L)).find(e);
  if (it == index_[u(L)].end()) throw Error("unknown exponent vector");
  return it->second;
}

RaisingMonomial VermaModule::monomial(int L, int idx) const {
  RaisingMonomial m;
  const Exponent& e = level_at(L).at(u(idx));
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < e[u(i)]; ++k) m.push_back(i + 1);
  return m;
}

VermaModule::Exponent VermaModule::exponent(const RaisingMonomial& m) const {
  Exponent e(u(n_));
  for (int i : m) {
    if (i < 1 || i > n_) throw Error("raising index out of range");
    ++e[u(i - 1)];
  }
  return e;
}

const std::vector<VermaModule::Term>& VermaModule::lower(int i, int L, int idx) const {
  if (L < 1 || L > max_level_) throw Error("lowering needs 1 <= L <= max_level");
  return lowering_[u(L)].at(u(i)).at(u(idx));
}

// G_L(x_k u, m') = sum_w coeff(J-_k m', w) G_{L-1}(u, w)
template <class S>
std::vector<Matrix<S>> VermaModule::gram(int L, const S& e0, bool parallel) const {
  if (L > max_level_) throw Error("Gram level beyond the constructed module");
  std::vector<Matrix<S>> out;
  Matrix<S> g0(1, 1);
  g0(0, 0) = S(GaussRational(1));
  out.push_back(g0);
  for (int lev = 1; lev <= L; ++lev) {
    const auto& basis = levels_[u(lev)];
    int d = static_cast<int>(basis.size());
    const Matrix<S>& prev = out.back();
    Matrix<S> g(d, d);
    std::vector<unsigned> cls(u(d));
    for (int a = 0; a < d; ++a) cls[u(a)] = parity_class(basis[u(a)]);
    // lowering coefficients evaluated once per level
    std::vector<std::vector<std::vector<std::pair<int, S>>>> low(u(n_), std::vector<std::vector<std::pair<int, S>>>(u(d)));
    for (int i = 0; i < n_; ++i)
      for (int b = 0; b < d; ++b)
        for (const Term& t : lowering_[u(lev)][u(i)][u(b)]) low[u(i)][u(b)].emplace_back(t.index, affine_value(t.coeff, e0));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int a = 0; a < d; ++a) {
      const Exponent& ea = basis[u(a)];
      int k = 0;
      while (ea[u(k)] == 0) ++k;
      Exponent rest = ea;
      --rest[u(k)];
      int r = index_[u(lev - 1)].at(rest);
      for (int b = 0; b < d; ++b) {
        if (cls[u(a)] != cls[u(b)]) continue;
        S acc;
        for (const auto& [w, c] : low[u(k)][u(b)]) {
          const S& gw = prev(r, w);
          if (is_zero(gw)) continue;
          acc += c * gw;
        }
        g(a, b) = acc;
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<PolyMatrix> VermaModule::gram_symbolic(int L, bool parallel) const { return gram<UPoly>(L, UPoly::x(), parallel); }

std::vector<QMatrix> VermaModule::gram_at(int L, const GaussRational& e0, bool parallel) const {
  return gram<GaussRational>(L, e0, parallel);
}

PolyMatrix gram_matrix(int n, int L) { return VermaModule(n, L).gram_symbolic(L).back(); }
PolyMatrix gram_matrix_serial(int n, int L) { return VermaModule(n, L).gram_symbolic(L, false).back(); }
QMatrix gram_matrix_at(int n, int L, const GaussRational& e0) { return VermaModule(n, L).gram_at(L, e0).back(); }

UPoly shapovalov(int n, const ModuleVector& v, const ModuleVector& w) {
  int top = 0;
  for (const auto* vec : {&v, &w})
    for (const auto& [m, c] : *vec) top = std::max(top, static_cast<int>(m.size()));
  VermaModule mod(n, top);
  auto grams = mod.gram_symbolic(top);
  UPoly out;
  for (const auto& [a, ca] : v) {
    for (const auto& [b, cb] : w) {
      if (a.size() != b.size()) continue;
      int L = static_cast<int>(a.size());
      int ia = mod.index_of(mod.exponent(a)), ib = mod.index_of(mod.exponent(b));
      out += grams[u(L)](ia, ib) * (ca.conj() * cb);
    }
  }
  return out;
}

UPoly gram_determinant(int n, int L) { return det_by_blocks(gram_matrix(n, L)); }

std::vector<ModuleVector> null_vectors(int n, int L, const GaussRational& e0) {
  VermaModule mod(n, L);
  QMatrix g = mod.gram_at(L, e0).back();
  std::vector<ModuleVector> out;
  for (const auto& k : kernel_basis(g)) {
    ModuleVector v;
    for (std::size_t j = 0; j < k.size(); ++j)
      if (!k[j].is_zero()) v[mod.monomial(L, static_cast<int>(j))] = k[j];
    out.push_back(std::move(v));
  }
  return out;
}

ModuleVector trace_vector(int n) {
  ModuleVector v;
  for (int i = 1; i <= n; ++i) v[{i, i}] = GaussRational(1);
  return v;
}

Integer quotient_dim(int n, int s) {
  if (n < 3 || s < 0) throw Error("quotient_dim needs n >= 3 and s >= 0");
  return binomial(n + s - 1, s) - binomial(n + s - 3, s - 2);
}

std::vector<DefiniteReport> unitarity_scan(int n, int L, const GaussRational& e0) {
  std::vector<DefiniteReport> out;
  for (const auto& g : VermaModule(n, L).gram_at(L, e0)) out.push_back(positive_definite(g));
  return out;
}

TraceQuotient::TraceQuotient(const VermaModule& module, int max_level) {
  if (max_level > module.max_level()) throw Error("quotient level beyond the module");
  int n = module.n();
  for (int t = 0; t <= max_level; ++t) {
    const auto& lev = module.level(t);
    int d = static_cast<int>(lev.size());
    // columns: larger x_1 exponent first, then Verma order
    std::vector<int> order(u(d));
    for (int k = 0; k < d; ++k) order[u(k)] = k;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return lev[u(a)][0] > lev[u(b)][0]; });
    std::vector<int> col(u(d));
    for (int c = 0; c < d; ++c) col[u(order[u(c)])] = c;
    SparseEchelon ech;
    if (t >= 2) {
      for (const auto& m : module.level(t - 2)) {
        SparseVec row;
        for (int j = 0; j < n; ++j) {
          auto e = m;
          e[u(j)] += 2;
          row[col[u(module.index_of(e))]] += GaussRational(1);
        }
        ech.insert(row);
      }
    }
    std::vector<int> basis, pos(u(d), -1);
    for (int k = 0; k < d; ++k) {
      if (ech.is_pivot(col[u(k)])) continue;
      pos[u(k)] = static_cast<int>(basis.size());
      basis.push_back(k);
    }
    basis_.push_back(std::move(basis));
    column_of_.push_back(std::move(col));
    verma_of_.push_back(std::move(order));
    position_.push_back(std::move(pos));
    traces_.push_back(std::move(ech));
  }
}

SparseVec TraceQuotient::reduce(int t, const SparseVec& state) const {
  SparseVec cols;
  for (const auto& [k, c] : state) cols[column_of_.at(u(t)).at(u(k))] += c;
  SparseVec res = traces_[u(t)].reduce(cols);
  SparseVec out;
  for (const auto& [c, v] : res) {
    int p = position_[u(t)][u(verma_of_[u(t)][u(c)])];
    if (p < 0) throw Error("residue on a pivot column (internal error)");
    out[p] = v;
  }
  return out;
}

int TraceQuotient::position(int t, int verma_index) const { return position_.at(u(t)).at(u(verma_index)); }

TruncatedOperator::TruncatedOperator(QMatrix m, std::vector<int> offsets, int trusted_top, int raise)
    : m_(std::move(m)), offsets_(std::move(offsets)), trusted_(trusted_top), raise_(raise) {}

void TruncatedOperator::check_level(int level) const {
  if (level < 0 || level > lmax()) throw Error("level outside the truncation");
  if (level > trusted_)
    throw Error("interior only: level " + std::to_string(level) + " is above the trusted level " +
                std::to_string(trusted_));
}

QMatrix TruncatedOperator::columns_at(int level) const {
  check_level(level);
  std::vector<int> rows, cols;
  for (int r = 0; r < m_.rows(); ++r) rows.push_back(r);
  for (int c = offsets_[u(level)]; c < offsets_[u(level + 1)]; ++c) cols.push_back(c);
  return m_.block(rows, cols);
}

QMatrix TruncatedOperator::block(int level) const {
  check_level(level);
  std::vector<int> idx;
  for (int c = offsets_[u(level)]; c < offsets_[u(level + 1)]; ++c) idx.push_back(c);
  return m_.block(idx, idx);
}

bool TruncatedOperator::equals_on(const TruncatedOperator& other, int up_to) const {
  check_level(up_to);
  other.check_level(up_to);
  if (offsets_ != other.offsets_) throw Error("operators on different truncations");
  for (int c = 0; c < offsets_[u(up_to + 1)]; ++c)
    for (int r = 0; r < m_.rows(); ++r)
      if (!(m_(r, c) == other.m_(r, c))) return false;
  return true;
}

std::optional<GaussRational> TruncatedOperator::scalar_on(int up_to) const {
  check_level(up_to);
  std::optional<GaussRational> value;
  for (int c = 0; c < offsets_[u(up_to + 1)]; ++c) {
    for (int r = 0; r < m_.rows(); ++r) {
      if (r == c) {
        if (!value) value = m_(r, c);
        else if (!(*value == m_(r, c))) return std::nullopt;
      } else if (!m_(r, c).is_zero()) {
        return std::nullopt;
      }
    }
  }
  return value;
}

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.offsets_ != b.offsets_) throw Error("operators on different truncations");
  return TruncatedOperator(a.m_ + b.m_, a.offsets_, std::min(a.trusted_, b.trusted_), std::max(a.raise_, b.raise_));
}

TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.offsets_ != b.offsets_) throw Error("operators on different truncations");
  return TruncatedOperator(a.m_ - b.m_, a.offsets_, std::min(a.trusted_, b.trusted_), std::max(a.raise_, b.raise_));
}

TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.offsets_ != b.offsets_) throw Error("operators on different truncations");
  return TruncatedOperator(a.m_ * b.m_, a.offsets_, std::min(b.trusted_, a.trusted_ - b.raise_), a.raise_ + b.raise_);
}

TruncatedOperator operator*(const GaussRational& c, const TruncatedOperator& a) {
  return TruncatedOperator(a.m_ * c, a.offsets_, a.trusted_, a.raise_);
}

Rational singleton_energy(int n) { return frac(n, 2) - 1; }

TruncatedModule::TruncatedModule(int n, int lmax, const GaussRational& e0)
    : n_(n), lmax_(lmax), e0_(e0), module_(n, lmax + 1), compact_(compact_basis(n)) {
  if (lmax < 0) throw Error("lmax must be non-negative");
  if (e0 == GaussRational(singleton_energy(n))) quotient_.emplace(module_, lmax + 1);
  offsets_.push_back(0);
  for (int t = 0; t <= lmax; ++t) offsets_.push_back(offsets_.back() + level_dim(t));
  int D = dim();
  const LieAlgebra& alg = compact_.algebra;
  GaussRational I = GaussRational::i();

  // Verma index of local basis vector p at level t
  auto verma_index = [&](int t, int p) { return quotient_ ? quotient_->basis(t)[u(p)] : p; };
  auto place = [&](QMatrix& m, int t_to, const SparseVec& verma_state, int col) {
    if (t_to > lmax) return;
    SparseVec coords = quotient_ ? quotient_->reduce(t_to, verma_state) : verma_state;
    for (const auto& [p, c] : coords) m(offsets_[u(t_to)] + p, col) += c;
  };

  for (int g = 0; g < alg.dim(); ++g) {
    const std::string& label = alg.label(g);
    QMatrix m(D, D);
    int raise = 0;
    for (int t = 0; t <= lmax; ++t) {
      for (int p = 0; p < level_dim(t); ++p) {
        int col = offsets_[u(t)] + p;
        const auto& e = module_.level(t)[u(verma_index(t, p))];
        SparseVec img;
        int to = t;
        if (label == "E") {
          img[verma_index(t, p)] = e0_ + GaussRational(t);
        } else if (label.rfind("J+[", 0) == 0) {
          int i = std::stoi(label.substr(3)) - 1;
          auto f = e;
          ++f[u(i)];
          img[module_.index_of(f)] = GaussRational(1);
          to = t + 1;
          raise = 1;
        } else if (label.rfind("J-[", 0) == 0) {
          int i = std::stoi(label.substr(3)) - 1;
          if (t == 0) continue;
          for (const auto& term : module_.lower(i, t, verma_index(t, p)))
            img[term.index] += affine_value(term.coeff, e0_);
          to = t - 1;
        } else {
          // J[i,j] = i(x_i d_j - x_j d_i)
          int i = std::stoi(label.substr(2)) - 1;
          int j = std::stoi(label.substr(label.find(',') + 1)) - 1;
          auto term = [&](int a, int b, int sign) {
            if (e[u(b)] == 0) return;
            auto f = e;
            --f[u(b)];
            ++f[u(a)];
            img[module_.index_of(f)] += I * GaussRational(sign * e[u(b)]);
          };
          term(i, j, 1);
          term(j, i, -1);
        }
        for (auto it = img.begin(); it != img.end();) it = it->second.is_zero() ? img.erase(it) : std::next(it);
        place(m, to, img, col);
      }
    }
    generators_.emplace_back(std::move(m), offsets_, lmax - raise, raise);
  }
}

int TruncatedModule::level_dim(int t) const {
  if (t < 0 || t > lmax_) throw Error("level outside the truncation");
  return quotient_ ? quotient_->level_dim(t) : module_.level_dim(t);
}

TruncatedOperator TruncatedModule::identity() const {
  return TruncatedOperator(QMatrix::identity(dim()), offsets_, lmax_, 0);
}

TruncatedOperator TruncatedModule::represent(const AlgebraElement& x) const {
  if (x.algebra != algebra().id()) throw Error("element is not in the compact basis of this module");
  TruncatedOperator out(QMatrix(dim(), dim()), offsets_, lmax_, 0);
  for (const auto& [k, c] : x.terms) out = out + c * generators_[u(k)];
  return out;
}

TruncatedOperator TruncatedModule::compact_casimir() const {
  TruncatedOperator out(QMatrix(dim(), dim()), offsets_, lmax_, 0);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      auto J = generator("J[" + std::to_string(i) + "," + std::to_string(j) + "]");
      out = out + J * J;
    }
  return out;
}

TruncatedOperator TruncatedModule::casimir() const {
  auto E = generator("E");
  TruncatedOperator out = E * E + compact_casimir();
  GaussRational half(frac(-1, 2));
  for (int i = 1; i <= n_; ++i) {
    auto p = generator("J+[" + std::to_string(i) + "]");
    auto m = generator("J-[" + std::to_string(i) + "]");
    out = out + half * (p * m + m * p);
  }
  return out;
}

std::vector<TruncatedModule::RelationFailure> TruncatedModule::check_relations() const {
  const LieAlgebra& alg = algebra();
  std::vector<RelationFailure> bad;
  for (int x = 0; x < alg.dim(); ++x) {
    for (int y = 0; y < alg.dim(); ++y) {
      TruncatedOperator lhs = commutator(generators_[u(x)], generators_[u(y)]);
      TruncatedOperator rhs = represent(alg.structure(x, y));
      int top = std::min(lhs.trusted_top(), rhs.trusted_top());
      if (top < 0) continue;
      if (!lhs.equals_on(rhs, top)) bad.push_back({alg.label(x), alg.label(y)});
    }
  }
  return bad;
}

std::vector<BranchingCheckRow> branching_check(int n, int tmax) {
  Rational e0 = singleton_energy(n);
  TruncatedModule mod(n, tmax, GaussRational(e0));
  auto E = mod.generator("E");
  auto C = mod.compact_casimir();
  std::vector<BranchingCheckRow> out;
  for (int t = 0; t <= tmax; ++t) {
    BranchingCheckRow row;
    row.t = t;
    row.quotient_dim = mod.level_dim(t);
    row.o_dim = o_dim(YoungDiagram({t}), n);
    row.expected_energy = e0 + t;
    QMatrix eb = E.block(t), cb = C.block(t);
    bool scalar = eb == QMatrix::identity(eb.rows()) * eb(0, 0) && cb == QMatrix::identity(cb.rows()) * cb(0, 0);
    row.energy = eb(0, 0);
    row.compact_casimir = cb(0, 0);
    row.pass = scalar && Integer(row.quotient_dim) == row.o_dim && row.energy == GaussRational(row.expected_energy) &&
               row.compact_casimir == GaussRational(t * (t + n - 2)) && quotient_dim(n, t) == row.o_dim;
    out.push_back(row);
  }
  return out;
}

std::optional<GaussRational> level_energy(int n, int t) {
  if (t < 0) throw Error("level must be non-negative");
  GaussRational e0(singleton_energy(n));
  VermaModule mod(n, t + 1);
  TraceQuotient q(mod, t + 1);
  auto raise = [&](int L, const SparseVec& v) {
    SparseVec out;
    for (const auto& [idx, c] : v) {
      auto f = mod.level(L)[u(idx)];
      ++f[0];
      out[mod.index_of(f)] += c;
    }
    return out;
  };
  auto lower = [&](int L, const SparseVec& v) {
    SparseVec out;
    if (L == 0) return out;
    for (const auto& [idx, c] : v)
      for (const auto& term : mod.lower(0, L, idx)) out[term.index] += c * affine_value(term.coeff, e0);
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  };
  std::optional<GaussRational> value;
  for (int p = 0; p < q.level_dim(t); ++p) {
    SparseVec v{{q.basis(t)[u(p)], GaussRational(1)}};
    SparseVec w = lower(t + 1, raise(t, v));
    SparseVec down = lower(t, v);
    if (t > 0) axpy(w, GaussRational(-1), raise(t - 1, down));
    SparseVec coords = q.reduce(t, w);
    for (auto it = coords.begin(); it != coords.end();) it = it->second.is_zero() ? coords.erase(it) : std::next(it);
    if (coords.size() != 1 || coords.begin()->first != p) return std::nullopt;
    GaussRational e = coords.begin()->second / GaussRational(2);
    if (value && !(*value == e)) return std::nullopt;
    value = e;
  }
  return value;
}

std::vector<MajoranaMass> majorana_spectrum(int n, const Rational& M, int smax) {
  if (sgn(M) <= 0) throw Error("Majorana mass parameter must be positive");
  if (smax < 0) throw Error("smax must be non-negative");
  TruncatedModule mod(n, smax, GaussRational(singleton_energy(n)));
  auto E = mod.generator("E");
  std::vector<MajoranaMass> out;
  for (int s = 0; s <= smax; ++s) {
    QMatrix b = E.block(s);
    if (!(b == QMatrix::identity(b.rows()) * b(0, 0))) throw Error("E is not scalar on a level (internal error)");
    MajoranaMass row{s, b(0, 0), GaussRational(M) / b(0, 0)};
    if (!out.empty() && !(row.mass.re() < out.back().mass.re())) throw Error("Majorana spectrum is not decreasing");
    out.push_back(row);
  }
  return out;
}

nlohmann::json to_json(const ModuleVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : v) out.push_back({{"raising", m}, {"coeff", c.to_string()}});
  return out;
}

}  // namespace hsalg
