#include "hsalg/liealg/algebras.hpp"

namespace hsalg {

namespace {

GaussRational I() { return GaussRational::i(); }

void check_n(int n) {
  if (n < 3) throw Error("o(n,2) needs n >= 3");
}

std::vector<GaussRational> coords(const AlgebraElement& x, int dim) {
  std::vector<GaussRational> v(static_cast<std::size_t>(dim));
  for (const auto& [k, c] : x.terms) v[static_cast<std::size_t>(k)] = c;
  return v;
}

}  // namespace

std::string ambient_index_name(int a) {
  if (a == 0) return "0";
  if (a == 1) return "0'";
  return std::to_string(a - 1);
}

int ambient_metric(int a) { return a < 2 ? -1 : 1; }

int o_n2_index(int n, int a, int b) {
  int N = n + 2;
  if (a < 0 || b >= N || a >= b) throw Error("o_n2_index needs 0 <= a < b < n+2");
  // Row-major count of pairs preceding (a, b).
  return a * N - a * (a + 1) / 2 + (b - a - 1);
}

AlgebraElement ambient_generator(const LieAlgebra& o, int n, int a, int b) {
  if (a == b) return o.zero();
  if (a < b) return o.basis(o_n2_index(n, a, b));
  return o.basis(o_n2_index(n, b, a)) * GaussRational(-1);
}

LieAlgebra o_n2(int n) {
  check_n(n);
  int N = n + 2;
  std::vector<std::string> labels;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) labels.push_back("J[" + ambient_index_name(a) + "," + ambient_index_name(b) + "]");
  LieAlgebra o("o(" + std::to_string(n) + ",2)", labels, std::vector<Parity>(labels.size(), Parity::Even));
  auto eta = [](int a, int b) { return a == b ? ambient_metric(a) : 0; };
  for (int A = 0; A < N; ++A) {
    for (int B = A + 1; B < N; ++B) {
      for (int C = 0; C < N; ++C) {
        for (int D = C + 1; D < N; ++D) {
          AlgebraElement v = o.zero();
          v += ambient_generator(o, n, A, D) * GaussRational(eta(B, C));
          v -= ambient_generator(o, n, B, D) * GaussRational(eta(A, C));
          v -= ambient_generator(o, n, A, C) * GaussRational(eta(B, D));
          v += ambient_generator(o, n, B, C) * GaussRational(eta(A, D));
          v *= I();
          o.set_bracket_entry(o_n2_index(n, A, B), o_n2_index(n, C, D), v);
        }
      }
    }
  }
  return o;
}

AlgebraElement BasisChange::to_old(const AlgebraElement& x) const {
  if (x.algebra != algebra.id()) throw Error("element is not in the new basis");
  auto v = mat_vec(to_source, coords(x, algebra.dim()));
  AlgebraElement out = source.zero();
  for (int k = 0; k < source.dim(); ++k) out.add(k, v[static_cast<std::size_t>(k)]);
  return out;
}

AlgebraElement BasisChange::to_new(const AlgebraElement& x) const {
  if (x.algebra != source.id()) throw Error("element is not in the source basis");
  auto v = mat_vec(from_source, coords(x, source.dim()));
  AlgebraElement out = algebra.zero();
  for (int k = 0; k < algebra.dim(); ++k) out.add(k, v[static_cast<std::size_t>(k)]);
  return out;
}

BasisChange change_basis(const LieAlgebra& source, std::string name, std::vector<std::string> labels,
                         const std::vector<AlgebraElement>& images) {
  int d = source.dim();
  if (static_cast<int>(images.size()) != d || static_cast<int>(labels.size()) != d) {
    throw Error("change_basis needs exactly dim images and labels");
  }
  std::vector<Parity> parities;
  QMatrix to_source(d, d);
  for (int k = 0; k < d; ++k) {
    const auto& img = images[static_cast<std::size_t>(k)];
    if (img.algebra != source.id()) throw Error("image from another presentation");
    if (img.is_zero()) throw Error("zero basis image");
    Parity p = source.parity(img.terms.begin()->first);
    for (const auto& [j, c] : img.terms) {
      if (source.parity(j) != p) throw Error("basis image of mixed parity");
      to_source(j, k) = c;
    }
    parities.push_back(p);
  }
  QMatrix from_source = inverse(to_source);
  LieAlgebra alg(std::move(name), std::move(labels), parities);
  BasisChange bc{source, alg, to_source, from_source};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      AlgebraElement b = source.bracket(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
      bc.algebra.set_bracket_entry(i, j, bc.to_new(b));
    }
  }
  return bc;
}

BasisChange compact_basis(int n) {
  check_n(n);
  LieAlgebra o = o_n2(n);
  std::vector<std::string> labels{"E"};
  std::vector<AlgebraElement> images{ambient_generator(o, n, 1, 0)};
  for (int i = 1; i <= n; ++i) {
    AlgebraElement j0 = ambient_generator(o, n, 0, i + 1);
    AlgebraElement j0p = ambient_generator(o, n, 1, i + 1);
    labels.push_back("J+[" + std::to_string(i) + "]");
    images.push_back(j0 - j0p * I());
    labels.push_back("J-[" + std::to_string(i) + "]");
    images.push_back(j0 + j0p * I());
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      labels.push_back("J[" + std::to_string(i) + "," + std::to_string(j) + "]");
      images.push_back(ambient_generator(o, n, i + 1, j + 1));
    }
  }
  return change_basis(o, "o(" + std::to_string(n) + ",2) compact", std::move(labels), images);
}

ConformalBasis conformal_basis(int n) {
  check_n(n);
  LieAlgebra o = o_n2(n);
  const int zp = 1;      // 0'
  const int xn = n + 1;  // ambient index n
  // dX^{0'}/dX^{+-} = 1/2, dX^n/dX^{+-} = +-1/2.
  const Rational half(1, 2);
  auto lc = [&](int sign, int b) {
    AlgebraElement e = ambient_generator(o, n, zp, b) * GaussRational(half);
    e += ambient_generator(o, n, xn, b) * GaussRational(half * sign);
    return e;
  };
  auto boundary = [&](int mu) { return mu == 0 ? 0 : mu + 1; };
  std::vector<std::string> labels;
  std::vector<AlgebraElement> images;
  for (int mu = 0; mu < n; ++mu) {
    labels.push_back("P[" + std::to_string(mu) + "]");
    images.push_back(lc(+1, boundary(mu)) * GaussRational(half));
  }
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu + 1; nu < n; ++nu) {
      labels.push_back("J[" + std::to_string(mu) + "," + std::to_string(nu) + "]");
      images.push_back(ambient_generator(o, n, boundary(mu), boundary(nu)));
    }
  }
  // J_{+-} = (1/2)(J_{0' .} + J_{n .}) contracted with (1/2)(delta_{0'} - delta_n).
  AlgebraElement dil = o.zero();
  dil += lc(+1, zp) * GaussRational(half);
  dil -= lc(+1, xn) * GaussRational(half);
  labels.push_back("D");
  images.push_back(dil);
  for (int mu = 0; mu < n; ++mu) {
    labels.push_back("K[" + std::to_string(mu) + "]");
    images.push_back(lc(-1, boundary(mu)));
  }
  BasisChange bc = change_basis(o, "o(" + std::to_string(n) + ",2) conformal", std::move(labels), images);

  Rational eta_pm = ambient_metric(zp) * half * half + ambient_metric(xn) * half * (-half);
  AlgebraElement dp = bc.algebra.bracket(bc.algebra.basis("D"), bc.algebra.basis("P[0]"));
  GaussRational weight = dp.coeff(bc.algebra.index_of("P[0]"));
  return {bc, eta_pm, weight};
}

LieAlgebra subalgebra(const LieAlgebra& alg, std::string name, const std::vector<int>& indices) {
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  std::map<int, int> position;
  for (int k : indices) {
    position[k] = static_cast<int>(labels.size());
    labels.push_back(alg.label(k));
    parities.push_back(alg.parity(k));
  }
  LieAlgebra sub(std::move(name), labels, parities);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      const AlgebraElement& s = alg.structure(indices[i], indices[j]);
      AlgebraElement v = sub.zero();
      for (const auto& [k, c] : s.terms) {
        auto it = position.find(k);
        if (it == position.end()) throw Error("span is not closed under the bracket: " + alg.label(k));
        v.add(it->second, c);
      }
      sub.set_bracket_entry(static_cast<int>(i), static_cast<int>(j), v);
    }
  }
  return sub;
}

LieAlgebra poincare(int n) {
  ConformalBasis cb = conformal_basis(n);
  const LieAlgebra& alg = cb.change.algebra;
  std::vector<int> idx;
  for (int k = 0; k < alg.dim(); ++k) {
    const std::string& l = alg.label(k);
    if (l[0] == 'P' || l[0] == 'J') idx.push_back(k);
  }
  return subalgebra(alg, "io(" + std::to_string(n - 1) + ",1)", idx);
}

ParametricLieAlgebra contract_inonu_wigner(int n) {
  check_n(n);
  LieAlgebra o = o_n2(n);
  // Ambient indices without 0': 0, 2, ..., n+1.
  std::vector<int> rest{0};
  for (int a = 2; a < n + 2; ++a) rest.push_back(a);
  std::vector<std::string> labels;
  std::vector<int> weight;
  std::vector<std::pair<int, int>> source_of;  // (source index, sign)
  std::map<int, int> target_of;                // source index -> new index
  std::vector<int> target_sign(static_cast<std::size_t>(o.dim()), 1);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      int src = o_n2_index(n, rest[i], rest[j]);
      target_of[src] = static_cast<int>(labels.size());
      labels.push_back("J[" + ambient_index_name(rest[i]) + "," + ambient_index_name(rest[j]) + "]");
      weight.push_back(0);
      source_of.emplace_back(src, 1);
    }
  }
  for (int a : rest) {
    // G_a = t J_{0'a}; J_{0'0} = -J_{00'}.
    int src = a == 0 ? o_n2_index(n, 0, 1) : o_n2_index(n, 1, a);
    int sign = a == 0 ? -1 : 1;
    target_of[src] = static_cast<int>(labels.size());
    target_sign[static_cast<std::size_t>(src)] = sign;
    labels.push_back("G[" + ambient_index_name(a) + "]");
    weight.push_back(1);
    source_of.emplace_back(src, sign);
  }
  ParametricLieAlgebra out("o(" + std::to_string(n) + ",2) contraction", labels,
                           std::vector<Parity>(labels.size(), Parity::Even));
  int d = static_cast<int>(labels.size());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      auto [si, gi] = source_of[static_cast<std::size_t>(i)];
      auto [sj, gj] = source_of[static_cast<std::size_t>(j)];
      const AlgebraElement& s = o.structure(si, sj);
      ParametricLieAlgebra::Element v = out.zero();
      for (const auto& [k, c] : s.terms) {
        int m = target_of.at(k);
        int power = weight[static_cast<std::size_t>(i)] + weight[static_cast<std::size_t>(j)] -
                    weight[static_cast<std::size_t>(m)];
        if (power < 0) throw Error("contraction would need negative powers of 1/R");
        // old_k = sign_k * t^{-w_m} new_m.
        GaussRational coeff = c * GaussRational(gi * gj * target_sign[static_cast<std::size_t>(k)]);
        v.add(m, UPoly::monomial(coeff, power));
      }
      out.set_bracket_entry(i, j, v);
    }
  }
  return out;
}

LieAlgebra specialize(const ParametricLieAlgebra& alg, const GaussRational& at) {
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  for (int k = 0; k < alg.dim(); ++k) {
    labels.push_back(alg.label(k));
    parities.push_back(alg.parity(k));
  }
  LieAlgebra out(alg.name() + " at t=" + at.to_string(), labels, parities);
  for (int i = 0; i < alg.dim(); ++i) {
    for (int j = 0; j < alg.dim(); ++j) {
      AlgebraElement v = out.zero();
      for (const auto& [k, c] : alg.structure(i, j).terms) v.add(k, c.evaluate(at));
      out.set_bracket_entry(i, j, v);
    }
  }
  return out;
}

int osp_index_count(int s) {
  if (s < 0) throw Error("osp needs s >= 0");
  return 2 + 2 * s;
}

std::string osp_index_name(int s, int a) {
  if (a < 0 || a >= osp_index_count(s)) throw Error("osp index out of range");
  if (a < 2) return std::to_string(a + 1);
  if (a < 2 + s) return "th" + std::to_string(a - 1);
  return "pi" + std::to_string(a - 1 - s);
}

Parity osp_index_parity(int s, int a) {
  if (a < 0 || a >= osp_index_count(s)) throw Error("osp index out of range");
  return a < 2 ? Parity::Even : Parity::Odd;
}

int osp_form(int s, int a, int b) {
  if (a == 0 && b == 1) return 1;
  if (a == 1 && b == 0) return -1;
  if (a >= 2 && b >= 2) {
    bool a_th = a < 2 + s, b_th = b < 2 + s;
    if (a_th != b_th) {
      int ia = a_th ? a - 2 : a - 2 - s;
      int ib = b_th ? b - 2 : b - 2 - s;
      return ia == ib ? 1 : 0;
    }
  }
  return 0;
}

namespace {

struct OspLayout {
  int s;
  std::vector<std::pair<int, int>> gens;  // (a, b) with a <= b
  std::map<std::pair<int, int>, int> index;
};

OspLayout osp_layout(int s) {
  OspLayout l{s, {}, {}};
  int m = osp_index_count(s);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      if (a == b && osp_index_parity(s, a) == Parity::Odd) continue;
      l.index[{a, b}] = static_cast<int>(l.gens.size());
      l.gens.emplace_back(a, b);
    }
  }
  return l;
}

}  // namespace

std::pair<int, int> osp_generator(int s, int a, int b) {
  static thread_local std::map<int, OspLayout> cache;
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, osp_layout(s)).first;
  const OspLayout& l = it->second;
  if (a == b && osp_index_parity(s, a) == Parity::Odd) return {-1, 0};
  if (a <= b) return {l.index.at({a, b}), 1};
  int pa = parity_bit(osp_index_parity(s, a)), pb = parity_bit(osp_index_parity(s, b));
  return {l.index.at({b, a}), (pa & pb) ? -1 : 1};
}

LieAlgebra osp(int s) {
  OspLayout l = osp_layout(s);
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  for (auto [a, b] : l.gens) {
    labels.push_back("t[" + osp_index_name(s, a) + "," + osp_index_name(s, b) + "]");
    int p = parity_bit(osp_index_parity(s, a)) ^ parity_bit(osp_index_parity(s, b));
    parities.push_back(p ? Parity::Odd : Parity::Even);
  }
  LieAlgebra alg(s == 0 ? std::string("sp(2)") : "osp(" + std::to_string(2 * s) + "|2)", labels, parities);
  auto p = [&](int a) { return parity_bit(osp_index_parity(s, a)); };
  auto t = [&](int a, int b) {
    auto [k, sign] = osp_generator(s, a, b);
    if (k < 0) return alg.zero();
    return alg.basis(k) * GaussRational(sign);
  };
  auto sg = [](int bits) { return GaussRational((bits & 1) ? -1 : 1); };
  int d = static_cast<int>(l.gens.size());
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      auto [al, be] = l.gens[static_cast<std::size_t>(x)];
      auto [ga, de] = l.gens[static_cast<std::size_t>(y)];
      AlgebraElement v = alg.zero();
      v += t(al, de) * GaussRational(osp_form(s, be, ga));
      v += t(al, ga) * (GaussRational(osp_form(s, be, de)) * sg(p(be) * p(ga)));
      AlgebraElement w = alg.zero();
      w += t(de, be) * GaussRational(osp_form(s, al, ga));
      w += t(ga, be) * (GaussRational(osp_form(s, al, de)) * sg(p(al) * p(ga)));
      v += w * sg(p(be) * (p(ga) + p(de)));
      alg.set_bracket_entry(x, y, v * I());
    }
  }
  return alg;
}

LieAlgebra sp2() { return osp(0); }

LieAlgebra gl(int s) {
  if (s < 1) throw Error("gl(s) needs s >= 1");
  std::vector<std::string> labels;
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j) labels.push_back("e[" + std::to_string(i) + "," + std::to_string(j) + "]");
  LieAlgebra alg("gl(" + std::to_string(s) + ")", labels, std::vector<Parity>(labels.size(), Parity::Even));
  auto idx = [s](int i, int j) { return (i - 1) * s + (j - 1); };
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j)
      for (int k = 1; k <= s; ++k)
        for (int l = 1; l <= s; ++l) {
          AlgebraElement v = alg.zero();
          if (j == k) v += alg.basis(idx(i, l));
          if (i == l) v -= alg.basis(idx(k, j));
          alg.set_bracket_entry(idx(i, j), idx(k, l), v);
        }
  return alg;
}

}  // namespace hsalg
