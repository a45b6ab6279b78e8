#include <doctest.h>

#include "hsalg/youngdim/young.hpp"

using namespace hsalg;

namespace {

// Dimension from an explicit list of positive roots of B_r or D_r:
// prod over roots of (lambda + rho, alpha) / (rho, alpha), rho the half-sum.
Integer weyl_by_roots(const std::vector<int>& highest, int N) {
  int r = N / 2;
  std::vector<std::vector<Rational>> roots;
  auto unit = [&](int i, int si, int j, int sj) {
    std::vector<Rational> v(static_cast<std::size_t>(r));
    v[static_cast<std::size_t>(i)] += si;
    if (j >= 0) v[static_cast<std::size_t>(j)] += sj;
    return v;
  };
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      roots.push_back(unit(i, 1, j, -1));
      roots.push_back(unit(i, 1, j, 1));
    }
    if (N % 2 == 1) roots.push_back(unit(i, 1, -1, 0));
  }
  std::vector<Rational> rho(static_cast<std::size_t>(r));
  for (auto& a : roots)
    for (int k = 0; k < r; ++k) rho[static_cast<std::size_t>(k)] += a[static_cast<std::size_t>(k)] / 2;
  Rational dim = 1;
  for (auto& a : roots) {
    Rational num, den;
    for (int k = 0; k < r; ++k) {
      Rational lam = k < static_cast<int>(highest.size()) ? Rational(highest[static_cast<std::size_t>(k)]) : Rational(0);
      num += (lam + rho[static_cast<std::size_t>(k)]) * a[static_cast<std::size_t>(k)];
      den += rho[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)];
    }
    dim *= num / den;
  }
  return dim.get_num();
}

// O(N) dimension via roots, applying the associate rule by hand.
Integer o_oracle(const std::vector<int>& rows, int N) {
  std::vector<int> r = rows;
  int h = static_cast<int>(r.size());
  if (2 * h > N) {
    // associated diagram: first column N - h
    YoungDiagram d(rows);
    auto cols = d.columns();
    cols[0] = N - h;
    r = YoungDiagram::from_columns(cols).rows;
    h = static_cast<int>(r.size());
  }
  Integer dim = weyl_by_roots(r, N);
  if (N % 2 == 0 && h == N / 2 && h > 0) dim *= 2;
  return dim;
}

Integer gl_oracle(const std::vector<int>& rows, int N) {
  Rational dim = 1;
  auto lam = [&](int i) { return i < static_cast<int>(rows.size()) ? rows[static_cast<std::size_t>(i)] : 0; };
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) dim *= frac(lam(i) - lam(j) + j - i, j - i);
  return dim.get_num();
}

void partitions(int total, int max_part, int max_len, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(total - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("diagram parsing and shape") {
  YoungDiagram d = YoungDiagram::parse("[3,1,1]");
  CHECK(d.rows == std::vector<int>{3, 1, 1});
  CHECK(d.columns() == std::vector<int>{3, 1, 1});
  CHECK(d.boxes() == 5);
  CHECK(d.to_string() == "[3,1,1]");
  CHECK(YoungDiagram::parse("[]").rows.empty());
  CHECK(YoungDiagram::from_columns({2, 2}).rows == std::vector<int>{2, 2});
  CHECK_THROWS_AS(YoungDiagram::parse("[1,2]"), Error);
  CHECK_THROWS_AS(YoungDiagram::parse("[a]"), Error);
}

TEST_CASE("O(N) dimensions against root enumeration") {
  CHECK(o_dim(YoungDiagram(), 5) == 1);
  CHECK(o_dim(YoungDiagram({1}), 5) == 5);
  CHECK(o_dim(YoungDiagram({1, 1}), 5) == 10);
  CHECK(o_dim(YoungDiagram({2}), 5) == 14);
  CHECK(o_dim(YoungDiagram({1, 1}), 4) == 6);
  CHECK(o_dim(YoungDiagram({1, 1, 1}), 5) == 10);
  CHECK(o_dim(YoungDiagram({1}), 2) == 2);
  CHECK(o_dim(YoungDiagram({1}), 1) == 1);
  CHECK_THROWS_AS(o_dim(YoungDiagram({2, 2, 1, 1}), 5), Error);
  CHECK_THROWS_AS(o_dim(YoungDiagram({1}, true), 5), Error);
  for (int N = 3; N <= 9; ++N) {
    for (int boxes = 0; boxes <= 6; ++boxes) {
      std::vector<std::vector<int>> ps;
      std::vector<int> cur;
      partitions(boxes, boxes, N, cur, ps);
      for (auto& p : ps) {
        YoungDiagram d(p);
        auto cols = d.columns();
        int c1 = cols.empty() ? 0 : cols[0], c2 = cols.size() > 1 ? cols[1] : 0;
        if (c1 + c2 > N) {
          CHECK_THROWS_AS(o_dim(d, N), Error);
          continue;
        }
        CHECK(o_dim(d, N) == o_oracle(p, N));
      }
    }
    // symmetric traceless tensors
    for (int s = 0; s <= 5; ++s) {
      Integer sym = 1, lower = 1;
      mpz_bin_uiui(sym.get_mpz_t(), static_cast<unsigned>(N + s - 1), static_cast<unsigned>(s));
      if (s >= 2) mpz_bin_uiui(lower.get_mpz_t(), static_cast<unsigned>(N + s - 3), static_cast<unsigned>(s - 2));
      else lower = 0;
      CHECK(o_dim(YoungDiagram({s}), N) == sym - lower);
    }
  }
}

TEST_CASE("GL(N) hook-content against the Weyl product") {
  for (int N = 1; N <= 6; ++N) {
    for (int boxes = 0; boxes <= 6; ++boxes) {
      std::vector<std::vector<int>> ps;
      std::vector<int> cur;
      partitions(boxes, boxes, N, cur, ps);
      for (auto& p : ps) {
        CHECK(gl_dim(YoungDiagram(p), N) == gl_oracle(p, N));
        if (2 * static_cast<int>(p.size()) <= N) CHECK(gl_dim(YoungDiagram(p), N) >= o_dim(YoungDiagram(p), N));
      }
    }
  }
  CHECK_THROWS_AS(gl_dim(YoungDiagram({1, 1, 1}), 2), Error);
}

TEST_CASE("unitarity bounds") {
  UnitarityBound sc = unitarity_bound(4, YoungDiagram());
  CHECK(sc.kind == "scalar");
  CHECK(sc.bound == 1);
  CHECK(sc.trivial_allowed);
  UnitarityBound sp = unitarity_bound(3, YoungDiagram({}, true));
  CHECK(sp.kind == "spinor");
  CHECK(sp.bound == 1);
  UnitarityBound v = unitarity_bound(4, YoungDiagram({1}));
  CHECK(v.bound == 3);
  CHECK(v.k == 1);
  CHECK(v.twist(v.bound) == 2);
  CHECK_FALSE(v.saturates);
  UnitarityBound rect = unitarity_bound(4, YoungDiagram({2, 2}));
  CHECK(rect.bound == 3);
  CHECK(rect.saturates);
  CHECK(unitarity_bound(6, YoungDiagram({1}, true)).s == frac(3, 2));
  for (int n = 3; n <= 8; ++n)
    for (int s = 1; s <= 3; ++s)
      for (int k = 1; k <= n / 2; ++k) {
        UnitarityBound u = unitarity_bound(n, YoungDiagram(std::vector<int>(static_cast<std::size_t>(k), s)));
        CHECK(u.twist_at_bound == n - k - 1);
        CHECK(u.saturates == (2 * k == n));
      }
  CHECK_THROWS_AS(unitarity_bound(4, YoungDiagram({1, 1, 1})), Error);
}

TEST_CASE("singleton labels") {
  SingletonLabel rac = singleton_label(3, 0);
  CHECK(rac.name == "Rac");
  CHECK(rac.e0 == frac(1, 2));
  SingletonLabel di = singleton_label(3, frac(1, 2));
  CHECK(di.name == "Di");
  CHECK(di.e0 == 1);
  CHECK(di.ground.spinorial);
  SingletonLabel s1 = singleton_label(4, 1);
  CHECK(s1.e0 == 2);
  CHECK(s1.ground.rows == std::vector<int>{1, 1});
  CHECK(s1.poincare_label->rows == std::vector<int>{1});
  CHECK(s1.lower_singleton_e0 == frac(3, 2));
  CHECK_THROWS_AS(singleton_label(5, 1), Error);
  CHECK_THROWS_AS(singleton_label(4, frac(1, 3)), Error);
  CHECK_THROWS_AS(singleton_label(4, -1), Error);
  for (int n = 3; n <= 10; ++n)
    for (int twice = 0; twice <= (n % 2 ? 1 : 6); ++twice) {
      SingletonLabel lab = singleton_label(n, frac(twice, 2));
      CHECK(lab.twist == frac(n, 2) - 1);
      CHECK(unitarity_bound(n, lab.ground).bound == lab.e0);
      CHECK(lab.e0 - lab.lower_singleton_e0 == frac(1, 2));
    }
}

TEST_CASE("branching rows") {
  auto rows = branching_table(3, 0, 4);
  REQUIRE(rows.size() == 5);
  for (int t = 0; t <= 4; ++t) {
    CHECK(rows[static_cast<std::size_t>(t)].energy == frac(1, 2) + t);
    CHECK(*rows[static_cast<std::size_t>(t)].dim == 2 * t + 1);
  }
  auto four = branching_table(4, 1, 2);
  CHECK(four[0].diagram.rows == std::vector<int>{1, 1});
  CHECK(four[2].diagram.rows == std::vector<int>{3, 1});
  CHECK(*four[0].dim == 6);
  auto spin = branching_table(3, frac(1, 2), 2);
  CHECK_FALSE(spin[1].dim.has_value());
}

TEST_CASE("higher-spin adjoint diagrams") {
  auto bos = hs_adjoint_diagrams(3, 0, 6);
  REQUIRE(bos.size() == 4);
  CHECK(bos[0].diagram.rows.empty());
  CHECK(bos[1].diagram.rows == std::vector<int>{1, 1});
  CHECK(bos[1].dim == 10);
  CHECK(bos[2].diagram.rows == std::vector<int>{2, 2});
  CHECK(bos[3].diagram.rows == std::vector<int>{3, 3});
  auto sup = hs_adjoint_diagrams(4, 1, 8);
  bool seen_four_column = false;
  for (auto& h : sup) {
    auto cols = h.diagram.columns();
    for (std::size_t k = 0; k < cols.size(); ++k) {
      CHECK(cols[k] % 2 == 0);
      if (k >= 2) CHECK(cols[k] == 2);
    }
    if (cols.size() >= 2) CHECK(cols[0] + cols[1] <= 6);
    if (!cols.empty() && cols[0] == 4) seen_four_column = true;
    CHECK(h.readings_differ == (!cols.empty() && 2 * cols[0] > 6));
  }
  CHECK(seen_four_column);
}
