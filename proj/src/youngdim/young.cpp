#include "hsalg/youngdim/young.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hsalg {

YoungDiagram::YoungDiagram(std::vector<int> row_lengths, bool spin) : rows(std::move(row_lengths)), spinorial(spin) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] < 0) throw Error("negative row length");
    if (k > 0 && rows[k] > rows[k - 1]) throw Error("row lengths must be non-increasing");
    if (rows[k] == 0) throw Error("zero row inside a diagram");
  }
}

YoungDiagram YoungDiagram::from_columns(const std::vector<int>& columns) {
  std::vector<int> r;
  if (!columns.empty()) {
    r.assign(static_cast<std::size_t>(columns.front()), 0);
    for (int c : columns)
      for (int k = 0; k < c; ++k) ++r[static_cast<std::size_t>(k)];
  }
  return YoungDiagram(r);
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
  std::string body;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != ' ') body += ch;
  std::vector<int> r;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    for (char ch : item)
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw Error("bad diagram '" + text + "'");
    r.push_back(std::stoi(item));
  }
  return YoungDiagram(r);
}

std::vector<int> YoungDiagram::columns() const {
  std::vector<int> c;
  if (rows.empty()) return c;
  c.assign(static_cast<std::size_t>(rows.front()), 0);
  for (int r : rows)
    for (int k = 0; k < r; ++k) ++c[static_cast<std::size_t>(k)];
  return c;
}

int YoungDiagram::boxes() const {
  int b = 0;
  for (int r : rows) b += r;
  return b;
}

std::string YoungDiagram::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < rows.size(); ++k) out += (k ? "," : "") + std::to_string(rows[k]);
  return out + "]";
}

Integer o_dim(const YoungDiagram& d, int N) {
  if (N < 1) throw Error("o_dim needs N >= 1");
  if (d.spinorial) throw Error("spinorial labels have no o_dim here");
  std::vector<int> cols = d.columns();
  int c1 = cols.empty() ? 0 : cols[0];
  int c2 = cols.size() > 1 ? cols[1] : 0;
  if (c1 + c2 > N || c1 > N) throw Error("diagram " + d.to_string() + " is not an O(" + std::to_string(N) + ") label");
  int r = N / 2;
  if (2 * c1 > N) {
    cols[0] = N - c1;
    while (!cols.empty() && cols.back() == 0) cols.pop_back();
  }
  YoungDiagram base = YoungDiagram::from_columns(cols);
  std::vector<Rational> lambda(static_cast<std::size_t>(r));
  for (std::size_t k = 0; k < base.rows.size(); ++k) lambda[k] = base.rows[k];

  bool odd = N % 2 == 1;
  std::vector<Rational> rho(static_cast<std::size_t>(r)), l(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    rho[static_cast<std::size_t>(i)] = odd ? frac(2 * (r - i) - 1, 2) : Rational(r - i - 1);
    l[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)];
  }
  Rational dim = 1;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const Rational& li = l[static_cast<std::size_t>(i)];
      const Rational& lj = l[static_cast<std::size_t>(j)];
      const Rational& ri = rho[static_cast<std::size_t>(i)];
      const Rational& rj = rho[static_cast<std::size_t>(j)];
      dim *= (li * li - lj * lj) / (ri * ri - rj * rj);
    }
    if (odd) dim *= l[static_cast<std::size_t>(i)] / rho[static_cast<std::size_t>(i)];
  }
  if (!odd && r > 0 && sgn(lambda[static_cast<std::size_t>(r - 1)]) > 0) dim *= 2;
  if (dim.get_den() != 1) throw Error("non-integral dimension (internal error)");
  return dim.get_num();
}

Integer gl_dim(const YoungDiagram& d, int N) {
  if (N < 1) throw Error("gl_dim needs N >= 1");
  if (d.height() > N) throw Error("diagram " + d.to_string() + " has more than N rows");
  std::vector<int> cols = d.columns();
  Rational dim = 1;
  for (int i = 0; i < d.height(); ++i) {
    for (int j = 0; j < d.rows[static_cast<std::size_t>(i)]; ++j) {
      int arm = d.rows[static_cast<std::size_t>(i)] - j - 1;
      int leg = cols[static_cast<std::size_t>(j)] - i - 1;
      dim *= frac(N + j - i, arm + leg + 1);
    }
  }
  return dim.get_num();
}

nlohmann::json UnitarityBound::to_json() const {
  return {{"kind", kind},        {"s", to_string(s)}, {"k", k}, {"bound", to_string(bound)}, {"trivial_allowed", trivial_allowed},
          {"twist_at_bound", to_string(twist_at_bound)}, {"saturates", saturates}};
}

UnitarityBound unitarity_bound(int n, const YoungDiagram& d) {
  if (n < 3) throw Error("unitarity_bound needs n >= 3");
  UnitarityBound u;
  Rational half = frac(1, 2);
  if (d.height() > n / 2) throw Error("ground-state diagram has more than [n/2] rows");
  if (d.rows.empty()) {
    if (d.spinorial) {
      u.kind = "spinor";
      u.s = half;
      u.bound = frac(n - 1, 2);
    } else {
      u.kind = "scalar";
      u.s = 0;
      u.bound = frac(n, 2) - 1;
      u.trivial_allowed = true;
    }
  } else {
    u.kind = "spin-s";
    u.s = Rational(d.rows.front()) + (d.spinorial ? half : Rational(0));
    int k = 0;
    while (k < d.height() && d.rows[static_cast<std::size_t>(k)] == d.rows.front()) ++k;
    u.k = k;
    u.bound = u.s + n - k - 1;
  }
  u.twist_at_bound = u.bound - u.s;
  u.saturates = u.twist_at_bound == frac(n, 2) - 1;
  if (u.kind == "spin-s" && u.saturates != (2 * u.k == n)) throw Error("twist saturation mismatch (internal error)");
  return u;
}

nlohmann::json SingletonLabel::to_json() const {
  nlohmann::json j = {{"n", n},
                      {"s", to_string(s)},
                      {"E0", to_string(e0)},
                      {"name", name},
                      {"ground", ground.to_string()},
                      {"ground_spinorial", ground.spinorial},
                      {"twist", to_string(twist)},
                      {"lower_singleton_E0", to_string(lower_singleton_e0)}};
  if (poincare_label) j["poincare_label"] = poincare_label->to_string();
  return j;
}

SingletonLabel singleton_label(int n, const Rational& s) {
  if (n < 3) throw Error("singleton_label needs n >= 3");
  Rational two_s = 2 * s;
  if (sgn(s) < 0 || two_s.get_den() != 1) throw Error("spin must be a non-negative half-integer");
  bool half_integer = two_s.get_num() % 2 != 0;
  if (n % 2 == 1 && s >= 1) throw Error("spin s >= 1 singletons need n even");
  SingletonLabel lab;
  lab.n = n;
  lab.s = s;
  lab.e0 = s + frac(n, 2) - 1;
  lab.twist = lab.e0 - s;
  Integer floor_s = half_integer ? Integer((two_s.get_num() - 1) / 2) : s.get_num();
  int fs = static_cast<int>(floor_s.get_si());
  lab.ground = YoungDiagram(std::vector<int>(static_cast<std::size_t>(fs > 0 ? n / 2 : 0), fs), half_integer);
  if (n == 3 && s == 0) {
    lab.name = "Rac";
  } else if (n == 3 && half_integer) {
    lab.name = "Di";
  } else if (s == 0) {
    lab.name = "scalar singleton";
  } else if (s == frac(1, 2)) {
    lab.name = "spinor singleton";
  } else {
    lab.name = "spin-" + to_string(s) + " singleton";
  }
  if (n % 2 == 0) {
    lab.poincare_label = YoungDiagram(std::vector<int>(static_cast<std::size_t>(fs > 0 ? n / 2 - 1 : 0), fs), half_integer);
  }
  lab.lower_singleton_e0 = s - 1 + frac(n - 1, 2);
  if (lab.lower_singleton_e0 == lab.e0) throw Error("singleton energies coincide (internal error)");
  UnitarityBound u = unitarity_bound(n, lab.ground);
  if (u.bound != lab.e0) throw Error("singleton does not saturate its unitarity bound (internal error)");
  return lab;
}

std::vector<BranchingRow> branching_table(int n, const Rational& s, int tmax) {
  SingletonLabel lab = singleton_label(n, s);
  int fs = lab.ground.rows.empty() ? 0 : lab.ground.rows.front();
  std::vector<BranchingRow> out;
  for (int t = 0; t <= tmax; ++t) {
    std::vector<int> rows{fs + t};
    for (int k = 1; k < n / 2; ++k) rows.push_back(fs);
    BranchingRow row;
    row.t = t;
    row.energy = lab.e0 + t;
    row.diagram = YoungDiagram(rows, lab.ground.spinorial);
    if (!row.diagram.spinorial) row.dim = o_dim(row.diagram, n);
    out.push_back(row);
  }
  return out;
}

std::vector<HsDiagram> hs_adjoint_diagrams(int n, int s, int max_boxes) {
  if (n < 3 || s < 0 || max_boxes < 0) throw Error("hs_adjoint_diagrams needs n >= 3, s >= 0, max_boxes >= 0");
  int N = n + 2;
  std::vector<HsDiagram> out;
  std::vector<int> cols;
  std::function<void(int)> extend = [&](int boxes) {
    YoungDiagram d = YoungDiagram::from_columns(cols);
    HsDiagram h{d, o_dim(d, N), !cols.empty() && 2 * cols[0] > N};
    out.push_back(h);
    int k = static_cast<int>(cols.size());
    int cap = cols.empty() ? N : cols.back();
    if (k == 1) cap = std::min(cap, N - cols[0]);
    if (k >= 2 * s) cap = std::min(cap, 2);
    for (int c = 2; c <= cap; c += 2) {
      if (boxes + c > max_boxes) break;
      cols.push_back(c);
      extend(boxes + c);
      cols.pop_back();
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), [](const HsDiagram& a, const HsDiagram& b) {
    if (a.diagram.boxes() != b.diagram.boxes()) return a.diagram.boxes() < b.diagram.boxes();
    return a.diagram.rows > b.diagram.rows;
  });
  return out;
}

}  // namespace hsalg
