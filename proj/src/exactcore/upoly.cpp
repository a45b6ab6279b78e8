#include "hsalg/exactcore/upoly.hpp"

#include <algorithm>
#include <set>

namespace hsalg {

UPoly::UPoly(GaussRational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<GaussRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::x() { return monomial(GaussRational(1), 1); }

UPoly UPoly::monomial(GaussRational c, int degree) {
  UPoly p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, GaussRational());
  p.coeffs_.back() = std::move(c);
  return p;
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussRational UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

const GaussRational& UPoly::leading() const {
  if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool UPoly::has_real_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GaussRational& c) { return c.is_real(); });
}

GaussRational UPoly::evaluate(const GaussRational& at) const {
  GaussRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<GaussRational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d.push_back(coeffs_[k] * GaussRational(static_cast<long>(k)));
  }
  return UPoly(std::move(d));
}

UPoly UPoly::conj() const {
  UPoly p = *this;
  for (auto& c : p.coeffs_) c = c.conj();
  return p;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly p = *this;
  GaussRational inv = leading().inverse();
  for (auto& c : p.coeffs_) c *= inv;
  return p;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UPoly(std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& k : coeffs_) k *= c;
  return *this;
}

UPoly operator-(UPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  UPoly rem = a;
  if (rem.degree() < b.degree()) return {UPoly(), rem};
  std::vector<GaussRational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  GaussRational inv_lead = b.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    GaussRational f = rem.leading() * inv_lead;
    quot[static_cast<std::size_t>(shift)] = f;
    for (int k = 0; k <= b.degree(); ++k) {
      rem.coeffs_[static_cast<std::size_t>(k + shift)] -= f * b.coeffs_[static_cast<std::size_t>(k)];
    }
    rem.coeffs_.back() = GaussRational();  // exact cancellation of the leading term
    rem.trim();
  }
  return {UPoly(std::move(quot)), rem};
}

UPoly UPoly::exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const GaussRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) cs = "(" + cs + ")";
    if (!out.empty()) out += cs.front() == '-' ? " - " : " + ";
    if (!out.empty() && cs.front() == '-') cs.erase(0, 1);
    if (k == 0) {
      out += cs;
      continue;
    }
    if (cs == "1") {
      cs.clear();
    } else if (cs == "-1") {
      cs = "-";
    } else {
      cs += "*";
    }
    out += cs + var + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out;
}

std::vector<std::pair<UPoly, int>> squarefree_factors(const UPoly& p) {
  if (p.is_zero()) throw Error("square-free decomposition of the zero polynomial");
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm (characteristic zero).
  UPoly a = p.monic();
  UPoly b = a.derivative();
  UPoly c = UPoly::gcd(a, b);
  UPoly w = UPoly::exact_div(a, c);
  UPoly y = UPoly::exact_div(b, c);
  UPoly z = y - w.derivative();
  int mult = 1;
  while (w.degree() > 0) {
    UPoly g = UPoly::gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, mult);
    w = UPoly::exact_div(w, g);
    y = UPoly::exact_div(z, g);
    z = y - w.derivative();
    ++mult;
  }
  return out;
}

namespace {

int sign_at(const UPoly& p, const Rational& x) { return sgn(p.evaluate(GaussRational(x)).re()); }

struct SturmChain {
  std::vector<UPoly> chain;

  explicit SturmChain(const UPoly& f) {
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero()) {
      UPoly r = UPoly::divmod(chain[chain.size() - 2], chain.back()).second;
      if (r.is_zero()) break;
      chain.push_back(-r);
    }
  }

  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : chain) {
      int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }
};

Rational floor_q(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

// Distinct rational roots of a square-free polynomial with rational coefficients.
void squarefree_rational_roots(const UPoly& f, std::set<Rational>& roots) {
  // Primitive integer form: only the leading coefficient size matters for the spacing argument.
  Integer lcm_den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.re().get_den_mpz_t());
  Integer content = 0;
  for (const auto& c : f.coeffs()) {
    Rational scaled = c.re() * Rational(lcm_den);
    Integer num = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rational lead_q = f.leading().re() * Rational(lcm_den) / Rational(content);
  Integer lead = lead_q.get_num();
  Rational spacing(1, abs(lead));  // every rational root is a multiple of this

  // Cauchy bound.
  Rational bound = 0;
  for (int k = 0; k < f.degree(); ++k) {
    Rational r = abs(f.coeff(k).re() / f.leading().re());
    if (r > bound) bound = r;
  }
  bound += 1;

  SturmChain sturm(f);
  auto is_root = [&](const Rational& x) { return sign_at(f, x) == 0; };

  // Isolate on open intervals whose endpoints are not roots.
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int count = sturm.variations(a) - sturm.variations(b);
    if (count == 0) continue;
    if (count == 1 && b - a < spacing) {
      Rational m = floor_q(a / spacing) + 1;
      for (; m * spacing < b; m += 1) {
        Rational cand = m * spacing;
        if (is_root(cand)) roots.insert(cand);
      }
      continue;
    }
    // Choose a split point that is not itself a root, recording any root hit on the way.
    Rational mid;
    for (int k = 1;; ++k) {
      Rational frac = k == 1 ? Rational(1, 2) : Rational(k, 2 * k + 1);
      mid = a + (b - a) * frac;
      if (!is_root(mid)) break;
      roots.insert(mid);
    }
    stack.emplace_back(a, mid);
    stack.emplace_back(mid, b);
  }
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw Error("rational_roots: zero polynomial");
  if (!p.has_real_coefficients()) throw Error("rational_roots: coefficients must be real");
  std::vector<Rational> out;
  for (const auto& [factor, mult] : squarefree_factors(p)) {
    std::set<Rational> roots;
    squarefree_rational_roots(factor, roots);
    for (const auto& r : roots) out.insert(out.end(), static_cast<std::size_t>(mult), r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hsalg
