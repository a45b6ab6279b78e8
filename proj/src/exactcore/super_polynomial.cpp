#include "hsalg/exactcore/super_polynomial.hpp"

#include <numeric>
#include <set>

namespace hsalg {

namespace {

std::uint64_t bits_above(int slot) {
  return slot >= 63 ? 0 : ~((std::uint64_t{2} << slot) - 1);
}

std::uint64_t bits_below(int slot) { return (std::uint64_t{1} << slot) - 1; }

}  // namespace

VariableTable::VariableTable(std::vector<std::pair<std::string, Parity>> vars) {
  std::set<std::string> seen;
  for (auto& [name, parity] : vars) {
    if (!seen.insert(name).second) throw Error("duplicate variable name '" + name + "'");
    int v = static_cast<int>(names_.size());
    names_.push_back(name);
    parities_.push_back(parity);
    if (parity == Parity::Even) {
      slots_.push_back(static_cast<int>(even_vars_.size()));
      even_vars_.push_back(v);
    } else {
      slots_.push_back(static_cast<int>(odd_vars_.size()));
      odd_vars_.push_back(v);
    }
  }
  if (odd_count() > kMaxOdd) throw Error("at most 64 odd variables are supported");
}

int VariableTable::index_of(const std::string& name) const {
  for (int v = 0; v < size(); ++v) {
    if (names_[static_cast<std::size_t>(v)] == name) return v;
  }
  throw Error("unknown variable '" + name + "'");
}

int Monomial::degree() const {
  return std::accumulate(even.begin(), even.end(), 0) + odd_degree();
}

std::optional<std::pair<Monomial, int>> multiply_monomials(const Monomial& a, const Monomial& b) {
  if (a.odd & b.odd) return std::nullopt;
  int swaps = 0;
  for (std::uint64_t rest = b.odd; rest != 0; rest &= rest - 1) {
    int slot = __builtin_ctzll(rest);
    swaps += __builtin_popcountll(a.odd & bits_above(slot));
  }
  Monomial m;
  m.even.resize(std::max(a.even.size(), b.even.size()));
  for (std::size_t k = 0; k < m.even.size(); ++k) {
    int e = (k < a.even.size() ? a.even[k] : 0) + (k < b.even.size() ? b.even[k] : 0);
    if (e > 255) throw Error("monomial exponent overflow");
    m.even[k] = static_cast<std::uint8_t>(e);
  }
  m.odd = a.odd | b.odd;
  return std::make_pair(std::move(m), (swaps & 1) ? -1 : 1);
}

SuperPolynomial::SuperPolynomial(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw Error("null variable table");
}

SuperPolynomial SuperPolynomial::constant(VarTablePtr vars, const GaussRational& c) {
  SuperPolynomial p(std::move(vars));
  p.add_term(p.unit_monomial(), c);
  return p;
}

SuperPolynomial SuperPolynomial::variable(VarTablePtr vars, int v) {
  SuperPolynomial p(std::move(vars));
  Monomial m = p.unit_monomial();
  int slot = p.vars_->slot(v);
  if (p.vars_->parity(v) == Parity::Even) {
    m.even[static_cast<std::size_t>(slot)] = 1;
  } else {
    m.odd = std::uint64_t{1} << slot;
  }
  p.add_term(m, GaussRational(1));
  return p;
}

SuperPolynomial SuperPolynomial::variable(VarTablePtr vars, const std::string& name) {
  int v = vars->index_of(name);
  return variable(std::move(vars), v);
}

Monomial SuperPolynomial::unit_monomial() const {
  Monomial m;
  m.even.assign(static_cast<std::size_t>(vars_->even_count()), 0);
  return m;
}

int SuperPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

GaussRational SuperPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussRational() : it->second;
}

void SuperPolynomial::add_term(const Monomial& m, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<Parity> SuperPolynomial::parity() const {
  std::optional<Parity> p;
  for (const auto& [m, c] : terms_) {
    if (p && *p != m.parity()) return std::nullopt;
    p = m.parity();
  }
  return p;
}

SuperPolynomial SuperPolynomial::even_part() const {
  SuperPolynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.parity() == Parity::Even) out.terms_.emplace(m, c);
  }
  return out;
}

SuperPolynomial SuperPolynomial::odd_part() const {
  SuperPolynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.parity() == Parity::Odd) out.terms_.emplace(m, c);
  }
  return out;
}

SuperPolynomial SuperPolynomial::homogeneous_part(int d) const {
  SuperPolynomial out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) out.terms_.emplace(m, c);
  }
  return out;
}

SuperPolynomial SuperPolynomial::left_derivative(int v) const {
  SuperPolynomial out(vars_);
  int slot = vars_->slot(v);
  if (vars_->parity(v) == Parity::Even) {
    for (const auto& [m, c] : terms_) {
      int e = m.even[static_cast<std::size_t>(slot)];
      if (e == 0) continue;
      Monomial d = m;
      d.even[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(e - 1);
      out.add_term(d, c * GaussRational(e));
    }
    return out;
  }
  std::uint64_t bit = std::uint64_t{1} << slot;
  for (const auto& [m, c] : terms_) {
    if (!(m.odd & bit)) continue;
    Monomial d = m;
    d.odd &= ~bit;
    bool flip = __builtin_popcountll(m.odd & bits_below(slot)) & 1;
    out.add_term(d, flip ? -c : c);
  }
  return out;
}

SuperPolynomial SuperPolynomial::right_derivative(int v) const {
  if (vars_->parity(v) == Parity::Even) return left_derivative(v);
  SuperPolynomial out(vars_);
  int slot = vars_->slot(v);
  std::uint64_t bit = std::uint64_t{1} << slot;
  for (const auto& [m, c] : terms_) {
    if (!(m.odd & bit)) continue;
    Monomial d = m;
    d.odd &= ~bit;
    bool flip = __builtin_popcountll(m.odd & bits_above(slot)) & 1;
    out.add_term(d, flip ? -c : c);
  }
  return out;
}

void SuperPolynomial::check_same_table(const SuperPolynomial& o) const {
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) throw Error("polynomials over different variable tables");
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  check_same_table(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  check_same_table(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, k] : terms_) k *= c;
  return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  a.check_same_table(b);
  SuperPolynomial out(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto prod = multiply_monomials(ma, mb);
      if (!prod) continue;
      GaussRational c = ca * cb;
      out.add_term(prod->first, prod->second < 0 ? -c : c);
    }
  }
  return out;
}

bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
  return (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) && a.terms_ == b.terms_;
}

SuperPolynomial poly_mul(const SuperPolynomial& p, const SuperPolynomial& q) { return p * q; }

std::string SuperPolynomial::monomial_string(const Monomial& m) const {
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += "*";
    out += s;
  };
  for (int s = 0; s < vars_->even_count(); ++s) {
    int e = m.even[static_cast<std::size_t>(s)];
    if (e == 0) continue;
    std::string name = vars_->name(vars_->even_var(s));
    append(e == 1 ? name : name + "^" + std::to_string(e));
  }
  for (int s = 0; s < vars_->odd_count(); ++s) {
    if (m.odd & (std::uint64_t{1} << s)) append(vars_->name(vars_->odd_var(s)));
  }
  return out.empty() ? "1" : out;
}

std::string SuperPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest degree first reads more naturally.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](auto* a, auto* b) { return a->first.degree() > b->first.degree(); });
  for (const auto* t : order) {
    std::string cs = t->second.to_string();
    bool compound = !t->second.is_real() && sgn(t->second.re()) != 0;
    if (compound) cs = "(" + cs + ")";
    std::string ms = monomial_string(t->first);
    if (!out.empty()) {
      out += cs.front() == '-' ? " - " : " + ";
      if (cs.front() == '-') cs.erase(0, 1);
    }
    if (ms == "1") {
      out += cs;
    } else if (cs == "1") {
      out += ms;
    } else if (cs == "-1") {
      out += "-" + ms;
    } else {
      out += cs + "*" + ms;
    }
  }
  return out;
}

nlohmann::json SuperPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    arr.push_back({{"monomial", monomial_string(m)}, {"coefficient", c.to_string()}});
  }
  return arr;
}

}  // namespace hsalg
