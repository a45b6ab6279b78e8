#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hsalg/exactcore/gauss_rational.hpp"

namespace hsalg {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int parity_bit(Parity p) { return p == Parity::Odd ? 1 : 0; }

/// Ordered, immutable list of named variables. Even variables commute, odd
/// variables anticommute. Each variable also has a slot: its position among the
/// variables of the same parity.
class VariableTable {
 public:
  static constexpr int kMaxOdd = 64;

  explicit VariableTable(std::vector<std::pair<std::string, Parity>> vars);

  int size() const { return static_cast<int>(names_.size()); }
  int even_count() const { return static_cast<int>(even_vars_.size()); }
  int odd_count() const { return static_cast<int>(odd_vars_.size()); }
  const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
  Parity parity(int v) const { return parities_.at(static_cast<std::size_t>(v)); }
  int slot(int v) const { return slots_.at(static_cast<std::size_t>(v)); }
  int even_var(int slot) const { return even_vars_.at(static_cast<std::size_t>(slot)); }
  int odd_var(int slot) const { return odd_vars_.at(static_cast<std::size_t>(slot)); }
  /// Throws when the name is unknown.
  int index_of(const std::string& name) const;

  friend bool operator==(const VariableTable& a, const VariableTable& b) {
    return a.names_ == b.names_ && a.parities_ == b.parities_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Parity> parities_;
  std::vector<int> slots_;
  std::vector<int> even_vars_;
  std::vector<int> odd_vars_;
};

using VarTablePtr = std::shared_ptr<const VariableTable>;

/// Exponents of the even variables (by slot) and the set of odd variables (bit
/// per slot, canonical order = increasing slot).
struct Monomial {
  std::vector<std::uint8_t> even;
  std::uint64_t odd = 0;

  int degree() const;
  int odd_degree() const { return __builtin_popcountll(odd); }
  Parity parity() const { return (odd_degree() & 1) ? Parity::Odd : Parity::Even; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Product of two canonical monomials: the canonical product and the Grassmann
/// reordering sign, or nullopt when an odd variable repeats.
std::optional<std::pair<Monomial, int>> multiply_monomials(const Monomial& a, const Monomial& b);

/// Sparse polynomial in even and odd variables over Q(i). No zero coefficients
/// are stored; every stored monomial is in canonical Grassmann order.
class SuperPolynomial {
 public:
  using TermMap = std::map<Monomial, GaussRational>;

  explicit SuperPolynomial(VarTablePtr vars);
  static SuperPolynomial constant(VarTablePtr vars, const GaussRational& c);
  static SuperPolynomial variable(VarTablePtr vars, int v);
  static SuperPolynomial variable(VarTablePtr vars, const std::string& name);

  const VarTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Total degree; -1 for zero.
  int degree() const;
  GaussRational coefficient(const Monomial& m) const;
  Monomial unit_monomial() const;

  void add_term(const Monomial& m, const GaussRational& c);

  /// Homogeneous parity, or nullopt for mixed/zero polynomials.
  std::optional<Parity> parity() const;
  SuperPolynomial even_part() const;
  SuperPolynomial odd_part() const;
  /// The part of exact total degree d.
  SuperPolynomial homogeneous_part(int d) const;

  /// Left derivative: the variable is moved to the front before removal.
  SuperPolynomial left_derivative(int v) const;
  /// Right derivative: the variable is moved to the end before removal.
  SuperPolynomial right_derivative(int v) const;

  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);
  SuperPolynomial& operator*=(const GaussRational& c);

  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator-(SuperPolynomial a) { return a *= GaussRational(-1); }
  friend SuperPolynomial operator*(SuperPolynomial a, const GaussRational& c) { return a *= c; }
  friend SuperPolynomial operator*(const GaussRational& c, SuperPolynomial a) { return a *= c; }
  /// Supercommutative product.
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b);

  std::string to_string() const;
  std::string monomial_string(const Monomial& m) const;
  /// JSON array of {"monomial": ..., "coefficient": "a/b+c/d*i"}.
  nlohmann::json to_json() const;

 private:
  void check_same_table(const SuperPolynomial& o) const;

  VarTablePtr vars_;
  TermMap terms_;
};

/// poly_mul with an explicit variable-table check.
SuperPolynomial poly_mul(const SuperPolynomial& p, const SuperPolynomial& q);

}  // namespace hsalg
