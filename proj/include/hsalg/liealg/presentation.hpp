#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsalg/exactcore/linalg.hpp"
#include "hsalg/exactcore/super_polynomial.hpp"
#include "hsalg/exactcore/upoly.hpp"

namespace hsalg {

/// Linear combination of basis vectors of one presentation.
template <class S>
struct BasicElement {
  std::uint64_t algebra = 0;
  std::map<int, S> terms;

  bool is_zero() const { return terms.empty(); }
  S coeff(int k) const {
    auto it = terms.find(k);
    return it == terms.end() ? S() : it->second;
  }
  void add(int k, const S& c) {
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = terms.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_scalar(it->second)) terms.erase(it);
    }
  }
  BasicElement& operator+=(const BasicElement& o) {
    check(o);
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
  }
  BasicElement& operator-=(const BasicElement& o) {
    check(o);
    for (const auto& [k, c] : o.terms) add(k, S() - c);
    return *this;
  }
  BasicElement& operator*=(const S& s) {
    if (is_zero_scalar(s)) {
      terms.clear();
      return *this;
    }
    for (auto& [k, c] : terms) c *= s;
    return *this;
  }
  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
  friend BasicElement operator*(BasicElement a, const S& s) { return a *= s; }
  friend BasicElement operator*(const S& s, BasicElement a) { return a *= s; }
  friend bool operator==(const BasicElement& a, const BasicElement& b) {
    return a.algebra == b.algebra && a.terms == b.terms;
  }

 private:
  static bool is_zero_scalar(const S& s) { return hsalg::is_zero(s); }
  void check(const BasicElement& o) const {
    if (algebra != o.algebra) throw Error("elements of different presentations");
  }
};

/// A triple of basis indices i <= j <= k for which graded Jacobi fails.
using JacobiViolation = std::array<int, 3>;

/// Basis labels with parities and structure constants over S
/// (GaussRational, or UPoly for constants depending on a parameter).
template <class S>
class BasicLieAlgebra {
 public:
  using Element = BasicElement<S>;

  BasicLieAlgebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parities);

  const std::string& name() const { return name_; }
  std::uint64_t id() const { return id_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int k) const { return labels_.at(static_cast<std::size_t>(k)); }
  Parity parity(int k) const { return parities_.at(static_cast<std::size_t>(k)); }
  int index_of(const std::string& label) const;

  Element zero() const;
  Element basis(int k) const;
  Element basis(const std::string& label) const { return basis(index_of(label)); }
  Element make(std::map<int, S> terms) const;

  /// Sets [e_i, e_j] and the graded-antisymmetric partner [e_j, e_i].
  void set_bracket(int i, int j, const Element& value);
  /// Overwrites a single ordered entry; used to corrupt a table deliberately.
  void set_bracket_entry(int i, int j, const Element& value);
  const Element& structure(int i, int j) const;

  Element bracket(const Element& x, const Element& y) const;

  /// Ordered pairs (i, j) where [e_i, e_j] != -(-1)^{|i||j|} [e_j, e_i].
  std::vector<std::pair<int, int>> check_antisymmetry() const;
  /// Graded Jacobi over all basis triples i <= j <= k; OpenMP over i.
  std::vector<JacobiViolation> check_jacobi() const;
  /// Same result as check_jacobi, single-threaded reference.
  std::vector<JacobiViolation> check_jacobi_serial() const;
  /// The Jacobi sum for one triple.
  Element jacobiator(int i, int j, int k) const;

  std::string element_string(const Element& x) const;
  /// {"name", "basis": [...], "parity": [...], "brackets": [{"x","y","value"}]}.
  nlohmann::json to_json() const;

 private:
  std::size_t slot(int i, int j) const;

  std::string name_;
  std::uint64_t id_;
  std::vector<std::string> labels_;
  std::vector<Parity> parities_;
  std::vector<Element> table_;
};

using LieAlgebra = BasicLieAlgebra<GaussRational>;
using ParametricLieAlgebra = BasicLieAlgebra<UPoly>;
using AlgebraElement = LieAlgebra::Element;

extern template class BasicLieAlgebra<GaussRational>;
extern template class BasicLieAlgebra<UPoly>;

std::string scalar_string(const GaussRational& c);
std::string scalar_string(const UPoly& c);

}  // namespace hsalg
