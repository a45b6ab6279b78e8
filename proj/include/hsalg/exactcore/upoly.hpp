#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hsalg/exactcore/gauss_rational.hpp"

namespace hsalg {

/// Dense univariate polynomial over Q(i). Used for Gram entries in the lowest
/// energy E0 and for structure constants depending on 1/R.
class UPoly {
 public:
  UPoly() = default;
  UPoly(int c) : UPoly(GaussRational(c)) {}
  UPoly(GaussRational c);
  explicit UPoly(std::vector<GaussRational> coeffs);

  /// The indeterminate itself.
  static UPoly x();
  static UPoly monomial(GaussRational c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  GaussRational coeff(int k) const;
  const std::vector<GaussRational>& coeffs() const { return coeffs_; }
  const GaussRational& leading() const;
  bool has_real_coefficients() const;

  GaussRational evaluate(const GaussRational& at) const;
  UPoly derivative() const;
  UPoly conj() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const GaussRational& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const GaussRational& c) { return a *= c; }
  friend UPoly operator*(const GaussRational& c, UPoly a) { return a *= c; }
  friend UPoly operator-(UPoly a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; the divisor must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  /// a / b, throwing when the division leaves a remainder.
  static UPoly exact_div(const UPoly& a, const UPoly& b);
  /// Monic greatest common divisor (zero when both are zero).
  static UPoly gcd(UPoly a, UPoly b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<GaussRational> coeffs_;  // coeffs_[k] multiplies x^k
};

inline UPoly conj(const UPoly& p) { return p.conj(); }
inline bool is_zero(const UPoly& p) { return p.is_zero(); }

/// Rational roots of p with multiplicity, ascending. The coefficients must be
/// real; the zero polynomial is rejected.
std::vector<Rational> rational_roots(const UPoly& p);

/// Square-free decomposition: pairs (factor, multiplicity) with monic factors.
std::vector<std::pair<UPoly, int>> squarefree_factors(const UPoly& p);

}  // namespace hsalg
