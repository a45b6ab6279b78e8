#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsalg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for violated preconditions and malformed input anywhere in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "p/q" or "-p/q". Decimal points and exponents are rejected so that
/// every value entering the library is exact.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// p/q in canonical form.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Exact complex scalar re + im*i over the rationals.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(int v) : re_(v) {}
  GaussRational(long v) : re_(v) {}
  GaussRational(Rational re) : re_(std::move(re)) {}
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  /// |z|^2 as a rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "a/b+c/d*i" with zero parts omitted; zero prints as "0".
  std::string to_string() const;
  static GaussRational parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

inline GaussRational conj(const GaussRational& z) { return z.conj(); }
inline bool is_zero(const GaussRational& z) { return z.is_zero(); }
inline Rational conj(const Rational& q) { return q; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace hsalg
