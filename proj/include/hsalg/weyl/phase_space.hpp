#pragma once

#include <vector>

#include "hsalg/exactcore/super_polynomial.hpp"

namespace hsalg {

/// Normalization data of the Moyal product
/// f * g = sum_k c^k/k! (f <d_a w^{ab} d_b> g)^k.
struct StarProductTable {
  std::vector<int> eta;      // diagonal ambient metric
  int epsilon12 = 1;         // {Y_1, Y_2} = epsilon_12 eta
  GaussRational c;           // expansion constant, fixed so that [X^A, P_B]* = i delta^A_B
};

/// Ambient phase space of o(n,2): X^A, P_A for A = 0..n+1 (metric diag(-1,-1,+1,...)),
/// optionally with s families of odd pairs theta^A_i, pi_{iA}. Canonical pairs
/// are (X^A, P_A) with w^{XP} = -w^{PX} = 1 and (theta^A_i, pi_{iA}) with
/// w^{theta pi} = w^{pi theta} = 1.
class PhaseSpace {
 public:
  explicit PhaseSpace(int n, int s = 0);
  /// Boundary phase space: x^mu, p_mu (and theta^mu_i, pi_{i mu}) for mu = 0..n-1
  /// with metric diag(-1,+1,...,+1). Index A of the accessors then runs over mu.
  static PhaseSpace boundary(int n, int s = 0);

  int n() const { return n_; }
  int s() const { return s_; }
  bool is_boundary() const { return boundary_; }
  int ambient_dim() const { return static_cast<int>(metric_.size()); }
  int eta(int A) const { return metric_.at(static_cast<std::size_t>(A)); }
  const VarTablePtr& vars() const { return vars_; }
  const StarProductTable& table() const { return table_; }

  int x_var(int A) const;
  int p_var(int A) const;
  int theta_var(int A, int i) const;  // i = 1..s
  int pi_var(int A, int i) const;

  SuperPolynomial zero() const { return SuperPolynomial(vars_); }
  SuperPolynomial constant(const GaussRational& c) const { return SuperPolynomial::constant(vars_, c); }
  SuperPolynomial var(int v) const { return SuperPolynomial::variable(vars_, v); }
  SuperPolynomial X(int A) const { return var(x_var(A)); }
  /// P_A (lower) and P^A = eta^{AA} P_A.
  SuperPolynomial P_lower(int A) const { return var(p_var(A)); }
  SuperPolynomial P_upper(int A) const { return P_lower(A) * GaussRational(eta(A)); }
  SuperPolynomial theta(int A, int i) const { return var(theta_var(A, i)); }
  SuperPolynomial pi_lower(int i, int A) const { return var(pi_var(A, i)); }
  SuperPolynomial pi_upper(int i, int A) const { return pi_lower(i, A) * GaussRational(eta(A)); }

  /// Y^A_1 = X^A, Y^A_2 = P^A.
  SuperPolynomial Y(int A, int alpha) const;
  /// L^{AB} = X^B P^A - X^A P^B.
  SuperPolynomial L(int A, int B) const;
  /// U_{alpha beta} = eta_AB Y^A_alpha Y^B_beta.
  SuperPolynomial U(int alpha, int beta) const;

  /// {f, g} = sum w^{ab} (f <d_a)(d_b> g).
  SuperPolynomial poisson(const SuperPolynomial& f, const SuperPolynomial& g) const;

  /// Factorized Moyal product, OpenMP over term pairs when parallel.
  SuperPolynomial star(const SuperPolynomial& f, const SuperPolynomial& g, bool parallel = true) const;
  /// Direct expansion of the exponential series on f (x) g; slow, for testing.
  SuperPolynomial star_reference(const SuperPolynomial& f, const SuperPolynomial& g) const;
  /// f*g - (-1)^{|f||g|} g*f; throws for inhomogeneous parity.
  SuperPolynomial star_commutator(const SuperPolynomial& f, const SuperPolynomial& g) const;

  /// Number of canonical pairs: ambient_dim even pairs, then ambient_dim * s odd ones.
  int pair_count() const { return static_cast<int>(pairs_.size()); }

 private:
  struct Pair {
    int a, b;  // variables
    bool odd;
  };
  struct PairTerm {
    int out;  // odd pairs: 0 = 1, 1 = theta, 2 = pi, 3 = theta pi
    GaussRational coeff;
  };

  PhaseSpace(int n, int s, bool boundary);
  void check(const SuperPolynomial& f) const;
  void star_monomials(const Monomial& f, const Monomial& g, const GaussRational& coeff,
                      SuperPolynomial::TermMap& out) const;

  int n_, s_;
  bool boundary_ = false;
  std::vector<int> metric_;
  VarTablePtr vars_;
  StarProductTable table_;
  std::vector<Pair> pairs_;
  std::vector<GaussRational> c_pow_over_fact_;  // c^k / k!
  std::vector<std::vector<std::vector<PairTerm>>> odd_table_;  // [f code][g code]
};

}  // namespace hsalg
