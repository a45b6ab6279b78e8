#pragma once

#include <string>
#include <vector>

#include "hsalg/liealg/presentation.hpp"

namespace hsalg {

// Ambient indices of o(n,2) are numbered 0 -> "0", 1 -> "0'", a -> "a-1" for
// a = 2..n+1, with metric diag(-1,-1,+1,...,+1).
std::string ambient_index_name(int a);
int ambient_metric(int a);
/// Position of J[a,b] (a < b) in the o_n2 basis.
int o_n2_index(int n, int a, int b);
/// J_AB as an element of o_n2(n) for any ordered pair; zero when a == b.
AlgebraElement ambient_generator(const LieAlgebra& o, int n, int a, int b);

/// o(n,2) on J[A,B], A < B, with
/// [J_AB, J_CD] = i(eta_BC J_AD - eta_AC J_BD - eta_BD J_AC + eta_AD J_BC).
LieAlgebra o_n2(int n);

/// A presentation expressed in a new basis of an existing one.
struct BasisChange {
  LieAlgebra source;
  LieAlgebra algebra;
  QMatrix to_source;    // column k: new basis vector k in source coordinates
  QMatrix from_source;  // inverse of to_source

  AlgebraElement to_old(const AlgebraElement& x) const;
  AlgebraElement to_new(const AlgebraElement& x) const;
};

/// Rewrites `source` in the basis `images` (given in source coordinates).
/// Throws when the images are not a basis or have inhomogeneous parity.
BasisChange change_basis(const LieAlgebra& source, std::string name, std::vector<std::string> labels,
                         const std::vector<AlgebraElement>& images);

/// Basis E = J_{0'0}, J+[i] = J_{0i} - i J_{0'i}, J-[i] = J_{0i} + i J_{0'i},
/// J[i,j] = J_ij.
BasisChange compact_basis(int n);

struct ConformalBasis {
  BasisChange change;
  /// eta_{+-} of the light-cone coordinates X^{+-} = X^{0'} +- X^n, computed
  /// from the coordinate change.
  Rational eta_plus_minus;
  /// c in [D, P_mu] = c P_mu, read off the derived table.
  GaussRational dilatation_weight;
};

/// Basis P[mu] = J_{+mu}/2, J[mu,nu], D = J_{+-}, K[mu] = J_{-mu} with
/// boundary indices mu = 0..n-1 (ambient 0, 1, ..., n-1).
ConformalBasis conformal_basis(int n);

/// Presentation on a subset of basis vectors; throws when not closed.
LieAlgebra subalgebra(const LieAlgebra& alg, std::string name, const std::vector<int>& indices);

/// io(n-1,1) spanned by P[mu] and J[mu,nu] inside the conformal basis.
LieAlgebra poincare(int n);

/// o(n,2) on J[a,b] (a,b over 0,1..n) and G[a] = t J_{0'a}, t = 1/R,
/// structure constants in Q(i)[t].
ParametricLieAlgebra contract_inonu_wigner(int n);
LieAlgebra specialize(const ParametricLieAlgebra& alg, const GaussRational& at);

// Index set of osp(2s|2): "1", "2" (even), then "th1".."ths", "pi1".."pis" (odd).
int osp_index_count(int s);
std::string osp_index_name(int s, int a);
Parity osp_index_parity(int s, int a);
/// Graded symplectic form: J_12 = 1, J_21 = -1, J_{th_i pi_j} = J_{pi_j th_i} = delta_ij.
int osp_form(int s, int a, int b);
/// Position of t[a,b] (after graded symmetrization) and the sign relating
/// t[a,b] to the stored generator; -1 when t[a,b] vanishes (a == b odd).
std::pair<int, int> osp_generator(int s, int a, int b);

/// Graded-symmetric generators t[a,b] with
/// [t_ab, t_cd] = i(J_bc t_ad + (-1)^{bc} J_bd t_ac + (-1)^{b(c+d)}(J_ac t_db + (-1)^{ac} J_ad t_cb)).
LieAlgebra osp(int s);
LieAlgebra sp2();

/// gl(s) on e[i,j] with [e_ij, e_kl] = delta_jk e_il - delta_il e_kj.
LieAlgebra gl(int s);

}  // namespace hsalg
