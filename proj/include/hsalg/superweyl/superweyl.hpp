#pragma once

#include <vector>

#include "hsalg/report/check.hpp"
#include "hsalg/weyl/howe.hpp"

namespace hsalg {

/// Z^A_a over the osp index a: X^A, P^A, theta^A_i, pi^A_i (indices as in osp(s)).
SuperPolynomial super_coordinate(const PhaseSpace& ps, int A, int a);

/// T_ab = eta_AB Z^A_a Z^B_b.
SuperPolynomial super_bilinear(const PhaseSpace& ps, int a, int b);

/// Images of the osp(s) basis t[a,b] -> T_ab.
std::vector<SuperPolynomial> osp_symbols(const PhaseSpace& ps);

/// J^{AB} = L^{AB} + theta^A_i pi^B_i - theta^B_i pi^A_i.
SuperPolynomial super_generator(const PhaseSpace& ps, int A, int B);
/// Images of the o_n2(n) basis J[A,B] -> J^{AB}.
std::vector<SuperPolynomial> super_o_n2_symbols(const PhaseSpace& ps);

/// Differential operator X^A P^B - X^B P^A - i theta^A_i d/dtheta_B^i + i theta^B_i d/dtheta_A^i
/// (P = -i d/dX) applied to a function of X and theta.
SuperPolynomial operator_generator_apply(const PhaseSpace& ps, int A, int B, const SuperPolynomial& psi);

/// Bilinears T_ab close on osp(2s|2) with the liealg structure constants.
CheckReport osp_check(int n, int s);

/// J^{AB} realize o(n,2), graded-commute with every T_ab and act on functions of
/// (X, theta) as minus the operator form. s = 0 gives howe_check(n).
CheckReport super_howe_check(int n, int s);

/// Symbol of theta_i . d/dtheta_j - delta_ij shift on a phase space (the
/// dictionary is d/dtheta <-> -i pi, d/dx <-> i p).
SuperPolynomial number_operator_symbol(const PhaseSpace& ps, int i, int j, const Rational& shift);
/// d_i = theta_i . d/dx and its adjoint d/dtheta_i . d/dx on the boundary.
SuperPolynomial d_symbol(const PhaseSpace& ps, int i);
SuperPolynomial d_dagger_symbol(const PhaseSpace& ps, int i);

/// gl(s) closure of the number operators (ambient and boundary shifts), o(2s)
/// closure after adding theta_i.theta_j and d/dtheta_i.d/dtheta_j, and the
/// anticommutators of d_i, d^dagger_j.
CheckReport multiform_ops_check(int n, int s);

}  // namespace hsalg
