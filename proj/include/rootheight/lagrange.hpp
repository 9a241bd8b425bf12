#pragma once

#include <vector>

#include "rootheight/cycnum.hpp"
#include "rootheight/linalg.hpp"
#include "rootheight/polynomial.hpp"

namespace rootheight {

// Interpolation at the h-th roots of unity zeta^0..zeta^{h-1} and at the
// primitive ones zeta^{k_1}..zeta^{k_phi(h)}. Values live in Q(zeta_h).

/// F(zeta_h^i), i = 0..h-1.
std::vector<CycNum> values_at_roots(const Polynomial<Rat>& f, int h);
/// F(zeta_h^k) for k coprime to h, ascending.
std::vector<CycNum> values_at_primitive_roots(const Polynomial<Rat>& f, int h);

/// (q^h - 1) (1/h) sum_i zeta^i F_i / (q - zeta^i).
CycPoly lagrange_all_roots_formula(const std::vector<CycNum>& values, int h);
/// (1/h) sum_i F_i sum_k zeta^{(h-i)k} q^k.
CycPoly lagrange_all_roots_dft(const std::vector<CycNum>& values, int h);
/// -(1/h^h) det [[0, Q_h], [u, h I]] for the moment vector u.
CycPoly all_roots_determinant_form(const std::vector<CycNum>& moments, int h);
/// u_j = sum_i zeta^{-ij} F_i, the moments entering the determinant form.
std::vector<CycNum> all_roots_moments(const std::vector<CycNum>& values, int h);
/// The interpolant of degree < h; all three routes must agree (MethodMismatch).
CycPoly lagrange_all_roots(const std::vector<CycNum>& values, int h);

/// Phi_h(q) sum_i F_i / (Phi_h'(zeta^{k_i}) (q - zeta^{k_i})), any h >= 1.
CycPoly lagrange_primitive_roots_formula(const std::vector<CycNum>& values, int h);
/// u_j = sum_i zeta^{k_i j} F_i, j = 0..phi(h)-1.
std::vector<CycNum> primitive_roots_moments(const std::vector<CycNum>& values, int h);
/// (prod_{p|h} p^{phi/(p-1)}) / ((-1)^{1+phi/2} h^phi) det [[0, Q_phi], [u, C]]
/// with C = (c_h(i+j)); h >= 3.
CycPoly primitive_roots_determinant_form(const std::vector<CycNum>& moments, int h);
/// Interpolant of degree < phi(h) cross-checked against the determinant form; h >= 3.
CycPoly lagrange_primitive_roots(const std::vector<CycNum>& values, int h);

/// The Ramanujan Gram matrix (c_h(i+j)), i, j = 0..phi(h)-1.
Matrix<Rat> ramanujan_gram(int h);

/// L_{d,j} = sum over primitive d-th roots z of z^{j-1}/(1 - z), in Q(zeta_order); d >= 2, d | order.
CycNum l_sum(int d, int j, int order);

}  // namespace rootheight
