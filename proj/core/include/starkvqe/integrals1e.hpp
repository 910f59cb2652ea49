#pragma once

#include <Eigen/Dense>

#include "starkvqe/basis.hpp"
#include "starkvqe/quadrature.hpp"

namespace starkvqe {

using AOMatrix = Eigen::MatrixXd;

// Closed forms over normalized primitives. Every center lies on the z axis, so a
// primitive is (exponent, z, angular). "dz" arguments are signed: position of the
// s function minus position of the p function (or kernel minus p center).
namespace family {

double overlap_ss(double a, double b, double d);
double overlap_sp(double a_s, double b_p, double dz);
double overlap_pp_same(double a, double b);

double kinetic_ss_same(double a, double b);
double kinetic_ss(double a, double b, double d);
double kinetic_sp(double a_s, double b_p, double dz);
double kinetic_pp_same(double a, double b);

// <s s'|1/r_C|> for both s on one center: kernel on that center, then at distance d.
double attraction_ss_same_center(double a, double b);
double attraction_ss_same_other_kernel(double a, double b, double d);
// Two-center s s'; the kernel sits on the center of `a` when kernel_on_first, else on that of `b`.
double attraction_ss_two_center(double a, double b, double d, bool kernel_on_first);
// s and p_z on one center, kernel at signed offset dz from it (dz = 0 gives 0 by symmetry).
double attraction_sp_same_center(double a_s, double b_p, double dz);
// p_z p_z on one center, kernel on it or at distance d.
double attraction_pp_same_center(double a, double b);
double attraction_pp_same_other_kernel(double a, double b, double d);
// s on one center, p_z on another; dz = z_s - z_p. Kernel on the p center or on the s
// center. Both reduce to one-dimensional oscillatory integrals done numerically.
double attraction_sp_kernel_at_p(double a_s, double b_p, double dz, const QuadratureSpec& spec);
double attraction_sp_kernel_at_s(double a_s, double b_p, double dz, const QuadratureSpec& spec);

}  // namespace family

// Tolerance for the two numeric families.
QuadratureSpec attraction_quadrature_spec();

double overlap(const ContractedOrbital& i, const ContractedOrbital& j);
double kinetic(const ContractedOrbital& i, const ContractedOrbital& j);
// Z <i|1/|r - C||j>; the assembler applies the minus sign.
double nuclear_attraction(const ContractedOrbital& i, const ContractedOrbital& j, const Vec3& center, int Z);

AOMatrix overlap_matrix(const BasisSet& basis);
AOMatrix kinetic_matrix(const BasisSet& basis);
// -sum_A Z_A <i|1/r_A|j>
AOMatrix attraction_matrix(const Molecule& molecule, const BasisSet& basis);
// T + V, field excluded.
AOMatrix core_hamiltonian(const Molecule& molecule, const BasisSet& basis);

}  // namespace starkvqe
