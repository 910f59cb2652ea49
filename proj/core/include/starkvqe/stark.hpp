#pragma once

#include "starkvqe/basis.hpp"
#include "starkvqe/integrals1e.hpp"

namespace starkvqe {

// Uniform field along +z; the electron sees H_S = -E z.
struct FieldConfig {
  double magnitude = 0.0;  // atomic units
};

// How the field enters.
//  Dipole: J_ij = -E <i|z|j> (origin at the Li / second H nucleus) and the nuclei pick up
//          +E sum_A Z_A z_A. The total energy is then origin independent.
//  Table:  same as Dipole except the diagonal block of the displaced center is zeroed (its
//          constant is cancelled against the proton energy) and no nuclear field term is added.
enum class StarkConvention { Dipole, Table };

StarkConvention parse_stark_convention(const std::string& s);
std::string to_string(StarkConvention c);

namespace family {

// <s_A|z|s_B> for normalized primitives, z measured from the origin; za, zb the centers.
double dipole_ss(double a, double za, double b, double zb);
// <s|z|p_z>, both on the origin: s at the p center.
double dipole_sp_same(double a_s, double b_p);
// <s_A|z|p_B> with the p function at the origin and s at (0,0,d).
double dipole_sp(double a_s, double b_p, double d);
// <p|z|p'> on one center at height z0.
double dipole_pp_same(double a, double b, double z0);

}  // namespace family

// <i|z|j> with the origin at the global origin.
double dipole_z(const ContractedOrbital& i, const ContractedOrbital& j);
AOMatrix dipole_matrix(const BasisSet& basis);

AOMatrix field_matrix(const Molecule& molecule, const BasisSet& basis, const FieldConfig& field,
                      StarkConvention convention = StarkConvention::Dipole);

// Z_A Z_B / d, plus E sum_A Z_A z_A under the Dipole convention.
double nuclear_energy(const Molecule& molecule, const FieldConfig& field = {},
                      StarkConvention convention = StarkConvention::Dipole);

}  // namespace starkvqe
