#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "starkvqe/integrals2e.hpp"

namespace starkvqe {

// Spin-orbital tensors in blocked order: spin up 0..K-1, spin down K..2K-1.
// two_body(a,b,c,d) is the chemist integral (ab|cd); the 1/2 of
// H = sum tau_ab a+_a a_b + 1/2 sum mu_abcd a+_a a+_c a_d a_b is applied by consumers.
struct SpinOrbitalTensors {
  std::size_t n_spin_orbitals = 0;
  Eigen::MatrixXd one_body;
  ERITensor two_body;
};

// mo_one_body already contains the field term.
SpinOrbitalTensors build_spin_orbital_tensors(const Eigen::MatrixXd& mo_one_body, const ERITensor& mo_eri);

// Occupation-number basis: bit q of the index is the occupation of spin orbital q.
// Returns (sign, new index) of a_q |index>, sign 0 when the result vanishes.
struct FockAction {
  int sign;
  std::uint64_t state;
};
FockAction apply_annihilation(std::size_t q, std::uint64_t state);
FockAction apply_creation(std::size_t q, std::uint64_t state);

inline constexpr std::size_t kMaxDenseModes = 10;

// Dense matrix of a single a_q on n modes.
Eigen::MatrixXd dense_annihilation(std::size_t q, std::size_t n_modes);

// Dense matrix of H on the full 2^{2K} Fock space.
Eigen::MatrixXd dense_fock_matrix(const SpinOrbitalTensors& tensors);

// Energy of a single determinant by the Slater-Condon rules.
double determinant_energy(const SpinOrbitalTensors& tensors, const std::vector<std::size_t>& occupied);

}  // namespace starkvqe
