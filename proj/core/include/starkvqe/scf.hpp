#pragma once

#include <Eigen/Dense>

#include "starkvqe/integrals1e.hpp"
#include "starkvqe/integrals2e.hpp"

namespace starkvqe {

struct SCFOptions {
  double density_tolerance = 1e-10;  // RMS change of D
  double energy_tolerance = 1e-12;
  int max_iterations = 5000;
};

struct SCFResult {
  Eigen::MatrixXd mo_coefficients;  // columns are MOs
  Eigen::VectorXd orbital_energies;
  Eigen::MatrixXd density;          // 2 C_occ C_occ^T
  double hf_electronic_energy = 0.0;
  double hf_total_energy = 0.0;     // filled by callers that know the nuclear term
  bool converged = false;
  int iterations = 0;
};

// X = S^{-1/2}; throws DomainError when S has an eigenvalue below 1e-10.
Eigen::MatrixXd lowdin_orthogonalizer(const AOMatrix& s);

// Restricted closed-shell HF. h includes any field term.
// Roothaan steps with an adaptive virtual-space level shift: a step that raises the energy is
// retried with a larger shift, accepted steps relax it. Densities stay idempotent and the energy
// never goes up.
// Throws ConvergenceError (with the last energy) when max_iterations is hit.
SCFResult scf_solve(const AOMatrix& h, const ERITensor& eri, const AOMatrix& s, int n_electrons,
                    const SCFOptions& options = {});

struct MOIntegrals {
  Eigen::MatrixXd one_body;
  ERITensor two_body;
};

// h_pq = C^T h C; (pq|rs) by four quarter transforms.
MOIntegrals ao_to_mo(const AOMatrix& h, const ERITensor& eri, const Eigen::MatrixXd& c);

}  // namespace starkvqe
