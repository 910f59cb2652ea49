#include "starkvqe/scf.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "starkvqe/errors.hpp"

namespace starkvqe {

Eigen::MatrixXd lowdin_orthogonalizer(const AOMatrix& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  if (es.info() != Eigen::Success) throw DomainError("lowdin_orthogonalizer: eigendecomposition failed");
  const Eigen::VectorXd& w = es.eigenvalues();
  if (w.minCoeff() < 1e-10) {
    std::ostringstream os;
    os << "lowdin_orthogonalizer: overlap is (nearly) singular, smallest eigenvalue " << w.minCoeff();
    throw DomainError(os.str());
  }
  return es.eigenvectors() * w.cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
}

namespace {

Eigen::MatrixXd two_electron_part(const ERITensor& eri, const Eigen::MatrixXd& d) {
  const auto n = static_cast<Eigen::Index>(eri.dim());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      double acc = 0.0;
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l)
          acc += d(k, l) * (eri(i, j, k, l) - 0.5 * eri(i, k, j, l));
      g(i, j) = acc;
    }
  return g;
}

struct Diag {
  Eigen::MatrixXd c;
  Eigen::VectorXd e;
};

Diag diagonalize(const Eigen::MatrixXd& f, const Eigen::MatrixXd& x) {
  const Eigen::MatrixXd fp = x.transpose() * f * x;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (fp + fp.transpose()));
  Diag out{x * es.eigenvectors(), es.eigenvalues()};
  // Fix the sign of each MO so the largest-magnitude coefficient is positive.
  for (Eigen::Index k = 0; k < out.c.cols(); ++k) {
    Eigen::Index imax = 0;
    out.c.col(k).cwiseAbs().maxCoeff(&imax);
    if (out.c(imax, k) < 0) out.c.col(k) *= -1.0;
  }
  return out;
}

Eigen::MatrixXd density_from(const Eigen::MatrixXd& c, int n_occ) {
  const Eigen::MatrixXd co = c.leftCols(n_occ);
  return 2.0 * co * co.transpose();
}

// Diagonalize F within the occupied and within the virtual orbitals, keeping the determinant.
void semicanonicalize(Eigen::MatrixXd& c, const Eigen::MatrixXd& f, int n_occ) {
  const Eigen::Index k = c.cols();
  for (const auto& [lo, n] : {std::pair<Eigen::Index, Eigen::Index>{0, n_occ}, {n_occ, k - n_occ}}) {
    if (n == 0) continue;
    const Eigen::MatrixXd block = c.middleCols(lo, n);
    const Eigen::MatrixXd fb = block.transpose() * f * block;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (fb + fb.transpose()));
    c.middleCols(lo, n) = block * es.eigenvectors();
  }
  for (Eigen::Index j = 0; j < k; ++j) {
    Eigen::Index imax = 0;
    c.col(j).cwiseAbs().maxCoeff(&imax);
    if (c(imax, j) < 0) c.col(j) *= -1.0;
  }
}

}  // namespace

SCFResult scf_solve(const AOMatrix& h, const ERITensor& eri, const AOMatrix& s, int n_electrons,
                    const SCFOptions& options) {
  if (n_electrons <= 0 || n_electrons % 2 != 0) throw DomainError("scf_solve: closed shell needs an even electron count");
  const auto k = static_cast<Eigen::Index>(h.rows());
  if (n_electrons > 2 * k) throw DomainError("scf_solve: more electrons than spin orbitals");
  if (static_cast<Eigen::Index>(eri.dim()) != k || s.rows() != k) throw DomainError("scf_solve: dimension mismatch");
  const int n_occ = n_electrons / 2;
  const Eigen::MatrixXd x = lowdin_orthogonalizer(s);

  auto energy_of = [&](const Eigen::MatrixXd& dm, const Eigen::MatrixXd& gm) {
    return (dm.cwiseProduct(h)).sum() + 0.5 * (dm.cwiseProduct(gm)).sum();
  };
  // Orthogonal-basis Fock matrix with the virtual space of the current orbitals pushed up by shift.
  const Eigen::MatrixXd x_inv = x.inverse();
  auto shifted_step = [&](const Eigen::MatrixXd& f, const Eigen::MatrixXd& c, double shift) {
    if (shift == 0.0) return diagonalize(f, x);
    const Eigen::MatrixXd u_occ = x_inv * c.leftCols(n_occ);
    const Eigen::MatrixXd q = Eigen::MatrixXd::Identity(k, k) - u_occ * u_occ.transpose();
    const Eigen::MatrixXd fp = x.transpose() * f * x + shift * q;
    return diagonalize(x_inv.transpose() * fp * x_inv, x);
  };

  // Orbital gradient: largest element of X^T (F D S - S D F) X.
  auto gradient_of = [&](const Eigen::MatrixXd& dm, const Eigen::MatrixXd& gm) {
    const Eigen::MatrixXd fds = (h + gm) * dm * s;
    return (x.transpose() * (fds - fds.transpose()) * x).cwiseAbs().maxCoeff();
  };

  // Newton iterations on the occupied-virtual rotations C <- C exp(K), K_ai = kappa = -K_ia.
  // dE/dkappa_ai = 4 F_ai in the MO basis; the Hessian is a central difference of that gradient.
  const int n_vir = static_cast<int>(k) - n_occ;
  const int n_rot = n_occ * n_vir;
  auto rotate = [&](const Eigen::MatrixXd& c, const Eigen::VectorXd& kappa) {
    Eigen::MatrixXd kk = Eigen::MatrixXd::Zero(k, k);
    for (int a = 0; a < n_vir; ++a)
      for (int i = 0; i < n_occ; ++i) {
        kk(n_occ + a, i) = kappa(a * n_occ + i);
        kk(i, n_occ + a) = -kappa(a * n_occ + i);
      }
    // exp(K) by Taylor series; |K| stays small here.
    Eigen::MatrixXd u = Eigen::MatrixXd::Identity(k, k), term = u;
    for (int n = 1; n < 30; ++n) {
      term = term * kk / static_cast<double>(n);
      u += term;
      if (term.cwiseAbs().maxCoeff() < 1e-18) break;
    }
    return Eigen::MatrixXd(c * u);
  };
  auto rotation_gradient = [&](const Eigen::MatrixXd& c) {
    const Eigen::MatrixXd dm = density_from(c, n_occ);
    const Eigen::MatrixXd fmo = c.transpose() * (h + two_electron_part(eri, dm)) * c;
    Eigen::VectorXd out(n_rot);
    for (int a = 0; a < n_vir; ++a)
      for (int i = 0; i < n_occ; ++i) out(a * n_occ + i) = 4.0 * fmo(n_occ + a, i);
    return out;
  };
  auto newton_polish = [&](Eigen::MatrixXd& c) {
    if (n_rot == 0) return true;
    constexpr double kStep = 1e-4;
    for (int iter = 0; iter < 30; ++iter) {
      const Eigen::VectorXd grad0 = rotation_gradient(c);
      if (grad0.cwiseAbs().maxCoeff() < 1e-12) return true;
      Eigen::MatrixXd hess(n_rot, n_rot);
      for (int j = 0; j < n_rot; ++j) {
        Eigen::VectorXd dk = Eigen::VectorXd::Zero(n_rot);
        dk(j) = kStep;
        hess.col(j) = (rotation_gradient(rotate(c, dk)) - rotation_gradient(rotate(c, -dk))) / (2.0 * kStep);
      }
      hess = 0.5 * (hess + hess.transpose()).eval();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hess);
      if (es.eigenvalues().minCoeff() <= 0.0) return false;  // not at a minimum yet
      Eigen::VectorXd step = -es.eigenvectors() * (es.eigenvectors().transpose() * grad0).cwiseQuotient(es.eigenvalues());
      const double len = step.norm();
      if (len > 0.1) step *= 0.1 / len;
      c = rotate(c, step);
    }
    return rotation_gradient(c).cwiseAbs().maxCoeff() < 1e-10;
  };

  Diag dg = diagonalize(h, x);
  Eigen::MatrixXd d = density_from(dg.c, n_occ);
  Eigen::MatrixXd g = two_electron_part(eri, d);
  double e = energy_of(d, g);
  double grad = gradient_of(d, g);
  double shift = 0.0;
  int next_newton = 0;
  SCFResult r;
  for (int it = 1; it <= options.max_iterations; ++it) {
    r.iterations = it;
    const Diag trial = shifted_step(h + g, dg.c, shift);
    const Eigen::MatrixXd d_try = density_from(trial.c, n_occ);
    const Eigen::MatrixXd g_try = two_electron_part(eri, d_try);
    const double e_try = energy_of(d_try, g_try);
    const double grad_try = gradient_of(d_try, g_try);
    const double de = e_try - e;
    // Below the rounding noise of E the gradient decides.
    const double noise = 1e-12 * std::max(1.0, std::fabs(e));
    const bool downhill = de < -noise;
    const double rms = std::sqrt((d_try - d).squaredNorm() / static_cast<double>(k * k));
    bool done = rms < options.density_tolerance && std::fabs(de) < options.energy_tolerance;
    if (!done && !downhill && !(de <= noise && grad_try < grad)) {
      shift = 2.0 * shift + 0.1;
      continue;
    }
    dg = trial;
    d = d_try;
    g = g_try;
    e = e_try;
    grad = grad_try;
    if (downhill) shift = shift < 1e-3 ? 0.0 : 0.5 * shift;
    if (!done && grad < 1e-5 && it >= next_newton) {
      // Soft charge-transfer modes make the fixed-point iteration crawl; finish with Newton.
      next_newton = it + 100;
      Eigen::MatrixXd c_new = dg.c;
      if (newton_polish(c_new)) {
        const Eigen::MatrixXd d_new = density_from(c_new, n_occ);
        dg.c = c_new;
        d = d_new;
        g = two_electron_part(eri, d);
        e = energy_of(d, g);
        done = true;
      }
    }
    if (done) {
      semicanonicalize(dg.c, h + g, n_occ);
      r.mo_coefficients = dg.c;
      r.orbital_energies = (dg.c.transpose() * (h + g) * dg.c).diagonal();
      r.density = d;
      r.hf_electronic_energy = e;
      r.converged = true;
      return r;
    }
  }
  throw ConvergenceError("scf_solve: no convergence", r.iterations, e);
}

MOIntegrals ao_to_mo(const AOMatrix& h, const ERITensor& eri, const Eigen::MatrixXd& c) {
  const std::size_t n = eri.dim();
  MOIntegrals out;
  out.one_body = c.transpose() * h * c;
  ERITensor a(n), b(n);
  auto C = [&](std::size_t mu, std::size_t p) { return c(static_cast<Eigen::Index>(mu), static_cast<Eigen::Index>(p)); };
  // (p nu|la si)
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t la = 0; la < n; ++la)
        for (std::size_t si = 0; si < n; ++si) {
          double acc = 0.0;
          for (std::size_t mu = 0; mu < n; ++mu) acc += C(mu, p) * eri(mu, nu, la, si);
          a(p, nu, la, si) = acc;
        }
  // (p q|la si)
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t la = 0; la < n; ++la)
        for (std::size_t si = 0; si < n; ++si) {
          double acc = 0.0;
          for (std::size_t nu = 0; nu < n; ++nu) acc += C(nu, q) * a(p, nu, la, si);
          b(p, q, la, si) = acc;
        }
  // (p q|r si)
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t si = 0; si < n; ++si) {
          double acc = 0.0;
          for (std::size_t la = 0; la < n; ++la) acc += C(la, r) * b(p, q, la, si);
          a(p, q, r, si) = acc;
        }
  out.two_body = ERITensor(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          double acc = 0.0;
          for (std::size_t si = 0; si < n; ++si) acc += C(si, s) * a(p, q, r, si);
          out.two_body(p, q, r, s) = acc;
        }
  return out;
}

}  // namespace starkvqe
