#include "starkvqe/fermiop.hpp"

#include <bit>

#include "starkvqe/errors.hpp"

namespace starkvqe {

SpinOrbitalTensors build_spin_orbital_tensors(const Eigen::MatrixXd& mo_one_body, const ERITensor& mo_eri) {
  const std::size_t k = mo_eri.dim();
  if (static_cast<std::size_t>(mo_one_body.rows()) != k) throw DomainError("build_spin_orbital_tensors: size mismatch");
  const std::size_t n = 2 * k;
  SpinOrbitalTensors t;
  t.n_spin_orbitals = n;
  t.one_body = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  t.two_body = ERITensor(n);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q)
        t.one_body(static_cast<Eigen::Index>(s * k + p), static_cast<Eigen::Index>(s * k + q)) =
            mo_one_body(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
  // (ab|cd) survives when a,b share a spin and c,d share a spin.
  for (std::size_t s1 = 0; s1 < 2; ++s1)
    for (std::size_t s2 = 0; s2 < 2; ++s2)
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q)
          for (std::size_t r = 0; r < k; ++r)
            for (std::size_t s = 0; s < k; ++s)
              t.two_body(s1 * k + p, s1 * k + q, s2 * k + r, s2 * k + s) = mo_eri(p, q, r, s);
  return t;
}

FockAction apply_annihilation(std::size_t q, std::uint64_t state) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  if (!(state & bit)) return {0, state};
  const int parity = std::popcount(state & (bit - 1)) & 1;
  return {parity ? -1 : 1, state ^ bit};
}

FockAction apply_creation(std::size_t q, std::uint64_t state) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  if (state & bit) return {0, state};
  const int parity = std::popcount(state & (bit - 1)) & 1;
  return {parity ? -1 : 1, state ^ bit};
}

Eigen::MatrixXd dense_annihilation(std::size_t q, std::size_t n_modes) {
  if (n_modes > kMaxDenseModes) throw DomainError("dense_annihilation: too many modes");
  if (q >= n_modes) throw DomainError("dense_annihilation: mode index out of range");
  const std::uint64_t dim = std::uint64_t{1} << n_modes;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t s = 0; s < dim; ++s) {
    const FockAction a = apply_annihilation(q, s);
    if (a.sign) m(static_cast<Eigen::Index>(a.state), static_cast<Eigen::Index>(s)) = a.sign;
  }
  return m;
}

Eigen::MatrixXd dense_fock_matrix(const SpinOrbitalTensors& t) {
  const std::size_t n = t.n_spin_orbitals;
  if (n > kMaxDenseModes) throw DomainError("dense_fock_matrix: too many spin orbitals");
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t s = 0; s < dim; ++s) {
    const auto col = static_cast<Eigen::Index>(s);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const double tau = t.one_body(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        if (tau == 0.0) continue;
        const FockAction x = apply_annihilation(b, s);
        if (!x.sign) continue;
        const FockAction y = apply_creation(a, x.state);
        if (!y.sign) continue;
        h(static_cast<Eigen::Index>(y.state), col) += tau * x.sign * y.sign;
      }
    // 1/2 (ab|cd) a+_a a+_c a_d a_b
    for (std::size_t b = 0; b < n; ++b) {
      const FockAction x1 = apply_annihilation(b, s);
      if (!x1.sign) continue;
      for (std::size_t d = 0; d < n; ++d) {
        const FockAction x2 = apply_annihilation(d, x1.state);
        if (!x2.sign) continue;
        for (std::size_t c = 0; c < n; ++c) {
          const FockAction x3 = apply_creation(c, x2.state);
          if (!x3.sign) continue;
          for (std::size_t a = 0; a < n; ++a) {
            const double mu = t.two_body(a, b, c, d);
            if (mu == 0.0) continue;
            const FockAction x4 = apply_creation(a, x3.state);
            if (!x4.sign) continue;
            h(static_cast<Eigen::Index>(x4.state), col) += 0.5 * mu * x1.sign * x2.sign * x3.sign * x4.sign;
          }
        }
      }
    }
  }
  return h;
}

double determinant_energy(const SpinOrbitalTensors& t, const std::vector<std::size_t>& occ) {
  double e = 0.0;
  for (std::size_t i : occ) e += t.one_body(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
  for (std::size_t i : occ)
    for (std::size_t j : occ) e += 0.5 * (t.two_body(i, i, j, j) - t.two_body(i, j, j, i));
  return e;
}

}  // namespace starkvqe
