#pragma once

// Independent reference implementations used only by the tests. Nothing here calls the
// closed forms under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "starkvqe/integrals2e.hpp"
#include "starkvqe/oracle.hpp"
#include "starkvqe/quadrature.hpp"
#include "starkvqe/types.hpp"

namespace testsupport {

using starkvqe::CartesianGaussian;
using starkvqe::Vec3;

inline double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

// 2/sqrt(pi) sum (-1)^n x^(2n+1) / (n! (2n+1)) in long double.
inline double erf_series(double xd) {
  const long double x = xd;
  long double term = x, sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x * x / n;
    const long double add = term / (2 * n + 1);
    sum += add;
    if (std::fabs(static_cast<double>(add)) < 1e-30) break;
  }
  return static_cast<double>(sum * 2.0L / std::sqrt(3.14159265358979323846264338327950288L));
}

// Cyclic Jacobi rotations; returns eigenvalues ascending and the matching column eigenvectors.
inline std::pair<Eigen::VectorXd, Eigen::MatrixXd> jacobi_eigen(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) < 1e-300) continue;
        const double theta = 0.5 * (a(q, q) - a(p, p)) / a(p, q);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return a(x, x) < a(y, y); });
  Eigen::VectorXd w(n);
  Eigen::MatrixXd vs(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    w(i) = a(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i)]);
    vs.col(i) = v.col(idx[static_cast<std::size_t>(i)]);
  }
  return {w, vs};
}

// (pq|rs) = sum C_mu p C_nu q C_la r C_si s (mu nu|la si), straight eight-fold loop.
inline starkvqe::ERITensor naive_transform(const starkvqe::ERITensor& ao, const Eigen::MatrixXd& c) {
  const std::size_t n = ao.dim();
  starkvqe::ERITensor out(n);
  auto C = [&](std::size_t a, std::size_t b) { return c(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)); };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          double acc = 0.0;
          for (std::size_t mu = 0; mu < n; ++mu)
            for (std::size_t nu = 0; nu < n; ++nu)
              for (std::size_t la = 0; la < n; ++la)
                for (std::size_t si = 0; si < n; ++si)
                  acc += C(mu, p) * C(nu, q) * C(la, r) * C(si, s) * ao(mu, nu, la, si);
          out(p, q, r, s) = acc;
        }
  return out;
}

// exp(A) by scaling and squaring around a long Taylor series.
inline Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const Eigen::MatrixXcd b = a / std::pow(2.0, squarings);
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(a.rows(), a.cols()), term = result;
  for (int k = 1; k < 40; ++k) {
    term = term * b / static_cast<double>(k);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

// Normalized primitive on the z axis: N (z - z0)^pz exp(-a |r - (0,0,z0)|^2).
struct Prim {
  double a;
  double z0;
  bool p;

  double norm() const {
    const double pi = 3.14159265358979323846;
    return p ? std::pow(128.0 * std::pow(a, 5) / (pi * pi * pi), 0.25) : std::pow(2.0 * a / pi, 0.75);
  }
  double r2(const Vec3& r) const { return r[0] * r[0] + r[1] * r[1] + (r[2] - z0) * (r[2] - z0); }
  double operator()(const Vec3& r) const {
    return norm() * (p ? r[2] - z0 : 1.0) * std::exp(-a * r2(r));
  }
  // -1/2 Laplacian, worked out by hand for s and p_z.
  double kinetic(const Vec3& r) const {
    const double rr = r2(r);
    const double radial = p ? 4.0 * a * a * rr - 10.0 * a : 4.0 * a * a * rr - 6.0 * a;
    return -0.5 * norm() * (p ? r[2] - z0 : 1.0) * radial * std::exp(-a * rr);
  }
  CartesianGaussian cartesian() const { return {a, {0.0, 0.0, z0}, {0, 0, p ? 1 : 0}}; }
};

inline starkvqe::QuadratureSpec oracle_spec(double rel = 1e-11) {
  starkvqe::QuadratureSpec s;
  s.relative_tolerance = rel;
  s.absolute_tolerance = 1e-18;
  s.max_subdivisions = 20000;
  // Odd integrands vanish by symmetry; stop once the error is small against int |f|.
  s.cancellation_tolerance = 1e-13;
  return s;
}

inline starkvqe::Oracle3DOptions around(double z_center, double extent) {
  starkvqe::Oracle3DOptions o;
  o.center = {0.0, 0.0, z_center};
  o.min_radius = extent;
  return o;
}

inline double overlap_oracle(const Prim& i, const Prim& j) {
  return starkvqe::integrate_3d([&](const Vec3& r) { return i(r) * j(r); }, oracle_spec(),
                                around(j.z0, std::fabs(i.z0 - j.z0) + 1.0))
      .value;
}

inline double kinetic_oracle(const Prim& i, const Prim& j) {
  return starkvqe::integrate_3d([&](const Vec3& r) { return i(r) * j.kinetic(r); }, oracle_spec(),
                                around(j.z0, std::fabs(i.z0 - j.z0) + 1.0))
      .value;
}

// <i|1/|r - C||j> with C = (0,0,zc); the spherical grid sits on the kernel.
inline double attraction_oracle(const Prim& i, const Prim& j, double zc) {
  auto f = [&](const Vec3& r) {
    const double dist = std::sqrt(r[0] * r[0] + r[1] * r[1] + (r[2] - zc) * (r[2] - zc));
    return dist == 0.0 ? 0.0 : i(r) * j(r) / dist;
  };
  const double extent = std::max(std::fabs(i.z0 - zc), std::fabs(j.z0 - zc)) + 1.0;
  return starkvqe::integrate_3d(f, oracle_spec(), around(zc, extent)).value;
}

// <i|z|j>, z from the global origin.
inline double dipole_oracle(const Prim& i, const Prim& j) {
  return starkvqe::integrate_3d([&](const Vec3& r) { return i(r) * r[2] * j(r); }, oracle_spec(),
                                around(j.z0, std::fabs(i.z0 - j.z0) + 1.0))
      .value;
}

inline double eri_oracle(const Prim& a, const Prim& b, const Prim& c, const Prim& d) {
  const auto r = starkvqe::integrate_6d(a.cartesian(), b.cartesian(), c.cartesian(), d.cartesian(), oracle_spec(1e-10));
  return a.norm() * b.norm() * c.norm() * d.norm() * r.value;
}

// Log-uniform exponent in [lo, hi].
inline double random_exponent(std::mt19937_64& rng, double lo = 0.1, double hi = 5.0) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

}  // namespace testsupport
