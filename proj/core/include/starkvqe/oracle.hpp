#pragma once

// Brute-force integration used to check the closed-form integrals.
// Slow by design; nothing in the production path calls these.

#include <array>
#include <cstdint>
#include <functional>

#include "starkvqe/quadrature.hpp"
#include "starkvqe/types.hpp"

namespace starkvqe {

struct Oracle3DOptions {
  Vec3 center{0.0, 0.0, 0.0};  // origin of the spherical grid; put Coulomb centers here
  int phi_nodes = 1;           // trapezoid nodes in phi; 1 is exact for integrands symmetric about z
  double radial_panel = 1.0;
  double min_radius = 0.0;
};

struct OracleResult {
  double value = 0.0;
  double error = 0.0;
};

// int f(r) d^3r in spherical coordinates about opts.center:
// adaptive Gauss-Kronrod in r and cos(theta), trapezoid in phi.
OracleResult integrate_3d(const std::function<double(const Vec3&)>& f, const QuadratureSpec& spec,
                          const Oracle3DOptions& opts = {});

// int int a(r1) b(r1) |r1-r2|^-1 c(r2) d(r2) d^3r1 d^3r2.
// 1/r12 = (2/sqrt(pi)) int_0^inf exp(-t^2 r12^2) dt turns the integrand into a product of
// 2D Gaussian forms per direction, done with tensor Gauss-Hermite after a Cholesky shift.
OracleResult integrate_6d(const CartesianGaussian& a, const CartesianGaussian& b, const CartesianGaussian& c,
                          const CartesianGaussian& d, const QuadratureSpec& spec);

// Plain Monte Carlo for the same integral: r1, r2 drawn from the two Gaussian products.
OracleResult integrate_6d_monte_carlo(const CartesianGaussian& a, const CartesianGaussian& b,
                                      const CartesianGaussian& c, const CartesianGaussian& d,
                                      std::int64_t samples, std::uint64_t seed);

}  // namespace starkvqe
