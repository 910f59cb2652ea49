#pragma once

#include <functional>
#include <vector>

namespace starkvqe {

struct QuadratureSpec {
  double relative_tolerance = 1e-10;
  double absolute_tolerance = 1e-15;
  int max_subdivisions = 4000;
  // Also accept once error <= this fraction of int |f|. Zero disables it; the oracles
  // turn it on so integrands that cancel to ~0 still terminate.
  double cancellation_tolerance = 0.0;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  double abs_integral = 0.0;  // integral of |f|, used to judge tails
  int evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (7/15) on a finite interval.
// Throws QuadratureError when max_subdivisions is exhausted.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureSpec& spec);

struct SemiInfiniteOptions {
  // Panel width; pi/omega puts panel edges on zero crossings of sin/cos(omega x).
  double panel_width = 1.0;
  // Never stop before this abscissa, for integrands that start out negligible.
  double min_extent = 0.0;
};

// int_0^inf f(x) dx by consecutive panels until the envelope is negligible.
QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec,
                                         const SemiInfiniteOptions& opts = {});

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1].
GaussRule gauss_legendre(int n);
// Gauss-Hermite for weight exp(-x^2).
GaussRule gauss_hermite(int n);

// Composite fixed-order Gauss-Legendre; the non-adaptive second scheme.
double integrate_gauss_legendre(const Integrand& f, double a, double b, int panels, int order);

}  // namespace starkvqe
