#include "starkvqe/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "starkvqe/errors.hpp"

namespace starkvqe {

OracleResult integrate_3d(const std::function<double(const Vec3&)>& f, const QuadratureSpec& spec,
                          const Oracle3DOptions& opts) {
  if (opts.phi_nodes < 1) throw DomainError("integrate_3d: phi_nodes must be >= 1");
  const double two_pi = 2.0 * std::numbers::pi;
  QuadratureSpec inner = spec;
  inner.relative_tolerance = 0.1 * spec.relative_tolerance;
  inner.absolute_tolerance = 1e-300;
  if (inner.cancellation_tolerance <= 0.0) inner.cancellation_tolerance = 0.01 * spec.relative_tolerance;
  QuadratureSpec outer = spec;
  if (outer.cancellation_tolerance <= 0.0) outer.cancellation_tolerance = 0.1 * spec.relative_tolerance;
  double inner_error = 0.0;

  auto radial = [&](double r) {
    if (r == 0.0) return 0.0;
    auto angular = [&](double u) {
      const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
      double acc = 0.0;
      for (int k = 0; k < opts.phi_nodes; ++k) {
        const double phi = two_pi * k / opts.phi_nodes;
        const Vec3 p{opts.center[0] + r * s * std::cos(phi), opts.center[1] + r * s * std::sin(phi),
                     opts.center[2] + r * u};
        acc += f(p);
      }
      return acc * two_pi / opts.phi_nodes;
    };
    const QuadratureResult a = integrate_adaptive(angular, -1.0, 1.0, inner);
    inner_error += r * r * a.error;
    return r * r * a.value;
  };
  SemiInfiniteOptions so;
  so.panel_width = opts.radial_panel;
  so.min_extent = opts.min_radius;
  const QuadratureResult res = integrate_semi_infinite(radial, outer, so);
  return {res.value, res.error};
}

namespace {

struct PairData {
  double e;       // combined exponent
  double center;  // along this axis
  double k;       // prefactor exp(-ab/e (A-B)^2)
};

PairData combine(const CartesianGaussian& a, const CartesianGaussian& b, int axis) {
  const double e = a.exponent + b.exponent;
  const double d = a.center[axis] - b.center[axis];
  return {e, (a.exponent * a.center[axis] + b.exponent * b.center[axis]) / e,
          std::exp(-a.exponent * b.exponent / e * d * d)};
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

class SixDIntegrand {
 public:
  SixDIntegrand(const CartesianGaussian& a, const CartesianGaussian& b, const CartesianGaussian& c,
                const CartesianGaussian& d)
      : a_(a), b_(b), c_(c), d_(d), gh_(gauss_hermite(12)) {}

  // Product over x, y, z of the 2D integrals at transform variable t.
  double at_t(double t) const {
    double prod = 1.0;
    for (int axis = 0; axis < 3; ++axis) prod *= direction(axis, t);
    return prod;
  }

 private:
  double direction(int axis, double t) const {
    const PairData p1 = combine(a_, b_, axis);
    const PairData p2 = combine(c_, d_, axis);
    const double t2 = t * t;
    const double m11 = p1.e + t2, m22 = p2.e + t2, m12 = -t2;
    const double b1 = p1.e * p1.center, b2 = p2.e * p2.center;
    const double det = m11 * m22 - m12 * m12;
    const double x1 = (m22 * b1 - m12 * b2) / det;
    const double x2 = (m11 * b2 - m12 * b1) / det;
    const double cst = p1.e * p1.center * p1.center + p2.e * p2.center * p2.center - (b1 * x1 + b2 * x2);
    // M = L L^T, x = m + L^{-T} y.
    const double l11 = std::sqrt(m11);
    const double l21 = m12 / l11;
    const double l22 = std::sqrt(m22 - l21 * l21);
    const double i11 = 1.0 / l11, i22 = 1.0 / l22, i12 = -l21 / (l11 * l22);  // (L^{-T})_{12}
    const int pa = a_.powers[axis], pb = b_.powers[axis], pc = c_.powers[axis], pd = d_.powers[axis];
    double sum = 0.0;
    const std::size_t n = gh_.nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double y1 = gh_.nodes[i], y2 = gh_.nodes[j];
        const double u1 = x1 + i11 * y1 + i12 * y2;
        const double u2 = x2 + i22 * y2;
        const double poly = ipow(u1 - a_.center[axis], pa) * ipow(u1 - b_.center[axis], pb) *
                            ipow(u2 - c_.center[axis], pc) * ipow(u2 - d_.center[axis], pd);
        sum += gh_.weights[i] * gh_.weights[j] * poly;
      }
    }
    return sum * std::exp(-cst) / (l11 * l22) * p1.k * p2.k;
  }

  CartesianGaussian a_, b_, c_, d_;
  GaussRule gh_;
};

}  // namespace

OracleResult integrate_6d(const CartesianGaussian& a, const CartesianGaussian& b, const CartesianGaussian& c,
                          const CartesianGaussian& d, const QuadratureSpec& spec) {
  for (const auto* g : {&a, &b, &c, &d}) {
    if (!(g->exponent > 0.0)) throw DomainError("integrate_6d: exponents must be positive");
    for (int p : g->powers)
      if (p < 0 || p > 2) throw DomainError("integrate_6d: powers limited to 0..2");
  }
  const SixDIntegrand integrand(a, b, c, d);
  const double e1 = a.exponent + b.exponent, e2 = c.exponent + d.exponent;
  const double scale = std::sqrt(e1 * e2 / (e1 + e2));
  auto g = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double w = 1.0 - u * u;
    const double t = scale * u / std::sqrt(w);
    const double dt = scale / (w * std::sqrt(w));
    return integrand.at_t(t) * dt;
  };
  QuadratureSpec s = spec;
  if (s.cancellation_tolerance <= 0.0) s.cancellation_tolerance = 0.1 * spec.relative_tolerance;
  const QuadratureResult r = integrate_adaptive(g, 0.0, 1.0, s);
  const double pref = 2.0 / std::sqrt(std::numbers::pi);
  return {pref * r.value, pref * r.error};
}

OracleResult integrate_6d_monte_carlo(const CartesianGaussian& a, const CartesianGaussian& b,
                                      const CartesianGaussian& c, const CartesianGaussian& d,
                                      std::int64_t samples, std::uint64_t seed) {
  if (samples < 2) throw DomainError("integrate_6d_monte_carlo: need at least 2 samples");
  const double e1 = a.exponent + b.exponent, e2 = c.exponent + d.exponent;
  double weight = std::pow(std::numbers::pi / e1, 1.5) * std::pow(std::numbers::pi / e2, 1.5);
  Vec3 p{}, q{};
  for (int axis = 0; axis < 3; ++axis) {
    const PairData p1 = combine(a, b, axis), p2 = combine(c, d, axis);
    weight *= p1.k * p2.k;
    p[axis] = p1.center;
    q[axis] = p2.center;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n1(0.0, std::sqrt(0.5 / e1)), n2(0.0, std::sqrt(0.5 / e2));
  double mean = 0.0, m2 = 0.0;
  for (std::int64_t k = 0; k < samples; ++k) {
    Vec3 r1, r2;
    double poly = 1.0, r12sq = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
      r1[axis] = p[axis] + n1(rng);
      r2[axis] = q[axis] + n2(rng);
      poly *= ipow(r1[axis] - a.center[axis], a.powers[axis]) * ipow(r1[axis] - b.center[axis], b.powers[axis]) *
              ipow(r2[axis] - c.center[axis], c.powers[axis]) * ipow(r2[axis] - d.center[axis], d.powers[axis]);
      const double dd = r1[axis] - r2[axis];
      r12sq += dd * dd;
    }
    const double x = poly / std::sqrt(r12sq);
    const double delta = x - mean;
    mean += delta / static_cast<double>(k + 1);
    m2 += delta * (x - mean);
  }
  const double var = m2 / static_cast<double>(samples - 1);
  return {weight * mean, weight * std::sqrt(var / static_cast<double>(samples))};
}

}  // namespace starkvqe
