#include "starkvqe/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "starkvqe/errors.hpp"

namespace starkvqe {

namespace {

constexpr double kBoysSeriesCut = 1e-4;
// Above this the upward recursion from F0 is stable and the series is slow.
constexpr double kBoysUpwardCut = 25.0;

double boys_series(int n, double x, double ex) {
  // F_n(x) = e^{-x} sum_k (2x)^k / ((2n+1)(2n+3)...(2n+2k+1))
  double term = 1.0 / (2 * n + 1);
  double sum = term;
  for (int k = 1; k < 400; ++k) {
    term *= 2.0 * x / (2 * n + 2 * k + 1);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return ex * sum;
}

// Rybicki's sampling-theorem method with step h = 0.2; truncation error ~exp(-(pi/2h)^2).
constexpr double kDawsonH = 0.2;
constexpr int kDawsonTerms = 16;

const std::array<double, kDawsonTerms>& dawson_coefficients() {
  static const std::array<double, kDawsonTerms> c = [] {
    std::array<double, kDawsonTerms> out{};
    for (int i = 0; i < kDawsonTerms; ++i) {
      const double t = (2.0 * i + 1.0) * kDawsonH;
      out[i] = std::exp(-t * t);
    }
    return out;
  }();
  return c;
}

}  // namespace

double erf(double x) { return std::erf(x); }

double boys_f0(double x) {
  if (!(x >= 0.0)) throw DomainError("boys_f0: argument must be non-negative");
  if (x < kBoysSeriesCut) {
    return 1.0 - x / 3.0 + x * x / 10.0 - x * x * x / 42.0 + x * x * x * x / 216.0;
  }
  const double s = std::sqrt(x);
  return 0.5 * std::sqrt(std::numbers::pi / x) * std::erf(s);
}

void boys_array(int n_max, double x, double* out) {
  if (!(x >= 0.0)) throw DomainError("boys: argument must be non-negative");
  if (n_max < 0) throw DomainError("boys: negative order");
  const double ex = std::exp(-x);
  if (x <= kBoysUpwardCut) {
    out[n_max] = boys_series(n_max, x, ex);
    for (int n = n_max; n > 0; --n) out[n - 1] = (2.0 * x * out[n] + ex) / (2 * n - 1);
    return;
  }
  out[0] = boys_f0(x);
  for (int n = 0; n < n_max; ++n) out[n + 1] = ((2 * n + 1) * out[n] - ex) / (2.0 * x);
}

double boys(int n, double x) {
  if (n == 0) return boys_f0(x);
  double buf[32];
  if (n > 31) throw DomainError("boys: order too large");
  boys_array(n, x, buf);
  return buf[n];
}

double dawson(double x) {
  const double ax = std::fabs(x);
  if (ax < 0.2) {
    // x sum_k (-2x^2)^k / (2k+1)!!
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 12; ++k) {
      term *= -2.0 * x2 / (2 * k + 1);
      sum += term;
    }
    return sum;
  }
  if (ax > 1e7) {
    const double r = 1.0 / (x * x);
    return 0.5 / x * (1.0 + 0.5 * r * (1.0 + 1.5 * r));
  }
  const auto& c = dawson_coefficients();
  const double n0 = 2.0 * std::nearbyint(0.5 * ax / kDawsonH);
  const double xp = ax - n0 * kDawsonH;
  double e1 = std::exp(2.0 * xp * kDawsonH);
  const double e2 = e1 * e1;
  double d1 = n0 + 1.0;
  double d2 = d1 - 2.0;
  double sum = 0.0;
  for (int i = 0; i < kDawsonTerms; ++i) {
    sum += c[i] * (e1 / d1 + 1.0 / (d2 * e1));
    d1 += 2.0;
    d2 -= 2.0;
    e1 *= e2;
  }
  const double v = std::exp(-xp * xp) * sum / std::sqrt(std::numbers::pi);
  return x < 0 ? -v : v;
}

}  // namespace starkvqe
