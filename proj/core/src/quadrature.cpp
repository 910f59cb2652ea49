#include "starkvqe/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

#include "starkvqe/errors.hpp"

namespace starkvqe {

void QuadratureSpec::validate() const {
  if (!(relative_tolerance > 0.0) || !(absolute_tolerance > 0.0))
    throw DomainError("QuadratureSpec: tolerances must be positive");
  if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
}

namespace {

// Kronrod abscissae; odd indices are the Gauss 7-point nodes.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error, abs_value;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(resk);
  double fv1[7], fv2[7];
  for (int j = 0; j < 3; ++j) {
    const int jt = 2 * j + 1;
    const double dx = half * kXgk[jt];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[jt] = f1;
    fv2[jt] = f2;
    resg += kWg[j] * (f1 + f2);
    resk += kWgk[jt] * (f1 + f2);
    resabs += kWgk[jt] * (std::fabs(f1) + std::fabs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jt = 2 * j;
    const double dx = half * kXgk[jt];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[jt] = f1;
    fv2[jt] = f2;
    resk += kWgk[jt] * (f1 + f2);
    resabs += kWgk[jt] * (std::fabs(f1) + std::fabs(f2));
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
  const double ah = std::fabs(half);
  resasc *= ah;
  resabs *= ah;
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  return {a, b, resk * half, err, resabs};
}

}  // namespace

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  QuadratureResult out;
  if (a == b) return out;
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  double total = first.value, err = first.error, absv = first.abs_value;
  heap.push(first);
  int evals = 15;
  int intervals = 1;
  auto done = [&] {
    return err <= std::max({spec.absolute_tolerance, spec.relative_tolerance * std::fabs(total),
                            spec.cancellation_tolerance * absv});
  };
  while (!done()) {
    if (intervals >= spec.max_subdivisions) {
      std::ostringstream os;
      os << "integrate_adaptive: no convergence on [" << a << ", " << b << "] after " << intervals
         << " subdivisions";
      throw QuadratureError(os.str(), total, err);
    }
    Segment s = heap.top();
    heap.pop();
    const double mid = 0.5 * (s.a + s.b);
    Segment l = gk15(f, s.a, mid);
    Segment r = gk15(f, mid, s.b);
    evals += 30;
    ++intervals;
    total += l.value + r.value - s.value;
    err += l.error + r.error - s.error;
    absv += l.abs_value + r.abs_value - s.abs_value;
    heap.push(l);
    heap.push(r);
    // Rounding drift in the running sums; recompute occasionally.
    if (intervals % 64 == 0) {
      auto copy = heap;
      total = err = absv = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        err += copy.top().error;
        absv += copy.top().abs_value;
        copy.pop();
      }
    }
  }
  out.value = total;
  out.error = err;
  out.abs_integral = absv;
  out.evaluations = evals;
  return out;
}

QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec,
                                         const SemiInfiniteOptions& opts) {
  spec.validate();
  if (!(opts.panel_width > 0.0)) throw DomainError("integrate_semi_infinite: panel width must be positive");
  QuadratureResult out;
  int quiet = 0;
  double x = 0.0;
  for (int panel = 0; panel < spec.max_subdivisions; ++panel) {
    const double x1 = x + opts.panel_width;
    QuadratureSpec local = spec;
    local.absolute_tolerance = std::max(spec.absolute_tolerance, 0.01 * spec.relative_tolerance * out.abs_integral);
    local.cancellation_tolerance = 0.1 * spec.cancellation_tolerance;
    const QuadratureResult r = integrate_adaptive(f, x, x1, local);
    out.value += r.value;
    out.error += r.error;
    out.abs_integral += r.abs_integral;
    out.evaluations += r.evaluations;
    x = x1;
    const double floor = std::max(spec.absolute_tolerance,
                                  std::max(spec.relative_tolerance, spec.cancellation_tolerance) * out.abs_integral);
    quiet = (r.abs_integral <= 0.01 * floor) ? quiet + 1 : 0;
    if (quiet >= 2 && x >= opts.min_extent) return out;
  }
  throw QuadratureError("integrate_semi_infinite: envelope did not decay within max_subdivisions panels",
                        out.value, out.error);
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return rule;
}

GaussRule gauss_hermite(int n) {
  if (n < 1) throw DomainError("gauss_hermite: n must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  double z = 0.0;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Initial guesses from the standard asymptotic placement of the largest roots.
    if (i == 0)
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * rule.nodes[n - 1];
    else if (i == 3)
      z = 1.91 * z - 0.91 * rule.nodes[n - 2];
    else
      z = 2.0 * z - rule.nodes[n - 1 - (i - 2)];
    double pp = 0.0;
    for (int it = 0; it < 200; ++it) {
      // Orthonormal Hermite recurrence.
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double dz = p1 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-15) break;
    }
    rule.nodes[n - 1 - i] = z;
    rule.nodes[i] = -z;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / (pp * pp);
  }
  return rule;
}

double integrate_gauss_legendre(const Integrand& f, double a, double b, int panels, int order) {
  if (panels < 1) throw DomainError("integrate_gauss_legendre: panels must be >= 1");
  const GaussRule rule = gauss_legendre(order);
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double c = a + (k + 0.5) * h;
    double part = 0.0;
    for (int i = 0; i < order; ++i) part += rule.weights[i] * f(c + 0.5 * h * rule.nodes[i]);
    sum += 0.5 * h * part;
  }
  return sum;
}

}  // namespace starkvqe
