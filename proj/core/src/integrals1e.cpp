#include "starkvqe/integrals1e.hpp"

#include <cmath>
#include <numbers>

#include "starkvqe/errors.hpp"
#include "starkvqe/specfun.hpp"

namespace starkvqe {

namespace {

constexpr double kPi = std::numbers::pi;

double cs(double a) { return normalization_constant(a, Angular::S); }
double cp(double a) { return normalization_constant(a, Angular::Pz); }
double sgn(double x) { return x < 0 ? -1.0 : 1.0; }

// cos y - sin(y)/y without cancellation near 0.
double cos_minus_sinc(double y) {
  if (std::fabs(y) < 0.1) {
    const double y2 = y * y;
    return y2 * (-1.0 / 3.0 + y2 * (1.0 / 30.0 + y2 * (-1.0 / 840.0 + y2 / 45360.0)));
  }
  return std::cos(y) - std::sin(y) / y;
}

// sin x - x cos x without cancellation near 0.
double sin_minus_xcos(double x) {
  if (std::fabs(x) < 0.1) {
    const double x2 = x * x;
    return x * x2 * (1.0 / 3.0 + x2 * (-1.0 / 30.0 + x2 * (1.0 / 840.0 - x2 / 45360.0)));
  }
  return std::sin(x) - x * std::cos(x);
}

// 1 - (2x + 1/x) F_D(x), the bracket of the kernel-at-p form with x = k / (2 sqrt(beta)).
double dawson_bracket(double x) {
  if (x < 0.5) {
    // sum_{m>=1} (-1)^m 2^{m+1} m x^{2m} / (2m+1)!!
    const double x2 = x * x;
    double pw = 1.0, dfact = 1.0, sum = 0.0;
    for (int m = 1; m < 20; ++m) {
      pw *= -2.0 * x2;
      dfact *= 2 * m + 1;
      sum += 2.0 * m * pw / dfact;
    }
    return sum;
  }
  return 1.0 - (2.0 * x + 1.0 / x) * dawson(x);
}

struct Prim {
  double exponent;
  double z;
  Angular angular;
  double coef;
};

void check_axis(const Vec3& v, const char* what) {
  if (v[0] != 0.0 || v[1] != 0.0) throw DomainError(std::string(what) + ": centers must lie on the z axis");
}

template <typename Fn>
double contract(const ContractedOrbital& i, const ContractedOrbital& j, Fn&& fn) {
  check_axis(i.center, "integrals1e");
  check_axis(j.center, "integrals1e");
  double sum = 0.0;
  for (const auto& pi : i.primitives)
    for (const auto& pj : j.primitives)
      sum += pi.contraction * pj.contraction *
             fn(Prim{pi.exponent, i.center[2], pi.angular, pi.contraction},
                Prim{pj.exponent, j.center[2], pj.angular, pj.contraction});
  return sum;
}

bool same_center(const Prim& a, const Prim& b) { return a.z == b.z; }

}  // namespace

namespace family {

double overlap_ss(double a, double b, double d) {
  const double p = a + b;
  return cs(a) * cs(b) * std::pow(kPi / p, 1.5) * std::exp(-a * b / p * d * d);
}

double overlap_sp(double a_s, double b_p, double dz) {
  const double p = a_s + b_p;
  return cs(a_s) * cp(b_p) * std::pow(kPi / p, 1.5) * std::exp(-a_s * b_p / p * dz * dz) * a_s * dz / p;
}

double overlap_pp_same(double a, double b) {
  const double p = a + b;
  return cp(a) * cp(b) * std::pow(kPi / p, 1.5) / (2.0 * p);
}

double kinetic_ss_same(double a, double b) {
  const double p = a + b;
  return cs(a) * cs(b) * 3.0 * a * b / p * std::pow(kPi / p, 1.5);
}

double kinetic_ss(double a, double b, double d) {
  const double p = a + b;
  const double mu = a * b / p;
  return cs(a) * cs(b) * mu * (3.0 - 2.0 * mu * d * d) * std::pow(kPi / p, 1.5) * std::exp(-mu * d * d);
}

double kinetic_sp(double a_s, double b_p, double dz) {
  // <p| -1/2 lap |s>, Laplacian on the s side; P measured from the p center (pb) and the s center (pa).
  const double p = a_s + b_p;
  const double pb = a_s * dz / p;
  const double pa = -b_p * dz / p;
  const double s0 = std::pow(kPi / p, 1.5) * std::exp(-a_s * b_p / p * dz * dz);
  const double bracket = 3.0 * a_s * pb - 2.0 * a_s * a_s * (pb * (1.5 / p + pa * pa) + pa / p);
  return cs(a_s) * cp(b_p) * s0 * bracket;
}

double kinetic_pp_same(double a, double b) {
  const double p = a + b;
  return cp(a) * cp(b) * 5.0 * std::pow(kPi, 1.5) * a * b / (2.0 * std::pow(p, 3.5));
}

double attraction_ss_same_center(double a, double b) { return cs(a) * cs(b) * 2.0 * kPi / (a + b); }

double attraction_ss_same_other_kernel(double a, double b, double d) {
  const double p = a + b;
  const double ad = std::fabs(d);
  if (std::sqrt(p) * ad < 1e-6) return attraction_ss_same_center(a, b);
  return cs(a) * cs(b) * std::pow(kPi / p, 1.5) * std::erf(std::sqrt(p) * ad) / ad;
}

double attraction_ss_two_center(double a, double b, double d, bool kernel_on_first) {
  const double p = a + b;
  const double other = kernel_on_first ? b : a;
  return cs(a) * cs(b) * 2.0 * kPi / p * std::exp(-a * b / p * d * d) * boys_f0(other * other * d * d / p);
}

double attraction_sp_same_center(double a_s, double b_p, double dz) {
  if (dz == 0.0) return 0.0;
  const double p = a_s + b_p;
  const double ad = std::fabs(dz);
  const double y = std::sqrt(p) * ad;
  double v;
  if (y < 0.5) {
    v = 2.0 * kPi * ad * boys(1, y * y) / p;
  } else {
    v = kPi * (std::sqrt(kPi) * std::erf(y) - 2.0 * y * std::exp(-y * y)) / (2.0 * std::pow(p, 2.5) * ad * ad);
  }
  return sgn(dz) * cs(a_s) * cp(b_p) * v;
}

double attraction_pp_same_center(double a, double b) {
  const double p = a + b;
  return cp(a) * cp(b) * 2.0 * kPi / (3.0 * p * p);
}

double attraction_pp_same_other_kernel(double a, double b, double d) {
  const double p = a + b;
  const double ad = std::fabs(d);
  const double t = p * ad * ad;
  const double y = std::sqrt(t);
  double v;
  if (y < 0.5) {
    double f[3];
    boys_array(2, t, f);
    v = 2.0 * kPi / p * ((f[0] - f[1]) / (2.0 * p) + ad * ad * f[2]);
  } else {
    v = kPi / (p * p) * (1.0 + t) * (std::sqrt(kPi) * std::erf(y) / (2.0 * y * t) - std::exp(-t) / t);
  }
  return cp(a) * cp(b) * v;
}

double attraction_sp_kernel_at_p(double a_s, double b_p, double dz, const QuadratureSpec& spec) {
  if (dz == 0.0) return 0.0;
  const double d = std::fabs(dz);
  const double sb = std::sqrt(b_p);
  auto f = [&](double k) {
    if (k == 0.0) return 0.0;
    return dawson_bracket(k / (2.0 * sb)) * std::exp(-k * k / (4.0 * a_s)) * cos_minus_sinc(k * d);
  };
  SemiInfiniteOptions opts;
  opts.panel_width = kPi / d;
  const QuadratureResult r = integrate_semi_infinite(f, spec, opts);
  const double pref = std::pow(kPi / a_s, 1.5) / (kPi * b_p * d);
  return sgn(dz) * cs(a_s) * cp(b_p) * pref * r.value;
}

double attraction_sp_kernel_at_s(double a_s, double b_p, double dz, const QuadratureSpec& spec) {
  if (dz == 0.0) return 0.0;
  const double d = std::fabs(dz);
  const double env = 1.0 / (4.0 * b_p * d * d);
  const double arg = 1.0 / (2.0 * std::sqrt(a_s) * d);
  auto f = [&](double x) { return sin_minus_xcos(x) * std::exp(-env * x * x) * dawson(arg * x); };
  SemiInfiniteOptions opts;
  opts.panel_width = kPi;
  const QuadratureResult r = integrate_semi_infinite(f, spec, opts);
  const double pref = std::sqrt(kPi) / (std::sqrt(a_s) * std::pow(b_p, 2.5) * d * d * d);
  return sgn(dz) * cs(a_s) * cp(b_p) * pref * r.value;
}

}  // namespace family

QuadratureSpec attraction_quadrature_spec() {
  QuadratureSpec s;
  s.relative_tolerance = 1e-11;
  s.absolute_tolerance = 1e-16;
  s.max_subdivisions = 2000;
  return s;
}

namespace {

double prim_overlap(const Prim& x, const Prim& y) {
  const bool xs = x.angular == Angular::S, ys = y.angular == Angular::S;
  if (xs && ys) return family::overlap_ss(x.exponent, y.exponent, x.z - y.z);
  if (xs) return family::overlap_sp(x.exponent, y.exponent, x.z - y.z);
  if (ys) return family::overlap_sp(y.exponent, x.exponent, y.z - x.z);
  if (!same_center(x, y)) throw DomainError("overlap: two-center p-p not supported");
  return family::overlap_pp_same(x.exponent, y.exponent);
}

double prim_kinetic(const Prim& x, const Prim& y) {
  const bool xs = x.angular == Angular::S, ys = y.angular == Angular::S;
  if (xs && ys) {
    if (same_center(x, y)) return family::kinetic_ss_same(x.exponent, y.exponent);
    return family::kinetic_ss(x.exponent, y.exponent, x.z - y.z);
  }
  if (xs != ys) {
    const Prim& s = xs ? x : y;
    const Prim& p = xs ? y : x;
    if (same_center(s, p)) return 0.0;
    return family::kinetic_sp(s.exponent, p.exponent, s.z - p.z);
  }
  if (!same_center(x, y)) throw DomainError("kinetic: two-center p-p not supported");
  return family::kinetic_pp_same(x.exponent, y.exponent);
}

double prim_attraction(const Prim& x, const Prim& y, double c) {
  const QuadratureSpec spec = attraction_quadrature_spec();
  const bool xs = x.angular == Angular::S, ys = y.angular == Angular::S;
  if (xs && ys) {
    if (same_center(x, y)) {
      if (x.z == c) return family::attraction_ss_same_center(x.exponent, y.exponent);
      return family::attraction_ss_same_other_kernel(x.exponent, y.exponent, c - x.z);
    }
    if (c == x.z) return family::attraction_ss_two_center(x.exponent, y.exponent, x.z - y.z, true);
    if (c == y.z) return family::attraction_ss_two_center(x.exponent, y.exponent, x.z - y.z, false);
    throw DomainError("nuclear_attraction: kernel must sit on an orbital center");
  }
  if (xs != ys) {
    const Prim& s = xs ? x : y;
    const Prim& p = xs ? y : x;
    if (same_center(s, p)) return family::attraction_sp_same_center(s.exponent, p.exponent, c - p.z);
    if (c == p.z) return family::attraction_sp_kernel_at_p(s.exponent, p.exponent, s.z - p.z, spec);
    if (c == s.z) return family::attraction_sp_kernel_at_s(s.exponent, p.exponent, s.z - p.z, spec);
    throw DomainError("nuclear_attraction: kernel must sit on an orbital center");
  }
  if (!same_center(x, y)) throw DomainError("nuclear_attraction: two-center p-p not supported");
  if (c == x.z) return family::attraction_pp_same_center(x.exponent, y.exponent);
  return family::attraction_pp_same_other_kernel(x.exponent, y.exponent, c - x.z);
}

template <typename Fn>
AOMatrix symmetric_matrix(const BasisSet& basis, Fn&& fn) {
  const auto k = static_cast<Eigen::Index>(basis.size());
  AOMatrix m(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = fn(basis[i], basis[j]);
  return m;
}

}  // namespace

double overlap(const ContractedOrbital& i, const ContractedOrbital& j) { return contract(i, j, prim_overlap); }

double kinetic(const ContractedOrbital& i, const ContractedOrbital& j) { return contract(i, j, prim_kinetic); }

double nuclear_attraction(const ContractedOrbital& i, const ContractedOrbital& j, const Vec3& center, int Z) {
  check_axis(center, "nuclear_attraction");
  return Z * contract(i, j, [&](const Prim& x, const Prim& y) { return prim_attraction(x, y, center[2]); });
}

AOMatrix overlap_matrix(const BasisSet& basis) { return symmetric_matrix(basis, overlap); }

AOMatrix kinetic_matrix(const BasisSet& basis) { return symmetric_matrix(basis, kinetic); }

AOMatrix attraction_matrix(const Molecule& molecule, const BasisSet& basis) {
  AOMatrix v = AOMatrix::Zero(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(basis.size()));
  for (const Atom& atom : molecule.atoms)
    v -= symmetric_matrix(basis, [&](const ContractedOrbital& i, const ContractedOrbital& j) {
      return nuclear_attraction(i, j, atom.position, atom.charge);
    });
  return v;
}

AOMatrix core_hamiltonian(const Molecule& molecule, const BasisSet& basis) {
  return kinetic_matrix(basis) + attraction_matrix(molecule, basis);
}

}  // namespace starkvqe
