#include "starkvqe/integrals2e.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "starkvqe/errors.hpp"
#include "starkvqe/specfun.hpp"

namespace starkvqe {

namespace {

constexpr double kPi = std::numbers::pi;

double cs(double a) { return normalization_constant(a, Angular::S); }
double cp(double a) { return normalization_constant(a, Angular::Pz); }

// 2 pi^{5/2} / (p q sqrt(p+q))
double kfac(double p, double q) { return 2.0 * std::pow(kPi, 2.5) / (p * q * std::sqrt(p + q)); }

// erf(x)/x with the removable singularity handled.
double erf_over(double x) {
  if (std::fabs(x) < 1e-6) return 2.0 / std::sqrt(kPi) * (1.0 - x * x / 3.0);
  return std::erf(x) / x;
}

}  // namespace

namespace family {

double eri_one_center_ssss(double a, double b, double c, double d) {
  const double p = a + b, q = c + d;
  return cs(a) * cs(b) * cs(c) * cs(d) * kfac(p, q);
}

double eri_one_center_pppp(double a, double b, double c, double d) {
  const double p = a + b, q = c + d, pq = p * q;
  const double v = std::pow(kPi, 2.5) / (pq * pq * std::sqrt(p + q)) * (1.0 / 3.0 + 0.3 * pq / ((p + q) * (p + q)));
  return cp(a) * cp(b) * cp(c) * cp(d) * v;
}

double eri_one_center_spsp(double a_s, double b_p, double c_s, double d_p) {
  const double p = a_s + b_p, q = c_s + d_p;
  return cs(a_s) * cp(b_p) * cs(c_s) * cp(d_p) * std::pow(kPi, 2.5) / (3.0 * p * q * std::pow(p + q, 1.5));
}

double eri_one_center_sspp(double a_s, double b_s, double c_p, double d_p) {
  const double p = a_s + b_s, q = c_p + d_p;
  const double v = std::pow(kPi, 2.5) / (p * q * q * std::sqrt(p + q)) * (1.0 - p / (3.0 * (p + q)));
  return cs(a_s) * cs(b_s) * cp(c_p) * cp(d_p) * v;
}

double eri_two_center_ss_exchange(double a, double b, double c, double d, double dist) {
  const double p = a + b, q = c + d;
  const double m = std::exp(-(a * b / p + c * d / q) * dist * dist);
  const double rz = std::fabs((a / p - c / q) * dist);
  const double rho = p * q / (p + q);
  const double v = std::pow(kPi, 3) * m / std::pow(p * q, 1.5) * std::sqrt(rho) * erf_over(std::sqrt(rho) * rz);
  return cs(a) * cs(b) * cs(c) * cs(d) * v;
}

double eri_two_center_ss_coulomb(double a, double b, double c, double d, double dist) {
  const double p = a + b, q = c + d;
  const double rho = p * q / (p + q);
  const double v = std::pow(kPi, 3) / std::pow(p * q, 1.5) * std::sqrt(rho) * erf_over(std::sqrt(rho) * std::fabs(dist));
  return cs(a) * cs(b) * cs(c) * cs(d) * v;
}

double eri_two_center_sp_exchange(double a_s, double b_p, double c_s, double d_p, double dist) {
  const double p = a_s + b_p, q = c_s + d_p;
  const double rho = p * q / (p + q);
  const double m = std::exp(-(a_s * b_p / p + c_s * d_p / q) * dist * dist);
  const double rp = a_s * dist / p, rq = c_s * dist / q;
  const double r = rp - rq;
  double f[3];
  boys_array(2, rho * r * r, f);
  const double v = rp * rq * f[0] + (rp * rho * r / q - rq * rho * r / p) * f[1] + rho * f[1] / (2.0 * p * q) -
                   rho * rho * r * r * f[2] / (p * q);
  return cs(a_s) * cp(b_p) * cs(c_s) * cp(d_p) * m * kfac(p, q) * v;
}

double eri_two_center_sp_coulomb(double a_s, double b_s, double c_p, double d_p, double dist) {
  const double p = a_s + b_s, q = c_p + d_p;
  const double rho = p * q / (p + q);
  double f[3];
  boys_array(2, rho * dist * dist, f);
  const double v = f[0] / (2.0 * q) + (-2.0 * rho * f[1] + 4.0 * rho * rho * dist * dist * f[2]) / (4.0 * q * q);
  return cs(a_s) * cs(b_s) * cp(c_p) * cp(d_p) * kfac(p, q) * v;
}

}  // namespace family

namespace {

constexpr int kMaxL = 2;             // per function per axis
constexpr int kMaxT = 2 * kMaxL;     // per pair per axis
constexpr int kMaxR = 2 * kMaxT;     // both pairs

// Hermite expansion coefficients E^{ij}_t of one axis of a Gaussian pair.
struct ETable {
  double v[kMaxL + 1][kMaxL + 1][kMaxT + 2] = {};
};

void fill_e(double a, double b, double xab, int imax, int jmax, ETable& e) {
  const double p = a + b;
  const double xpa = -b / p * xab, xpb = a / p * xab;
  const double h = 0.5 / p;
  e.v[0][0][0] = std::exp(-a * b / p * xab * xab);
  for (int i = 0; i < imax; ++i)
    for (int t = 0; t <= i + 1; ++t)
      e.v[i + 1][0][t] = (t > 0 ? h * e.v[i][0][t - 1] : 0.0) + xpa * e.v[i][0][t] + (t + 1) * e.v[i][0][t + 1];
  for (int i = 0; i <= imax; ++i)
    for (int j = 0; j < jmax; ++j)
      for (int t = 0; t <= i + j + 1; ++t)
        e.v[i][j + 1][t] = (t > 0 ? h * e.v[i][j][t - 1] : 0.0) + xpb * e.v[i][j][t] + (t + 1) * e.v[i][j][t + 1];
}

// Hermite Coulomb integrals R_{tuv} = R^0_{tuv}(rho, PQ) for t+u+v <= L.
class RTable {
 public:
  RTable(int L, double rho, const Vec3& pq) : L_(L) {
    const double r2 = pq[0] * pq[0] + pq[1] * pq[1] + pq[2] * pq[2];
    double f[kMaxR + 1];
    boys_array(L, rho * r2, f);
    std::vector<double> cur(size(), 0.0), next(size(), 0.0);
    // Build from n = L down to 0; level n holds t+u+v <= L-n.
    for (int n = L; n >= 0; --n) {
      std::fill(cur.begin(), cur.end(), 0.0);
      cur[idx(0, 0, 0)] = std::pow(-2.0 * rho, n) * f[n];
      const int top = L - n;
      for (int s = 1; s <= top; ++s) {
        for (int t = 0; t <= s; ++t) {
          for (int u = 0; u <= s - t; ++u) {
            const int v = s - t - u;
            double val;
            if (t > 0)
              val = (t > 1 ? (t - 1) * next[idx(t - 2, u, v)] : 0.0) + pq[0] * next[idx(t - 1, u, v)];
            else if (u > 0)
              val = (u > 1 ? (u - 1) * next[idx(t, u - 2, v)] : 0.0) + pq[1] * next[idx(t, u - 1, v)];
            else
              val = (v > 1 ? (v - 1) * next[idx(t, u, v - 2)] : 0.0) + pq[2] * next[idx(t, u, v - 1)];
            cur[idx(t, u, v)] = val;
          }
        }
      }
      std::swap(cur, next);
    }
    r_ = std::move(next);
  }
  double operator()(int t, int u, int v) const { return r_[idx(t, u, v)]; }

 private:
  std::size_t size() const { return static_cast<std::size_t>((L_ + 1) * (L_ + 1) * (L_ + 1)); }
  std::size_t idx(int t, int u, int v) const { return static_cast<std::size_t>((t * (L_ + 1) + u) * (L_ + 1) + v); }
  int L_;
  std::vector<double> r_;
};

}  // namespace

double eri_hermite(const CartesianGaussian& a, const CartesianGaussian& b, const CartesianGaussian& c,
                   const CartesianGaussian& d) {
  for (const auto* g : {&a, &b, &c, &d})
    for (int pw : g->powers)
      if (pw < 0 || pw > kMaxL) throw DomainError("eri_hermite: angular power out of range");
  const double p = a.exponent + b.exponent, q = c.exponent + d.exponent;
  const double rho = p * q / (p + q);
  ETable e1[3], e2[3];
  Vec3 pq{};
  int L = 0;
  for (int x = 0; x < 3; ++x) {
    fill_e(a.exponent, b.exponent, a.center[x] - b.center[x], a.powers[x], b.powers[x], e1[x]);
    fill_e(c.exponent, d.exponent, c.center[x] - d.center[x], c.powers[x], d.powers[x], e2[x]);
    const double P = (a.exponent * a.center[x] + b.exponent * b.center[x]) / p;
    const double Q = (c.exponent * c.center[x] + d.exponent * d.center[x]) / q;
    pq[x] = P - Q;
    L += a.powers[x] + b.powers[x] + c.powers[x] + d.powers[x];
  }
  const RTable r(L, rho, pq);
  const int t1 = a.powers[0] + b.powers[0], u1 = a.powers[1] + b.powers[1], v1 = a.powers[2] + b.powers[2];
  const int t2 = c.powers[0] + d.powers[0], u2 = c.powers[1] + d.powers[1], v2 = c.powers[2] + d.powers[2];
  double sum = 0.0;
  for (int t = 0; t <= t1; ++t)
    for (int u = 0; u <= u1; ++u)
      for (int v = 0; v <= v1; ++v) {
        const double ea = e1[0].v[a.powers[0]][b.powers[0]][t] * e1[1].v[a.powers[1]][b.powers[1]][u] *
                          e1[2].v[a.powers[2]][b.powers[2]][v];
        if (ea == 0.0) continue;
        for (int tt = 0; tt <= t2; ++tt)
          for (int uu = 0; uu <= u2; ++uu)
            for (int vv = 0; vv <= v2; ++vv) {
              const double eb = e2[0].v[c.powers[0]][d.powers[0]][tt] * e2[1].v[c.powers[1]][d.powers[1]][uu] *
                                e2[2].v[c.powers[2]][d.powers[2]][vv];
              const double sign = ((tt + uu + vv) % 2) ? -1.0 : 1.0;
              sum += ea * sign * eb * r(t + tt, u + uu, v + vv);
            }
      }
  return kfac(p, q) * sum;
}

namespace {

CartesianGaussian to_cartesian(const AxisPrimitive& x) {
  CartesianGaussian g;
  g.exponent = x.exponent;
  g.center = {0.0, 0.0, x.z};
  g.powers = {0, 0, x.angular == Angular::Pz ? 1 : 0};
  return g;
}

bool is_s(const AxisPrimitive& x) { return x.angular == Angular::S; }

double hermite_normalized(const AxisPrimitive& a, const AxisPrimitive& b, const AxisPrimitive& c,
                          const AxisPrimitive& d) {
  double norm = 1.0;
  for (const auto* x : {&a, &b, &c, &d}) norm *= normalization_constant(x->exponent, x->angular);
  return norm * eri_hermite(to_cartesian(a), to_cartesian(b), to_cartesian(c), to_cartesian(d));
}

double dispatch(const AxisPrimitive& a, const AxisPrimitive& b, const AxisPrimitive& c, const AxisPrimitive& d,
                EriRoute& route) {
  const int np = !is_s(a) + !is_s(b) + !is_s(c) + !is_s(d);
  const bool one_center = a.z == b.z && b.z == c.z && c.z == d.z;
  if (one_center) {
    if (np % 2 == 1) {
      route = EriRoute::Zero;
      return 0.0;
    }
    if (np == 0) {
      route = EriRoute::OneCenterSSSS;
      return family::eri_one_center_ssss(a.exponent, b.exponent, c.exponent, d.exponent);
    }
    if (np == 4) {
      route = EriRoute::OneCenterPPPP;
      return family::eri_one_center_pppp(a.exponent, b.exponent, c.exponent, d.exponent);
    }
    const bool pair1_pp = !is_s(a) && !is_s(b);
    const bool pair2_pp = !is_s(c) && !is_s(d);
    if (pair1_pp || pair2_pp) {
      route = EriRoute::OneCenterSSPP;
      return pair2_pp ? family::eri_one_center_sspp(a.exponent, b.exponent, c.exponent, d.exponent)
                      : family::eri_one_center_sspp(c.exponent, d.exponent, a.exponent, b.exponent);
    }
    route = EriRoute::OneCenterSPSP;
    const double s1 = is_s(a) ? a.exponent : b.exponent, p1 = is_s(a) ? b.exponent : a.exponent;
    const double s2 = is_s(c) ? c.exponent : d.exponent, p2 = is_s(c) ? d.exponent : c.exponent;
    return family::eri_one_center_spsp(s1, p1, s2, p2);
  }

  const bool pair1_split = a.z != b.z, pair2_split = c.z != d.z;
  if (np == 0) {
    if (pair1_split && pair2_split) {
      // Orient both pairs as (A, B) with A the first function of pair 1.
      const double za = a.z, zb = b.z;
      if ((c.z == za && d.z == zb) || (c.z == zb && d.z == za)) {
        route = EriRoute::TwoCenterSSExchange;
        const double cc = c.z == za ? c.exponent : d.exponent;
        const double dd = c.z == za ? d.exponent : c.exponent;
        return family::eri_two_center_ss_exchange(a.exponent, b.exponent, cc, dd, za - zb);
      }
    } else if (!pair1_split && !pair2_split && a.z != c.z) {
      route = EriRoute::TwoCenterSSCoulomb;
      return family::eri_two_center_ss_coulomb(a.exponent, b.exponent, c.exponent, d.exponent, a.z - c.z);
    }
  } else if (np == 2) {
    if (pair1_split && pair2_split && !is_s(a) + !is_s(b) == 1) {
      const AxisPrimitive& s1 = is_s(a) ? a : b;
      const AxisPrimitive& p1 = is_s(a) ? b : a;
      const AxisPrimitive& s2 = is_s(c) ? c : d;
      const AxisPrimitive& p2 = is_s(c) ? d : c;
      if (s1.z == s2.z && p1.z == p2.z) {
        route = EriRoute::TwoCenterSPExchange;
        return family::eri_two_center_sp_exchange(s1.exponent, p1.exponent, s2.exponent, p2.exponent, s1.z - p1.z);
      }
    } else if (!pair1_split && !pair2_split && a.z != c.z) {
      const bool pair1_ss = is_s(a) && is_s(b), pair2_pp = !is_s(c) && !is_s(d);
      const bool pair2_ss = is_s(c) && is_s(d), pair1_pp = !is_s(a) && !is_s(b);
      if (pair1_ss && pair2_pp) {
        route = EriRoute::TwoCenterSPCoulomb;
        return family::eri_two_center_sp_coulomb(a.exponent, b.exponent, c.exponent, d.exponent, a.z - c.z);
      }
      if (pair2_ss && pair1_pp) {
        route = EriRoute::TwoCenterSPCoulomb;
        return family::eri_two_center_sp_coulomb(c.exponent, d.exponent, a.exponent, b.exponent, c.z - a.z);
      }
    }
  }
  route = EriRoute::Hermite;
  return hermite_normalized(a, b, c, d);
}

}  // namespace

double eri_primitive(const AxisPrimitive& a, const AxisPrimitive& b, const AxisPrimitive& c, const AxisPrimitive& d,
                     EriRoute* route) {
  EriRoute r = EriRoute::Hermite;
  const double v = dispatch(a, b, c, d, r);
  if (route) *route = r;
  return v;
}

double eri(const ContractedOrbital& i, const ContractedOrbital& j, const ContractedOrbital& k,
           const ContractedOrbital& l) {
  for (const auto* o : {&i, &j, &k, &l})
    if (o->center[0] != 0.0 || o->center[1] != 0.0) throw DomainError("eri: centers must lie on the z axis");
  double sum = 0.0;
  for (const auto& pi : i.primitives)
    for (const auto& pj : j.primitives)
      for (const auto& pk : k.primitives)
        for (const auto& pl : l.primitives) {
          const double w = pi.contraction * pj.contraction * pk.contraction * pl.contraction;
          sum += w * eri_primitive({pi.exponent, i.center[2], pi.angular}, {pj.exponent, j.center[2], pj.angular},
                                   {pk.exponent, k.center[2], pk.angular}, {pl.exponent, l.center[2], pl.angular});
        }
  return sum;
}

ERITensor build_eri_tensor(const BasisSet& basis) {
  const std::size_t n = basis.size();
  ERITensor t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = eri(basis[i], basis[j], basis[k], basis[l]);
          for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}})
            for (auto [c, d] : {std::pair{k, l}, std::pair{l, k}}) {
              t(a, b, c, d) = v;
              t(c, d, a, b) = v;
            }
        }
  return t;
}

}  // namespace starkvqe
