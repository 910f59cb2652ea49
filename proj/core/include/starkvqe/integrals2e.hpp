#pragma once

#include <array>
#include <vector>

#include "starkvqe/basis.hpp"
#include "starkvqe/types.hpp"

namespace starkvqe {

// Closed forms over normalized primitives, chemist order (ab|cd). Exponents a, b belong
// to electron 1 and c, d to electron 2; p = a+b, q = c+d.
namespace family {

double eri_one_center_ssss(double a, double b, double c, double d);
double eri_one_center_pppp(double a, double b, double c, double d);
// (s p|s p): one p per electron.
double eri_one_center_spsp(double a_s, double b_p, double c_s, double d_p);
// (s s|p p): both p on electron 2.
double eri_one_center_sspp(double a_s, double b_s, double c_p, double d_p);
// Two centers A, B with dist = z_A - z_B (signed).
// (s_A s_B|s_A s_B)
double eri_two_center_ss_exchange(double a, double b, double c, double d, double dist);
// (s_A s_A|s_B s_B)
double eri_two_center_ss_coulomb(double a, double b, double c, double d, double dist);
// (s_A p_B|s_A p_B)
double eri_two_center_sp_exchange(double a_s, double b_p, double c_s, double d_p, double dist);
// (s_A s_A|p_B p_B)
double eri_two_center_sp_coulomb(double a_s, double b_s, double c_p, double d_p, double dist);

}  // namespace family

// McMurchie-Davidson over unnormalized Cartesian Gaussians; the general fallback.
double eri_hermite(const CartesianGaussian& a, const CartesianGaussian& b, const CartesianGaussian& c,
                   const CartesianGaussian& d);

// Which closed form (or the general engine) a primitive quadruple was routed to.
enum class EriRoute {
  Zero,
  OneCenterSSSS,
  OneCenterPPPP,
  OneCenterSPSP,
  OneCenterSSPP,
  TwoCenterSSExchange,
  TwoCenterSSCoulomb,
  TwoCenterSPExchange,
  TwoCenterSPCoulomb,
  Hermite,
};

struct AxisPrimitive {
  double exponent;
  double z;
  Angular angular;
};

// Normalized primitive ERI with family dispatch.
double eri_primitive(const AxisPrimitive& a, const AxisPrimitive& b, const AxisPrimitive& c,
                     const AxisPrimitive& d, EriRoute* route = nullptr);

double eri(const ContractedOrbital& i, const ContractedOrbital& j, const ContractedOrbital& k,
           const ContractedOrbital& l);

// Dense K^4 tensor in chemist order, index ((i*K + j)*K + k)*K + l.
class ERITensor {
 public:
  ERITensor() = default;
  explicit ERITensor(std::size_t k) : k_(k), data_(k * k * k * k, 0.0) {}
  std::size_t dim() const { return k_; }
  double& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[((i * k_ + j) * k_ + k) * k_ + l];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[((i * k_ + j) * k_ + k) * k_ + l];
  }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t k_ = 0;
  std::vector<double> data_;
};

ERITensor build_eri_tensor(const BasisSet& basis);

}  // namespace starkvqe
