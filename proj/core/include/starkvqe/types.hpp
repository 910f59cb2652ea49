#pragma once

#include <array>

namespace starkvqe {

using Vec3 = std::array<double, 3>;

// Unnormalized Cartesian Gaussian (x-Ax)^l (y-Ay)^m (z-Az)^n exp(-a|r-A|^2).
struct CartesianGaussian {
  double exponent = 1.0;
  Vec3 center{0.0, 0.0, 0.0};
  std::array<int, 3> powers{0, 0, 0};
};

}  // namespace starkvqe
