#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "starkvqe/basis.hpp"
#include "starkvqe/integrals2e.hpp"
#include "support.hpp"

using namespace starkvqe;
using testsupport::Prim;

namespace {

AxisPrimitive axis(const Prim& p) { return {p.a, p.z0, p.p ? Angular::Pz : Angular::S}; }

double checked(const Prim& a, const Prim& b, const Prim& c, const Prim& d, EriRoute want) {
  EriRoute got{};
  const double v = eri_primitive(axis(a), axis(b), axis(c), axis(d), &got);
  EXPECT_EQ(static_cast<int>(got), static_cast<int>(want));
  return v;
}

}  // namespace

TEST(EriFamilies, RoutedAndMatchOracle) {
  const double al = 1.3, be = 0.7, ga = 0.9, de = 1.6, d = 1.7;
  using testsupport::eri_oracle;
  struct Case {
    Prim a, b, c, e;
    EriRoute route;
  };
  const Case cases[] = {
      {{al, 0, false}, {be, 0, false}, {ga, 0, false}, {de, 0, false}, EriRoute::OneCenterSSSS},
      {{al, 0, true}, {be, 0, true}, {ga, 0, true}, {de, 0, true}, EriRoute::OneCenterPPPP},
      {{al, 0, false}, {be, 0, true}, {ga, 0, false}, {de, 0, true}, EriRoute::OneCenterSPSP},
      {{al, 0, false}, {be, 0, false}, {ga, 0, true}, {de, 0, true}, EriRoute::OneCenterSSPP},
      {{al, d, false}, {be, 0, false}, {ga, d, false}, {de, 0, false}, EriRoute::TwoCenterSSExchange},
      {{al, d, false}, {be, d, false}, {ga, 0, false}, {de, 0, false}, EriRoute::TwoCenterSSCoulomb},
      {{al, d, false}, {be, 0, true}, {ga, d, false}, {de, 0, true}, EriRoute::TwoCenterSPExchange},
      {{al, d, false}, {be, d, false}, {ga, 0, true}, {de, 0, true}, EriRoute::TwoCenterSPCoulomb},
  };
  for (const auto& c : cases) {
    const double v = checked(c.a, c.b, c.c, c.e, c.route);
    EXPECT_LT(testsupport::rel_err(v, eri_oracle(c.a, c.b, c.c, c.e)), 1e-8) << static_cast<int>(c.route);
  }
}

TEST(EriFamilies, OddParityVanishes) {
  EriRoute r{};
  const double v = eri_primitive({1.0, 0, Angular::S}, {1.0, 0, Angular::S}, {1.0, 0, Angular::S},
                                 {1.0, 0, Angular::Pz}, &r);
  EXPECT_EQ(v, 0.0);
  EXPECT_EQ(r, EriRoute::Zero);
}

TEST(EriFamilies, ThreeCenterFallsBackToHermite) {
  const Prim a{0.8, 0.0, false}, b{1.1, 1.0, true}, c{0.6, 2.5, false}, d{0.9, 0.0, true};
  const double v = checked(a, b, c, d, EriRoute::Hermite);
  EXPECT_LT(testsupport::rel_err(v, testsupport::eri_oracle(a, b, c, d)), 1e-8);
}

TEST(Tensor, EightFoldSymmetry) {
  const auto t = build_eri_tensor(build_sto3g(make_lih(3.0)));
  const std::size_t n = t.dim();
  ASSERT_EQ(n, 4u);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double v = t(i, j, k, l);
          for (double w : {t(j, i, k, l), t(i, j, l, k), t(j, i, l, k), t(k, l, i, j), t(l, k, i, j), t(k, l, j, i),
                           t(l, k, j, i)})
            worst = std::max(worst, std::fabs(v - w));
        }
  EXPECT_LT(worst, 1e-14);
}

TEST(Tensor, H2EqualCentersAndDecay) {
  const auto near = build_eri_tensor(build_sto3g(make_h2(1.4)));
  EXPECT_NEAR(near(0, 0, 0, 0), near(1, 1, 1, 1), 1e-14);
  // Coulomb decays toward 1/d, exchange dies off.
  double prev_j = near(0, 0, 1, 1), prev_k = near(0, 1, 0, 1);
  for (double d : {2.0, 4.0, 8.0}) {
    const auto t = build_eri_tensor(build_sto3g(make_h2(d)));
    EXPECT_LT(t(0, 0, 1, 1), prev_j);
    EXPECT_LT(t(0, 1, 0, 1), prev_k);
    prev_j = t(0, 0, 1, 1);
    prev_k = t(0, 1, 0, 1);
  }
  EXPECT_NEAR(prev_j, 1.0 / 8.0, 1e-6);
  EXPECT_LT(prev_k, 1e-5);
}

TEST(Tensor, H2KnownValuesAtOnePointFourBohr) {
  const auto t = build_eri_tensor(build_sto3g(make_h2(1.4)));
  EXPECT_NEAR(t(0, 0, 0, 0), 0.7746, 1e-4);
  EXPECT_NEAR(t(0, 0, 1, 1), 0.5697, 1e-4);
}

TEST(Tensor, LiHEntriesAgainstOracle) {
  // Contracted entries rebuilt from primitive oracles for a few non-trivial index patterns.
  const auto basis = build_sto3g(make_lih(3.0));
  const auto t = build_eri_tensor(basis);
  auto prim = [&](std::size_t o, int k) {
    return Prim{basis[o].primitives[k].exponent, basis[o].center[2], basis[o].angular() == Angular::Pz};
  };
  const std::size_t picks[][4] = {{0, 3, 0, 3}, {0, 0, 3, 3}, {2, 3, 2, 3}, {0, 1, 2, 3}};
  for (const auto& q : picks) {
    double want = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int e = 0; e < 3; ++e)
            want += basis[q[0]].primitives[a].contraction * basis[q[1]].primitives[b].contraction *
                    basis[q[2]].primitives[c].contraction * basis[q[3]].primitives[e].contraction *
                    testsupport::eri_oracle(prim(q[0], a), prim(q[1], b), prim(q[2], c), prim(q[3], e));
    EXPECT_NEAR(t(q[0], q[1], q[2], q[3]), want, 1e-9) << q[0] << q[1] << q[2] << q[3];
  }
}

TEST(Hermite, OneCenterSpAgainstFamily) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> z(-1.5, 1.5);
  for (int trial = 0; trial < 30; ++trial) {
    const AxisPrimitive a{testsupport::random_exponent(rng), z(rng), Angular::S};
    const AxisPrimitive b{testsupport::random_exponent(rng), a.z, Angular::Pz};
    const CartesianGaussian ca{a.exponent, {0, 0, a.z}, {0, 0, 0}}, cb{b.exponent, {0, 0, b.z}, {0, 0, 1}};
    const double norm = testsupport::Prim{a.exponent, a.z, false}.norm() * testsupport::Prim{b.exponent, b.z, true}.norm();
    const double h = eri_hermite(ca, cb, ca, cb) * norm * norm;
    EXPECT_LT(testsupport::rel_err(eri_primitive(a, b, a, b), h), 1e-11);
  }
}
