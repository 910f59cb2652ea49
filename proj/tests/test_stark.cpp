#include <cmath>

#include <gtest/gtest.h>

#include "starkvqe/basis.hpp"
#include "starkvqe/errors.hpp"
#include "starkvqe/stark.hpp"
#include "support.hpp"

using namespace starkvqe;

TEST(Dipole, FamiliesAgainstOracle) {
  const double a = 1.3, b = 0.7, d = 1.9;
  using testsupport::dipole_oracle;
  EXPECT_NEAR(family::dipole_ss(a, d, b, 0.0), dipole_oracle({a, d, false}, {b, 0, false}), 1e-10);
  EXPECT_NEAR(family::dipole_ss(a, -0.4, b, 1.1), dipole_oracle({a, -0.4, false}, {b, 1.1, false}), 1e-10);
  EXPECT_NEAR(family::dipole_sp_same(a, b), dipole_oracle({a, 0, false}, {b, 0, true}), 1e-10);
  EXPECT_NEAR(family::dipole_sp(a, b, d), dipole_oracle({a, d, false}, {b, 0, true}), 1e-10);
  EXPECT_NEAR(family::dipole_pp_same(a, b, d), dipole_oracle({a, d, true}, {b, d, true}), 1e-10);
}

TEST(Dipole, MatrixSymmetricAndCenters) {
  const auto basis = build_sto3g(make_lih(3.0));
  const auto z = dipole_matrix(basis);
  EXPECT_LT((z - z.transpose()).norm(), 1e-14);
  // A normalized s function centered at z0 has <z> = z0.
  EXPECT_NEAR(z(0, 0), 3.0 * overlap(basis[0], basis[0]), 1e-12);
  EXPECT_NEAR(z(1, 1), 0.0, 1e-14);
}

TEST(FieldMatrix, LinearInField) {
  const auto mol = make_lih(3.0);
  const auto basis = build_sto3g(mol);
  const auto j1 = field_matrix(mol, basis, {1e-3});
  const auto j2 = field_matrix(mol, basis, {2e-3});
  EXPECT_LT((j2 - 2.0 * j1).norm(), 1e-15);
  EXPECT_LT((j1 + 1e-3 * dipole_matrix(basis)).norm(), 1e-15);
  EXPECT_EQ(field_matrix(mol, basis, {0.0}).norm(), 0.0);
}

TEST(FieldMatrix, TableConventionZeroesDisplacedDiagonal) {
  const auto mol = make_h2(1.4);
  const auto basis = build_sto3g(mol);
  const auto j = field_matrix(mol, basis, {0.01}, StarkConvention::Table);
  EXPECT_EQ(j(0, 0), 0.0);
  EXPECT_EQ(j(1, 1), 0.0);
  EXPECT_NE(j(0, 1), 0.0);
  const auto jd = field_matrix(mol, basis, {0.01}, StarkConvention::Dipole);
  EXPECT_NEAR(j(0, 1), jd(0, 1), 1e-15);
  EXPECT_LT(jd(0, 0), 0.0);
}

TEST(NuclearEnergy, ZeroField) {
  EXPECT_DOUBLE_EQ(nuclear_energy(make_h2(2.0)), 0.5);
  EXPECT_DOUBLE_EQ(nuclear_energy(make_lih(3.0)), 1.0);
}

TEST(NuclearEnergy, DipoleConventionAddsFieldTerm) {
  const auto mol = make_lih(3.0);
  EXPECT_NEAR(nuclear_energy(mol, {0.01}), 1.0 + 0.01 * 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(nuclear_energy(mol, {0.01}, StarkConvention::Table), 1.0);
}

TEST(Convention, Parse) {
  EXPECT_EQ(parse_stark_convention("dipole"), StarkConvention::Dipole);
  EXPECT_EQ(parse_stark_convention("table"), StarkConvention::Table);
  EXPECT_EQ(to_string(StarkConvention::Table), "table");
  EXPECT_THROW(parse_stark_convention("sideways"), ConfigError);
}
