#include <cmath>

#include <gtest/gtest.h>

#include "starkvqe/errors.hpp"
#include "starkvqe/pipeline.hpp"
#include "starkvqe/solvers.hpp"

using namespace starkvqe;

namespace {

double quadratic(const std::vector<double>& x) {
  return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 0.5) * (x[1] + 0.5) + 2.0;
}

double rosenbrock(const std::vector<double>& x) {
  return 100.0 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1.0 - x[0]) * (1.0 - x[0]);
}

}  // namespace

TEST(NelderMead, Quadratic) {
  VQEConfig c;
  c.energy_tolerance = 1e-14;
  const auto r = nelder_mead(quadratic, {0.0, 0.0}, c);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
  EXPECT_NEAR(r.x[0], 1.0, 1e-5);
  EXPECT_NEAR(r.x[1], -0.5, 1e-5);
  for (std::size_t i = 1; i < r.history.size(); ++i) EXPECT_LE(r.history[i], r.history[i - 1]);
}

TEST(NelderMead, Rosenbrock) {
  VQEConfig c;
  c.energy_tolerance = 1e-16;
  c.simplex_step = 0.5;
  const auto r = nelder_mead(rosenbrock, {-1.2, 1.0}, c);
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], 1.0, 1e-4);
  EXPECT_LT(r.value, 1e-8);
}

TEST(NelderMead, RespectsIterationCap) {
  VQEConfig c;
  c.max_iterations = 5;
  c.max_restarts = 0;
  const auto r = nelder_mead(rosenbrock, {-1.2, 1.0}, c);
  EXPECT_LE(r.iterations, 5);
  EXPECT_FALSE(r.converged);
}

TEST(Spsa, QuadraticAndDeterminism) {
  VQEConfig c;
  c.optimizer = Optimizer::SPSA;
  c.max_iterations = 4000;
  c.seed = 17;
  const auto r = spsa(quadratic, {0.0, 0.0}, c);
  EXPECT_NEAR(r.value, 2.0, 1e-4);
  EXPECT_EQ(r.evaluations, 3 * r.iterations + 1);  // plus the starting point
  const auto again = spsa(quadratic, {0.0, 0.0}, c);
  EXPECT_EQ(r.x, again.x);
  EXPECT_EQ(r.value, again.value);
}

TEST(Config, ValidateAndParse) {
  EXPECT_EQ(parse_optimizer("nelder-mead"), Optimizer::NelderMead);
  EXPECT_EQ(parse_optimizer("nm"), Optimizer::NelderMead);
  EXPECT_EQ(parse_optimizer("spsa"), Optimizer::SPSA);
  EXPECT_EQ(to_string(Optimizer::SPSA), "spsa");
  EXPECT_THROW(parse_optimizer("cobyla"), ConfigError);
  VQEConfig c;
  EXPECT_NO_THROW(c.validate());
  c.shots = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  VQEConfig d;
  d.energy_tolerance = 0.0;
  EXPECT_THROW(d.validate(), ConfigError);
}

TEST(ExactGround, DiagonalAndTwoLevel) {
  // -Z0 - Z1 + 0.5 X0X1 restricted to one particle: {|01>,|10>} has energy 0 on the diagonal,
  // coupled by 0.5, so the minimum is -0.5.
  PauliSum h(2, {PauliString::from_letters("ZI", -1.0), PauliString::from_letters("IZ", -1.0),
                 PauliString::from_letters("XX", 0.5)});
  EXPECT_NEAR(exact_ground_energy(h, 1), -0.5, 1e-14);
  EXPECT_NEAR(exact_ground_energy(h, 0), -2.0, 1e-14);
  EXPECT_NEAR(exact_ground_energy(h, 2), 2.0, 1e-14);
  EXPECT_THROW(exact_ground_energy(h, 3), DomainError);
  EXPECT_THROW(exact_ground_energy(PauliSum(12), 2), DomainError);
}

TEST(ExactGround, MatchesFullDenseSectorSolve) {
  const auto p = build_problem("H2", 0.9, 0.03);
  const Eigen::MatrixXcd m = p.hamiltonian.to_dense();
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (std::popcount(static_cast<unsigned>(i)) == 2) idx.push_back(i);
  Eigen::MatrixXcd sub(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      sub(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = m(idx[a], idx[b]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sub);
  EXPECT_NEAR(exact_ground_energy(p.hamiltonian, 2), es.eigenvalues()(0), 1e-12);
  EXPECT_LE(exact_ground_energy(p.hamiltonian, 2), p.scf.hf_electronic_energy + 1e-12);
}

TEST(Vqe, H2AtOnePointFourBohrReachesExact) {
  const auto p = build_problem("H2", 1.4 / kBohrPerAngstrom, 0.0);
  const auto ansatz = build_uccsd(2, 4);
  const auto r = vqe_minimize(p.hamiltonian, ansatz, hf_reference(2, 4), VQEConfig{});
  EXPECT_TRUE(r.converged);
  const double exact = exact_ground_energy(p.hamiltonian, 2);
  EXPECT_NEAR(r.energy, exact, 1e-6);
  EXPECT_NEAR(r.energy + p.nuclear, -1.1373, 2e-4);
  EXPECT_EQ(r.parameters.size(), 3u);
}

TEST(Vqe, SampledModeIsSeeded) {
  const auto p = build_problem("H2", 0.7, 0.0);
  const auto ansatz = build_uccsd(2, 4);
  VQEConfig c;
  c.optimizer = Optimizer::SPSA;
  c.shots = 2000;
  c.max_iterations = 150;
  c.seed = 3;
  const auto a = vqe_minimize(p.hamiltonian, ansatz, hf_reference(2, 4), c);
  const auto b = vqe_minimize(p.hamiltonian, ansatz, hf_reference(2, 4), c);
  EXPECT_EQ(a.energy, b.energy);
  EXPECT_EQ(a.parameters, b.parameters);
  EXPECT_NEAR(a.energy, exact_ground_energy(p.hamiltonian, 2), 0.05);
}
