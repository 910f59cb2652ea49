#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "starkvqe/jw.hpp"
#include "starkvqe/quantum.hpp"

namespace starkvqe {

enum class Optimizer { NelderMead, SPSA };
Optimizer parse_optimizer(const std::string& s);
std::string to_string(Optimizer o);

struct VQEConfig {
  Optimizer optimizer = Optimizer::NelderMead;
  int max_iterations = 15000;
  double energy_tolerance = 1e-8;
  std::optional<std::int64_t> shots;  // unset: exact statevector expectation
  std::uint64_t seed = 0;

  // Nelder-Mead: initial simplex edge, and fresh simplices built around the best point while they still help.
  double simplex_step = 0.1;
  int max_restarts = 20;

  // SPSA gains and the no-improvement window that ends a run.
  double spsa_a = 0.2;
  double spsa_c = 0.1;
  double spsa_A = 100.0;
  int spsa_patience = 500;

  void validate() const;
};

struct OptimizerResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  std::vector<double> history;  // best value after each iteration
};

using Objective = std::function<double(const std::vector<double>&)>;

// Adaptive-coefficient simplex search (reflection 1, expansion 1+2/n, contraction 3/4-1/(2n), shrink 1-1/n).
OptimizerResult nelder_mead(const Objective& f, const std::vector<double>& x0, const VQEConfig& config);

// Bernoulli +-1 perturbations from mt19937_64(config.seed); returns the best iterate evaluated.
OptimizerResult spsa(const Objective& f, const std::vector<double>& x0, const VQEConfig& config);

// Lowest eigenvalue of h restricted to basis states with popcount n_electrons.
double exact_ground_energy(const PauliSum& h, std::size_t n_electrons);

struct VQEResult {
  double energy = 0.0;  // electronic
  std::vector<double> parameters;
  int evaluations = 0;
  int iterations = 0;
  std::vector<double> history;
  bool converged = false;
};

VQEResult vqe_minimize(const PauliSum& h, const UCCAnsatz& ansatz, const Statevector& reference,
                       const VQEConfig& config);

}  // namespace starkvqe
