#include "starkvqe/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "starkvqe/errors.hpp"

namespace starkvqe {

Optimizer parse_optimizer(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "nelder-mead" || t == "neldermead" || t == "nm") return Optimizer::NelderMead;
  if (t == "spsa") return Optimizer::SPSA;
  throw ConfigError("unknown optimizer '" + s + "' (expected nelder-mead or spsa)");
}

std::string to_string(Optimizer o) { return o == Optimizer::SPSA ? "spsa" : "nelder-mead"; }

void VQEConfig::validate() const {
  if (max_iterations < 1) throw ConfigError("vqe: max_iterations must be >= 1");
  if (!(energy_tolerance > 0.0)) throw ConfigError("vqe: energy_tolerance must be positive");
  if (shots && *shots < 1) throw ConfigError("vqe: shots must be >= 1");
  if (!(simplex_step > 0.0)) throw ConfigError("vqe: simplex_step must be positive");
  if (max_restarts < 0) throw ConfigError("vqe: max_restarts must be >= 0");
  if (!(spsa_a > 0.0) || !(spsa_c > 0.0) || spsa_A < 0.0) throw ConfigError("vqe: bad SPSA gains");
  if (spsa_patience < 1) throw ConfigError("vqe: spsa_patience must be >= 1");
}

OptimizerResult nelder_mead(const Objective& f, const std::vector<double>& x0, const VQEConfig& config) {
  const std::size_t n = x0.size();
  OptimizerResult res;
  auto eval = [&](const std::vector<double>& x) {
    ++res.evaluations;
    return f(x);
  };
  if (n == 0) {
    res.x = x0;
    res.value = eval(x0);
    res.converged = true;
    return res;
  }
  const double dn = static_cast<double>(n);
  const double alpha = 1.0, gamma = 1.0 + 2.0 / dn, rho = 0.75 - 0.5 / dn, sigma = 1.0 - 1.0 / dn;

  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += config.simplex_step;
  for (std::size_t i = 0; i <= n; ++i) fv[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  auto point = [&](double t, std::vector<double>& out, const std::vector<double>& worst) {
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + t * (centroid[j] - worst[j]);
  };

  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    {
      std::vector<std::vector<double>> s2(n + 1);
      std::vector<double> f2(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        s2[i] = std::move(simplex[order[i]]);
        f2[i] = fv[order[i]];
      }
      simplex.swap(s2);
      fv.swap(f2);
    }
    if (res.iterations > 0) res.history.push_back(fv[0]);

    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j) diameter = std::max(diameter, std::fabs(simplex[i][j] - simplex[0][j]));
    if (diameter < 1e-9 || fv[n] - fv[0] < config.energy_tolerance) {
      res.converged = true;
      break;
    }
    if (res.iterations >= config.max_iterations) break;
    ++res.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / dn;
    const auto& worst = simplex[n];

    point(alpha, xr, worst);
    const double fr = eval(xr);
    if (fr < fv[0]) {
      point(alpha * gamma, xe, worst);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[n] = xe;
        fv[n] = fe;
      } else {
        simplex[n] = xr;
        fv[n] = fr;
      }
      continue;
    }
    if (fr < fv[n - 1]) {
      simplex[n] = xr;
      fv[n] = fr;
      continue;
    }
    // Outside contraction when the reflected point beats the worst, inside otherwise.
    const bool outside = fr < fv[n];
    point(outside ? alpha * rho : -rho, xc, worst);
    const double fc = eval(xc);
    if (fc < (outside ? fr : fv[n])) {
      simplex[n] = xc;
      fv[n] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) simplex[i][j] = simplex[0][j] + sigma * (simplex[i][j] - simplex[0][j]);
      fv[i] = eval(simplex[i]);
    }
  }
  res.x = simplex[0];
  res.value = fv[0];
  return res;
}

OptimizerResult spsa(const Objective& f, const std::vector<double>& x0, const VQEConfig& config) {
  const std::size_t n = x0.size();
  OptimizerResult res;
  std::mt19937_64 rng(config.seed);
  std::vector<double> x = x0, xp(n), xm(n);
  std::vector<int> delta(n);
  res.x = x0;
  res.value = f(x0);
  res.evaluations = 1;
  int since_improvement = 0;
  for (int k = 0; k < config.max_iterations; ++k) {
    const double ak = config.spsa_a / std::pow(k + 1 + config.spsa_A, 0.602);
    const double ck = config.spsa_c / std::pow(k + 1, 0.101);
    for (std::size_t i = 0; i < n; ++i) {
      delta[i] = (rng() >> 63) ? 1 : -1;
      xp[i] = x[i] + ck * delta[i];
      xm[i] = x[i] - ck * delta[i];
    }
    const double diff = (f(xp) - f(xm)) / (2.0 * ck);
    for (std::size_t i = 0; i < n; ++i) x[i] -= ak * diff * delta[i];
    const double fx = f(x);
    res.evaluations += 3;
    res.iterations = k + 1;
    if (fx < res.value - config.energy_tolerance) since_improvement = 0;
    else ++since_improvement;
    if (fx < res.value) {
      res.value = fx;
      res.x = x;
    }
    res.history.push_back(res.value);
    if (since_improvement >= config.spsa_patience) {
      res.converged = true;
      break;
    }
  }
  return res;
}

double exact_ground_energy(const PauliSum& h, std::size_t n_electrons) {
  const std::size_t nq = h.n_qubits();
  if (nq > kMaxDenseModes) throw DomainError("exact_ground_energy: too many qubits for a dense solve");
  if (n_electrons > nq) throw DomainError("exact_ground_energy: more electrons than qubits");
  const std::uint64_t dim = std::uint64_t{1} << nq;
  std::vector<std::uint64_t> states;
  std::vector<long> slot(dim, -1);
  for (std::uint64_t k = 0; k < dim; ++k)
    if (static_cast<std::size_t>(std::popcount(k)) == n_electrons) {
      slot[k] = static_cast<long>(states.size());
      states.push_back(k);
    }
  const auto m = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(m, m);
  static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& t : h.terms()) {
    const cplx base = t.coefficient * kIPow[std::popcount(t.x_mask & t.z_mask) % 4];
    for (Eigen::Index c = 0; c < m; ++c) {
      const std::uint64_t k = states[static_cast<std::size_t>(c)];
      const long r = slot[k ^ t.x_mask];
      if (r < 0) continue;
      const double sign = (std::popcount(t.z_mask & k) & 1) ? -1.0 : 1.0;
      mat(r, c) += base * sign;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("exact_ground_energy: eigensolver failed", 0, 0.0);
  return es.eigenvalues()(0);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

VQEResult vqe_minimize(const PauliSum& h, const UCCAnsatz& ansatz, const Statevector& reference,
                       const VQEConfig& config) {
  config.validate();
  if (h.n_qubits() != ansatz.n_qubits || reference.n_qubits() != ansatz.n_qubits)
    throw DomainError("vqe_minimize: qubit counts differ");

  const CompiledObservable compiled(h);
  std::uint64_t eval_counter = 0;
  Objective objective;
  if (config.shots) {
    objective = [&](const std::vector<double>& theta) {
      const Statevector psi = apply_ansatz(ansatz, theta, reference);
      return sampled_expectation(psi, h, *config.shots, splitmix64(config.seed ^ splitmix64(++eval_counter)));
    };
  } else {
    objective = [&](const std::vector<double>& theta) {
      return compiled.expectation(apply_ansatz(ansatz, theta, reference));
    };
  }

  const std::vector<double> theta0(ansatz.parameter_count(), 0.0);
  VQEResult out;
  if (config.optimizer == Optimizer::SPSA) {
    OptimizerResult r = spsa(objective, theta0, config);
    out.energy = r.value;
    out.parameters = std::move(r.x);
    out.evaluations = r.evaluations;
    out.iterations = r.iterations;
    out.history = std::move(r.history);
    out.converged = r.converged;
    return out;
  }

  // Nelder-Mead restarted from the incumbent until a restart stops paying off.
  VQEConfig cfg = config;
  OptimizerResult best = nelder_mead(objective, theta0, cfg);
  out.evaluations = best.evaluations;
  out.iterations = best.iterations;
  out.history = best.history;
  for (int r = 0; r < config.max_restarts && out.iterations < config.max_iterations; ++r) {
    cfg.max_iterations = config.max_iterations - out.iterations;
    OptimizerResult next = nelder_mead(objective, best.x, cfg);
    out.evaluations += next.evaluations;
    out.iterations += next.iterations;
    for (double v : next.history) out.history.push_back(std::min(v, best.value));
    const double gain = best.value - next.value;
    if (next.value < best.value) {
      best.x = next.x;
      best.value = next.value;
    }
    best.converged = next.converged;
    if (gain < config.energy_tolerance) break;
  }
  out.energy = best.value;
  out.parameters = best.x;
  out.converged = best.converged;
  return out;
}

}  // namespace starkvqe
