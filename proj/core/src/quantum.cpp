#include "starkvqe/quantum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "starkvqe/errors.hpp"

namespace starkvqe {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

cplx letter_phase(const PauliString& p) { return kIPow[std::popcount(p.x_mask & p.z_mask) % 4]; }

double parity_sign(std::uint64_t v) { return (std::popcount(v) & 1) ? -1.0 : 1.0; }

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Statevector::Statevector(std::size_t n_qubits) : n_(n_qubits) {
  if (n_qubits > 24) throw DomainError("Statevector: too many qubits");
  amps_.assign(std::size_t{1} << n_qubits, cplx(0.0, 0.0));
  amps_[0] = 1.0;
}

Statevector Statevector::basis_state(std::size_t n_qubits, std::uint64_t index) {
  Statevector s(n_qubits);
  if (index >= s.dim()) throw DomainError("Statevector::basis_state: index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double Statevector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void Statevector::normalize() {
  const double n = norm();
  if (n == 0.0) throw DomainError("Statevector::normalize: zero vector");
  for (auto& a : amps_) a /= n;
}

std::vector<std::size_t> hf_occupation(std::size_t n_electrons, std::size_t n_qubits) {
  if (n_qubits % 2 != 0) throw DomainError("hf_occupation: blocked spin order needs an even qubit count");
  if (n_electrons > n_qubits) throw DomainError("hf_occupation: more electrons than spin orbitals");
  if (n_electrons % 2 != 0) throw DomainError("hf_occupation: closed shell needs an even electron count");
  const std::size_t k = n_qubits / 2;
  std::vector<std::size_t> occ;
  for (std::size_t i = 0; i < n_electrons / 2; ++i) occ.push_back(i);
  for (std::size_t i = 0; i < n_electrons / 2; ++i) occ.push_back(k + i);
  return occ;
}

Statevector hf_reference(std::size_t n_electrons, std::size_t n_qubits) {
  std::uint64_t idx = 0;
  for (std::size_t q : hf_occupation(n_electrons, n_qubits)) idx |= std::uint64_t{1} << q;
  return Statevector::basis_state(n_qubits, idx);
}

void apply_exp_pauli(Statevector& state, const PauliString& p) {
  if (p.n_qubits != state.n_qubits()) throw DomainError("apply_exp_pauli: qubit count mismatch");
  if (std::fabs(p.coefficient.imag()) > 1e-12) throw DomainError("apply_exp_pauli: rotation angle must be real");
  const double theta = p.coefficient.real();
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  const cplx mis(0.0, -s);  // -i sin
  auto& a = state.amplitudes();
  const cplx base = letter_phase(p);
  if (p.x_mask == 0) {
    for (std::uint64_t k = 0; k < a.size(); ++k) a[k] *= c + mis * base * parity_sign(p.z_mask & k);
    return;
  }
  // P|k> = base (-1)^{|z&k|} |k^x>; visit each pair (k, k^x) once via its lower member.
  const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(p.x_mask));
  for (std::uint64_t k = 0; k < a.size(); ++k) {
    if (k & top) continue;
    const std::uint64_t j = k ^ p.x_mask;
    const cplx ak = a[k], aj = a[j];
    // (P a)[k] = base (-1)^{|z&j|} a[j]
    a[k] = c * ak + mis * base * parity_sign(p.z_mask & j) * aj;
    a[j] = c * aj + mis * base * parity_sign(p.z_mask & k) * ak;
  }
}

cplx pauli_expectation(const Statevector& state, const PauliString& p) {
  if (p.n_qubits != state.n_qubits()) throw DomainError("pauli_expectation: qubit count mismatch");
  const auto& a = state.amplitudes();
  cplx acc = 0.0;
  for (std::uint64_t k = 0; k < a.size(); ++k) acc += std::conj(a[k ^ p.x_mask]) * parity_sign(p.z_mask & k) * a[k];
  return acc * letter_phase(p);
}

double expectation(const Statevector& state, const PauliSum& h) {
  if (!h.is_hermitian(1e-12)) throw DomainError("expectation: observable is not Hermitian");
  double acc = 0.0;
  for (const auto& t : h.terms()) acc += (t.coefficient * pauli_expectation(state, t)).real();
  return acc;
}

double sampled_expectation(const Statevector& state, const PauliSum& h, std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw DomainError("sampled_expectation: shots must be >= 1");
  if (!h.is_hermitian(1e-12)) throw DomainError("sampled_expectation: observable is not Hermitian");
  std::mt19937_64 rng(seed);
  const PauliSum hs = h.simplified(0.0);
  const std::size_t n = state.n_qubits();
  const std::size_t dim = state.dim();
  std::vector<cplx> work(dim);
  std::vector<double> cdf(dim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double total = 0.0;
  for (const auto& t : hs.terms()) {
    const double coef = t.coefficient.real();
    if (t.is_identity()) {
      total += coef;
      continue;
    }
    work = state.amplitudes();
    // Rotate X -> Z with H, Y -> Z with H S^dagger.
    for (std::size_t q = 0; q < n; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      const Pauli l = t.letter(q);
      if (l == Pauli::I || l == Pauli::Z) continue;
      for (std::uint64_t k = 0; k < dim; ++k) {
        if (k & bit) continue;
        cplx a0 = work[k], a1 = work[k | bit];
        if (l == Pauli::Y) a1 *= cplx(0.0, -1.0);
        work[k] = (a0 + a1) * inv_sqrt2;
        work[k | bit] = (a0 - a1) * inv_sqrt2;
      }
    }
    double run = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      run += std::norm(work[k]);
      cdf[k] = run;
    }
    const std::uint64_t support = t.x_mask | t.z_mask;
    std::int64_t plus = 0;
    for (std::int64_t s = 0; s < shots; ++s) {
      const double u = uniform01(rng) * run;
      auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      std::size_t k = static_cast<std::size_t>(it - cdf.begin());
      if (k >= dim) k = dim - 1;
      if (parity_sign(support & k) > 0) ++plus;
    }
    const double mean = (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) / static_cast<double>(shots);
    total += coef * mean;
  }
  return total;
}

CompiledObservable::CompiledObservable(const PauliSum& h) : n_(h.n_qubits()) {
  if (!h.is_hermitian(1e-12)) throw DomainError("CompiledObservable: observable is not Hermitian");
  const std::size_t dim = std::size_t{1} << n_;
  std::map<std::uint64_t, std::vector<cplx>> groups;
  for (const auto& t : h.terms()) {
    auto& w = groups[t.x_mask];
    if (w.empty()) w.assign(dim, cplx(0.0, 0.0));
    const cplx base = t.coefficient * letter_phase(t);
    for (std::uint64_t k = 0; k < dim; ++k) w[k] += base * parity_sign(t.z_mask & k);
  }
  for (auto& [mask, w] : groups) {
    x_masks_.push_back(mask);
    weights_.push_back(std::move(w));
  }
}

double CompiledObservable::expectation(const Statevector& state) const {
  if (state.n_qubits() != n_) throw DomainError("CompiledObservable: qubit count mismatch");
  const auto& a = state.amplitudes();
  double acc = 0.0;
  for (std::size_t g = 0; g < x_masks_.size(); ++g) {
    const std::uint64_t x = x_masks_[g];
    const auto& w = weights_[g];
    cplx s = 0.0;
    for (std::uint64_t k = 0; k < a.size(); ++k) s += std::conj(a[k ^ x]) * w[k] * a[k];
    acc += s.real();
  }
  return acc;
}

void CompiledObservable::apply(const Statevector& in, std::vector<cplx>& out) const {
  const auto& a = in.amplitudes();
  out.assign(a.size(), cplx(0.0, 0.0));
  for (std::size_t g = 0; g < x_masks_.size(); ++g) {
    const std::uint64_t x = x_masks_[g];
    const auto& w = weights_[g];
    for (std::uint64_t k = 0; k < a.size(); ++k) out[k ^ x] += w[k] * a[k];
  }
}

namespace {

std::string spin_orbital_label(std::size_t q, std::size_t k) {
  std::ostringstream os;
  os << (q % k) << (q < k ? 'a' : 'b');
  return os.str();
}

}  // namespace

UCCAnsatz build_uccsd(std::size_t n_electrons, std::size_t n_qubits, int trotter_steps) {
  if (trotter_steps < 1) throw DomainError("build_uccsd: trotter_steps must be >= 1");
  const std::vector<std::size_t> occ = hf_occupation(n_electrons, n_qubits);
  std::vector<std::size_t> vir;
  for (std::size_t q = 0; q < n_qubits; ++q)
    if (std::find(occ.begin(), occ.end(), q) == occ.end()) vir.push_back(q);
  const std::size_t k = n_qubits / 2;
  auto spin = [k](std::size_t q) { return q < k ? 0 : 1; };

  UCCAnsatz ans;
  ans.n_qubits = n_qubits;
  ans.n_electrons = n_electrons;
  ans.trotter_steps = trotter_steps;
  auto push = [&](const PauliSum& t, std::string label) {
    PauliSum g = (t - t.adjoint()).simplified();
    ans.generators.push_back(std::move(g));
    ans.labels.push_back(std::move(label));
  };
  for (std::size_t i : occ)
    for (std::size_t a : vir) {
      if (spin(i) != spin(a)) continue;
      push(jw_raising(a, n_qubits) * jw_lowering(i, n_qubits),
           "S " + spin_orbital_label(i, k) + "->" + spin_orbital_label(a, k));
    }
  for (std::size_t x = 0; x < occ.size(); ++x)
    for (std::size_t y = x + 1; y < occ.size(); ++y)
      for (std::size_t u = 0; u < vir.size(); ++u)
        for (std::size_t v = u + 1; v < vir.size(); ++v) {
          const std::size_t i = occ[x], j = occ[y], a = vir[u], b = vir[v];
          if (spin(i) + spin(j) != spin(a) + spin(b)) continue;
          push(jw_raising(a, n_qubits) * jw_raising(b, n_qubits) * jw_lowering(j, n_qubits) * jw_lowering(i, n_qubits),
               "D " + spin_orbital_label(i, k) + spin_orbital_label(j, k) + "->" + spin_orbital_label(a, k) +
                   spin_orbital_label(b, k));
        }
  return ans;
}

Statevector apply_ansatz(const UCCAnsatz& ansatz, const std::vector<double>& theta, const Statevector& reference) {
  if (theta.size() != ansatz.parameter_count()) throw DomainError("apply_ansatz: parameter count mismatch");
  if (reference.n_qubits() != ansatz.n_qubits) throw DomainError("apply_ansatz: qubit count mismatch");
  Statevector psi = reference;
  const double inv_n = 1.0 / ansatz.trotter_steps;
  for (int step = 0; step < ansatz.trotter_steps; ++step) {
    for (std::size_t g = 0; g < ansatz.generators.size(); ++g) {
      if (theta[g] == 0.0) continue;
      for (const auto& term : ansatz.generators[g].terms()) {
        // theta (i c P) = -i (-2 theta c) P / 2
        PauliString rot = term;
        rot.coefficient = -2.0 * theta[g] * inv_n * term.coefficient.imag();
        apply_exp_pauli(psi, rot);
      }
    }
  }
  return psi;
}

}  // namespace starkvqe
