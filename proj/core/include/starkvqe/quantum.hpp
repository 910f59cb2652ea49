#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starkvqe/jw.hpp"

namespace starkvqe {

class Statevector {
 public:
  Statevector() = default;
  explicit Statevector(std::size_t n_qubits);  // |0...0>
  static Statevector basis_state(std::size_t n_qubits, std::uint64_t index);

  std::size_t n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::vector<cplx>& amplitudes() { return amps_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;
  void normalize();

 private:
  std::size_t n_ = 0;
  std::vector<cplx> amps_;
};

// Spin orbitals occupied by the HF determinant in blocked order: lowest N/2 of each spin block.
std::vector<std::size_t> hf_occupation(std::size_t n_electrons, std::size_t n_qubits);
Statevector hf_reference(std::size_t n_electrons, std::size_t n_qubits);

// exp(-i theta P / 2) in place, theta = real part of p.coefficient.
void apply_exp_pauli(Statevector& state, const PauliString& p);

// <psi|P|psi> for a bare string (coefficient ignored).
cplx pauli_expectation(const Statevector& state, const PauliString& p);
double expectation(const Statevector& state, const PauliSum& h);

// Term-by-term shot sampling in each term's eigenbasis; deterministic in seed.
double sampled_expectation(const Statevector& state, const PauliSum& h, std::int64_t shots, std::uint64_t seed);

// Hermitian PauliSum grouped by X mask for repeated fast expectation values.
class CompiledObservable {
 public:
  explicit CompiledObservable(const PauliSum& h);
  double expectation(const Statevector& state) const;
  // h|psi>
  void apply(const Statevector& in, std::vector<cplx>& out) const;
  std::size_t n_qubits() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> x_masks_;
  std::vector<std::vector<cplx>> weights_;  // per mask, diagonal factor per basis index
};

struct UCCAnsatz {
  std::size_t n_qubits = 0;
  std::size_t n_electrons = 0;
  std::vector<PauliSum> generators;  // JW(T_k - T_k^dagger), anti-Hermitian
  std::vector<std::string> labels;
  int trotter_steps = 1;
  std::size_t parameter_count() const { return generators.size(); }
};

// Spin-conserving singles then doubles out of the HF determinant.
UCCAnsatz build_uccsd(std::size_t n_electrons, std::size_t n_qubits, int trotter_steps = 1);

// prod over steps of prod_k exp(theta_k G_k / n), each Pauli term applied in lexicographic order.
Statevector apply_ansatz(const UCCAnsatz& ansatz, const std::vector<double>& theta, const Statevector& reference);

}  // namespace starkvqe
