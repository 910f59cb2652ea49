#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "starkvqe/fermiop.hpp"

namespace starkvqe {

using cplx = std::complex<double>;

enum class Pauli : std::uint8_t { I, X, Y, Z };

// coefficient * P_0 (x) P_1 (x) ... ; qubit q has X bit (x_mask>>q)&1 and Z bit (z_mask>>q)&1,
// with Y encoded as both bits. Text form lists qubit 0 first.
struct PauliString {
  std::size_t n_qubits = 0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  cplx coefficient{1.0, 0.0};

  static PauliString from_letters(const std::string& letters, cplx coefficient = 1.0);
  Pauli letter(std::size_t q) const;
  void set(std::size_t q, Pauli p);
  std::string letters() const;
  bool is_identity() const { return x_mask == 0 && z_mask == 0; }
  // Same letters (coefficients ignored).
  bool same_pattern(const PauliString& o) const { return x_mask == o.x_mask && z_mask == o.z_mask; }
};

// Product with phase tracking.
PauliString pauli_mul(const PauliString& p, const PauliString& q);

// Dense 2^n matrix, qubit 0 the least significant bit of the row index.
Eigen::MatrixXcd to_dense(const PauliString& p);

class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits) : n_(n_qubits) {}
  PauliSum(std::size_t n_qubits, std::vector<PauliString> terms);

  static PauliSum identity(std::size_t n_qubits, cplx c = 1.0);

  std::size_t n_qubits() const { return n_; }
  const std::vector<PauliString>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const PauliString& p);
  PauliSum& operator+=(const PauliSum& o);
  PauliSum& operator-=(const PauliSum& o);
  PauliSum& operator*=(cplx c);

  // Merge equal patterns, drop |c| <= threshold, sort lexicographically by letters (I<X<Y<Z, qubit 0 first).
  PauliSum simplified(double threshold = 1e-12) const;
  PauliSum adjoint() const;
  // All coefficients real within tol.
  bool is_hermitian(double tol = 1e-12) const;
  // Coefficient of the identity string (after merging).
  cplx identity_coefficient() const;

  Eigen::MatrixXcd to_dense() const;

  // One "<re> <im> <letters>" line per term.
  std::string to_text() const;
  static PauliSum from_text(const std::string& text);

 private:
  std::size_t n_ = 0;
  std::vector<PauliString> terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator*(const PauliSum& a, const PauliSum& b);
PauliSum operator*(cplx c, PauliSum a);

// Commutator [a, b], simplified.
PauliSum commutator(const PauliSum& a, const PauliSum& b);
// Anticommutator {a, b}, simplified.
PauliSum anticommutator(const PauliSum& a, const PauliSum& b);

// QuantumInformation: a -> Z..Z (X+iY)/2, occupied = |1>.
// Alternate: a -> (-Z)..(-Z) (X-iY)/2, occupied = |0>; a unitary relabeling of the first.
enum class JWConvention { QuantumInformation, Alternate };

PauliSum jw_lowering(std::size_t mode, std::size_t n_qubits,
                     JWConvention convention = JWConvention::QuantumInformation);
PauliSum jw_raising(std::size_t mode, std::size_t n_qubits,
                    JWConvention convention = JWConvention::QuantumInformation);
// sum_q (I - Z_q)/2 in the default convention.
PauliSum number_operator(std::size_t n_qubits);

PauliSum map_hamiltonian(const SpinOrbitalTensors& tensors, double constant = 0.0,
                         JWConvention convention = JWConvention::QuantumInformation, double threshold = 1e-12);

}  // namespace starkvqe
