#include <cmath>

#include <gtest/gtest.h>

#include "starkvqe/errors.hpp"
#include "starkvqe/fermiop.hpp"
#include "starkvqe/jw.hpp"
#include "starkvqe/pipeline.hpp"

using namespace starkvqe;

namespace {

Eigen::MatrixXcd single(Pauli p) {
  Eigen::MatrixXcd m(2, 2);
  const cplx i{0.0, 1.0};
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Kronecker product with qubit 0 as the least significant factor.
Eigen::MatrixXcd kron_letters(const std::string& letters) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : letters) {
    const Pauli p = c == 'X' ? Pauli::X : c == 'Y' ? Pauli::Y : c == 'Z' ? Pauli::Z : Pauli::I;
    const auto s = single(p);
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index a = 0; a < 2; ++a)
      for (Eigen::Index b = 0; b < 2; ++b) next.block(a * out.rows(), b * out.cols(), out.rows(), out.cols()) = s(a, b) * out;
    out = next;
  }
  return out;
}

SpinOrbitalTensors h2_tensors(double field) {
  const auto m = make_h2(0.7 * kBohrPerAngstrom);
  const auto basis = build_sto3g(m);
  const AOMatrix h = core_hamiltonian(m, basis) + field_matrix(m, basis, {field});
  const auto eri = build_eri_tensor(basis);
  const auto scf = scf_solve(h, eri, overlap_matrix(basis), 2);
  const auto mo = ao_to_mo(h, eri, scf.mo_coefficients);
  return build_spin_orbital_tensors(mo.one_body, mo.two_body);
}

}  // namespace

TEST(PauliString, LettersRoundTrip) {
  const auto p = PauliString::from_letters("XIZY", {0.5, -0.25});
  EXPECT_EQ(p.n_qubits, 4u);
  EXPECT_EQ(p.letter(0), Pauli::X);
  EXPECT_EQ(p.letter(3), Pauli::Y);
  EXPECT_EQ(p.letters(), "XIZY");
  EXPECT_EQ(p.x_mask, 0b1001u);
  EXPECT_EQ(p.z_mask, 0b1100u);
  EXPECT_THROW(PauliString::from_letters("XQ"), DomainError);
}

TEST(PauliString, ProductPhases) {
  const auto xy = pauli_mul(PauliString::from_letters("X"), PauliString::from_letters("Y"));
  EXPECT_EQ(xy.letters(), "Z");
  EXPECT_NEAR(std::abs(xy.coefficient - cplx(0, 1)), 0.0, 1e-15);
  const auto yx = pauli_mul(PauliString::from_letters("Y"), PauliString::from_letters("X"));
  EXPECT_NEAR(std::abs(yx.coefficient - cplx(0, -1)), 0.0, 1e-15);
  const auto zz = pauli_mul(PauliString::from_letters("ZX"), PauliString::from_letters("ZX"));
  EXPECT_TRUE(zz.is_identity());
  EXPECT_NEAR(std::abs(zz.coefficient - 1.0), 0.0, 1e-15);
}

TEST(PauliString, ProductMatchesDenseOnAllPairs) {
  const char* l = "IXYZ";
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      const std::string sa{l[a % 4], l[a / 4]}, sb{l[b % 4], l[b / 4]};
      const auto pa = PauliString::from_letters(sa), pb = PauliString::from_letters(sb);
      EXPECT_LT((to_dense(pauli_mul(pa, pb)) - kron_letters(sa) * kron_letters(sb)).norm(), 1e-14) << sa << sb;
    }
}

TEST(PauliString, DenseUsesQubitZeroAsLowBit) {
  EXPECT_LT((to_dense(PauliString::from_letters("ZI")) - kron_letters("ZI")).norm(), 1e-15);
  const auto z0 = to_dense(PauliString::from_letters("ZI"));
  EXPECT_EQ(z0(1, 1), cplx(-1.0));
  EXPECT_EQ(z0(2, 2), cplx(1.0));
}

TEST(PauliSum, SimplifyMergesAndSorts) {
  PauliSum s(2);
  s.add(PauliString::from_letters("ZI", 1.0));
  s.add(PauliString::from_letters("XX", 2.0));
  s.add(PauliString::from_letters("ZI", -1.0));
  s.add(PauliString::from_letters("IY", 0.5));
  const auto t = s.simplified();
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.terms()[0].letters(), "IY");
  EXPECT_EQ(t.terms()[1].letters(), "XX");
}

TEST(PauliSum, TextRoundTrip) {
  const auto h = map_hamiltonian(h2_tensors(0.01));
  const auto back = PauliSum::from_text(h.to_text());
  ASSERT_EQ(back.size(), h.size());
  EXPECT_LT((back.to_dense() - h.to_dense()).norm(), 1e-14);
}

TEST(JordanWigner, LadderMatchesFockSpace) {
  const std::size_t n = 5;
  for (std::size_t q = 0; q < n; ++q) {
    const Eigen::MatrixXcd want = dense_annihilation(q, n).cast<cplx>();
    EXPECT_LT((jw_lowering(q, n).to_dense() - want).norm(), 1e-14) << q;
    EXPECT_LT((jw_raising(q, n).to_dense() - want.adjoint()).norm(), 1e-14) << q;
  }
}

TEST(JordanWigner, AnticommutatorsAlgebraically) {
  const std::size_t n = 6;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const auto aa = anticommutator(jw_lowering(p, n), jw_lowering(q, n));
      EXPECT_TRUE(aa.empty());
      const auto ad = anticommutator(jw_lowering(p, n), jw_raising(q, n));
      if (p == q) {
        ASSERT_EQ(ad.size(), 1u);
        EXPECT_TRUE(ad.terms()[0].is_identity());
        EXPECT_NEAR(std::abs(ad.terms()[0].coefficient - 1.0), 0.0, 1e-15);
      } else {
        EXPECT_TRUE(ad.empty());
      }
    }
}

TEST(JordanWigner, HamiltonianMatchesDenseFock) {
  const auto t = h2_tensors(0.05);
  const auto h = map_hamiltonian(t, 0.25);
  EXPECT_TRUE(h.is_hermitian());
  const Eigen::MatrixXcd want = dense_fock_matrix(t).cast<cplx>() + 0.25 * Eigen::MatrixXcd::Identity(16, 16);
  EXPECT_LT((h.to_dense() - want).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(JordanWigner, IdentityCoefficientIsNormalizedTrace) {
  const auto t = h2_tensors(0.0);
  const auto h = map_hamiltonian(t);
  EXPECT_NEAR(h.identity_coefficient().real(), dense_fock_matrix(t).trace() / 16.0, 1e-12);
}

TEST(JordanWigner, H2TermCountFrozen) {
  // Zero field: identity, 4 Z, 6 ZZ, 4 XXYY-type strings.
  EXPECT_EQ(map_hamiltonian(h2_tensors(0.0)).size(), 15u);
}

TEST(JordanWigner, AlternateConventionSameSpectrum) {
  const auto t = h2_tensors(0.02);
  const auto a = map_hamiltonian(t).to_dense();
  const auto b = map_hamiltonian(t, 0.0, JWConvention::Alternate).to_dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ea(a), eb(b);
  EXPECT_LT((ea.eigenvalues() - eb.eigenvalues()).norm(), 1e-12);
}

TEST(JordanWigner, NumberOperatorCountsBits) {
  const auto n = number_operator(3).to_dense();
  for (Eigen::Index i = 0; i < 8; ++i) EXPECT_NEAR(n(i, i).real(), std::popcount(static_cast<unsigned>(i)), 1e-15);
}

TEST(Commutator, PauliAlgebra) {
  const PauliSum x(1, {PauliString::from_letters("X")}), y(1, {PauliString::from_letters("Y")});
  const auto c = commutator(x, y);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.terms()[0].letters(), "Z");
  EXPECT_NEAR(std::abs(c.terms()[0].coefficient - cplx(0, 2)), 0.0, 1e-15);
}
