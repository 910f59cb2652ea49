#include <cmath>
#include <cstdio>
#include <string>

#include "starkvqe/errors.hpp"
#include "starkvqe/fermiop.hpp"
#include "starkvqe/integrals1e.hpp"
#include "starkvqe/integrals2e.hpp"
#include "starkvqe/oracle.hpp"
#include "starkvqe/pipeline.hpp"
#include "starkvqe/specfun.hpp"

namespace starkvqe {

namespace {

double rel_err(double got, double want) { return std::fabs(got - want) / std::max(std::fabs(want), 1e-300); }

}  // namespace

bool run_selftest(std::ostream& out) {
  bool all = true;
  auto report = [&](const std::string& name, bool ok, double metric) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-44s %s  (%.3e)", name.c_str(), ok ? "ok" : "FAIL", metric);
    out << buf << "\n";
    all = all && ok;
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out << name << " FAIL  (" << e.what() << ")\n";
      all = false;
    }
  };

  guarded("boys F0 vs quadrature", [&] {
    double worst = 0.0;
    for (double x : {0.0, 1e-6, 0.3, 2.5, 17.0, 60.0}) {
      const auto q = integrate_adaptive([x](double t) { return std::exp(-x * t * t); }, 0.0, 1.0, QuadratureSpec{});
      worst = std::max(worst, rel_err(boys_f0(x), q.value));
    }
    report("boys F0 vs quadrature", worst < 1e-12, worst);
  });

  guarded("sp attraction vs 3D quadrature", [&] {
    const double a = 0.9, b = 0.6, d = 2.0;
    const double ns = normalization_constant(a, Angular::S), np = normalization_constant(b, Angular::Pz);
    auto f = [&](const Vec3& r) {
      const double rs2 = r[0] * r[0] + r[1] * r[1] + (r[2] - d) * (r[2] - d);
      const double rp2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
      const double dist = std::sqrt(rp2);
      return dist == 0.0 ? 0.0 : ns * np * r[2] * std::exp(-a * rs2 - b * rp2) / dist;
    };
    const auto ref = integrate_3d(f, QuadratureSpec{});
    const double got = family::attraction_sp_kernel_at_p(a, b, d, attraction_quadrature_spec());
    const double e = rel_err(got, ref.value);
    report("sp attraction vs 3D quadrature", e < 1e-7, e);
  });

  guarded("two-center ERI vs 6D quadrature", [&] {
    const CartesianGaussian ga{1.1, {0, 0, 1.5}, {0, 0, 0}}, gb{0.7, {0, 0, 0}, {0, 0, 1}};
    const auto ref = integrate_6d(ga, gb, ga, gb, QuadratureSpec{});
    const double got = eri_hermite(ga, gb, ga, gb);
    const double e = rel_err(got, ref.value);
    report("two-center ERI vs 6D quadrature", e < 1e-5, e);
  });

  for (const char* mol : {"H2", "LiH"}) {
    const std::string name = std::string("JW matrix vs Fock space, ") + mol;
    guarded(name, [&] {
      const QubitProblem p = build_problem(mol, std::string(mol) == "H2" ? 0.7 : 1.6, 1e-3);
      const MOIntegrals mo = ao_to_mo(core_hamiltonian(p.molecule, p.basis) +
                                          field_matrix(p.molecule, p.basis, FieldConfig{1e-3}),
                                      build_eri_tensor(p.basis), p.scf.mo_coefficients);
      const Eigen::MatrixXd fock = dense_fock_matrix(build_spin_orbital_tensors(mo.one_body, mo.two_body));
      const double e = (p.hamiltonian.to_dense() - fock.cast<cplx>()).cwiseAbs().maxCoeff();
      report(name, e < 1e-10, e);
    });
  }

  guarded("JW anticommutation, 8 modes", [&] {
    double worst = 0.0;
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 8; ++b) {
        PauliSum ac = anticommutator(jw_lowering(a, 8), jw_raising(b, 8));
        if (a == b) ac -= PauliSum::identity(8);
        for (const auto& t : ac.simplified(0.0).terms()) worst = std::max(worst, std::abs(t.coefficient));
      }
    report("JW anticommutation, 8 modes", worst < 1e-14, worst);
  });

  guarded("H2 VQE reaches exact energy", [&] {
    const QubitProblem p = build_problem("H2", 0.74, 0.0);
    const double exact = exact_ground_energy(p.hamiltonian, p.n_electrons);
    const VQEResult v = vqe_minimize(p.hamiltonian, build_uccsd(p.n_electrons, p.n_qubits),
                                     hf_reference(p.n_electrons, p.n_qubits), VQEConfig{});
    const double gap = v.energy - exact;
    report("H2 VQE reaches exact energy", gap > -1e-10 && gap < 1e-6, gap);
  });

  out << (all ? "selftest passed" : "selftest FAILED") << "\n";
  return all;
}

}  // namespace starkvqe
