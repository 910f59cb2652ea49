#include "starkvqe/stark.hpp"

#include <cmath>
#include <numbers>

#include "starkvqe/errors.hpp"

namespace starkvqe {

namespace {

constexpr double kPi = std::numbers::pi;
double cs(double a) { return normalization_constant(a, Angular::S); }
double cp(double a) { return normalization_constant(a, Angular::Pz); }

double prim_dipole(double a, double za, Angular la, double b, double zb, Angular lb) {
  if (la == Angular::S && lb == Angular::S) return family::dipole_ss(a, za, b, zb);
  if (la == Angular::Pz && lb == Angular::Pz) {
    if (za != zb) throw DomainError("dipole_z: two-center p-p not supported");
    return family::dipole_pp_same(a, b, za);
  }
  if (la == Angular::Pz) return prim_dipole(b, zb, lb, a, za, la);
  // s at za, p at zb. Shift so the p center is the origin: z = z' + zb.
  const double d = za - zb;
  const double shifted = d == 0.0 ? family::dipole_sp_same(a, b) : family::dipole_sp(a, b, d);
  // <s|zb|p> term from the shift.
  const double p = a + b;
  const double ovl = cs(a) * cp(b) * std::pow(kPi / p, 1.5) * std::exp(-a * b / p * d * d) * a * d / p;
  return shifted + zb * ovl;
}

}  // namespace

StarkConvention parse_stark_convention(const std::string& s) {
  if (s == "dipole") return StarkConvention::Dipole;
  if (s == "table") return StarkConvention::Table;
  throw ConfigError("unknown Stark convention '" + s + "' (expected dipole or table)");
}

std::string to_string(StarkConvention c) { return c == StarkConvention::Dipole ? "dipole" : "table"; }

namespace family {

double dipole_ss(double a, double za, double b, double zb) {
  const double p = a + b;
  const double d = za - zb;
  const double P = (a * za + b * zb) / p;
  return cs(a) * cs(b) * std::pow(kPi / p, 1.5) * std::exp(-a * b / p * d * d) * P;
}

double dipole_sp_same(double a_s, double b_p) {
  const double p = a_s + b_p;
  return cs(a_s) * cp(b_p) * std::pow(kPi, 1.5) / (2.0 * std::pow(p, 2.5));
}

double dipole_sp(double a_s, double b_p, double d) {
  const double p = a_s + b_p;
  const double rp = a_s * d / p;
  return cs(a_s) * cp(b_p) * std::pow(kPi / p, 1.5) * std::exp(-a_s * b_p / p * d * d) * (0.5 / p + rp * rp);
}

double dipole_pp_same(double a, double b, double z0) {
  const double p = a + b;
  return cp(a) * cp(b) * std::pow(kPi / p, 1.5) / (2.0 * p) * z0;
}

}  // namespace family

double dipole_z(const ContractedOrbital& i, const ContractedOrbital& j) {
  for (const auto* o : {&i, &j})
    if (o->center[0] != 0.0 || o->center[1] != 0.0) throw DomainError("dipole_z: centers must lie on the z axis");
  double sum = 0.0;
  for (const auto& x : i.primitives)
    for (const auto& y : j.primitives)
      sum += x.contraction * y.contraction *
             prim_dipole(x.exponent, i.center[2], x.angular, y.exponent, j.center[2], y.angular);
  return sum;
}

AOMatrix dipole_matrix(const BasisSet& basis) {
  const auto k = static_cast<Eigen::Index>(basis.size());
  AOMatrix m(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = dipole_z(basis[i], basis[j]);
  return m;
}

AOMatrix field_matrix(const Molecule& molecule, const BasisSet& basis, const FieldConfig& field,
                      StarkConvention convention) {
  AOMatrix j = -field.magnitude * dipole_matrix(basis);
  if (convention == StarkConvention::Table) {
    // Zero the diagonal block of every orbital not sitting at the origin.
    (void)molecule;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (basis[a].center == basis[b].center && basis[a].center[2] != 0.0)
          j(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = 0.0;
  }
  return j;
}

double nuclear_energy(const Molecule& molecule, const FieldConfig& field, StarkConvention convention) {
  double e = 0.0;
  for (std::size_t a = 0; a < molecule.atoms.size(); ++a) {
    for (std::size_t b = a + 1; b < molecule.atoms.size(); ++b) {
      const auto& pa = molecule.atoms[a].position;
      const auto& pb = molecule.atoms[b].position;
      const double r = std::sqrt((pa[0] - pb[0]) * (pa[0] - pb[0]) + (pa[1] - pb[1]) * (pa[1] - pb[1]) +
                                 (pa[2] - pb[2]) * (pa[2] - pb[2]));
      if (r == 0.0) throw DomainError("nuclear_energy: coincident nuclei");
      e += molecule.atoms[a].charge * molecule.atoms[b].charge / r;
    }
  }
  if (convention == StarkConvention::Dipole)
    for (const Atom& atom : molecule.atoms) e += field.magnitude * atom.charge * atom.position[2];
  return e;
}

}  // namespace starkvqe
