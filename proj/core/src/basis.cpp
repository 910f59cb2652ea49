#include "starkvqe/basis.hpp"

#include <cmath>
#include <numbers>

#include "starkvqe/errors.hpp"

namespace starkvqe {

namespace {

// STO-3G contractions, exponents already scaled to the listed zeta.
constexpr double kH1sExp[3] = {3.425250914, 0.6239137298, 0.1688554040};
constexpr double kLi1sExp[3] = {16.11957475, 2.936200663, 0.7946504870};
constexpr double k1sCoef[3] = {0.1543289673, 0.5353281423, 0.4446345422};
constexpr double kLi2spExp[3] = {0.6362897469, 0.1478600533, 0.04808867840};
constexpr double kLi2sCoef[3] = {-0.09996722919, 0.3995128261, 0.7001154689};
constexpr double kLi2pCoef[3] = {0.1559162750, 0.6076837186, 0.3919573931};

ContractedOrbital make_orbital(const double (&exps)[3], const double (&coefs)[3], Angular ang, double table_zeta,
                               double zeta, const Vec3& center, OrbitalLabel label) {
  const double scale = (zeta / table_zeta) * (zeta / table_zeta);
  ContractedOrbital o{};
  for (int k = 0; k < 3; ++k) o.primitives[k] = {exps[k] * scale, coefs[k], ang};
  o.center = center;
  o.label = label;
  o.zeta = zeta;
  return o;
}

}  // namespace

std::string to_string(Element e) { return e == Element::H ? "H" : "Li"; }

std::string to_string(OrbitalLabel l) {
  switch (l) {
    case OrbitalLabel::H1s: return "H1s";
    case OrbitalLabel::Li1s: return "Li1s";
    case OrbitalLabel::Li2s: return "Li2s";
    case OrbitalLabel::Li2pz: return "Li2pz";
  }
  return "?";
}

int nuclear_charge(Element e) { return e == Element::H ? 1 : 3; }

Molecule make_h2(double d_bohr) {
  if (!(d_bohr > 0.0)) throw DomainError("make_h2: bond length must be positive");
  return {{{Element::H, 1, {0.0, 0.0, d_bohr}}, {Element::H, 1, {0.0, 0.0, 0.0}}}, d_bohr, 2, "H2"};
}

Molecule make_lih(double d_bohr) {
  if (!(d_bohr > 0.0)) throw DomainError("make_lih: bond length must be positive");
  return {{{Element::Li, 3, {0.0, 0.0, 0.0}}, {Element::H, 1, {0.0, 0.0, d_bohr}}}, d_bohr, 4, "LiH"};
}

Molecule make_molecule(const std::string& name, double d_bohr) {
  if (name == "H2" || name == "h2") return make_h2(d_bohr);
  if (name == "LiH" || name == "lih") return make_lih(d_bohr);
  throw ConfigError("unknown molecule '" + name + "' (expected H2 or LiH)");
}

BasisSet build_sto3g(const Molecule& molecule, const ZetaOverrides& zetas) {
  const double zh = zetas.h1s.value_or(kZetaH1s);
  const double zli1 = zetas.li1s.value_or(kZetaLi1s);
  const double zli2 = zetas.li2sp.value_or(kZetaLi2sp);
  for (double z : {zh, zli1, zli2})
    if (!(z > 0.0)) throw DomainError("build_sto3g: zeta must be positive");

  BasisSet basis;
  // H orbitals first, then Li, so LiH comes out as [H1s, Li1s, Li2s, Li2pz].
  for (const Atom& a : molecule.atoms)
    if (a.element == Element::H)
      basis.orbitals.push_back(make_orbital(kH1sExp, k1sCoef, Angular::S, kZetaH1s, zh, a.position, OrbitalLabel::H1s));
  for (const Atom& a : molecule.atoms) {
    if (a.element != Element::Li) continue;
    basis.orbitals.push_back(
        make_orbital(kLi1sExp, k1sCoef, Angular::S, kZetaLi1s, zli1, a.position, OrbitalLabel::Li1s));
    basis.orbitals.push_back(
        make_orbital(kLi2spExp, kLi2sCoef, Angular::S, kZetaLi2sp, zli2, a.position, OrbitalLabel::Li2s));
    basis.orbitals.push_back(
        make_orbital(kLi2spExp, kLi2pCoef, Angular::Pz, kZetaLi2sp, zli2, a.position, OrbitalLabel::Li2pz));
  }
  if (basis.orbitals.empty()) throw DomainError("build_sto3g: molecule has no supported atoms");
  return basis;
}

double normalization_constant(double exponent, Angular angular) {
  if (!(exponent > 0.0)) throw DomainError("normalization_constant: exponent must be positive");
  const double pi = std::numbers::pi;
  if (angular == Angular::S) return std::pow(2.0 * exponent / pi, 0.75);
  return std::pow(128.0 * std::pow(exponent, 5) / (pi * pi * pi), 0.25);
}

}  // namespace starkvqe
