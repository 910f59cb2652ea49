#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "starkvqe/types.hpp"

namespace starkvqe {

inline constexpr double kBohrPerAngstrom = 1.8897259886;

enum class Element { H, Li };
enum class Angular { S, Pz };
enum class OrbitalLabel { H1s, Li1s, Li2s, Li2pz };

std::string to_string(Element e);
std::string to_string(OrbitalLabel l);
int nuclear_charge(Element e);

struct Atom {
  Element element;
  int charge;
  Vec3 position;  // bohr
};

struct Molecule {
  std::vector<Atom> atoms;
  double bond_length = 0.0;  // bohr
  int n_electrons = 0;
  std::string name;
};

// H2: H_a at (0,0,d), H_b at the origin.
Molecule make_h2(double d_bohr);
// LiH: Li at the origin, H at (0,0,d).
Molecule make_lih(double d_bohr);
// "H2" or "LiH"; anything else is a ConfigError.
Molecule make_molecule(const std::string& name, double d_bohr);

struct GaussianPrimitive {
  double exponent;     // bohr^-2
  double contraction;  // d
  Angular angular;
};

struct ContractedOrbital {
  std::array<GaussianPrimitive, 3> primitives;
  Vec3 center;
  OrbitalLabel label;
  double zeta;
  Angular angular() const { return primitives[0].angular; }
};

struct BasisSet {
  std::vector<ContractedOrbital> orbitals;
  std::size_t size() const { return orbitals.size(); }
  const ContractedOrbital& operator[](std::size_t i) const { return orbitals[i]; }
};

// Slater exponents; unset fields keep the tabulated STO-3G values.
struct ZetaOverrides {
  std::optional<double> h1s;
  std::optional<double> li1s;
  std::optional<double> li2sp;
};

inline constexpr double kZetaH1s = 1.24;
inline constexpr double kZetaLi1s = 2.69;
inline constexpr double kZetaLi2sp = 0.75;

// Orbital order: [H1s, Li1s, Li2s, Li2pz] for LiH, [H_a, H_b] for H2.
BasisSet build_sto3g(const Molecule& molecule, const ZetaOverrides& zetas = {});

// (2a/pi)^{3/4} for s, (128 b^5 / pi^3)^{1/4} for p.
double normalization_constant(double exponent, Angular angular);

}  // namespace starkvqe
