#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "starkvqe/basis.hpp"
#include "starkvqe/jw.hpp"
#include "starkvqe/scf.hpp"
#include "starkvqe/solvers.hpp"
#include "starkvqe/stark.hpp"

namespace starkvqe {

std::string version();

enum class SolverKind { Exact, VQE, Both };
SolverKind parse_solver(const std::string& s);
std::string to_string(SolverKind s);

struct SweepConfig {
  std::string molecule = "H2";
  double d_min = 0.2;   // angstrom
  double d_max = 4.0;
  double d_step = 0.1;
  std::vector<double> fields{0.0, 1e-4, 1e-3, 1e-2, 1e-1};
  SolverKind solver = SolverKind::Both;
  VQEConfig vqe;
  int trotter_steps = 1;
  StarkConvention stark_convention = StarkConvention::Dipole;
  std::string output_path = "sweep.csv";
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const;
  // Grid points in angstrom, rounded to 1e-10 so the CSV text is stable.
  std::vector<double> distances() const;
};

// Reads a JSON object; keys mirror the field names, VQE keys live at the top level
// (optimizer, max_iterations, energy_tolerance, shots, seed). Unknown keys are a ConfigError.
SweepConfig load_config_file(const std::string& path);
void apply_config_json(SweepConfig& config, const std::string& json_text);
std::string config_to_json(const SweepConfig& config);

// Everything the solvers need at one geometry and field.
struct QubitProblem {
  Molecule molecule;
  BasisSet basis;
  SCFResult scf;
  PauliSum hamiltonian;  // electronic part only
  double nuclear = 0.0;  // nuclear repulsion plus field bookkeeping
  std::size_t n_qubits = 0;
  std::size_t n_electrons = 0;
};

QubitProblem build_problem(const std::string& molecule, double d_angstrom, double field_au,
                           StarkConvention convention = StarkConvention::Dipole);

struct PointRecord {
  std::string molecule;
  double d_angstrom = 0.0;
  double field_au = 0.0;
  std::optional<double> e_hf, e_exact, e_vqe;  // total energies
  std::optional<int> vqe_iterations;
  bool converged = false;
  double wall_seconds = 0.0;
  std::string error;  // empty on success
};

// Seed for one grid point, a hash of the base seed and the bit patterns of d and field.
std::uint64_t point_seed(std::uint64_t base_seed, double d_angstrom, double field_au);

// Per-point failures land in record.error instead of propagating.
PointRecord run_point(const std::string& molecule, double d_angstrom, double field_au, SolverKind solver,
                      const VQEConfig& vqe, int trotter_steps = 1,
                      StarkConvention convention = StarkConvention::Dipole);

struct SweepResult {
  std::vector<PointRecord> records;  // distance-major, fields in config order
  std::size_t failures = 0;
};

SweepResult run_sweep(const SweepConfig& config);

inline constexpr const char* kCsvHeader = "molecule,d_angstrom,field_au,e_hf,e_exact,e_vqe,vqe_iterations,converged";
std::string format_csv(const std::vector<PointRecord>& records);
// Writes the CSV and a sidecar at the same stem with a .json extension; returns the sidecar path.
std::string write_sweep(const SweepConfig& config, const SweepResult& result);

struct StarkRow {
  double field_au = 0.0;
  std::optional<double> de_hf, de_exact, de_vqe;
};

// Reference distances for the Stark table: 0.7 angstrom for H2, 1.6 for LiH.
double default_equilibrium(const std::string& molecule);
std::vector<PointRecord> parse_csv(const std::string& text);
// Delta E(field) = E(field) - E(0) at d_eq; throws ConfigError when the zero-field or any d_eq row is missing.
std::vector<StarkRow> stark_table(const std::vector<PointRecord>& sweep, double d_eq);
std::string format_stark_csv(const std::string& molecule, double d_eq, const std::vector<StarkRow>& rows);

// AO matrices, field matrix, nuclear energy and unique ERIs as JSON.
std::string integrals_json(const std::string& molecule, double d_angstrom, double field_au,
                           StarkConvention convention = StarkConvention::Dipole);

// Quick oracle checks for the installed build; prints one line per check, true if all pass.
bool run_selftest(std::ostream& out);

}  // namespace starkvqe
