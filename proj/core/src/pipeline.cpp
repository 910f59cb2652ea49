#include "starkvqe/pipeline.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "starkvqe/errors.hpp"
#include "starkvqe/fermiop.hpp"
#include "starkvqe/integrals1e.hpp"
#include "starkvqe/integrals2e.hpp"

#ifndef STARKVQE_VERSION
#define STARKVQE_VERSION "0.0.0"
#endif

namespace starkvqe {

using nlohmann::json;

std::string version() { return STARKVQE_VERSION; }

SolverKind parse_solver(const std::string& s) {
  if (s == "exact") return SolverKind::Exact;
  if (s == "vqe") return SolverKind::VQE;
  if (s == "both") return SolverKind::Both;
  throw ConfigError("unknown solver '" + s + "' (expected exact, vqe or both)");
}

std::string to_string(SolverKind s) {
  switch (s) {
    case SolverKind::Exact: return "exact";
    case SolverKind::VQE: return "vqe";
    case SolverKind::Both: break;
  }
  return "both";
}

void SweepConfig::validate() const {
  if (molecule != "H2" && molecule != "LiH") throw ConfigError("molecule must be H2 or LiH, got '" + molecule + "'");
  if (!(d_min > 0.0)) throw ConfigError("d_min must be positive");
  if (!(d_step > 0.0)) throw ConfigError("d_step must be positive");
  if (!(d_max >= d_min)) throw ConfigError("d_max must be >= d_min");
  if (!std::isfinite(d_max)) throw ConfigError("d_max must be finite");
  if (fields.empty()) throw ConfigError("at least one field is required");
  for (double f : fields)
    if (!std::isfinite(f)) throw ConfigError("fields must be finite");
  if (trotter_steps < 1) throw ConfigError("trotter_steps must be >= 1");
  if (output_path.empty()) throw ConfigError("output path is empty");
  vqe.validate();
}

std::vector<double> SweepConfig::distances() const {
  const auto n = static_cast<long>(std::floor((d_max - d_min) / d_step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.push_back(std::round((d_min + static_cast<double>(i) * d_step) * 1e10) / 1e10);
  return out;
}

namespace {

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

void apply_config_json(SweepConfig& c, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const json& v = it.value();
    if (k == "molecule") c.molecule = get_as<std::string>(v, "molecule");
    else if (k == "d_min") c.d_min = get_as<double>(v, "d_min");
    else if (k == "d_max") c.d_max = get_as<double>(v, "d_max");
    else if (k == "d_step") c.d_step = get_as<double>(v, "d_step");
    else if (k == "fields") c.fields = get_as<std::vector<double>>(v, "fields");
    else if (k == "solver") c.solver = parse_solver(get_as<std::string>(v, "solver"));
    else if (k == "optimizer") c.vqe.optimizer = parse_optimizer(get_as<std::string>(v, "optimizer"));
    else if (k == "max_iterations") c.vqe.max_iterations = get_as<int>(v, "max_iterations");
    else if (k == "energy_tolerance") c.vqe.energy_tolerance = get_as<double>(v, "energy_tolerance");
    else if (k == "shots") {
      if (v.is_null()) c.vqe.shots.reset();
      else c.vqe.shots = get_as<std::int64_t>(v, "shots");
    } else if (k == "seed") c.vqe.seed = get_as<std::uint64_t>(v, "seed");
    else if (k == "trotter_steps") c.trotter_steps = get_as<int>(v, "trotter_steps");
    else if (k == "stark_convention") c.stark_convention = parse_stark_convention(get_as<std::string>(v, "stark_convention"));
    else if (k == "output_path") c.output_path = get_as<std::string>(v, "output_path");
    else if (k == "threads") c.threads = get_as<unsigned>(v, "threads");
    else throw ConfigError("unknown config key '" + k + "'");
  }
}

SweepConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  SweepConfig c;
  apply_config_json(c, ss.str());
  return c;
}

namespace {

json config_object(const SweepConfig& c) {
  json j;
  j["molecule"] = c.molecule;
  j["d_min"] = c.d_min;
  j["d_max"] = c.d_max;
  j["d_step"] = c.d_step;
  j["fields"] = c.fields;
  j["solver"] = to_string(c.solver);
  j["optimizer"] = to_string(c.vqe.optimizer);
  j["max_iterations"] = c.vqe.max_iterations;
  j["energy_tolerance"] = c.vqe.energy_tolerance;
  j["shots"] = c.vqe.shots ? json(*c.vqe.shots) : json(nullptr);
  j["seed"] = c.vqe.seed;
  j["trotter_steps"] = c.trotter_steps;
  j["stark_convention"] = to_string(c.stark_convention);
  j["output_path"] = c.output_path;
  return j;
}

}  // namespace

std::string config_to_json(const SweepConfig& c) { return config_object(c).dump(2); }

QubitProblem build_problem(const std::string& name, double d_angstrom, double field_au, StarkConvention convention) {
  QubitProblem p;
  p.molecule = make_molecule(name, d_angstrom * kBohrPerAngstrom);
  p.basis = build_sto3g(p.molecule);
  const FieldConfig field{field_au};
  const AOMatrix s = overlap_matrix(p.basis);
  const AOMatrix h = core_hamiltonian(p.molecule, p.basis) + field_matrix(p.molecule, p.basis, field, convention);
  const ERITensor eri = build_eri_tensor(p.basis);
  p.n_electrons = static_cast<std::size_t>(p.molecule.n_electrons);
  p.scf = scf_solve(h, eri, s, p.molecule.n_electrons);
  p.nuclear = nuclear_energy(p.molecule, field, convention);
  p.scf.hf_total_energy = p.scf.hf_electronic_energy + p.nuclear;
  const MOIntegrals mo = ao_to_mo(h, eri, p.scf.mo_coefficients);
  const SpinOrbitalTensors so = build_spin_orbital_tensors(mo.one_body, mo.two_body);
  p.n_qubits = so.n_spin_orbitals;
  p.hamiltonian = map_hamiltonian(so);
  return p;
}

std::uint64_t point_seed(std::uint64_t base_seed, double d_angstrom, double field_au) {
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t h = mix(base_seed);
  h = mix(h ^ std::bit_cast<std::uint64_t>(d_angstrom));
  h = mix(h ^ std::bit_cast<std::uint64_t>(field_au));
  return h;
}

PointRecord run_point(const std::string& molecule, double d_angstrom, double field_au, SolverKind solver,
                      const VQEConfig& vqe, int trotter_steps, StarkConvention convention) {
  const auto t0 = std::chrono::steady_clock::now();
  PointRecord r;
  r.molecule = molecule;
  r.d_angstrom = d_angstrom;
  r.field_au = field_au;
  try {
    const QubitProblem p = build_problem(molecule, d_angstrom, field_au, convention);
    r.e_hf = p.scf.hf_total_energy;
    r.converged = true;
    if (solver != SolverKind::VQE) r.e_exact = exact_ground_energy(p.hamiltonian, p.n_electrons) + p.nuclear;
    if (solver != SolverKind::Exact) {
      VQEConfig cfg = vqe;
      cfg.seed = point_seed(vqe.seed, d_angstrom, field_au);
      const UCCAnsatz ansatz = build_uccsd(p.n_electrons, p.n_qubits, trotter_steps);
      const VQEResult v = vqe_minimize(p.hamiltonian, ansatz, hf_reference(p.n_electrons, p.n_qubits), cfg);
      r.e_vqe = v.energy + p.nuclear;
      r.vqe_iterations = v.iterations;
      r.converged = v.converged;
    }
  } catch (const std::exception& e) {
    r.error = e.what();
    r.converged = false;
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  const std::vector<double> ds = config.distances();
  SweepResult out;
  out.records.resize(ds.size() * config.fields.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < out.records.size(); i = next++) {
      const double d = ds[i / config.fields.size()];
      const double f = config.fields[i % config.fields.size()];
      out.records[i] = run_point(config.molecule, d, f, config.solver, config.vqe, config.trotter_steps,
                                 config.stark_convention);
    }
  };
  unsigned n_threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, out.records.size()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& r : out.records)
    if (!r.error.empty()) ++out.failures;
  return out;
}

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string energy_cell(const std::optional<double>& v) { return v ? fmt("%.12f", *v) : std::string(); }

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<double> parse_cell(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw ConfigError("bad number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ConfigError("bad number '" + s + "'");
  }
}

}  // namespace

std::string format_csv(const std::vector<PointRecord>& records) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : records) {
    out += r.molecule + "," + fmt("%.10g", r.d_angstrom) + "," + fmt("%.10g", r.field_au) + "," + energy_cell(r.e_hf) +
           "," + energy_cell(r.e_exact) + "," + energy_cell(r.e_vqe) + "," +
           (r.vqe_iterations ? std::to_string(*r.vqe_iterations) : std::string()) + "," +
           (r.converged ? "true" : "false") + "\n";
  }
  return out;
}

std::string write_sweep(const SweepConfig& config, const SweepResult& result) {
  namespace fs = std::filesystem;
  const fs::path csv(config.output_path);
  {
    std::ofstream out(csv, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + csv.string() + "'");
    out << format_csv(result.records);
    if (!out) throw ConfigError("write failed for '" + csv.string() + "'");
  }
  fs::path sidecar = csv;
  sidecar.replace_extension(".json");
  if (sidecar == csv) sidecar += ".json";
  json j;
  j["config"] = config_object(config);
  j["version"] = version();
  j["seed"] = config.vqe.seed;
  j["rows"] = result.records.size();
  j["failures"] = result.failures;
  json errs = json::array();
  for (const auto& r : result.records)
    if (!r.error.empty()) errs.push_back({{"d_angstrom", r.d_angstrom}, {"field_au", r.field_au}, {"error", r.error}});
  j["errors"] = errs;
  std::ofstream out(sidecar, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + sidecar.string() + "'");
  out << j.dump(2) << "\n";
  return sidecar.string();
}

double default_equilibrium(const std::string& molecule) {
  if (molecule == "H2") return 0.7;
  if (molecule == "LiH") return 1.6;
  throw ConfigError("no reference distance for molecule '" + molecule + "'");
}

std::vector<PointRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || split(line, ',') != split(kCsvHeader, ','))
    throw ConfigError("sweep CSV header does not match");
  std::vector<PointRecord> out;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line, ',');
    if (cells.size() != 8) throw ConfigError("sweep CSV row has " + std::to_string(cells.size()) + " cells");
    PointRecord r;
    r.molecule = cells[0];
    r.d_angstrom = parse_cell(cells[1]).value_or(NAN);
    r.field_au = parse_cell(cells[2]).value_or(NAN);
    r.e_hf = parse_cell(cells[3]);
    r.e_exact = parse_cell(cells[4]);
    r.e_vqe = parse_cell(cells[5]);
    if (!cells[6].empty()) r.vqe_iterations = static_cast<int>(*parse_cell(cells[6]));
    r.converged = cells[7] == "true";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<StarkRow> stark_table(const std::vector<PointRecord>& sweep, double d_eq) {
  std::vector<const PointRecord*> at;
  for (const auto& r : sweep)
    if (std::fabs(r.d_angstrom - d_eq) < 1e-9) at.push_back(&r);
  if (at.empty()) throw ConfigError("sweep has no rows at d = " + fmt("%.10g", d_eq) + " angstrom");
  const PointRecord* zero = nullptr;
  for (const auto* r : at)
    if (r->field_au == 0.0) zero = r;
  if (!zero) throw ConfigError("sweep has no zero-field row at d = " + fmt("%.10g", d_eq) + " angstrom");
  auto diff = [](const std::optional<double>& a, const std::optional<double>& b) -> std::optional<double> {
    if (a && b) return *a - *b;
    return std::nullopt;
  };
  std::vector<StarkRow> rows;
  for (const auto* r : at)
    rows.push_back({r->field_au, diff(r->e_hf, zero->e_hf), diff(r->e_exact, zero->e_exact), diff(r->e_vqe, zero->e_vqe)});
  return rows;
}

std::string format_stark_csv(const std::string& molecule, double d_eq, const std::vector<StarkRow>& rows) {
  auto cell = [](const std::optional<double>& v) { return v ? fmt("%.12e", *v) : std::string(); };
  std::string out = "molecule,d_angstrom,field_au,de_hf,de_exact,de_vqe\n";
  for (const auto& r : rows)
    out += molecule + "," + fmt("%.10g", d_eq) + "," + fmt("%.10g", r.field_au) + "," + cell(r.de_hf) + "," +
           cell(r.de_exact) + "," + cell(r.de_vqe) + "\n";
  return out;
}

std::string integrals_json(const std::string& molecule, double d_angstrom, double field_au, StarkConvention convention) {
  const Molecule mol = make_molecule(molecule, d_angstrom * kBohrPerAngstrom);
  const BasisSet basis = build_sto3g(mol);
  const FieldConfig field{field_au};
  auto mat = [](const AOMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
      rows.push_back(row);
    }
    return rows;
  };
  json j;
  j["molecule"] = molecule;
  j["d_angstrom"] = d_angstrom;
  j["d_bohr"] = mol.bond_length;
  j["field_au"] = field_au;
  j["stark_convention"] = to_string(convention);
  json orbs = json::array();
  for (const auto& o : basis.orbitals) orbs.push_back(to_string(o.label));
  j["orbitals"] = orbs;
  j["overlap"] = mat(overlap_matrix(basis));
  j["kinetic"] = mat(kinetic_matrix(basis));
  j["attraction"] = mat(attraction_matrix(mol, basis));
  j["field"] = mat(field_matrix(mol, basis, field, convention));
  j["nuclear_energy"] = nuclear_energy(mol, field, convention);
  const ERITensor eri = build_eri_tensor(basis);
  json e = json::array();
  const std::size_t k = basis.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b <= a; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = 0; d <= c; ++d)
          if (a * (a + 1) / 2 + b >= c * (c + 1) / 2 + d) e.push_back({a, b, c, d, eri(a, b, c, d)});
  j["eri"] = e;
  return j.dump(2);
}

}  // namespace starkvqe
