// starkvqe command line driver.
//
//   starkvqe sweep --molecule LiH --solver both --out lih.csv
//   starkvqe point --molecule H2 --d 0.7 --field 0.01
//   starkvqe stark --in lih.csv --out lih_stark.csv
//   starkvqe integrals --molecule LiH --d 1.6
//   starkvqe selftest
//
// Exit status: 0 ok, 1 some grid points failed (output still written), 2 bad configuration.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starkvqe/errors.hpp"
#include "starkvqe/pipeline.hpp"

namespace {

using namespace starkvqe;

constexpr int kExitFailures = 1;
constexpr int kExitConfig = 2;

// Raw flag values; only the ones given on the command line override the config file.
struct Flags {
  std::string config_path;
  std::string molecule;
  double d_min = 0, d_max = 0, d_step = 0;
  std::vector<double> fields;
  std::string solver, optimizer, stark_convention;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  int trotter_steps = 1;
  int max_iterations = 0;
  unsigned threads = 0;
  std::string out;
};

struct Options {
  CLI::Option* config = nullptr;
  CLI::Option* molecule = nullptr;
  CLI::Option* d_min = nullptr;
  CLI::Option* d_max = nullptr;
  CLI::Option* d_step = nullptr;
  CLI::Option* fields = nullptr;
  CLI::Option* solver = nullptr;
  CLI::Option* optimizer = nullptr;
  CLI::Option* stark_convention = nullptr;
  CLI::Option* shots = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* trotter_steps = nullptr;
  CLI::Option* max_iterations = nullptr;
  CLI::Option* threads = nullptr;
  CLI::Option* out = nullptr;
};

Options add_common(CLI::App* app, Flags& f, bool grid) {
  Options o;
  o.config = app->add_option("--config", f.config_path, "JSON config file; flags override it");
  o.molecule = app->add_option("--molecule", f.molecule, "H2 or LiH");
  if (grid) {
    o.d_min = app->add_option("--d-min", f.d_min, "first bond length, angstrom");
    o.d_max = app->add_option("--d-max", f.d_max, "last bond length, angstrom");
    o.d_step = app->add_option("--d-step", f.d_step, "grid step, angstrom");
    o.fields = app->add_option("--fields", f.fields, "field magnitudes in a.u., comma separated")->delimiter(',');
  }
  o.solver = app->add_option("--solver", f.solver, "exact, vqe or both");
  o.optimizer = app->add_option("--optimizer", f.optimizer, "nelder-mead or spsa");
  o.stark_convention = app->add_option("--stark-convention", f.stark_convention, "dipole or table");
  o.shots = app->add_option("--shots", f.shots, "sample the energy with this many shots per term");
  o.seed = app->add_option("--seed", f.seed, "base seed");
  o.trotter_steps = app->add_option("--trotter-steps", f.trotter_steps, "Trotter repetitions of the ansatz");
  o.max_iterations = app->add_option("--max-iterations", f.max_iterations, "optimizer iteration ceiling");
  if (grid) o.threads = app->add_option("--threads", f.threads, "worker threads, 0 for all cores");
  o.out = app->add_option("--out", f.out, "output file");
  return o;
}

bool given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }

SweepConfig resolve(const Flags& f, const Options& o) {
  SweepConfig c = given(o.config) ? load_config_file(f.config_path) : SweepConfig{};
  if (given(o.molecule)) c.molecule = f.molecule;
  if (given(o.d_min)) c.d_min = f.d_min;
  if (given(o.d_max)) c.d_max = f.d_max;
  if (given(o.d_step)) c.d_step = f.d_step;
  if (given(o.fields)) c.fields = f.fields;
  if (given(o.solver)) c.solver = parse_solver(f.solver);
  if (given(o.optimizer)) c.vqe.optimizer = parse_optimizer(f.optimizer);
  if (given(o.stark_convention)) c.stark_convention = parse_stark_convention(f.stark_convention);
  if (given(o.shots)) c.vqe.shots = f.shots;
  if (given(o.seed)) c.vqe.seed = f.seed;
  if (given(o.trotter_steps)) c.trotter_steps = f.trotter_steps;
  if (given(o.max_iterations)) c.vqe.max_iterations = f.max_iterations;
  if (given(o.threads)) c.threads = f.threads;
  if (given(o.out)) c.output_path = f.out;
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw ConfigError("cannot write '" + path + "'");
}

int cmd_sweep(const Flags& f, const Options& o) {
  const SweepConfig c = resolve(f, o);
  c.validate();
  const SweepResult r = run_sweep(c);
  const std::string sidecar = write_sweep(c, r);
  std::cerr << r.records.size() << " rows -> " << c.output_path << " (" << sidecar << ")\n";
  for (const auto& rec : r.records)
    if (!rec.error.empty())
      std::cerr << "  failed d=" << rec.d_angstrom << " field=" << rec.field_au << ": " << rec.error << "\n";
  return r.failures ? kExitFailures : 0;
}

int cmd_point(const Flags& f, const Options& o, double d, double field) {
  SweepConfig c = resolve(f, o);
  c.d_min = c.d_max = d;
  c.fields = {field};
  c.validate();
  const PointRecord r = run_point(c.molecule, d, field, c.solver, c.vqe, c.trotter_steps, c.stark_convention);
  std::string text = format_csv({r});
  write_or_print(given(o.out) ? c.output_path : "", text);
  if (!r.error.empty()) {
    std::cerr << "point failed: " << r.error << "\n";
    return kExitFailures;
  }
  std::fprintf(stderr, "%.3f s\n", r.wall_seconds);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"STO-3G / Jordan-Wigner / UCCSD-VQE driver for H2 and LiH in a static field"};
  app.set_version_flag("--version", starkvqe::version());
  app.require_subcommand(1);

  Flags sweep_flags, point_flags;
  auto* sweep = app.add_subcommand("sweep", "dissociation curve over a bond-length by field grid");
  const Options sweep_opts = add_common(sweep, sweep_flags, true);

  auto* point = app.add_subcommand("point", "one geometry and field");
  const Options point_opts = add_common(point, point_flags, false);
  double point_d = 0.7, point_field = 0.0;
  point->add_option("--d", point_d, "bond length, angstrom")->required();
  point->add_option("--field", point_field, "field magnitude, a.u.");

  auto* stark = app.add_subcommand("stark", "energy shift relative to zero field at a fixed distance");
  std::string stark_in, stark_out;
  double stark_d = 0.0;
  stark->add_option("--in", stark_in, "sweep CSV")->required();
  auto* stark_d_opt = stark->add_option("--d-eq", stark_d, "distance in angstrom (default 0.7 for H2, 1.6 for LiH)");
  stark->add_option("--out", stark_out, "output CSV (stdout if omitted)");

  auto* integrals = app.add_subcommand("integrals", "dump AO integrals as JSON");
  std::string int_molecule = "H2", int_convention = "dipole", int_out;
  double int_d = 0.7, int_field = 0.0;
  integrals->add_option("--molecule", int_molecule, "H2 or LiH");
  integrals->add_option("--d", int_d, "bond length, angstrom");
  integrals->add_option("--field", int_field, "field magnitude, a.u.");
  integrals->add_option("--stark-convention", int_convention, "dipole or table");
  integrals->add_option("--out", int_out, "output file (stdout if omitted)");

  auto* selftest = app.add_subcommand("selftest", "quick oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*sweep) return cmd_sweep(sweep_flags, sweep_opts);
    if (*point) return cmd_point(point_flags, point_opts, point_d, point_field);
    if (*stark) {
      const auto rows = parse_csv(read_file(stark_in));
      if (rows.empty()) throw ConfigError("sweep CSV has no rows");
      const std::string& molecule = rows.front().molecule;
      const double d_eq = stark_d_opt->count() ? stark_d : default_equilibrium(molecule);
      write_or_print(stark_out, format_stark_csv(molecule, d_eq, stark_table(rows, d_eq)));
      return 0;
    }
    if (*integrals) {
      write_or_print(int_out, integrals_json(int_molecule, int_d, int_field, parse_stark_convention(int_convention)) + "\n");
      return 0;
    }
    if (*selftest) return run_selftest(std::cout) ? 0 : kExitFailures;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailures;
  }
  return 0;
}
