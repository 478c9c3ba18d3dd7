#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cosdyn/conditions.hpp"
#include "cosdyn/dynamics.hpp"
#include "cosdyn/errors.hpp"
#include "cosdyn/json_io.hpp"
#include "cosdyn/scenarios.hpp"
#include "cosdyn/witness.hpp"

namespace cosdyn::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raw flag values; merged over an optional --config file.
struct Flags {
  std::string config;
  std::string system;
  std::vector<std::string> measures;
  std::vector<double> window;
  std::optional<int> horizon;
  std::optional<double> tol;
  std::optional<double> radius;
  std::string witness_case;
  std::optional<double> grid_step;
  std::string out;
  std::string csv;
  std::string report;
  double M = 4.0;
  double delta = 1.0;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "Run-configuration JSON file");
  cmd->add_option("--system", f.system, "System JSON file");
  cmd->add_option("--out", f.out, "Output path (default: stdout)");
}

RunConfig merged(const Flags& f) {
  RunConfig c = f.config.empty() ? RunConfig{} : load_run_config(f.config);
  if (!f.system.empty()) c.system = f.system;
  if (!f.measures.empty()) c.measures.assign(f.measures.begin(), f.measures.end());
  if (!f.window.empty()) {
    if (f.window[0] > f.window[1]) throw ValidationError("window", "requires LO <= HI");
    c.window = CompactWindow(f.window[0], f.window[1]);
  }
  if (f.horizon) {
    if (*f.horizon < 1) throw ValidationError("horizon", "must be >= 1");
    c.horizon = f.horizon;
  }
  auto positive = [](std::optional<double> v, const char* name) {
    if (v && !(*v > 0.0)) throw ValidationError(name, "must be positive");
    return v;
  };
  if (f.tol) c.tol = positive(f.tol, "tol");
  if (f.radius) c.radius = positive(f.radius, "radius");
  if (f.grid_step) c.grid_step = positive(f.grid_step, "grid-step");
  if (!f.witness_case.empty()) c.witness_case = parse_witness_case(f.witness_case);
  if (!f.out.empty()) c.out = f.out;
  return c;
}

template <typename T>
const T& required(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required ") + flag);
  return *v;
}

void emit(const std::optional<std::filesystem::path>& path, const std::string& text,
          std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw std::runtime_error(path->string() + ": cannot write");
  file << text;
}

int simulate(const Flags& f, std::ostream& out) {
  const RunConfig c = merged(f);
  const CosineSystem sys = load_system(required(c.system, "--system"));
  if (c.measures.size() != 1) throw UsageError("simulate takes exactly one --measure");
  const AtomicMeasure m = load_measure(c.measures.front());
  const int horizon = required(c.horizon, "--horizon");

  std::ostringstream os;
  os << "n,tv_norm,atom_count,min_position,max_position\n";
  for (int n = 1; n <= horizon; ++n) {
    const AtomicMeasure cn = cosine(sys, m, n);
    os << n << ',' << format_number(total_variation(cn)) << ',' << cn.size() << ',';
    if (!cn.empty()) {
      os << format_number(cn.atoms().front().position) << ','
         << format_number(cn.atoms().back().position);
    } else {
      os << ',';
    }
    os << '\n';
  }
  emit(c.out, os.str(), out);
  return kExitOk;
}

int check(const Flags& f, std::ostream& out) {
  const RunConfig c = merged(f);
  const CosineSystem sys = load_system(required(c.system, "--system"));
  const GridOptions grid{c.grid_step.value_or(kDefaultGridStep), {}};
  const CorollaryReport report = check_corollary(sys, required(c.window, "--window"),
                                                 required(c.horizon, "--horizon"),
                                                 required(c.tol, "--tol"), grid);
  emit(c.out, to_json(report), out);
  if (!f.csv.empty()) emit(std::filesystem::path(f.csv), to_csv(report), out);
  switch (report.overall) {
    case Verdict::holds:
      return kExitOk;
    case Verdict::fails:
      return kExitFails;
    case Verdict::inconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

int witness(const Flags& f, std::ostream& out) {
  const RunConfig c = merged(f);
  const CosineSystem sys = load_system(required(c.system, "--system"));
  if (c.measures.size() != 2) {
    throw UsageError("witness takes two --measure files (mu, then nu)");
  }
  const AtomicMeasure mu = load_measure(c.measures[0]);
  const AtomicMeasure nu = load_measure(c.measures[1]);
  const double radius = required(c.radius, "--radius");
  const ScanResult scan = scan_witnesses(
      sys, mu, nu, required(c.window, "--window"), BallSpec{mu, radius},
      BallSpec{nu, radius}, required(c.horizon, "--horizon"),
      c.witness_case.value_or(WitnessCase::e_equals_k));
  emit(c.out, to_csv(scan), out);
  if (!f.report.empty()) emit(std::filesystem::path(f.report), to_json(scan), out);
  return scan.first_stable_n ? kExitOk : kExitFails;
}

int example(const Flags& f, std::ostream& out) {
  const CosineSystem sys = build_example(ExampleParams{f.M, f.delta});
  emit(f.out.empty() ? std::nullopt : std::optional<std::filesystem::path>(f.out),
       serialize_system(sys), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adjoint weighted-composition cosine dynamics on atomic measures"};
  app.require_subcommand(1);
  Flags f;

  auto* sim = app.add_subcommand("simulate", "Tabulate C_n*(m) for n = 1..horizon");
  add_common(sim, f);
  sim->add_option("--measure", f.measures, "Measure JSON file");
  sim->add_option("--horizon", f.horizon, "Last n");

  auto* chk = app.add_subcommand("check", "Evaluate the three limit conditions on a window");
  add_common(chk, f);
  chk->add_option("--window", f.window, "Compact window LO HI")->expected(2);
  chk->add_option("--horizon", f.horizon, "Last n (>= 4)");
  chk->add_option("--tol", f.tol, "Decay tolerance");
  chk->add_option("--grid-step", f.grid_step, "Uniform sampling step");
  chk->add_option("--csv", f.csv, "Also write n,value_a,value_b,value_c here");

  auto* wit = app.add_subcommand("witness", "Scan semi-transitivity witnesses over n");
  add_common(wit, f);
  wit->add_option("--measure", f.measures, "mu, then nu (repeat the flag)");
  wit->add_option("--window", f.window, "Compact window LO HI")->expected(2);
  wit->add_option("--horizon", f.horizon, "Last n");
  wit->add_option("--radius", f.radius, "Radius of both open balls");
  wit->add_option("--case", f.witness_case, "d-equals-k or e-equals-k (default)");
  wit->add_option("--report", f.report, "Also write every witness report as JSON here");

  auto* ex = app.add_subcommand("example", "Write the shifted-ramp example system");
  ex->add_option("--M", f.M, "Left plateau value (>= 2 + 2*delta)");
  ex->add_option("--delta", f.delta, "Right plateau is 1 + delta (delta >= 1)");
  ex->add_option("--out", f.out, "Output path (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // --help lands here with code 0; everything else is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (sim->parsed()) return simulate(f, out);
    if (chk->parsed()) return check(f, out);
    if (wit->parsed()) return witness(f, out);
    return example(f, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace cosdyn::cli
