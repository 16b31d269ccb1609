// Command-line front end: spectra, sampled states and observables, k-sweeps,
// the singular-well k0 root, and the verification suite.
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "emit.hpp"
#include "gcf/observables.hpp"
#include "gcf/oracle.hpp"
#include "gcf/susy.hpp"
#include "gcf/verify.hpp"
#include "run_config.hpp"

namespace {

using namespace gcf;
using cli::RunConfig;
using cli::Table;

// flag holders; presence is queried through CLI11 counts so that the
// config-file < preset < explicit-flag precedence stays simple
struct Flags {
  std::string kind;
  double b = 0.0, theta = 0.0, mu = 0.0, k = 0.0;
  double k_start = 0.0, k_stop = 0.0;
  int k_steps = 0;
  int n_max = 0;
  int n_points = 0;
  double x_min = 0.0, x_max = 0.0;
  std::string format, out_path, config_path, preset;
  bool holes = false;
  int verify_levels = 5;
  int oracle_points = 1201;
};

void attach_common(CLI::App* sub, Flags& f, bool with_scalar_k, bool with_k_range) {
  sub->add_option("--config", f.config_path, "JSON run configuration file");
  sub->add_option("--preset", f.preset, "named parameter set: fig3|fig6|fig9");
  sub->add_option("--kind", f.kind, "field shape: constant|trig|exp");
  sub->add_option("--B", f.b, "field amplitude modulus |B|");
  sub->add_option("--theta", f.theta, "field amplitude argument, radians in (-pi, pi]");
  sub->add_option("--mu", f.mu, "inverse length scale of trig/exp shapes");
  if (with_scalar_k) sub->add_option("--k", f.k, "wavenumber along the translation axis");
  if (with_k_range) {
    sub->add_option("--k-start", f.k_start, "sweep start");
    sub->add_option("--k-stop", f.k_stop, "sweep stop");
    sub->add_option("--k-steps", f.k_steps, "sweep point count (>= 2)");
  }
  sub->add_option("--n-max", f.n_max, "highest level to emit");
  sub->add_option("--format", f.format, "output format: csv|json");
  sub->add_option("--output", f.out_path, "output path (default stdout)");
}

void attach_grid(CLI::App* sub, Flags& f) {
  sub->add_option("--n-points", f.n_points, "sample grid size");
  sub->add_option("--x-min", f.x_min, "sample grid lower bound");
  sub->add_option("--x-max", f.x_max, "sample grid upper bound");
}

bool given(const CLI::App* sub, const std::string& name) {
  const CLI::Option* opt = sub->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

RunConfig build_config(const CLI::App* sub, const Flags& f) {
  RunConfig cfg;
  if (given(sub, "--config")) {
    std::ifstream in(f.config_path);
    if (!in) throw std::invalid_argument("cannot read config file '" + f.config_path + "'");
    cfg = RunConfig::from_json(nlohmann::json::parse(in));
  }
  if (given(sub, "--preset")) cli::apply_preset(cfg, f.preset);
  if (given(sub, "--kind")) cfg.kind = cli::kind_from_string(f.kind);
  if (given(sub, "--B")) cfg.b_modulus = f.b;
  if (given(sub, "--theta")) cfg.theta = f.theta;
  if (given(sub, "--mu")) cfg.mu = f.mu;
  if (given(sub, "--k")) {
    cfg.k = f.k;
    cfg.k_range.reset();
  }
  if (given(sub, "--k-start") || given(sub, "--k-stop") || given(sub, "--k-steps")) {
    if (!(given(sub, "--k-start") && given(sub, "--k-stop") && given(sub, "--k-steps"))) {
      throw std::invalid_argument("--k-start/--k-stop/--k-steps must be given together");
    }
    cfg.k_range = cli::KRange{f.k_start, f.k_stop, f.k_steps};
    cfg.k.reset();
  }
  if (given(sub, "--n-max")) cfg.n_max = f.n_max;
  if (given(sub, "--n-points")) cfg.grid.n_points = f.n_points;
  if (given(sub, "--x-min")) cfg.grid.x_min = f.x_min;
  if (given(sub, "--x-max")) cfg.grid.x_max = f.x_max;
  if (given(sub, "--format")) cfg.output.format = f.format;
  if (given(sub, "--output")) cfg.output.path = f.out_path;
  cfg.holes = f.holes;
  cfg.validate();
  return cfg;
}

double require_scalar_k(const RunConfig& cfg, const char* cmd) {
  if (!cfg.k) {
    throw std::invalid_argument(std::string(cmd) + " requires a scalar k (--k or config)");
  }
  return *cfg.k;
}

std::vector<int> admissible_levels(const MagneticProfile& p, double k, int n_max) {
  std::vector<int> out;
  for (int n = 0; n <= n_max && admissible(p, k, n); ++n) out.push_back(n);
  return out;
}

ParticleSign sign_of(const RunConfig& cfg) {
  return cfg.holes ? ParticleSign::Hole : ParticleSign::Electron;
}

int sweep_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GRAPHENE_CFIELD_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min<int>(v, 64);
  }
  return static_cast<int>(hw);
}

Grid sample_grid(const RunConfig& cfg, const MagneticProfile& p, double k, int top_level) {
  Grid base = auto_domain(p, k, top_level, cfg.grid.n_points.value_or(2001));
  return Grid(cfg.grid.x_min.value_or(base.x_min), cfg.grid.x_max.value_or(base.x_max),
              cfg.grid.n_points.value_or(base.n_points));
}

// --- subcommand bodies -------------------------------------------------------

Table spectrum_table(const RunConfig& cfg) {
  MagneticProfile p = cfg.profile();
  double k = require_scalar_k(cfg, "spectrum");
  require_admissible(p, k, 0);
  Table t;
  t.header = {"n", "eps_re", "eps_im", "E_re", "E_im", "E_abs", "E_arg"};
  for (int n : admissible_levels(p, k, cfg.n_max)) {
    cplx eps = eigenvalue_minus(p, k, n);
    cplx e = energy(p, k, n, sign_of(cfg));
    t.rows.push_back({static_cast<double>(n), eps.real(), eps.imag(), e.real(), e.imag(),
                      std::abs(e), std::arg(e)});
  }
  return t;
}

Table states_table(const RunConfig& cfg) {
  MagneticProfile p = cfg.profile();
  double k = require_scalar_k(cfg, "states");
  require_admissible(p, k, 0);
  std::vector<int> levels = admissible_levels(p, k, cfg.n_max);
  Grid g = sample_grid(cfg, p, k, levels.back());
  Table t;
  t.header = {"n", "x", "psi_plus_re", "psi_plus_im", "psi_minus_re", "psi_minus_im"};
  for (int n : levels) {
    SpinorState st = spinor_state(p, k, n, sign_of(cfg));
    for (int i = 0; i < g.n_points; ++i) {
      double x = g.node(i);
      cplx up = st.upper(x), lo = st.lower(x);
      t.rows.push_back({static_cast<double>(n), x, up.real(), up.imag(), lo.real(), lo.imag()});
    }
  }
  return t;
}

Table observables_table(const RunConfig& cfg) {
  MagneticProfile p = cfg.profile();
  double k = require_scalar_k(cfg, "observables");
  require_admissible(p, k, 0);
  std::vector<int> levels = admissible_levels(p, k, cfg.n_max);
  Grid g = sample_grid(cfg, p, k, levels.back());
  Table t;
  t.header = {"n", "x", "rho", "j_x", "j_y", "continuity_residual"};
  for (int n : levels) {
    SpinorState st = spinor_state(p, k, n, sign_of(cfg));
    ObservableField field = observable_field(st, g);
    for (int i = 0; i < g.n_points; ++i) {
      t.rows.push_back({static_cast<double>(n), g.node(i), field.rho[i], field.j_x[i],
                        field.j_y[i], field.continuity[i]});
    }
  }
  return t;
}

cli::KRange default_sweep_range(const RunConfig& cfg) {
  switch (cfg.kind) {
    case FieldKind::Constant:
      return {-5.0, 5.0, 101};
    case FieldKind::Trig: {
      double reach = std::max(8.0, 2.0 * cfg.b_modulus / cfg.mu);
      return {-reach, reach, 161};
    }
    case FieldKind::Exp:
      return {0.1 * cfg.mu, (cfg.n_max + 4.0) * cfg.mu, 70};
  }
  throw std::logic_error("unreachable");
}

Table sweep_table(const RunConfig& cfg) {
  MagneticProfile p = cfg.profile();
  cli::KRange range = cfg.k_range ? *cfg.k_range : default_sweep_range(cfg);
  std::vector<double> ks(range.steps);
  for (int i = 0; i < range.steps; ++i) {
    ks[i] = range.start + (range.stop - range.start) * i / (range.steps - 1);
  }

  // each k is independent; rows are assembled afterwards in k order so the
  // artifact is byte-identical regardless of the thread count
  std::vector<std::vector<std::vector<double>>> per_k(ks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < ks.size(); i = next.fetch_add(1)) {
      double k = ks[i];
      for (int n : admissible_levels(p, k, cfg.n_max)) {
        cplx eps = eigenvalue_minus(p, k, n);
        cplx e = energy(p, k, n, sign_of(cfg));
        per_k[i].push_back({k, static_cast<double>(n), eps.real(), eps.imag(), e.real(),
                            e.imag(), std::abs(e), std::arg(e)});
      }
    }
  };
  int nthreads = std::min<int>(sweep_threads(), static_cast<int>(ks.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  Table t;
  t.header = {"k", "n", "eps_re", "eps_im", "E_re", "E_im", "E_abs", "E_arg"};
  for (const auto& rows : per_k) {
    for (const auto& r : rows) t.rows.push_back(r);
  }
  return t;
}

Table k0_table(const RunConfig& cfg) {
  K0Result r = find_k0(cfg.profile());
  Table t;
  t.header = {"k0", "im_E1", "degenerate"};
  t.rows.push_back({r.k0, r.im_E1, r.degenerate ? 1.0 : 0.0});
  return t;
}

int run_verify(const RunConfig& cfg, const Flags& f) {
  MagneticProfile p = cfg.profile();
  double k = require_scalar_k(cfg, "verify");
  require_admissible(p, k, 0);
  VerifyOptions opt;
  opt.n_levels = f.verify_levels;
  opt.oracle_points = f.oracle_points;
  std::vector<CheckResult> results = run_verification(p, k, opt);
  bool all_pass = true;
  for (const CheckResult& r : results) {
    std::printf("[%s] %-55s max_residual=%.3e tol=%.3e\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.max_residual, r.tolerance);
    all_pass = all_pass && r.pass;
  }
  std::printf("%s: %zu checks\n", all_pass ? "PASS" : "FAIL", results.size());
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac-Weyl bound states of graphene in complex-amplitude magnetic fields"};
  app.require_subcommand(1);

  Flags f;
  CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form level table at fixed k");
  attach_common(spectrum, f, true, false);
  spectrum->add_flag("--holes", f.holes, "emit the hole branch instead of electrons");

  CLI::App* states = app.add_subcommand("states", "sampled spinor components per level");
  attach_common(states, f, true, false);
  attach_grid(states, f);
  states->add_flag("--holes", f.holes, "emit the hole branch instead of electrons");

  CLI::App* observables =
      app.add_subcommand("observables", "density, currents and continuity residual per level");
  attach_common(observables, f, true, false);
  attach_grid(observables, f);
  observables->add_flag("--holes", f.holes, "emit the hole branch instead of electrons");

  CLI::App* sweep = app.add_subcommand("sweep", "level table swept over k");
  attach_common(sweep, f, false, true);
  sweep->add_flag("--holes", f.holes, "emit the hole branch instead of electrons");

  CLI::App* k0 = app.add_subcommand("k0", "root of Im E_1(k) for the singular well");
  attach_common(k0, f, false, false);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite and report");
  attach_common(verify, f, true, false);
  verify->add_option("--levels", f.verify_levels, "level cap for the per-level checks");
  verify->add_option("--oracle-points", f.oracle_points,
                     "grid size of the dense eigensolver checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (spectrum->parsed()) {
      RunConfig cfg = build_config(spectrum, f);
      cli::emit(spectrum_table(cfg), cfg, "spectrum");
    } else if (states->parsed()) {
      RunConfig cfg = build_config(states, f);
      cli::emit(states_table(cfg), cfg, "states");
    } else if (observables->parsed()) {
      RunConfig cfg = build_config(observables, f);
      cli::emit(observables_table(cfg), cfg, "observables");
    } else if (sweep->parsed()) {
      RunConfig cfg = build_config(sweep, f);
      cli::emit(sweep_table(cfg), cfg, "sweep");
    } else if (k0->parsed()) {
      RunConfig cfg = build_config(k0, f);
      cli::emit(k0_table(cfg), cfg, "k0");
    } else if (verify->parsed()) {
      RunConfig cfg = build_config(verify, f);
      return run_verify(cfg, f);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
