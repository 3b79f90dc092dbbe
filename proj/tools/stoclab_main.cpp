#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "report.hpp"
#include "stoclab/version.hpp"

using namespace stoclab;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_s(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct CommonState {
  std::string config_path;

  ConstantsTable table() const {
    if (!config_path.empty()) return load_table_file(config_path);
    return default_table();
  }
};

void emit_document(const std::string& subcommand, std::uint64_t seed,
                   const std::string& rng_name, Clock::time_point t0,
                   const report::json& results) {
  std::cout << report::document(report::metadata(subcommand, seed, rng_name, elapsed_s(t0)),
                                results);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 2;
  while (p < n) p <<= 1;
  return p;
}

void add_constants_command(CLI::App& app, std::shared_ptr<CommonState> state) {
  auto* cmd = app.add_subcommand("constants", "Dump the active constants/particle table");
  auto output = std::make_shared<std::string>("json");
  cmd->add_option("--output", *output, "Output format")->check(CLI::IsMember({"json"}));
  cmd->callback([state]() {
    const auto t0 = Clock::now();
    const auto table = state->table();
    emit_document("constants", 0, "none", t0, report::constants_results(table));
  });
}

void add_walk_command(CLI::App& app) {
  auto* cmd = app.add_subcommand("walk", "Fixed-step isotropic random-walk ensemble");
  auto spec = std::make_shared<WalkSpec>();
  auto output = std::make_shared<std::string>("json");
  auto threads = std::make_shared<int>(1);
  spec->steps = 1000;
  spec->dim = 3;
  spec->walkers = 1000;
  cmd->add_option("--steps", spec->steps, "Steps per walker");
  cmd->add_option("--step-length", spec->step_length, "Step length (cm)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--dim", spec->dim, "Dimension")->check(CLI::Range(1, 3));
  cmd->add_option("--walkers", spec->walkers, "Ensemble size")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", spec->seed, "RNG seed");
  cmd->add_option("--threads", *threads, "Worker threads")->check(CLI::Range(1, 1024));
  cmd->add_option("--output", *output, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->callback([spec, output, threads]() {
    const auto t0 = Clock::now();
    spec->validate();
    if (*output == "csv") {
      std::cout << report::walk_csv(*spec, walk_displacements(*spec, *threads));
      return;
    }
    const auto res = estimate_rms(*spec, *threads);
    emit_document("walk", spec->seed, Philox::name(), t0, report::walk_results(*spec, res));
  });
}

void add_nelson_command(CLI::App& app, std::shared_ptr<CommonState> state) {
  auto* cmd = app.add_subcommand("nelson", "Stochastic-mechanics ensemble evolution");
  struct Opts {
    std::string model = "harmonic";
    double sigma0 = 1.0;
    double omega = 1.0;
    std::string particle;
    std::string units = "natural";
    std::string convention = "nelson";
    double nu_override = 0.0;
    bool nu_given = false;
    DiffusionSpec spec;
    int threads = 1;
    std::string output = "json";
  };
  auto o = std::make_shared<Opts>();
  o->spec.dt = 0.01;
  o->spec.t_end = 1.0;
  o->spec.walkers = 1000;
  cmd->add_option("--model", o->model, "Quantum model")
      ->check(CLI::IsMember({"free", "harmonic"}));
  cmd->add_option("--sigma0", o->sigma0, "Initial packet width")->check(CLI::PositiveNumber);
  cmd->add_option("--omega", o->omega, "Oscillator frequency")->check(CLI::PositiveNumber);
  cmd->add_option("--particle", o->particle, "Particle name (cgs units)");
  cmd->add_option("--units", o->units, "Unit system")
      ->check(CLI::IsMember({"natural", "cgs"}));
  cmd->add_option("--convention", o->convention, "Diffusion-constant convention")
      ->check(CLI::IsMember({"paper", "nelson"}));
  auto* nu_opt = cmd->add_option("--nu", o->nu_override, "Diffusion constant override")
                     ->check(CLI::PositiveNumber);
  cmd->add_option("--dt", o->spec.dt, "Time step (s)")->check(CLI::PositiveNumber);
  cmd->add_option("--t-end", o->spec.t_end, "Evolution time (s)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--walkers", o->spec.walkers, "Ensemble size")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o->spec.seed, "RNG seed");
  cmd->add_option("--threads", o->threads, "Worker threads")->check(CLI::Range(1, 1024));
  cmd->add_option("--output", o->output, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->callback([o, nu_opt, state]() {
    const auto t0 = Clock::now();
    const auto conv = o->convention == "paper" ? DiffusionConvention::paper
                                               : DiffusionConvention::nelson;
    double hbar = 1.0, mass = 1.0;
    double nu = conv == DiffusionConvention::paper ? 1.0 : 0.5;
    if (o->units == "cgs") {
      if (o->particle.empty()) {
        throw std::invalid_argument("--units cgs requires --particle");
      }
      const auto table = state->table();
      const auto& p = table.particle(o->particle);
      hbar = table.constants.hbar;
      mass = p.mass;
      nu = diffusion_constant(p, table.constants, conv);
    }
    if (nu_opt->count() > 0) nu = o->nu_override;
    o->spec.nu = nu;
    o->spec.convention = conv;

    const auto model = o->model == "harmonic" ? QuantumModel::harmonic(o->omega, mass, hbar)
                                              : QuantumModel::free_packet(o->sigma0, mass, hbar);
    const auto ens = evolve_ensemble(model, o->spec, o->threads);
    if (o->output == "csv") {
      std::cout << report::nelson_csv(ens);
      return;
    }
    const auto density = density_distance(ens, model);
    emit_document("nelson", o->spec.seed, Philox::name(), t0,
                  report::nelson_results(model, o->spec, ens, density));
  });
}

void add_dirac_command(CLI::App& app, std::shared_ptr<CommonState> state) {
  auto* cmd = app.add_subcommand("dirac", "1+1D Dirac evolution and Zitterbewegung analysis");
  struct Opts {
    report::DiracRun run;
    double extent = 64.0;
    std::size_t samples = 480;
    std::string output = "json";
  };
  auto o = std::make_shared<Opts>();
  o->run.mass = 1.0;
  o->run.sigma = 4.0;
  o->run.dx = 0.25;
  o->run.t_end = 48.0;
  cmd->add_option("--m", o->run.mass, "Mass")->check(CLI::NonNegativeNumber);
  cmd->add_option("--sigma", o->run.sigma, "Packet width")->check(CLI::PositiveNumber);
  cmd->add_option("--p0", o->run.p0, "Packet momentum");
  cmd->add_option("--band", o->run.band, "Energy-band content")
      ->check(CLI::IsMember({"both", "positive"}));
  cmd->add_option("--dx", o->run.dx, "Lattice spacing")->check(CLI::PositiveNumber);
  cmd->add_option("--extent", o->extent, "Grid extent (rounded up to a power-of-two grid)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--t-end", o->run.t_end, "Evolution time")->check(CLI::PositiveNumber);
  cmd->add_option("--samples", o->samples, "Series samples")->check(CLI::Range(16, 100000));
  cmd->add_option("--method", o->run.method, "Propagator")
      ->check(CLI::IsMember({"checkerboard", "spectral"}));
  cmd->add_option("--units", o->run.units, "Unit system")
      ->check(CLI::IsMember({"natural", "cgs"}));
  cmd->add_option("--output", o->output, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->callback([o, state]() {
    const auto t0 = Clock::now();
    QUnits units;
    if (o->run.units == "cgs") {
      const auto table = state->table();
      units = QUnits{table.constants.hbar, table.constants.c};
    }
    o->run.points = next_pow2(std::size_t(std::ceil(o->extent / o->run.dx)));
    o->run.flip_rate = o->run.mass * units.c * units.c / units.hbar;
    auto psi = gaussian_packet(o->run.points, o->run.dx, 0.0, o->run.sigma, o->run.p0,
                               1.0, 0.0, units);
    if (o->run.band == "positive") psi = project_positive_band(psi, o->run.mass, units);

    std::vector<double> times, mean_x, norms;
    EvolveDiagnostics diag;
    if (o->run.method == "spectral") {
      for (std::size_t i = 0; i < o->samples; ++i) {
        const double t = o->run.t_end * double(i) / double(o->samples);
        EvolveDiagnostics d;
        const auto f = spectral_evolve(psi, o->run.mass, t, units, &d);
        diag.aliasing = diag.aliasing || d.aliasing;
        diag.nyquist_fraction = std::max(diag.nyquist_fraction, d.nyquist_fraction);
        times.push_back(t);
        mean_x.push_back(mean_position(f));
        norms.push_back(f.norm());
      }
    } else {
      const double dt = o->run.dx / units.c;
      const auto total = std::uint64_t(std::llround(o->run.t_end / dt));
      const std::uint64_t stride = std::max<std::uint64_t>(1, total / o->samples);
      LatticeSpec lat;
      lat.dx = o->run.dx;
      lat.points = o->run.points;
      lat.steps = stride;
      auto f = psi;
      times.push_back(0.0);
      mean_x.push_back(mean_position(f));
      norms.push_back(f.norm());
      for (std::uint64_t done = stride; done <= total; done += stride) {
        EvolveDiagnostics d;
        f = checkerboard_propagate(f, lat, o->run.mass, units, &d);
        diag.boundary_contact = diag.boundary_contact || d.boundary_contact;
        diag.max_edge_fraction = std::max(diag.max_edge_fraction, d.max_edge_fraction);
        times.push_back(double(done) * dt);
        mean_x.push_back(mean_position(f));
        norms.push_back(f.norm());
      }
    }

    if (o->output == "csv") {
      std::cout << report::dirac_csv(times, mean_x, norms);
      return;
    }
    std::optional<ZitterReport> zitter;
    std::string skip_reason;
    try {
      zitter = zitter_analyze(mean_x, times);
    } catch (const std::invalid_argument& e) {
      skip_reason = e.what();
    }
    emit_document("dirac", 0, "none", t0,
                  report::dirac_results(o->run, times, mean_x, norms, diag, zitter,
                                        skip_reason));
  });
}

void add_kn_command(CLI::App& app, std::shared_ptr<CommonState> state) {
  auto* cmd = app.add_subcommand("kerr-newman", "Horizon classification of a mass/charge/spin configuration");
  struct Opts {
    KNConfig cfg;
    std::string particle;
    std::string charge_term = "standard";
    std::string output = "json";
  };
  auto o = std::make_shared<Opts>();
  auto* mass_opt = cmd->add_option("--mass", o->cfg.mass, "M (g)")->check(CLI::PositiveNumber);
  cmd->add_option("--charge", o->cfg.charge, "Q (esu)");
  cmd->add_option("--spin-param", o->cfg.spin_param, "a (cm)");
  auto* particle_opt = cmd->add_option("--particle", o->particle, "Table particle");
  particle_opt->excludes(mass_opt);
  cmd->add_option("--charge-term", o->charge_term, "Charge-term form")
      ->check(CLI::IsMember({"standard", "literal"}));
  cmd->add_option("--output", o->output, "Output format")->check(CLI::IsMember({"json"}));
  cmd->callback([o, mass_opt, particle_opt, state]() {
    const auto t0 = Clock::now();
    const auto table = state->table();
    if (particle_opt->count() > 0) {
      o->cfg = particle_kn_config(table.particle(o->particle), table.constants);
    } else if (mass_opt->count() == 0) {
      throw std::invalid_argument("give either --particle or --mass");
    }
    const auto term =
        o->charge_term == "standard" ? ChargeTerm::standard : ChargeTerm::literal;
    const auto cls = kn_classify(o->cfg, table.constants, term);
    const double d = kn_discriminant(o->cfg, table.constants, term);
    emit_document("kerr-newman", 0, "none", t0, report::kn_results(o->cfg, term, cls, d));
  });
}

void add_cosmo_command(CLI::App& app, std::shared_ptr<CommonState> state) {
  auto* cmd = app.add_subcommand("cosmo", "Integrate the sqrt(N) creation law");
  struct Opts {
    CosmologySpec spec;
    std::string particle = "pion";
    std::string output = "json";
  };
  auto o = std::make_shared<Opts>();
  o->spec.t_end = 10.0;
  o->spec.dt = 1.0;
  cmd->add_option("--N0", o->spec.N0, "Initial particle count")->check(CLI::NonNegativeNumber);
  auto* tau_opt = cmd->add_option("--tau", o->spec.tau, "Creation timescale (s)")
                      ->check(CLI::PositiveNumber);
  cmd->add_option("--particle", o->particle, "Particle whose Compton time sets tau");
  cmd->add_option("--t-end", o->spec.t_end, "End time (s)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--dt", o->spec.dt, "Sampling step (s)")->check(CLI::PositiveNumber);
  cmd->add_option("--output", o->output, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->callback([o, tau_opt, state]() {
    const auto t0 = Clock::now();
    if (tau_opt->count() == 0) {
      const auto table = state->table();
      o->spec.tau = compton_time(table.particle(o->particle), table.constants);
    }
    const auto traj = integrate_population(o->spec);
    if (o->output == "csv") {
      std::cout << report::cosmo_csv(traj);
      return;
    }
    emit_document("cosmo", 0, "none", t0, report::cosmo_results(o->spec, traj));
  });
}

void add_audit_command(CLI::App& app, std::shared_ptr<CommonState> state) {
  auto* cmd = app.add_subcommand("audit", "Order-of-magnitude audit of the large-number relations");
  struct Opts {
    AuditInputs in;
    double t_obs = 0.0;
    double m_obs = 0.0;
    std::string particle = "pion";
    std::string output = "json";
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("--R", o->in.R, "Observed radius (cm)")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--N", o->in.N, "Particle count")->required()->check(CLI::PositiveNumber);
  auto* t_opt = cmd->add_option("--T-obs", o->t_obs, "Observed age (s)")
                    ->check(CLI::PositiveNumber);
  auto* m_opt = cmd->add_option("--M-obs", o->m_obs, "Observed mass (g)")
                    ->check(CLI::PositiveNumber);
  cmd->add_option("--particle", o->particle, "Reference particle");
  cmd->add_option("--output", o->output, "Output format")->check(CLI::IsMember({"json"}));
  cmd->callback([o, t_opt, m_opt, state]() {
    const auto t0 = Clock::now();
    if (t_opt->count() > 0) o->in.T_obs = o->t_obs;
    if (m_opt->count() > 0) o->in.M_obs = o->m_obs;
    const auto table = state->table();
    const auto rows = large_number_audit(o->in, table.particle(o->particle), table.constants);
    emit_document("audit", 0, "none", t0, report::audit_results(o->in, o->particle, rows));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stoclab: stochastic origins of quantum scales, desk-scale numerical laboratory"};
  app.set_version_flag("--version", STOCLAB_VERSION);
  app.require_subcommand(1);

  auto state = std::make_shared<CommonState>();
  app.add_option("--config", state->config_path, "Constants config file")
      ->envname("STOCLAB_CONSTANTS");

  add_constants_command(app, state);
  add_walk_command(app);
  add_nelson_command(app, state);
  add_dirac_command(app, state);
  add_kn_command(app, state);
  add_cosmo_command(app, state);
  add_audit_command(app, state);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
