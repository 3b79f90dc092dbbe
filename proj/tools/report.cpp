#include "report.hpp"

#include <sstream>

#include "stoclab/version.hpp"

namespace stoclab::report {

namespace {

std::string csv_row(std::initializer_list<double> values) {
  std::string row;
  bool first = true;
  for (const double v : values) {
    if (!first) row += ',';
    row += format_double(v);
    first = false;
  }
  row += '\n';
  return row;
}

}  // namespace

json metadata(const std::string& subcommand, std::uint64_t seed, const std::string& rng_name,
              double wall_time_s) {
  json m;
  m["subcommand"] = subcommand;
  m["artifact_version"] = STOCLAB_VERSION;
  m["rng_name"] = rng_name;
  m["seed"] = seed;
  m["wall_time_s"] = wall_time_s;
  return m;
}

std::string document(const json& metadata, const json& results) {
  json doc;
  doc["metadata"] = metadata;
  doc["results"] = results;
  return doc.dump(2) + "\n";
}

json constants_results(const ConstantsTable& table) {
  json r;
  r["version"] = table.version;
  json c;
  c["hbar"] = table.constants.hbar;
  c["c"] = table.constants.c;
  c["G"] = table.constants.G;
  c["k_B"] = table.constants.k_B;
  c["e"] = table.constants.e;
  r["constants"] = c;
  json particles = json::array();
  for (const auto& p : table.particles) {
    json jp;
    jp["name"] = p.name;
    jp["mass"] = p.mass;
    jp["charge"] = p.charge;
    jp["spin"] = p.spin;
    jp["compton_wavelength"] = compton_wavelength(p, table.constants);
    jp["compton_wavelength_nonreduced"] = compton_wavelength(p, table.constants, false);
    jp["compton_time"] = compton_time(p, table.constants);
    particles.push_back(jp);
  }
  r["particles"] = particles;
  return r;
}

json walk_results(const WalkSpec& spec, const WalkEnsembleResult& res) {
  json r;
  json s;
  s["steps"] = spec.steps;
  s["step_length"] = spec.step_length;
  s["dim"] = spec.dim;
  s["walkers"] = spec.walkers;
  s["seed"] = spec.seed;
  r["spec"] = s;
  r["rms_displacement"] = res.rms_displacement;
  r["stderr_rms"] = res.stderr_rms;
  r["stderr_defined"] = res.stderr_defined;
  json mean = json::array();
  for (int a = 0; a < spec.dim; ++a) mean.push_back(res.mean_displacement[a]);
  r["mean_displacement"] = mean;
  r["mean_square_displacement"] = res.mean_square_displacement;
  return r;
}

std::string walk_csv(const WalkSpec& spec, const std::vector<std::array<double, 3>>& disp) {
  std::string out = spec.dim == 1   ? "walker_index,x,r2\n"
                    : spec.dim == 2 ? "walker_index,x,y,r2\n"
                                    : "walker_index,x,y,z,r2\n";
  for (std::size_t w = 0; w < disp.size(); ++w) {
    const auto& d = disp[w];
    const double r2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    out += std::to_string(w);
    out += ',';
    for (int a = 0; a < spec.dim; ++a) {
      out += format_double(d[a]);
      out += ',';
    }
    out += format_double(r2);
    out += '\n';
  }
  return out;
}

json nelson_results(const QuantumModel& model, const DiffusionSpec& spec,
                    const WalkerEnsemble& ens, const DensityReport& density) {
  json r;
  json m;
  m["kind"] = model.kind == QuantumModel::Kind::harmonic_ground_state
                  ? "harmonic_ground_state"
                  : "free_gaussian_packet";
  if (model.kind == QuantumModel::Kind::harmonic_ground_state) {
    m["omega"] = model.omega;
  } else {
    m["sigma0"] = model.sigma0;
  }
  m["mass"] = model.mass;
  m["hbar"] = model.hbar;
  r["model"] = m;

  json s;
  s["nu"] = spec.nu;
  s["convention"] = spec.convention == DiffusionConvention::paper ? "paper" : "nelson";
  s["sde_nu"] = spec.sde_nu();
  s["dt"] = spec.dt;
  s["t_end"] = spec.t_end;
  s["walkers"] = spec.walkers;
  s["seed"] = spec.seed;
  r["spec"] = s;

  double mean = 0.0;
  for (const double x : ens.positions) mean += x;
  mean /= double(ens.positions.size());
  double var = 0.0;
  for (const double x : ens.positions) var += (x - mean) * (x - mean);
  var = ens.positions.size() > 1 ? var / double(ens.positions.size() - 1) : 0.0;

  r["final_time"] = ens.time;
  r["sample_mean"] = mean;
  r["sample_variance"] = var;
  r["exact_variance"] = model_variance(model, ens.time);

  json d;
  d["l1"] = density.degenerate ? json() : json(density.l1);
  d["ks"] = density.degenerate ? json() : json(density.ks);
  d["bins"] = density.bins;
  d["bin_width"] = density.bin_width;
  d["degenerate"] = density.degenerate;
  r["density"] = d;
  return r;
}

std::string nelson_csv(const WalkerEnsemble& ens) {
  std::string out = "walker_index,x_final\n";
  for (std::size_t w = 0; w < ens.positions.size(); ++w) {
    out += std::to_string(w);
    out += ',';
    out += format_double(ens.positions[w]);
    out += '\n';
  }
  return out;
}

json dirac_results(const DiracRun& run, const std::vector<double>& times,
                   const std::vector<double>& mean_x, const std::vector<double>& norms,
                   const EvolveDiagnostics& diag, const std::optional<ZitterReport>& zitter,
                   const std::string& zitter_skip_reason) {
  json r;
  json in;
  in["mass"] = run.mass;
  in["sigma"] = run.sigma;
  in["p0"] = run.p0;
  in["band"] = run.band;
  in["method"] = run.method;
  in["units"] = run.units;
  in["dx"] = run.dx;
  in["points"] = run.points;
  in["t_end"] = run.t_end;
  r["inputs"] = in;
  r["flip_rate"] = run.flip_rate;

  json series;
  series["t"] = times;
  series["mean_x"] = mean_x;
  series["norm"] = norms;
  r["series"] = series;

  json d;
  d["boundary_contact"] = diag.boundary_contact;
  d["max_edge_fraction"] = diag.max_edge_fraction;
  d["aliasing"] = diag.aliasing;
  d["nyquist_fraction"] = diag.nyquist_fraction;
  r["diagnostics"] = d;

  if (zitter) {
    json z;
    z["dominant_frequency"] = zitter->dominant_frequency;
    z["oscillation_amplitude"] = zitter->oscillation_amplitude;
    z["drift_velocity"] = zitter->drift_velocity;
    r["zitter"] = z;
  } else {
    json z;
    z["skipped"] = zitter_skip_reason;
    r["zitter"] = z;
  }
  return r;
}

std::string dirac_csv(const std::vector<double>& times, const std::vector<double>& mean_x,
                      const std::vector<double>& norms) {
  std::string out = "t,mean_x,norm\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    out += csv_row({times[i], mean_x[i], norms[i]});
  }
  return out;
}

json kn_results(const KNConfig& cfg, ChargeTerm term, const KNClassification& cls,
                double discriminant) {
  json r;
  json in;
  in["mass"] = cfg.mass;
  in["charge"] = cfg.charge;
  in["spin_param"] = cfg.spin_param;
  in["charge_term"] = term == ChargeTerm::standard ? "standard" : "literal";
  r["input"] = in;
  r["kind"] = to_string(cls.kind);
  r["r_plus"] = cls.r_plus;
  r["r_minus"] = cls.r_minus ? json(*cls.r_minus) : json();
  r["b"] = cls.b ? json(*cls.b) : json();
  r["discriminant"] = discriminant;
  return r;
}

json cosmo_results(const CosmologySpec& spec, const CosmologyTrajectory& traj) {
  json r;
  json s;
  s["N0"] = spec.N0;
  s["tau"] = spec.tau;
  s["t_end"] = spec.t_end;
  s["dt"] = spec.dt;
  r["spec"] = s;
  r["samples"] = traj.times.size();
  r["final_N"] = traj.N_values.back();
  r["monotone"] = traj.monotone;
  r["refined"] = traj.refined;
  r["substeps"] = traj.substeps;
  json t;
  t["t"] = traj.times;
  t["N"] = traj.N_values;
  r["trajectory"] = t;
  return r;
}

std::string cosmo_csv(const CosmologyTrajectory& traj) {
  std::string out = "t,N\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    out += csv_row({traj.times[i], traj.N_values[i]});
  }
  return out;
}

json audit_results(const AuditInputs& in, const std::string& particle,
                   const std::vector<AuditRow>& rows) {
  json r;
  json i;
  i["R"] = in.R;
  i["N"] = in.N;
  i["T_obs"] = in.T_obs ? json(*in.T_obs) : json();
  i["M_obs"] = in.M_obs ? json(*in.M_obs) : json();
  i["particle"] = particle;
  r["inputs"] = i;
  json jrows = json::array();
  bool all_pass = true;
  for (const auto& row : rows) {
    json jr;
    jr["name"] = row.name;
    jr["ratio"] = row.ratio;
    jr["residual_dex"] = row.residual_dex;
    jr["structural"] = row.structural;
    jr["pass"] = row.pass;
    jr["note"] = row.note;
    jrows.push_back(jr);
    all_pass = all_pass && row.pass;
  }
  r["rows"] = jrows;
  r["all_pass"] = all_pass;
  return r;
}

}  // namespace stoclab::report
