#include "stoclab/cosmology.hpp"

#include <cmath>
#include <stdexcept>

namespace stoclab {

void CosmologySpec::validate() const {
  if (!(N0 >= 0.0) || !std::isfinite(N0)) throw std::invalid_argument("N0 must be >= 0");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("tau must be positive");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("t_end must be >= 0");
}

double creation_rate(double N, double tau) {
  if (!(N >= 0.0)) throw std::domain_error("N must be >= 0");
  if (!(tau > 0.0)) throw std::domain_error("tau must be positive");
  return std::sqrt(N) / tau;
}

double population_closed_form(double N0, double tau, double t) {
  const double root = std::sqrt(N0) + t / (2.0 * tau);
  return root * root;
}

double exact_growth_time(double N0, double N, double tau) {
  return 2.0 * tau * (std::sqrt(N) - std::sqrt(N0));
}

namespace {

inline double rate(double N, double tau) { return std::sqrt(std::max(N, 0.0)) / tau; }

double rk4_step(double N, double h, double tau) {
  const double k1 = rate(N, tau);
  const double k2 = rate(N + 0.5 * h * k1, tau);
  const double k3 = rate(N + 0.5 * h * k2, tau);
  const double k4 = rate(N + h * k3, tau);
  return N + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Local growth timescale of the solution; smallest at small N.
inline double growth_scale(double N, double tau) { return tau * (1.0 + std::sqrt(N)); }

}  // namespace

CosmologyTrajectory integrate_population(const CosmologySpec& spec) {
  spec.validate();

  CosmologyTrajectory traj;
  traj.times.push_back(0.0);
  traj.N_values.push_back(spec.N0);

  const std::uint64_t full = std::uint64_t(std::floor(spec.t_end / spec.dt + 1e-9));
  double N = spec.N0;
  double t = 0.0;
  for (std::uint64_t k = 1; k <= full + 1; ++k) {
    double target = double(k) * spec.dt;
    if (k == full + 1) {
      if (spec.t_end <= t * (1.0 + 1e-15)) break;  // t_end landed on the grid
      target = spec.t_end;
    }
    const double interval = target - t;
    const double h_max = 0.05 * growth_scale(N, spec.tau);
    std::uint64_t m = 1;
    if (interval > h_max) {
      m = std::uint64_t(std::ceil(interval / h_max));
      traj.refined = true;
    }
    const double h = interval / double(m);
    for (std::uint64_t i = 0; i < m; ++i) N = rk4_step(N, h, spec.tau);
    traj.substeps += m;
    t = target;
    traj.times.push_back(t);
    traj.N_values.push_back(N);
  }

  traj.monotone = true;
  for (std::size_t i = 1; i < traj.N_values.size(); ++i) {
    if (traj.N_values[i] < traj.N_values[i - 1]) {
      traj.monotone = false;
      break;
    }
  }
  return traj;
}

CosmicScales derived_scales(double N, const Particle& p, const PhysicalConstants& k) {
  if (!(N >= 1.0)) throw std::domain_error("N must be >= 1");
  const double root = std::sqrt(N);
  CosmicScales s;
  s.age = compton_time(p, k) * root;
  s.radius = compton_wavelength(p, k) * root;
  s.mass = N * p.mass;
  s.hubble = k.c / s.radius;
  return s;
}

double pion_hubble_mass(double hubble, const PhysicalConstants& k) {
  if (!(hubble > 0.0)) throw std::domain_error("H must be positive");
  return std::cbrt(k.hbar * k.hbar * hubble / (k.G * k.c));
}

namespace {

AuditRow make_row(std::string name, double ratio, bool structural, std::string note) {
  AuditRow row;
  row.name = std::move(name);
  row.ratio = ratio;
  row.residual_dex = std::log10(ratio);
  row.structural = structural;
  row.pass = std::abs(row.residual_dex) <= 1.0;
  row.note = std::move(note);
  return row;
}

}  // namespace

std::vector<AuditRow> large_number_audit(const AuditInputs& in, const Particle& p,
                                         const PhysicalConstants& k) {
  if (!(in.R > 0.0)) throw std::domain_error("R must be positive");
  if (!(in.N >= 1.0)) throw std::domain_error("N must be >= 1");

  const double root = std::sqrt(in.N);
  const double lambda = compton_wavelength(p, k);
  const double tau = compton_time(p, k);

  std::vector<AuditRow> rows;
  rows.push_back(make_row("eq1_compton_stretch", lambda * root / in.R, true,
                          "lambda_bar sqrt(N) / R"));
  rows.push_back(make_row("radius", lambda * root / in.R, true,
                          "same relation read against the observed radius"));
  if (in.T_obs) {
    rows.push_back(make_row("eq5_age", tau * root / *in.T_obs, true,
                            "tau sqrt(N) / T_obs"));
  }
  if (in.M_obs) {
    rows.push_back(make_row("mass", in.N * p.mass / *in.M_obs, false,
                            "N m / M_obs"));
  }
  rows.push_back(make_row("pion_hubble", pion_hubble_mass(k.c / in.R, k) / p.mass, false,
                          "adopted cube-root form (hbar^2 H / (G c))^(1/3) vs m"));
  return rows;
}

}  // namespace stoclab
