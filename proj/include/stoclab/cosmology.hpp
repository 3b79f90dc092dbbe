#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stoclab/constants.hpp"

namespace stoclab {

struct CosmologySpec {
  double N0 = 1.0;   // initial particle count (N0 = 0 is a fixed point)
  double tau = 1.0;  // s
  double t_end = 0.0;
  double dt = 1.0;   // sampling step

  void validate() const;
};

struct CosmologyTrajectory {
  std::vector<double> times;
  std::vector<double> N_values;
  bool monotone = false;       // N non-decreasing over every adjacent pair
  bool refined = false;        // sampling step was internally subdivided
  std::uint64_t substeps = 0;  // total internal RK4 steps taken
};

// dN/dt = sqrt(N)/tau.
double creation_rate(double N, double tau);

// Exact solution (sqrt(N0) + t/(2 tau))^2; test oracle for the integrator.
double population_closed_form(double N0, double tau, double t);

// Exact time to grow from N0 to N: 2 tau (sqrt(N) - sqrt(N0)).
double exact_growth_time(double N0, double N, double tau);

// Fixed-step classical RK4 on dN/dt = sqrt(N)/tau, sampled every spec.dt.
// Steps larger than the local growth timescale are subdivided automatically
// and the trajectory is flagged as refined.
CosmologyTrajectory integrate_population(const CosmologySpec& spec);

struct CosmicScales {
  double age = 0.0;     // s,  tau sqrt(N)
  double radius = 0.0;  // cm, lambda_bar sqrt(N)
  double mass = 0.0;    // g,  N m
  double hubble = 0.0;  // s^-1, c / radius
};

CosmicScales derived_scales(double N, const Particle& p, const PhysicalConstants& k);

// Cube-root mass scale (hbar^2 H / (G c))^(1/3) associated with a Hubble rate.
double pion_hubble_mass(double hubble, const PhysicalConstants& k);

struct AuditRow {
  std::string name;
  double ratio = 0.0;
  double residual_dex = 0.0;  // log10(ratio)
  bool structural = false;    // follows from the scheme itself, not external data
  bool pass = false;          // |residual_dex| <= 1
  std::string note;
};

struct AuditInputs {
  double R = 0.0;  // cm
  double N = 0.0;
  std::optional<double> T_obs;  // s
  std::optional<double> M_obs;  // g
};

// Order-of-magnitude audit of the large-number relations; rows whose
// observable is absent are omitted.
std::vector<AuditRow> large_number_audit(const AuditInputs& in, const Particle& p,
                                         const PhysicalConstants& k);

}  // namespace stoclab
