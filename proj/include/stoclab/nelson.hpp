#pragma once

#include <cstdint>
#include <vector>

#include "stoclab/constants.hpp"
#include "stoclab/rng.hpp"

namespace stoclab {

// How a quoted diffusion constant is to be read: paper means nu = hbar/m,
// nelson means nu = hbar/2m. The SDE itself always runs at the Nelson value,
// which is the one that reproduces |psi|^2; see DiffusionSpec::sde_nu.
enum class DiffusionConvention { paper, nelson };

struct DiffusionSpec {
  double nu = 0.5;  // cm^2/s, in the stated convention
  DiffusionConvention convention = DiffusionConvention::nelson;
  double dt = 1e-2;    // s
  double t_end = 1.0;  // s
  std::uint64_t walkers = 1;
  std::uint64_t seed = 0;

  double sde_nu() const;  // diffusion actually used by the integrator
  void validate() const;
};

struct QuantumModel {
  enum class Kind { free_gaussian_packet, harmonic_ground_state };

  Kind kind = Kind::harmonic_ground_state;
  double sigma0 = 1.0;  // cm, initial |psi|^2 standard deviation (packet)
  double omega = 1.0;   // s^-1 (oscillator)
  double mass = 1.0;    // g (1 in natural units)
  double hbar = 1.0;    // erg s (1 in natural units)

  static QuantumModel free_packet(double sigma0, double mass = 1.0, double hbar = 1.0);
  static QuantumModel harmonic(double omega, double mass = 1.0, double hbar = 1.0);
  void validate() const;
};

struct WalkerEnsemble {
  std::vector<double> positions;  // cm
  double time = 0.0;              // s
  std::uint64_t seed = 0;
};

// nu = hbar/m (paper) or hbar/2m (nelson).
double diffusion_constant(const Particle& p, const PhysicalConstants& k,
                          DiffusionConvention conv);

// |dx| = sqrt(nu dt), the Brownian increment scale.
double increment_scale(double nu, double dt);

// Forward drift b = dS/dx / m + (hbar/2m) d/dx ln rho of the built-in models:
// -omega x for the oscillator ground state, x beta (beta t - 1)/(1 + beta^2 t^2)
// with beta = hbar/(2 m sigma0^2) for the spreading packet.
double drift_field(const QuantumModel& model, double x, double t);

double model_density(const QuantumModel& model, double x, double t);
double model_cdf(const QuantumModel& model, double x, double t);
double model_variance(const QuantumModel& model, double t);

// Draw from |psi(x, 0)|^2.
double sample_initial(const QuantumModel& model, Philox& rng);

// x + b dt + sqrt(2 nu dt) z. Exposed so the frozen limit (b = nu = 0) is
// directly testable.
double euler_maruyama_step(double x, double drift, double nu, double dt, double normal);

// Euler-Maruyama evolution of spec.walkers paths to spec.t_end; walker count
// is conserved. Rejects dt too large for the drift (coefficient * dt >= 0.5).
WalkerEnsemble evolve_ensemble(const QuantumModel& model, const DiffusionSpec& spec,
                               int threads = 1);

struct Histogram {
  double lo = 0.0;
  double width = 0.0;
  std::vector<double> mass;  // probability mass per bin; sums to 1
};

// Freedman-Diaconis binning by default; a positive override fixes the width.
// Throws std::invalid_argument when all samples coincide (zero IQR).
Histogram histogram_fd(const std::vector<double>& samples, double bin_width_override = 0.0);

// Sum of |a - b| bin masses; bins must agree.
double histogram_l1(const Histogram& a, const Histogram& b);

struct DensityReport {
  double l1 = 0.0;  // integral |rho_emp - rho_exact| in [0, 2]
  double ks = 0.0;  // sup_x |F_emp(x) - F_exact(x)|
  std::size_t bins = 0;
  double bin_width = 0.0;
  bool degenerate = false;  // all samples equal; l1/ks are NaN
};

// Distance between the empirical ensemble density and |psi(., ensemble.time)|^2.
DensityReport density_distance(const WalkerEnsemble& ensemble, const QuantumModel& model,
                               double bin_width_override = 0.0);

}  // namespace stoclab
