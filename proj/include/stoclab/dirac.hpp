#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace stoclab {

// Unit choices for the 1+1D Dirac lattice; defaults are natural units.
struct QUnits {
  double hbar = 1.0;
  double c = 1.0;
};

// Light-cone lattice: c dt = dx, so each step translates the chiral
// components by exactly one cell.
struct LatticeSpec {
  double dx = 1.0;         // cm
  std::size_t points = 0;  // grid size, even; power of two for spectral ops
  std::uint64_t steps = 0;

  double dt(const QUnits& u) const { return dx / u.c; }
  double extent() const { return dx * double(points); }
  void validate() const;
};

enum class Representation { position, momentum };

// Two-component spinor on a uniform grid. Representation chosen so the upper
// component moves right and the lower moves left at c; the mass couples them.
struct SpinorField {
  double dx = 1.0;
  double x0 = 0.0;  // position of grid index 0
  std::vector<std::complex<double>> up, down;
  double time = 0.0;
  Representation rep = Representation::position;

  std::size_t size() const { return up.size(); }
  double x(std::size_t j) const { return x0 + dx * double(j); }
  double norm() const;  // sqrt(sum (|up|^2 + |down|^2) dx)
  void normalize();
};

// Normalized Gaussian packet exp(-(x-center)^2/(4 sigma^2) + i p0 x / hbar)
// carrying the given spinor weights; |psi|^2 has standard deviation sigma.
SpinorField gaussian_packet(std::size_t points, double dx, double center, double sigma,
                            double p0, std::complex<double> up_weight = 1.0,
                            std::complex<double> down_weight = 0.0, const QUnits& u = {});

struct EvolveDiagnostics {
  bool boundary_contact = false;   // probability reached the outermost cells
  double max_edge_fraction = 0.0;  // worst per-step norm fraction in the edge cells
  bool aliasing = false;           // spectral weight near the grid Nyquist
  double nyquist_fraction = 0.0;
};

// Checkerboard path sum in its transfer-matrix form: per step, chiral shift by
// one cell followed by the mass mixing cos(theta) I - i sin(theta) sigma_x with
// theta = m c^2 dt / hbar, the per-step reversal weight. Periodic boundary;
// support reaching the edge cells is flagged as reflection contamination.
SpinorField checkerboard_propagate(const SpinorField& psi0, const LatticeSpec& lat,
                                   double mass, const QUnits& u = {},
                                   EvolveDiagnostics* diag = nullptr);

// Exact evolution: per momentum mode the 2x2 rotation generated by
// H(k) = c hbar k sigma_z + m c^2 sigma_x, eigenvalues +-sqrt(c^2 hbar^2 k^2 + m^2 c^4).
// Norm is conserved to a few epsilon. Grid must be a power of two.
SpinorField spectral_evolve(const SpinorField& psi0, double mass, double t,
                            const QUnits& u = {}, EvolveDiagnostics* diag = nullptr);

// Keep only the positive-energy band of every momentum mode, renormalized.
SpinorField project_positive_band(const SpinorField& psi0, double mass, const QUnits& u = {});

// Unitary changes of representation (power-of-two grids). Momentum amplitudes
// are stored in FFT index order, k_j = 2 pi j~/(n dx) with j~ wrapped to
// (-n/2, n/2]; the norm is preserved.
SpinorField to_momentum(const SpinorField& psi);
SpinorField to_position(const SpinorField& psi);

double mean_position(const SpinorField& psi);

// <x>(t) from spectral evolution of psi0 at each requested time.
std::vector<double> mean_position_series(const SpinorField& psi0, double mass,
                                         const std::vector<double>& times,
                                         const QUnits& u = {});

struct ZitterReport {
  double dominant_frequency = 0.0;    // angular, s^-1
  double oscillation_amplitude = 0.0; // cm, half peak-to-peak after detrending
  double drift_velocity = 0.0;        // cm/s, slope of the removed linear trend
};

// Detrend, DFT, report the dominant line. A significant peak must be covered
// by >= 10 periods and sampled >= 8x per period or the series is rejected.
ZitterReport zitter_analyze(const std::vector<double>& series,
                            const std::vector<double>& times);

struct Eq2MeanPosition {
  double classical = 0.0;  // c^2 p t / E
  double amplitude = 0.0;  // hbar c m c^2 / (2 E^2); lambda_bar/2 at rest
  double frequency = 0.0;  // 2 E / hbar (angular)
};

// Single-momentum decomposition of the Dirac position coordinate into the
// classical drift and the oscillatory (band-interference) term.
Eq2MeanPosition eq2_mean_position(double p, double mass, double t, const QUnits& u = {});

}  // namespace stoclab
