#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "stoclab/constants.hpp"

namespace stoclab {

struct WalkSpec {
  std::uint64_t steps = 0;
  double step_length = 1.0;  // cm
  int dim = 1;               // 1, 2 or 3
  std::uint64_t walkers = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct WalkEnsembleResult {
  double rms_displacement = 0.0;  // sqrt(mean r^2), cm
  double stderr_rms = 0.0;        // delta-method standard error of the rms
  bool stderr_defined = false;    // false for walkers < 2
  std::array<double, 3> mean_displacement{};  // ensemble mean per axis
  double mean_square_displacement = 0.0;
  std::uint64_t walkers = 0;
  std::uint64_t seed = 0;
};

// l = R / sqrt(N). Throws std::domain_error for N < 1 or R <= 0.
double rms_stretch(double R, double N);

// End-to-end displacement of one walk of fixed-length isotropic steps; unused
// axes stay zero. Depends only on (spec.seed, walker_index), never on how the
// ensemble is scheduled.
std::array<double, 3> simulate_walk(const WalkSpec& spec, std::uint64_t walker_index);

// All walker displacements in index order.
std::vector<std::array<double, 3>> walk_displacements(const WalkSpec& spec, int threads = 1);

// Ensemble statistics; reduction runs in fixed walker order, so the result is
// bit-identical for any thread count.
WalkEnsembleResult estimate_rms(const WalkSpec& spec, int threads = 1);

// rms_stretch(R, N) / compton_wavelength(p). Near 1 when the system size,
// particle count and Compton scale satisfy l = R/sqrt(N).
double universe_consistency(double R, double N, const Particle& p,
                            const PhysicalConstants& k);

}  // namespace stoclab
