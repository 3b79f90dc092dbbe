#pragma once

#include <optional>

#include "stoclab/constants.hpp"

namespace stoclab {

struct KNConfig {
  double mass = 0.0;        // M, g
  double charge = 0.0;      // Q, esu (sign irrelevant)
  double spin_param = 0.0;  // a, cm (sign irrelevant)

  void validate() const;
};

enum class KNKind { black_hole, extremal, naked_singularity };

const char* to_string(KNKind kind);

// The literal charge term G^2 Q^2 / c^8 sometimes quoted for the complex
// radius is not a length squared in Gaussian units; the standard form
// G Q^2 / c^4 is the default and the literal variant is kept behind this
// switch for comparison.
enum class ChargeTerm { standard, literal };

struct KNClassification {
  KNKind kind = KNKind::black_hole;
  double r_plus = 0.0;            // outer horizon, or real part when naked
  std::optional<double> r_minus;  // inner horizon (horizons only)
  std::optional<double> b;        // imaginary part (naked case only)
};

// D = (GM/c^2)^2 - a^2 - G Q^2/c^4 (cm^2). D > 0 means horizons exist.
// Evaluated in max-scaled form so it neither underflows nor overflows over
// M in [1e-30, 1e35] g.
double kn_discriminant(const KNConfig& cfg, const PhysicalConstants& k,
                       ChargeTerm term = ChargeTerm::standard);

// D > 0: r+- = GM/c^2 +- sqrt(D). |D| below 1e-12 of the dominant scale:
// extremal, r+ = r- = GM/c^2. D < 0: naked singularity with b = sqrt(-D).
KNClassification kn_classify(const KNConfig& cfg, const PhysicalConstants& k,
                             ChargeTerm term = ChargeTerm::standard);

// a = s hbar / (M c) for a particle of spin s.
KNConfig particle_kn_config(const Particle& p, const PhysicalConstants& k);

// b(electron) / (lambda_bar_e / 2): 1 when the naked-singularity imaginary
// part sits at half the electron Compton wavelength.
double electron_kn_check(const ConstantsTable& table);

}  // namespace stoclab
