#include "stoclab/kerr_newman.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stoclab {

void KNConfig::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw std::domain_error("M must be positive");
  if (!std::isfinite(charge) || !std::isfinite(spin_param)) {
    throw std::domain_error("Q and a must be finite");
  }
}

const char* to_string(KNKind kind) {
  switch (kind) {
    case KNKind::black_hole: return "black_hole";
    case KNKind::extremal: return "extremal";
    default: return "naked_singularity";
  }
}

namespace {

// The three length scales entering the discriminant: rg = GM/c^2, the charge
// length (sqrt(G)|Q|/c^2 standard, G|Q|/c^4 literal) and |a|.
struct LengthTerms {
  double rg;
  double q;
  double a;
};

LengthTerms length_terms(const KNConfig& cfg, const PhysicalConstants& k, ChargeTerm term) {
  const double c2 = k.c * k.c;
  LengthTerms t;
  t.rg = k.G * cfg.mass / c2;
  t.q = term == ChargeTerm::standard ? std::sqrt(k.G) * std::abs(cfg.charge) / c2
                                     : k.G * std::abs(cfg.charge) / (c2 * c2);
  t.a = std::abs(cfg.spin_param);
  return t;
}

// (rg^2 - a^2 - q^2) / s^2 with s the dominant scale. Factoring s out first
// keeps the squares representable at electron scales and makes the degenerate
// limits exact (a = q = 0 gives exactly 1; rg = q = 0 gives exactly -1).
double scaled_discriminant(const LengthTerms& t, double s) {
  const double rgs = t.rg / s;
  const double as = t.a / s;
  const double qs = t.q / s;
  return rgs * rgs - as * as - qs * qs;
}

}  // namespace

double kn_discriminant(const KNConfig& cfg, const PhysicalConstants& k, ChargeTerm term) {
  cfg.validate();
  const LengthTerms t = length_terms(cfg, k, term);
  const double s = std::max({t.rg, t.q, t.a});
  if (s == 0.0) return 0.0;
  return s * s * scaled_discriminant(t, s);
}

KNClassification kn_classify(const KNConfig& cfg, const PhysicalConstants& k, ChargeTerm term) {
  cfg.validate();
  const LengthTerms t = length_terms(cfg, k, term);
  const double s = std::max({t.rg, t.q, t.a});

  KNClassification out;
  if (s == 0.0) {
    out.kind = KNKind::extremal;
    out.r_plus = t.rg;
    out.r_minus = t.rg;
    return out;
  }

  const double disc = scaled_discriminant(t, s);
  const double D = s * s * disc;
  const double tol = 1e-12 * std::max(t.rg * t.rg, t.a * t.a);

  if (std::abs(D) <= tol) {
    out.kind = KNKind::extremal;
    out.r_plus = t.rg;
    out.r_minus = t.rg;
  } else if (D > 0.0) {
    const double root = s * std::sqrt(disc);
    out.kind = KNKind::black_hole;
    out.r_plus = t.rg + root;
    out.r_minus = std::max(t.rg - root, 0.0);
  } else {
    out.kind = KNKind::naked_singularity;
    out.r_plus = t.rg;
    out.b = s * std::sqrt(-disc);
  }
  return out;
}

KNConfig particle_kn_config(const Particle& p, const PhysicalConstants& k) {
  if (!(p.mass > 0.0)) throw std::domain_error("particle mass must be positive");
  KNConfig cfg;
  cfg.mass = p.mass;
  cfg.charge = p.charge;
  cfg.spin_param = p.spin * k.hbar / (p.mass * k.c);
  return cfg;
}

double electron_kn_check(const ConstantsTable& table) {
  const Particle& e = table.particle("electron");
  const auto cls = kn_classify(particle_kn_config(e, table.constants), table.constants);
  const double b = cls.b.value_or(0.0);
  return b / (0.5 * compton_wavelength(e, table.constants));
}

}  // namespace stoclab
