#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace stoclab {

// Physical constants in CGS-Gaussian units, 4-significant-figure CODATA/PDG
// values (sources in docs/constants.md). Fields are plain data and every
// derived scale is computed on demand, so overriding a value propagates
// consistently; nothing is cached.
struct PhysicalConstants {
  double hbar = 1.055e-27;  // erg s
  double c = 2.998e10;      // cm/s
  double G = 6.674e-8;      // cm^3 g^-1 s^-2
  double k_B = 1.381e-16;   // erg/K
  double e = 4.803e-10;     // esu

  void validate() const;  // throws std::domain_error on a non-positive field
};

PhysicalConstants cgs_constants();

// hbar = c = G = k_B = e = 1. Used by the SDE and lattice modules, which are
// badly conditioned at CGS magnitudes.
PhysicalConstants natural_units();

struct Particle {
  std::string name;
  double mass = 0.0;    // g
  double charge = 0.0;  // esu
  double spin = 0.0;    // units of hbar
};

struct ConstantsTable {
  std::string version = "codata2018-pdg2024-4sf";
  PhysicalConstants constants;
  std::vector<Particle> particles;

  bool has_particle(std::string_view name) const;
  const Particle& particle(std::string_view name) const;  // throws std::out_of_range
};

// Built-in table: electron, pion (charged), proton.
ConstantsTable default_table();

// Reduced Compton wavelength hbar/(m c); reduced=false gives h/(m c).
double compton_wavelength(const Particle& p, const PhysicalConstants& k,
                          bool reduced = true);

// tau = hbar/(m c^2), identical to compton_wavelength / c.
double compton_time(const Particle& p, const PhysicalConstants& k);

// sqrt(hbar^2 / (m k_B T)). Equals the reduced Compton wavelength when
// k_B T = m c^2.
double thermal_wavelength(const Particle& p, double temperature,
                          const PhysicalConstants& k);

// Shortest round-trip decimal form: parse_double(format_double(x)) == x
// bit for bit.
std::string format_double(double x);
double parse_double(std::string_view text);

// Plain-text `key = value` config overriding the default table. Keys are
// hbar, c, G, k_B, e and particle.<name>.{mass,charge,spin}; unknown keys are
// rejected. New particle names create table entries. '#' starts a comment.
ConstantsTable load_table(std::istream& in);
ConstantsTable load_table_file(const std::string& path);
void save_table(const ConstantsTable& table, std::ostream& out);
std::string table_to_text(const ConstantsTable& table);

}  // namespace stoclab
