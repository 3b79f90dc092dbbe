#include "stoclab/constants.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace stoclab {

void PhysicalConstants::validate() const {
  const double values[] = {hbar, c, G, k_B, e};
  const char* names[] = {"hbar", "c", "G", "k_B", "e"};
  for (int i = 0; i < 5; ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw std::domain_error(std::string("constant ") + names[i] +
                              " must be positive and finite");
    }
  }
}

PhysicalConstants cgs_constants() { return PhysicalConstants{}; }

PhysicalConstants natural_units() { return PhysicalConstants{1.0, 1.0, 1.0, 1.0, 1.0}; }

bool ConstantsTable::has_particle(std::string_view name) const {
  for (const auto& p : particles) {
    if (p.name == name) return true;
  }
  return false;
}

const Particle& ConstantsTable::particle(std::string_view name) const {
  for (const auto& p : particles) {
    if (p.name == name) return p;
  }
  throw std::out_of_range("unknown particle: " + std::string(name));
}

ConstantsTable default_table() {
  ConstantsTable t;
  t.constants = cgs_constants();
  t.particles = {
      {"electron", 9.109e-28, -4.803e-10, 0.5},
      {"pion", 2.488e-25, 4.803e-10, 0.0},
      {"proton", 1.673e-24, 4.803e-10, 0.5},
  };
  return t;
}

namespace {

void require_positive_mass(const Particle& p) {
  if (!(p.mass > 0.0) || !std::isfinite(p.mass)) {
    throw std::domain_error("particle mass must be positive: " + p.name);
  }
}

}  // namespace

double compton_wavelength(const Particle& p, const PhysicalConstants& k, bool reduced) {
  require_positive_mass(p);
  const double reduced_value = k.hbar / (p.mass * k.c);
  return reduced ? reduced_value : 2.0 * M_PI * reduced_value;
}

double compton_time(const Particle& p, const PhysicalConstants& k) {
  return compton_wavelength(p, k) / k.c;
}

double thermal_wavelength(const Particle& p, double temperature, const PhysicalConstants& k) {
  require_positive_mass(p);
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw std::domain_error("temperature must be positive");
  }
  return std::sqrt(k.hbar * k.hbar / (p.mass * k.k_B * temperature));
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Particle& particle_entry(ConstantsTable& t, std::string_view name) {
  for (auto& p : t.particles) {
    if (p.name == name) return p;
  }
  t.particles.push_back(Particle{std::string(name), 0.0, 0.0, 0.0});
  return t.particles.back();
}

void apply_override(ConstantsTable& t, std::string_view key, double value) {
  if (key == "hbar") { t.constants.hbar = value; return; }
  if (key == "c") { t.constants.c = value; return; }
  if (key == "G") { t.constants.G = value; return; }
  if (key == "k_B") { t.constants.k_B = value; return; }
  if (key == "e") { t.constants.e = value; return; }
  constexpr std::string_view prefix = "particle.";
  if (key.substr(0, prefix.size()) == prefix) {
    const auto rest = key.substr(prefix.size());
    const auto dot = rest.rfind('.');
    if (dot != std::string_view::npos && dot > 0) {
      const auto name = rest.substr(0, dot);
      const auto field = rest.substr(dot + 1);
      Particle& p = particle_entry(t, name);
      if (field == "mass") { p.mass = value; return; }
      if (field == "charge") { p.charge = value; return; }
      if (field == "spin") { p.spin = value; return; }
    }
  }
  throw std::invalid_argument("unknown config key: '" + std::string(key) + "'");
}

}  // namespace

ConstantsTable load_table(std::istream& in) {
  ConstantsTable t = default_table();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
    }
    const auto key = trim(s.substr(0, eq));
    const auto value = trim(s.substr(eq + 1));
    apply_override(t, key, parse_double(value));
  }
  t.constants.validate();
  for (const auto& p : t.particles) require_positive_mass(p);
  return t;
}

ConstantsTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open constants config: " + path);
  return load_table(in);
}

void save_table(const ConstantsTable& table, std::ostream& out) {
  out << "# stoclab constants table (" << table.version << ")\n";
  out << "hbar = " << format_double(table.constants.hbar) << "\n";
  out << "c = " << format_double(table.constants.c) << "\n";
  out << "G = " << format_double(table.constants.G) << "\n";
  out << "k_B = " << format_double(table.constants.k_B) << "\n";
  out << "e = " << format_double(table.constants.e) << "\n";
  for (const auto& p : table.particles) {
    out << "particle." << p.name << ".mass = " << format_double(p.mass) << "\n";
    out << "particle." << p.name << ".charge = " << format_double(p.charge) << "\n";
    out << "particle." << p.name << ".spin = " << format_double(p.spin) << "\n";
  }
}

std::string table_to_text(const ConstantsTable& table) {
  std::ostringstream out;
  save_table(table, out);
  return out.str();
}

}  // namespace stoclab
