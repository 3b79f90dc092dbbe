#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "stoclab/cosmology.hpp"
#include "stoclab/rng.hpp"

using namespace stoclab;

namespace {
double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("creation rate") {
  CHECK(creation_rate(0.0, 1.0) == 0.0);
  CHECK(creation_rate(1.0, 1.0) == 1.0);
  CHECK(rel_err(creation_rate(1e80, 4.7177924e-24), 2.1196354e63) < 1e-6);
  CHECK_THROWS_AS(creation_rate(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(creation_rate(1.0, 0.0), std::domain_error);
}

TEST_CASE("integrator matches the closed form") {
  CosmologySpec spec;
  spec.N0 = 1.0;
  spec.tau = 1.0;
  spec.t_end = 2.0;
  spec.dt = 0.5;
  const auto traj = integrate_population(spec);
  REQUIRE(traj.times.size() == 5);
  CHECK(traj.N_values.front() == 1.0);
  CHECK(rel_err(traj.N_values.back(), 4.0) < 1e-6);  // (1 + 2/2)^2; ~5e-8 measured

  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double exact = population_closed_form(spec.N0, spec.tau, traj.times[i]);
    CHECK(rel_err(traj.N_values[i], exact) < 1e-6);
  }
  CHECK(traj.monotone);
}

TEST_CASE("long integration stays within 1e-6 of the closed form") {
  CosmologySpec spec;
  spec.N0 = 1.0;
  spec.tau = 1.0;
  spec.t_end = 1e6;
  spec.dt = 1000.0;
  const auto traj = integrate_population(spec);
  CHECK(traj.refined);  // dt far above the early growth timescale
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double exact = population_closed_form(spec.N0, spec.tau, traj.times[i]);
    worst = std::max(worst, std::abs(traj.N_values[i] - exact) / exact);
  }
  CHECK(worst <= 1e-6);
  // strictly increasing for N0 > 0
  for (std::size_t i = 1; i < traj.N_values.size(); ++i) {
    CHECK(traj.N_values[i] > traj.N_values[i - 1]);
  }
}

TEST_CASE("random spec property: closed form tracks the integrator") {
  Philox rng(616, 0);
  for (int trial = 0; trial < 10; ++trial) {
    CosmologySpec spec;
    spec.N0 = 1.0 + rng.uniform() * 1e6;
    spec.tau = std::exp((rng.uniform() - 0.5) * 10.0);
    spec.t_end = rng.uniform() * 1e3 * spec.tau;
    spec.dt = spec.t_end / (10.0 + rng.uniform() * 100.0);
    const auto traj = integrate_population(spec);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      const double exact = population_closed_form(spec.N0, spec.tau, traj.times[i]);
      CHECK(rel_err(traj.N_values[i], exact) < 1e-6);
    }
  }
}

TEST_CASE("N0 = 0 is a fixed point") {
  CosmologySpec spec;
  spec.N0 = 0.0;
  spec.tau = 1.0;
  spec.t_end = 10.0;
  spec.dt = 1.0;
  const auto traj = integrate_population(spec);
  for (const double n : traj.N_values) CHECK(n == 0.0);
}

TEST_CASE("t = 0 returns the initial population only") {
  CosmologySpec spec;
  spec.N0 = 5.0;
  spec.tau = 2.0;
  spec.t_end = 0.0;
  spec.dt = 1.0;
  const auto traj = integrate_population(spec);
  REQUIRE(traj.times.size() == 1);
  CHECK(traj.N_values[0] == 5.0);
}

TEST_CASE("eq5 age is the exact growth time up to the factor 2 - 2/sqrt(N)") {
  const double tau = 3.7;
  for (const double N : {1e4, 1e8, 1e16}) {
    const double t_exact = exact_growth_time(1.0, N, tau);
    const double t_eq5 = tau * std::sqrt(N);
    const double ratio = t_exact / t_eq5;
    CHECK(ratio >= 1.9);
    CHECK(ratio <= 2.0);
  }
  // the integrator reproduces the exact growth time
  CosmologySpec spec;
  spec.N0 = 1.0;
  spec.tau = 1.0;
  spec.t_end = exact_growth_time(1.0, 1e4, 1.0);
  spec.dt = spec.t_end / 64.0;
  const auto traj = integrate_population(spec);
  CHECK(rel_err(traj.N_values.back(), 1e4) < 1e-6);
}

TEST_CASE("derived cosmic scales") {
  const auto table = default_table();
  const auto& k = table.constants;
  const Particle& pion = table.particle("pion");

  const auto s = derived_scales(1e80, pion, k);
  CHECK(rel_err(s.age, 4.7177924e16) < 1e-6);
  CHECK(rel_err(s.radius, 1.4143942e27) < 1e-6);
  CHECK(rel_err(s.mass, 2.488e55) < 1e-12);
  CHECK(rel_err(s.hubble, 2.1196354e-17) < 1e-6);

  // a one-particle universe is a single Compton cell
  const auto one = derived_scales(1.0, pion, k);
  CHECK(one.age == compton_time(pion, k));
  CHECK(one.radius == compton_wavelength(pion, k));
  CHECK(one.mass == pion.mass);

  // forced identities T/tau = R/lambda = sqrt(N)
  for (const double N : {4.0, 1e10, 1e80}) {
    const auto d = derived_scales(N, pion, k);
    CHECK(rel_err(d.age / compton_time(pion, k), std::sqrt(N)) < 1e-14);
    CHECK(rel_err(d.radius / compton_wavelength(pion, k), std::sqrt(N)) < 1e-14);
  }
  CHECK_THROWS_AS(derived_scales(0.5, pion, k), std::domain_error);
}

TEST_CASE("pion-Hubble mass relation") {
  const auto k = cgs_constants();
  const double m = pion_hubble_mass(2.1196354e-17, k);
  CHECK(rel_err(m, 2.2760550e-25) < 1e-6);
  // within one decade of the pion mass
  CHECK(std::abs(std::log10(m / 2.488e-25)) < 1.0);

  // cube-root scaling
  const double base = pion_hubble_mass(1e-18, k);
  CHECK(rel_err(pion_hubble_mass(8e-18, k), 2.0 * base) < 1e-14);

  // inverse identity
  const double m_pi = 2.488e-25;
  const double h = k.G * k.c / (k.hbar * k.hbar) * m_pi * m_pi * m_pi;
  CHECK(rel_err(pion_hubble_mass(h, k), m_pi) < 1e-14);

  CHECK_THROWS_AS(pion_hubble_mass(0.0, k), std::domain_error);
}

TEST_CASE("large-number audit with the cosmic inputs") {
  const auto table = default_table();
  const Particle& pion = table.particle("pion");
  AuditInputs in;
  in.R = 1e28;
  in.N = 1e80;
  in.T_obs = 4e17;
  in.M_obs = 1e56;
  const auto rows = large_number_audit(in, pion, table.constants);
  REQUIRE(rows.size() == 5);

  auto find = [&](const std::string& name) -> const AuditRow& {
    for (const auto& r : rows) {
      if (r.name == name) return r;
    }
    throw std::runtime_error("missing row " + name);
  };

  CHECK(rel_err(find("eq1_compton_stretch").residual_dex, -0.84942954) < 1e-6);
  CHECK(find("eq1_compton_stretch").pass);
  CHECK(find("eq1_compton_stretch").structural);
  CHECK(find("radius").residual_dex == find("eq1_compton_stretch").residual_dex);
  CHECK(rel_err(find("eq5_age").residual_dex, -0.92832116) < 1e-6);
  CHECK(find("eq5_age").pass);
  CHECK(rel_err(find("mass").residual_dex, -0.60414962) < 1e-6);
  CHECK(find("mass").pass);
  CHECK(rel_err(find("pion_hubble").residual_dex, -0.32181080) < 1e-6);
  CHECK(find("pion_hubble").pass);
  CHECK(!find("pion_hubble").structural);
}

TEST_CASE("audit with self-consistent inputs has zero structural residuals") {
  const auto table = default_table();
  const Particle& pion = table.particle("pion");
  const double N = 1e80;
  AuditInputs in;
  in.R = compton_wavelength(pion, table.constants) * std::sqrt(N);
  in.N = N;
  in.T_obs = compton_time(pion, table.constants) * std::sqrt(N);
  const auto rows = large_number_audit(in, pion, table.constants);
  for (const auto& r : rows) {
    if (r.structural) CHECK(std::abs(r.residual_dex) < 1e-12);
  }
}

TEST_CASE("audit flags a broken particle count") {
  const auto table = default_table();
  AuditInputs in;
  in.R = 1e28;
  in.N = 1e60;
  const auto rows = large_number_audit(in, table.particle("pion"), table.constants);
  CHECK(rel_err(rows.front().residual_dex, -10.84942954) < 1e-6);
  CHECK(!rows.front().pass);
}

TEST_CASE("audit omits rows without observables") {
  const auto table = default_table();
  AuditInputs in;
  in.R = 1e28;
  in.N = 1e80;
  const auto rows = large_number_audit(in, table.particle("pion"), table.constants);
  CHECK(rows.size() == 3);  // eq1, radius, pion_hubble
}

TEST_CASE("spec validation") {
  CosmologySpec spec;
  spec.tau = 0.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.tau = 1.0;
  spec.dt = -1.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.dt = 1.0;
  spec.N0 = -2.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}
