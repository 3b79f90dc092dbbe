#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "stoclab/dirac.hpp"

using namespace stoclab;

namespace {
double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

double l2_distance(const SpinorField& a, const SpinorField& b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    sum += std::norm(a.up[j] - b.up[j]) + std::norm(a.down[j] - b.down[j]);
  }
  return std::sqrt(sum * a.dx);
}

std::vector<double> linspace(double t0, double t1, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = t0 + (t1 - t0) * double(i) / double(n);
  return out;
}
}  // namespace

TEST_CASE("packet construction and norm") {
  const auto f = gaussian_packet(256, 0.25, 0.0, 2.0, 0.0);
  CHECK(rel_err(f.norm(), 1.0) < 1e-12);
  CHECK(f.size() == 256);
  CHECK(f.x(0) == -32.0);
  CHECK(std::abs(mean_position(f)) < 1e-10);
}

TEST_CASE("spectral evolution: identity, unitarity, eigenstates") {
  const auto f = gaussian_packet(256, 0.25, 0.0, 2.0, 0.5);

  // t = 0 is the identity
  const auto same = spectral_evolve(f, 1.0, 0.0);
  CHECK(l2_distance(f, same) == 0.0);

  // norm conservation for a generic field and time
  for (double t : {0.7, 3.0, 11.5}) {
    const auto g = spectral_evolve(f, 1.0, t);
    CHECK(std::abs(g.norm() - 1.0) < 1e-12);
  }

  // a positive-energy plane-wave mode only picks up the phase e^{-iEt}
  const std::size_t n = 64;
  const double dx = 0.5;
  const double k = 2.0 * M_PI * 3.0 / (double(n) * dx);
  const double mass = 1.0;
  const double E = std::hypot(k, mass);
  double v0 = E + k, v1 = mass;
  const double vn = std::hypot(v0, v1);
  v0 /= vn;
  v1 /= vn;
  SpinorField mode;
  mode.dx = dx;
  mode.x0 = -0.5 * dx * double(n);
  mode.up.resize(n);
  mode.down.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto phase = std::polar(1.0, k * mode.x(j));
    mode.up[j] = v0 * phase;
    mode.down[j] = v1 * phase;
  }
  mode.normalize();

  const double t = 2.5;
  const auto evolved = spectral_evolve(mode, mass, t);
  const auto expect = std::polar(1.0, -E * t);
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    worst = std::max(worst, std::abs(evolved.up[j] - expect * mode.up[j]));
    worst = std::max(worst, std::abs(evolved.down[j] - expect * mode.down[j]));
    worst = std::max(worst, std::abs(std::abs(evolved.up[j]) - std::abs(mode.up[j])));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("checkerboard: zero steps, massless translation") {
  const auto f = gaussian_packet(128, 0.25, 0.0, 1.0, 0.0);
  LatticeSpec lat;
  lat.dx = 0.25;
  lat.points = 128;
  lat.steps = 0;
  const auto same = checkerboard_propagate(f, lat, 1.0);
  CHECK(l2_distance(f, same) == 0.0);

  // m = 0: components translate rigidly at +-c, bit for bit
  lat.steps = 40;
  const auto moved = checkerboard_propagate(f, lat, 0.0);
  const std::size_t n = f.size();
  for (std::size_t j = 0; j < n; ++j) {
    CHECK(moved.up[j] == f.up[(j + n - 40) % n]);
    CHECK(moved.down[j] == f.down[(j + 40) % n]);
  }
}

TEST_CASE("checkerboard converges first order to the spectral oracle") {
  const double t = 2.0;
  std::vector<double> errors;
  for (const double dx : {0.125, 0.0625, 0.03125}) {
    const auto n = std::size_t(std::lround(32.0 / dx));
    const auto f0 = gaussian_packet(n, dx, 0.0, 1.0, 0.0);
    LatticeSpec lat;
    lat.dx = dx;
    lat.points = n;
    lat.steps = std::uint64_t(std::lround(t / dx));
    const auto cb = checkerboard_propagate(f0, lat, 1.0);
    const auto sp = spectral_evolve(f0, 1.0, t);
    errors.push_back(l2_distance(cb, sp));
  }
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    const double ratio = errors[i] / errors[i + 1];
    CHECK(ratio > 1.6);
    CHECK(ratio < 2.4);
  }
}

TEST_CASE("spectral weight at the grid Nyquist is flagged as aliasing") {
  // packet narrower than the lattice spacing spills past the Nyquist momentum
  const auto sharp = gaussian_packet(128, 0.5, 0.0, 0.1, 0.0);
  EvolveDiagnostics diag;
  spectral_evolve(sharp, 1.0, 0.5, {}, &diag);
  CHECK(diag.aliasing);
  CHECK(diag.nyquist_fraction > 1e-6);

  const auto smooth = gaussian_packet(128, 0.5, 0.0, 4.0, 0.0);
  EvolveDiagnostics diag2;
  spectral_evolve(smooth, 1.0, 0.5, {}, &diag2);
  CHECK(!diag2.aliasing);
}

TEST_CASE("support reaching the boundary is flagged") {
  // massless right-mover launched near the edge
  const auto f = gaussian_packet(128, 0.25, 12.0, 0.5, 0.0);
  LatticeSpec lat;
  lat.dx = 0.25;
  lat.points = 128;
  lat.steps = 24;  // carries the packet onto the boundary cells
  EvolveDiagnostics diag;
  checkerboard_propagate(f, lat, 0.0, {}, &diag);
  CHECK(diag.boundary_contact);
  CHECK(diag.max_edge_fraction > 1e-10);

  // a centered packet never touches the edge
  const auto g = gaussian_packet(128, 0.25, 0.0, 1.0, 0.0);
  LatticeSpec lat2 = lat;
  lat2.steps = 8;
  EvolveDiagnostics diag2;
  checkerboard_propagate(g, lat2, 1.0, {}, &diag2);
  CHECK(!diag2.boundary_contact);
}

TEST_CASE("positive-band packets drift linearly with the group velocity") {
  const auto f = project_positive_band(gaussian_packet(256, 0.25, 0.0, 4.0, 0.4), 1.0);
  CHECK(rel_err(f.norm(), 1.0) < 1e-12);

  const auto times = linspace(0.0, 12.0, 25);
  const auto series = mean_position_series(f, 1.0, times);

  // two-point slope agrees with the k-space expectation <c^2 p / E>
  const double slope = (series.back() - series.front()) / (times.back() - times.front());

  // short-time probe of d<x>/dt must match the long-range slope exactly
  // (the positive band has no oscillatory term to bend the line)
  const auto probe = mean_position_series(f, 1.0, {0.0, 1e-3});
  const double expect = (probe[1] - probe[0]) / 1e-3;
  CHECK(std::abs(slope - expect) < 1e-8);

  // every interior point lies on the same line (no oscillatory term)
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double fit = series.front() + slope * (times[i] - times.front());
    CHECK(std::abs(series[i] - fit) < 1e-8);
  }
}

TEST_CASE("parity-symmetric packet keeps a constant mean position") {
  const auto f = gaussian_packet(256, 0.25, 0.0, 2.0, 0.0, 1.0, 1.0);
  const auto times = linspace(0.0, 10.0, 21);
  const auto series = mean_position_series(f, 1.0, times);
  for (const double x : series) CHECK(std::abs(x - series.front()) < 1e-10);
}

TEST_CASE("rest packet oscillates at 2 m c^2 / hbar within the Compton scale") {
  const double mass = 1.0;
  const auto f = gaussian_packet(256, 0.25, 0.0, 4.0, 0.0);  // spinor (1, 0)

  const double window = 15.0 * M_PI;  // 15 periods of omega = 2
  const std::size_t samples = 480;
  const auto times = linspace(0.0, window, samples);
  const auto series = mean_position_series(f, mass, times);
  const auto rep = zitter_analyze(series, times);

  const double bin = 2.0 * M_PI / window;
  CHECK(std::abs(rep.dominant_frequency - 2.0 * mass) <= bin + 1e-12);
  CHECK(rep.oscillation_amplitude <= 0.5 * 1.1);  // lambda_bar / 2 bound
  CHECK(rep.oscillation_amplitude >= 0.4);

  // projecting out the negative band kills the oscillation
  const auto proj = project_positive_band(f, mass);
  const auto flat = mean_position_series(proj, mass, times);
  const auto rep2 = zitter_analyze(flat, times);
  CHECK(rep2.oscillation_amplitude < 1e-3 * 0.5);
}

TEST_CASE("zitter_analyze on synthetic series") {
  // Least-squares detrending of drift + sinusoid carries an intrinsic slope
  // bias of -12A/(omega L^2); the long window keeps it below 1e-4 here.
  const std::size_t n = 2048;
  const double dt = M_PI / 32.0;
  std::vector<double> times(n), series(n);
  for (std::size_t i = 0; i < n; ++i) {
    times[i] = dt * double(i);
    series[i] = 0.3 + 0.02 * times[i] + 0.37 * std::sin(2.0 * times[i]);
  }
  const auto rep = zitter_analyze(series, times);
  CHECK(rel_err(rep.dominant_frequency, 2.0) < 1e-12);  // integer bin
  CHECK(rel_err(rep.oscillation_amplitude, 0.37) < 0.03);
  CHECK(std::abs(rep.drift_velocity - 0.02) < 2e-4);
}

TEST_CASE("zitter_analyze rejects unusable sampling") {
  // fewer than 10 periods in the window
  {
    const std::size_t n = 64;
    const double dt = M_PI / 32.0;
    std::vector<double> times(n), series(n);
    for (std::size_t i = 0; i < n; ++i) {
      times[i] = dt * double(i);
      series[i] = std::sin(2.0 * times[i]);
    }
    CHECK_THROWS_AS(zitter_analyze(series, times), std::invalid_argument);
  }
  // sample rate below 8x the dominant frequency
  {
    const std::size_t n = 128;
    const double dt = 0.5;
    std::vector<double> times(n), series(n);
    for (std::size_t i = 0; i < n; ++i) {
      times[i] = dt * double(i);
      series[i] = std::sin(2.0 * times[i]);
    }
    CHECK_THROWS_AS(zitter_analyze(series, times), std::invalid_argument);
  }
  // malformed input
  CHECK_THROWS_AS(zitter_analyze({1.0, 2.0}, {0.0, 1.0}), std::invalid_argument);
  {
    std::vector<double> times{0, 1, 2, 2.5, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
    std::vector<double> series(16, 0.0);
    CHECK_THROWS_AS(zitter_analyze(series, times), std::invalid_argument);
  }
}

TEST_CASE("single-momentum position decomposition") {
  // at rest: no drift, amplitude lambda_bar/2, frequency 2 m c^2 / hbar
  const auto rest = eq2_mean_position(0.0, 1.0, 3.0);
  CHECK(rest.classical == 0.0);
  CHECK(rel_err(rest.amplitude, 0.5) < 1e-14);
  CHECK(rel_err(rest.frequency, 2.0) < 1e-14);

  // electron in CGS units
  const QUnits cgs{1.055e-27, 2.998e10};
  const auto e = eq2_mean_position(0.0, 9.109e-28, 0.0, cgs);
  CHECK(rel_err(e.amplitude, 1.9316131e-11) < 1e-6);

  // ultrarelativistic limit: amplitude dies, drift speed approaches c
  const auto fast = eq2_mean_position(1000.0, 1.0, 1.0);
  CHECK(fast.amplitude < 1e-5);
  CHECK(std::abs(fast.classical / 1.0 - 1.0) < 1e-5);

  CHECK_THROWS_AS(eq2_mean_position(1.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("representation round-trip preserves the field and its norm") {
  const auto f = gaussian_packet(128, 0.25, 1.5, 2.0, 0.3);
  const auto k = to_momentum(f);
  CHECK(k.rep == Representation::momentum);
  CHECK(std::abs(k.norm() - f.norm()) < 1e-13);
  const auto back = to_position(k);
  CHECK(back.rep == Representation::position);
  CHECK(l2_distance(f, back) < 1e-13);
  CHECK_THROWS_AS(to_position(f), std::invalid_argument);  // already position
}

TEST_CASE("lattice validation") {
  LatticeSpec lat;
  lat.dx = 0.0;
  lat.points = 64;
  CHECK_THROWS_AS(lat.validate(), std::invalid_argument);
  lat.dx = 0.5;
  lat.points = 63;
  CHECK_THROWS_AS(lat.validate(), std::invalid_argument);
  lat.points = 64;
  CHECK(lat.dt({1.0, 2.0}) == 0.25);
  CHECK(lat.extent() == 32.0);

  // spectral ops insist on power-of-two grids
  const auto f = gaussian_packet(96, 0.25, 0.0, 1.0, 0.0);
  CHECK_THROWS_AS(spectral_evolve(f, 1.0, 1.0), std::invalid_argument);
}
