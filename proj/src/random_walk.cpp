#include "stoclab/random_walk.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "stoclab/rng.hpp"

namespace stoclab {

void WalkSpec::validate() const {
  if (!(step_length > 0.0) || !std::isfinite(step_length)) {
    throw std::invalid_argument("step_length must be positive");
  }
  if (dim < 1 || dim > 3) throw std::invalid_argument("dim must be 1, 2 or 3");
  if (walkers < 1) throw std::invalid_argument("walkers must be >= 1");
}

double rms_stretch(double R, double N) {
  if (!(R > 0.0) || !std::isfinite(R)) throw std::domain_error("R must be positive");
  if (!(N >= 1.0)) throw std::domain_error("N must be >= 1");
  return R / std::sqrt(N);
}

namespace {

inline void step_1d(Philox& rng, double l, std::array<double, 3>& r) {
  r[0] += rng.uniform() < 0.5 ? -l : l;
}

// Rejection-sample a direction in the unit disc, then push to the circle.
inline void step_2d(Philox& rng, double l, std::array<double, 3>& r) {
  for (;;) {
    const double u = 2.0 * rng.uniform() - 1.0;
    const double v = 2.0 * rng.uniform() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s <= 1.0) {
      const double inv = l / std::sqrt(s);
      r[0] += u * inv;
      r[1] += v * inv;
      return;
    }
  }
}

// Marsaglia (1972) sphere sampling; no trigonometry in the hot loop.
inline void step_3d(Philox& rng, double l, std::array<double, 3>& r) {
  for (;;) {
    const double u = 2.0 * rng.uniform() - 1.0;
    const double v = 2.0 * rng.uniform() - 1.0;
    const double s = u * u + v * v;
    if (s < 1.0) {
      const double f = 2.0 * std::sqrt(1.0 - s);
      r[0] += l * u * f;
      r[1] += l * v * f;
      r[2] += l * (1.0 - 2.0 * s);
      return;
    }
  }
}

template <typename StepFn>
std::array<double, 3> run_walk(const WalkSpec& spec, std::uint64_t walker, StepFn step) {
  Philox rng(spec.seed, walker);
  std::array<double, 3> r{0.0, 0.0, 0.0};
  for (std::uint64_t i = 0; i < spec.steps; ++i) step(rng, spec.step_length, r);
  return r;
}

}  // namespace

std::array<double, 3> simulate_walk(const WalkSpec& spec, std::uint64_t walker_index) {
  spec.validate();
  if (walker_index >= spec.walkers) {
    throw std::invalid_argument("walker_index out of range");
  }
  switch (spec.dim) {
    case 1: return run_walk(spec, walker_index, step_1d);
    case 2: return run_walk(spec, walker_index, step_2d);
    default: return run_walk(spec, walker_index, step_3d);
  }
}

std::vector<std::array<double, 3>> walk_displacements(const WalkSpec& spec, int threads) {
  spec.validate();
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  std::vector<std::array<double, 3>> out(spec.walkers);
  auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t w = begin; w < end; ++w) out[w] = simulate_walk(spec, w);
  };
  const std::uint64_t n = spec.walkers;
  const std::uint64_t nt = std::min<std::uint64_t>(std::uint64_t(threads), n);
  if (nt <= 1) {
    worker(0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::uint64_t i = 0; i < nt; ++i) {
      const std::uint64_t begin = n * i / nt;
      const std::uint64_t end = n * (i + 1) / nt;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  return out;
}

WalkEnsembleResult estimate_rms(const WalkSpec& spec, int threads) {
  const auto disp = walk_displacements(spec, threads);
  const std::uint64_t m = spec.walkers;

  WalkEnsembleResult res;
  res.walkers = m;
  res.seed = spec.seed;

  // Fixed-order reduction keeps the result bit-identical across thread counts.
  std::array<double, 3> sum{0.0, 0.0, 0.0};
  double sum_r2 = 0.0;
  for (const auto& d : disp) {
    for (int a = 0; a < 3; ++a) sum[a] += d[a];
    sum_r2 += d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
  }
  for (int a = 0; a < 3; ++a) res.mean_displacement[a] = sum[a] / double(m);
  res.mean_square_displacement = sum_r2 / double(m);
  res.rms_displacement = std::sqrt(res.mean_square_displacement);

  if (m >= 2) {
    double ss = 0.0;
    for (const auto& d : disp) {
      const double r2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
      const double delta = r2 - res.mean_square_displacement;
      ss += delta * delta;
    }
    const double var_r2 = ss / double(m - 1);
    const double se_r2 = std::sqrt(var_r2 / double(m));
    res.stderr_rms = res.rms_displacement > 0.0 ? se_r2 / (2.0 * res.rms_displacement) : 0.0;
    res.stderr_defined = true;
  }
  return res;
}

double universe_consistency(double R, double N, const Particle& p,
                            const PhysicalConstants& k) {
  return rms_stretch(R, N) / compton_wavelength(p, k);
}

}  // namespace stoclab
