#include "stoclab/nelson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace stoclab {

double DiffusionSpec::sde_nu() const {
  return convention == DiffusionConvention::paper ? 0.5 * nu : nu;
}

void DiffusionSpec::validate() const {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw std::invalid_argument("nu must be >= 0");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("t_end must be >= 0");
  if (walkers < 1) throw std::invalid_argument("walkers must be >= 1");
}

QuantumModel QuantumModel::free_packet(double sigma0, double mass, double hbar) {
  QuantumModel m;
  m.kind = Kind::free_gaussian_packet;
  m.sigma0 = sigma0;
  m.mass = mass;
  m.hbar = hbar;
  m.validate();
  return m;
}

QuantumModel QuantumModel::harmonic(double omega, double mass, double hbar) {
  QuantumModel m;
  m.kind = Kind::harmonic_ground_state;
  m.omega = omega;
  m.mass = mass;
  m.hbar = hbar;
  m.validate();
  return m;
}

void QuantumModel::validate() const {
  if (!(mass > 0.0) || !(hbar > 0.0)) throw std::invalid_argument("mass and hbar must be positive");
  if (kind == Kind::free_gaussian_packet && !(sigma0 > 0.0)) {
    throw std::invalid_argument("sigma0 must be positive");
  }
  if (kind == Kind::harmonic_ground_state && !(omega > 0.0)) {
    throw std::invalid_argument("omega must be positive");
  }
}

double diffusion_constant(const Particle& p, const PhysicalConstants& k,
                          DiffusionConvention conv) {
  if (!(p.mass > 0.0)) throw std::domain_error("particle mass must be positive");
  const double paper = k.hbar / p.mass;
  return conv == DiffusionConvention::paper ? paper : 0.5 * paper;
}

double increment_scale(double nu, double dt) {
  if (!(nu > 0.0) || !(dt > 0.0)) throw std::domain_error("nu and dt must be positive");
  return std::sqrt(nu * dt);
}

namespace {

void require_time(double t) {
  if (t < 0.0 || !std::isfinite(t)) throw std::domain_error("t must be >= 0");
}

// beta = hbar / (2 m sigma0^2); packet variance is sigma0^2 (1 + beta^2 t^2).
inline double packet_beta(const QuantumModel& m) {
  return m.hbar / (2.0 * m.mass * m.sigma0 * m.sigma0);
}

}  // namespace

double drift_field(const QuantumModel& model, double x, double t) {
  model.validate();
  require_time(t);
  if (model.kind == QuantumModel::Kind::harmonic_ground_state) {
    return -model.omega * x;
  }
  const double beta = packet_beta(model);
  const double bt = beta * t;
  return x * beta * (bt - 1.0) / (1.0 + bt * bt);
}

double model_variance(const QuantumModel& model, double t) {
  model.validate();
  require_time(t);
  if (model.kind == QuantumModel::Kind::harmonic_ground_state) {
    return model.hbar / (2.0 * model.mass * model.omega);
  }
  const double bt = packet_beta(model) * t;
  return model.sigma0 * model.sigma0 * (1.0 + bt * bt);
}

double model_density(const QuantumModel& model, double x, double t) {
  const double var = model_variance(model, t);
  return std::exp(-0.5 * x * x / var) / std::sqrt(2.0 * M_PI * var);
}

double model_cdf(const QuantumModel& model, double x, double t) {
  const double sigma = std::sqrt(model_variance(model, t));
  return 0.5 * std::erfc(-x / (sigma * M_SQRT2));
}

double sample_initial(const QuantumModel& model, Philox& rng) {
  return rng.gaussian() * std::sqrt(model_variance(model, 0.0));
}

double euler_maruyama_step(double x, double drift, double nu, double dt, double normal) {
  return x + drift * dt + std::sqrt(2.0 * nu * dt) * normal;
}

WalkerEnsemble evolve_ensemble(const QuantumModel& model, const DiffusionSpec& spec,
                               int threads) {
  model.validate();
  spec.validate();
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");

  // Stability guard: the stiffest drift coefficient must resolve the step.
  const double stiffness = model.kind == QuantumModel::Kind::harmonic_ground_state
                               ? model.omega
                               : packet_beta(model);
  if (stiffness * spec.dt >= 0.5) {
    throw std::invalid_argument(
        "dt too large for the model drift: coefficient * dt = " +
        std::to_string(stiffness * spec.dt) + " >= 0.5; reduce dt");
  }

  const std::uint64_t n_steps =
      spec.t_end > 0.0 ? std::uint64_t(std::ceil(spec.t_end / spec.dt - 1e-9)) : 0;
  const double nu_sde = spec.sde_nu();

  WalkerEnsemble out;
  out.positions.resize(spec.walkers);
  out.time = spec.t_end;
  out.seed = spec.seed;

  auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t w = begin; w < end; ++w) {
      Philox rng(spec.seed, w);
      double x = sample_initial(model, rng);
      double t = 0.0;
      for (std::uint64_t i = 0; i < n_steps; ++i) {
        const double h = std::min(spec.dt, spec.t_end - t);
        x = euler_maruyama_step(x, drift_field(model, x, t), nu_sde, h, rng.gaussian());
        t += h;
      }
      out.positions[w] = x;
    }
  };

  const std::uint64_t n = spec.walkers;
  const std::uint64_t nt = std::min<std::uint64_t>(std::uint64_t(threads), n);
  if (nt <= 1) {
    worker(0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::uint64_t i = 0; i < nt; ++i) {
      pool.emplace_back(worker, n * i / nt, n * (i + 1) / nt);
    }
    for (auto& t : pool) t.join();
  }
  return out;
}

Histogram histogram_fd(const std::vector<double>& samples, double bin_width_override) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  std::vector<double> sorted(samples);
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front();
  const double hi = sorted.back();
  if (!(hi > lo)) throw std::invalid_argument("degenerate sample: all values equal");

  double width = bin_width_override;
  if (!(width > 0.0)) {
    // Freedman-Diaconis: 2 IQR n^(-1/3).
    const auto quantile = [&](double q) {
      const double pos = q * double(sorted.size() - 1);
      const std::size_t i = std::size_t(pos);
      const double frac = pos - double(i);
      return i + 1 < sorted.size() ? sorted[i] * (1.0 - frac) + sorted[i + 1] * frac
                                   : sorted[i];
    };
    const double iqr = quantile(0.75) - quantile(0.25);
    if (!(iqr > 0.0)) throw std::invalid_argument("degenerate sample: zero IQR");
    width = 2.0 * iqr / std::cbrt(double(sorted.size()));
  }

  const std::size_t bins =
      std::clamp<std::size_t>(std::size_t(std::ceil((hi - lo) / width)), 1, 1 << 16);
  Histogram h;
  h.lo = lo;
  h.width = (hi - lo) / double(bins);
  h.mass.assign(bins, 0.0);
  const double unit = 1.0 / double(samples.size());
  for (const double x : samples) {
    auto b = std::size_t((x - lo) / h.width);
    if (b >= bins) b = bins - 1;
    h.mass[b] += unit;
  }
  return h;
}

double histogram_l1(const Histogram& a, const Histogram& b) {
  if (a.mass.size() != b.mass.size() || a.lo != b.lo || a.width != b.width) {
    throw std::invalid_argument("histograms are not on the same bins");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.mass.size(); ++i) sum += std::abs(a.mass[i] - b.mass[i]);
  return sum;
}

DensityReport density_distance(const WalkerEnsemble& ensemble, const QuantumModel& model,
                               double bin_width_override) {
  if (ensemble.positions.empty()) throw std::invalid_argument("empty ensemble");

  DensityReport rep;
  Histogram h;
  try {
    h = histogram_fd(ensemble.positions, bin_width_override);
  } catch (const std::invalid_argument&) {
    rep.degenerate = true;
    rep.l1 = std::numeric_limits<double>::quiet_NaN();
    rep.ks = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  rep.bins = h.mass.size();
  rep.bin_width = h.width;

  // L1 in probability-mass form: compare per-bin masses, then add the exact
  // mass lying outside the sampled range (the empirical mass there is zero).
  const double t = ensemble.time;
  double l1 = 0.0;
  double prev_cdf = model_cdf(model, h.lo, t);
  const double lo_tail = prev_cdf;
  for (std::size_t ibin = 0; ibin < h.mass.size(); ++ibin) {
    const double edge = h.lo + h.width * double(ibin + 1);
    const double cdf = model_cdf(model, edge, t);
    l1 += std::abs(h.mass[ibin] - (cdf - prev_cdf));
    prev_cdf = cdf;
  }
  rep.l1 = l1 + lo_tail + (1.0 - prev_cdf);

  std::vector<double> sorted(ensemble.positions);
  std::sort(sorted.begin(), sorted.end());
  const double n = double(sorted.size());
  double ks = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = model_cdf(model, sorted[i], t);
    ks = std::max(ks, std::max(f - double(i) / n, double(i + 1) / n - f));
  }
  rep.ks = ks;
  return rep;
}

}  // namespace stoclab
