#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace stoclab {

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror & Shaw, SC'11).
// A 128-bit output block is a pure function of (seed, stream, block index), so
// every walker owns an independent substream keyed by its index and results
// cannot depend on thread scheduling or partitioning.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream);

  // Stateless core: the raw block for a given index.
  static std::array<std::uint32_t, 4> block(std::uint64_t seed, std::uint64_t stream,
                                            std::uint64_t index);

  // 53-bit uniform on the open interval (0, 1). Inline fast path; the hot
  // loops consume billions of draws.
  double uniform() {
    if (pos_ == buffer_.size()) refill();
    return buffer_[pos_++];
  }

  // Standard normal via Box-Muller; consumes two uniforms.
  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  static constexpr const char* name() { return "philox4x32-10"; }

 private:
  static constexpr unsigned kBatch = 4;  // blocks generated per refill

  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t next_block_ = 0;
  std::array<double, 2 * kBatch> buffer_{};
  unsigned pos_ = 2 * kBatch;
};

}  // namespace stoclab
