#include "stoclab/rng.hpp"

#include <cmath>

namespace stoclab {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t ctr[4], const std::uint32_t key[2]) {
  const std::uint64_t p0 = std::uint64_t(kMul0) * ctr[0];
  const std::uint64_t p1 = std::uint64_t(kMul1) * ctr[2];
  const std::uint32_t n0 = std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0];
  const std::uint32_t n1 = std::uint32_t(p1);
  const std::uint32_t n2 = std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1];
  const std::uint32_t n3 = std::uint32_t(p0);
  ctr[0] = n0;
  ctr[1] = n1;
  ctr[2] = n2;
  ctr[3] = n3;
}

// (0, 1) strictly: the offset keeps Box-Muller's log argument away from zero.
inline double to_unit_double(std::uint64_t bits) {
  return (double(bits >> 11) + 0.5) * 0x1p-53;
}

}  // namespace

Philox::Philox(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

std::array<std::uint32_t, 4> Philox::block(std::uint64_t seed, std::uint64_t stream,
                                           std::uint64_t index) {
  std::uint32_t ctr[4] = {std::uint32_t(index), std::uint32_t(index >> 32),
                          std::uint32_t(stream), std::uint32_t(stream >> 32)};
  std::uint32_t key[2] = {std::uint32_t(seed), std::uint32_t(seed >> 32)};
  for (int r = 0; r < 9; ++r) {
    philox_round(ctr, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  philox_round(ctr, key);
  return {ctr[0], ctr[1], ctr[2], ctr[3]};
}

void Philox::refill() {
  // Independent counters advance through the rounds in lockstep, so the
  // per-round multiply chains overlap instead of serializing. Four blocks is
  // the sweet spot before register pressure starts spilling the state.
  std::uint32_t ctr[kBatch][4];
  for (unsigned b = 0; b < kBatch; ++b) {
    const std::uint64_t index = next_block_ + b;
    ctr[b][0] = std::uint32_t(index);
    ctr[b][1] = std::uint32_t(index >> 32);
    ctr[b][2] = std::uint32_t(stream_);
    ctr[b][3] = std::uint32_t(stream_ >> 32);
  }
  std::uint32_t key[2] = {std::uint32_t(seed_), std::uint32_t(seed_ >> 32)};
  for (int r = 0; r < 10; ++r) {
    for (unsigned b = 0; b < kBatch; ++b) philox_round(ctr[b], key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  for (unsigned b = 0; b < kBatch; ++b) {
    const std::uint64_t lo = std::uint64_t(ctr[b][0]) | (std::uint64_t(ctr[b][1]) << 32);
    const std::uint64_t hi = std::uint64_t(ctr[b][2]) | (std::uint64_t(ctr[b][3]) << 32);
    buffer_[2 * b] = to_unit_double(lo);
    buffer_[2 * b + 1] = to_unit_double(hi);
  }
  next_block_ += kBatch;
  pos_ = 0;
}

}  // namespace stoclab
