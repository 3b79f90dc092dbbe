#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace stoclab::detail {

bool is_pow2(std::size_t n);

// In-place radix-2 FFT; size must be a power of two. Forward kernel is
// e^{-2 pi i jk/n}; the inverse applies 1/n. Twiddles are computed directly
// per index, keeping round-trip norm drift at the few-epsilon level.
void fft(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace stoclab::detail
