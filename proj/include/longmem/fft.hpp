#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace longmem::fft {

std::size_t next_pow2(std::size_t n);

// In-place radix-2 transform; a.size() must be a power of two.
// inverse=true applies the 1/N scaling.
void transform(std::vector<std::complex<double>>& a, bool inverse);

// Full DFT X_k = sum_t x_t exp(-2*pi*i*t*k/n) for arbitrary n
// (radix-2 when n is a power of two, Bluestein otherwise).
std::vector<std::complex<double>> dft_real(const std::vector<double>& x);

// Linear convolution, length a.size() + b.size() - 1.
std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b);

} // namespace longmem::fft
