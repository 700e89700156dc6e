#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace locodyn::fft {

std::size_t next_pow2(std::size_t n);

// In-place radix-2 Cooley-Tukey. Size must be a power of two.
void transform(std::vector<std::complex<double>>& data, bool inverse);

// Analytic signal of a real input via the spectral (FFT) Hilbert transform.
// The input is zero-padded to the next power of two internally; the first
// `signal.size()` samples of the analytic signal are returned.
std::vector<std::complex<double>> analytic_signal(const std::vector<double>& signal);

}  // namespace locodyn::fft
