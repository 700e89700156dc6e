#include "locodyn/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace locodyn::fft {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void transform(std::vector<std::complex<double>>& data, bool inverse) {
  const std::size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft: size must be a power of two");

  // bit reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / double(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = data[i + k];
        const std::complex<double> v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }

  if (inverse) {
    for (auto& x : data) x /= double(n);
  }
}

std::vector<std::complex<double>> analytic_signal(const std::vector<double>& signal) {
  const std::size_t n = signal.size();
  const std::size_t m = next_pow2(n);
  std::vector<std::complex<double>> buf(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) buf[i] = signal[i];

  transform(buf, false);
  // keep DC and Nyquist, double positive frequencies, zero negative ones
  for (std::size_t k = 1; k < m / 2; ++k) buf[k] *= 2.0;
  for (std::size_t k = m / 2 + 1; k < m; ++k) buf[k] = 0.0;
  transform(buf, true);

  buf.resize(n);
  return buf;
}

}  // namespace locodyn::fft
