#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace vflab {

using Complex = std::complex<double>;

/// Complex-valued field phi(x) on a uniform grid x_j = x0 + j*dx.
/// Node count must be a power of two (spectral transforms); `periodic`
/// declares whether the grid wraps at x0 + n*dx (required by the spectral
/// steps; fields sampled from open curves carry periodic = false and can only
/// be used as data).
struct ComplexField {
  ComplexField() = default;
  ComplexField(std::vector<Complex> values_in, double x0_in, double dx_in,
               bool periodic_in = true);

  std::vector<Complex> values;
  double x0 = 0.0;
  double dx = 1.0;
  bool periodic = true;

  std::size_t size() const { return values.size(); }
  double length() const { return dx * static_cast<double>(values.size()); }
  double grid(std::size_t j) const {
    return x0 + dx * static_cast<double>(j);
  }
};

/// Physical wavenumbers in FFT ordering: 2*pi*m/L with m = 0..n/2-1,
/// -n/2..-1.
std::vector<double> fft_wavenumbers(std::size_t n, double domain_length);

/// Unnormalized forward DFT / normalized (1/n) inverse DFT.
void fft_forward(const std::vector<Complex>& in, std::vector<Complex>& out);
void fft_inverse(const std::vector<Complex>& in, std::vector<Complex>& out);

/// Spectral first derivative of a periodic field (Nyquist mode dropped).
std::vector<Complex> spectral_derivative(const ComplexField& field);

}  // namespace vflab
