#include "vflab/field.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/FFT>

#include "vflab/errors.hpp"

namespace vflab {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

}  // namespace

ComplexField::ComplexField(std::vector<Complex> values_in, double x0_in,
                           double dx_in, bool periodic_in)
    : values(std::move(values_in)), x0(x0_in), dx(dx_in),
      periodic(periodic_in) {
  if (!is_power_of_two(values.size())) {
    throw NonUniformGrid("field size " + std::to_string(values.size()) +
                         " is not a power of two");
  }
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    throw NonUniformGrid("grid spacing must be positive and finite");
  }
}

std::vector<double> fft_wavenumbers(std::size_t n, double domain_length) {
  if (!is_power_of_two(n)) {
    throw NonUniformGrid("wavenumber grid size " + std::to_string(n) +
                         " is not a power of two");
  }
  if (!(domain_length > 0.0)) {
    throw DomainError("domain length must be positive");
  }
  std::vector<double> k(n);
  const double dk = 2.0 * std::numbers::pi / domain_length;
  const std::size_t half = n / 2;
  for (std::size_t m = 0; m < half; ++m) {
    k[m] = dk * static_cast<double>(m);
  }
  for (std::size_t m = half; m < n; ++m) {
    k[m] = dk * (static_cast<double>(m) - static_cast<double>(n));
  }
  return k;
}

void fft_forward(const std::vector<Complex>& in, std::vector<Complex>& out) {
  fft_engine().fwd(out, in);
}

void fft_inverse(const std::vector<Complex>& in, std::vector<Complex>& out) {
  fft_engine().inv(out, in);
}

std::vector<Complex> spectral_derivative(const ComplexField& field) {
  if (!field.periodic) {
    throw NonUniformGrid("spectral derivative needs a periodic field");
  }
  const std::size_t n = field.size();
  std::vector<Complex> hat;
  fft_forward(field.values, hat);
  const std::vector<double> k = fft_wavenumbers(n, field.length());
  const Complex i_unit(0.0, 1.0);
  for (std::size_t m = 0; m < n; ++m) {
    hat[m] *= i_unit * k[m];
  }
  hat[n / 2] = Complex(0.0, 0.0);  // Nyquist mode has no signed wavenumber
  std::vector<Complex> out;
  fft_inverse(hat, out);
  return out;
}

}  // namespace vflab
