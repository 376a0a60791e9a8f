#include "gft/class_params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gft {

ClassParams::ClassParams(double theta, double gamma) : theta_(theta), gamma_(gamma) {
  if (!std::isfinite(theta) || !(std::abs(theta) < std::numbers::pi / 2)) {
    throw std::invalid_argument("theta must satisfy |theta| < pi/2, got " + std::to_string(theta));
  }
  if (!std::isfinite(gamma) || !(gamma > 0.0)) {
    throw std::invalid_argument("gamma must be positive, got " + std::to_string(gamma));
  }
}

double ClassParams::gamma_cos() const noexcept { return gamma_ * std::cos(theta_); }

std::complex<double> ClassParams::exponent() const noexcept {
  return gamma_cos() * std::polar(1.0, -theta_);
}

std::complex<double> ClassParams::Gamma() const noexcept { return -exponent(); }

double ClassParams::two_minus_Gamma_abs() const noexcept {
  const double c = std::cos(theta_);
  return std::sqrt(4.0 + (gamma_ * gamma_ + 4.0 * gamma_) * c * c);
}

double ClassParams::delta() const noexcept { return gamma_cos() * two_minus_Gamma_abs(); }

}  // namespace gft
