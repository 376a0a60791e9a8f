#pragma once

#include <complex>

namespace gft {

/// Parameters (θ, γ) of the half-plane class, |θ| < π/2, γ > 0.
class ClassParams {
 public:
  /// Throws std::invalid_argument outside the admissible range.
  ClassParams(double theta, double gamma);

  double theta() const noexcept { return theta_; }
  double gamma() const noexcept { return gamma_; }

  /// γ·cosθ, the scale shared by every bound.
  double gamma_cos() const noexcept;
  /// γ e^{-iθ} cosθ, the exponent with f₁' = (1-z)^c. Equals -Gamma().
  std::complex<double> exponent() const noexcept;
  /// Γ(γ,θ) = -γ cosθ e^{-iθ}.
  std::complex<double> Gamma() const noexcept;
  /// √(4 + (γ² + 4γ)cos²θ), which equals |2 - Γ|.
  double two_minus_Gamma_abs() const noexcept;
  /// δ(γ,θ) = γ cosθ √(4 + (γ² + 4γ)cos²θ).
  double delta() const noexcept;

 private:
  double theta_;
  double gamma_;
};

}  // namespace gft
