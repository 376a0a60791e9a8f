#pragma once

#include <string>

#include "gft/class_params.hpp"

namespace gft {

struct BoundReport {
  std::string name;
  double value = 0.0;
  ClassParams params;
  bool applicable = false;
};

/// δ(γ,θ) = γ cosθ √(4 + (γ² + 4γ)cos²θ).
double delta(const ClassParams& p);

/// Pointwise Schwarzian bound δ/(2(1-r)²). Throws std::domain_error unless 0 ≤ r < 1.
double th1_pointwise_bound(const ClassParams& p, double r);

/// Sharp Schwarzian norm bound 2δ.
double th2_norm_bound(const ClassParams& p);

/// Harmonic pre-Schwarzian norm bound 1 + 2γ cosθ (sharp at θ = 0).
double th3_pre_norm_bound(const ClassParams& p);

/// Pre-Schwarzian norm bound 2γ cosθ of the analytic part (sharp via f₁).
double analytic_part_pre_bound(const ClassParams& p);

/// Harmonic Schwarzian norm bound 2δ + 2γ cosθ + 11/2, or + 3/2 when the
/// dilatation is z. Not known to be sharp.
double th4_harmonic_schwarzian_bound(const ClassParams& p, bool dilatation_is_z);

/// sup(1-|z|²)|z P_f| ≤ 2γ cosθ; univalent when 2γ cosθ ≤ 1.
BoundReport becker_criterion(const ClassParams& p);

/// ‖S_f‖ ≤ 2δ ≤ 2 when δ ∈ [0, 1). Reports value = δ.
BoundReport nehari_criterion(const ClassParams& p);

/// K = (1 + δ)/(1 - δ). Throws std::domain_error when δ ≥ 1.
double qc_extension_K(const ClassParams& p);

inline constexpr double kGammaMaxTol = 1e-9;

/// The γ solving δ(γ,θ) = 1, by bisection on a doubling bracket from [0, 1].
double solve_gamma_max(double theta, double tol = kGammaMaxTol);

}  // namespace gft
