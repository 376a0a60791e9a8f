#pragma once

#include <functional>

#include "gft/class_params.hpp"
#include "gft/schwarz_function.hpp"
#include "gft/series.hpp"

namespace gft {

// Auxiliary function of the pointwise Schwarzian estimate, with A = |2 - Γ|:
//   F₁(r,t) = (2r² + (A(1-r²) - 2)t²) / (2r²(1-r²)(1-t)²),  0 < t ≤ r < 1.
double F1(const ClassParams& p, double r, double t);
double F1_partial_t(const ClassParams& p, double r, double t);

struct F1Report {
  double min_partial = 0.0;
  double argmin_r = 0.0;
  double argmin_t = 0.0;
  /// max |F₁(r,r) - A/(2(1-r)²)| / (A/(2(1-r)²)) over the sampled r.
  double max_diagonal_rel_error = 0.0;
};

/// ∂F₁/∂t over r_i = i/(steps+1), t_j = r_i·j/steps, i, j = 1..steps.
/// Throws std::invalid_argument if steps < 10.
F1Report verify_F1_monotone(const ClassParams& p, int steps);

/// F₂(r) = γ(1 + r) + (r - a)/(1 - a r) and F₂'(r) = γ + (1 - a²)/(1 - a r)².
double F2(double gamma, double a, double r);
double F2_prime(double gamma, double a, double r);

struct F2Report {
  double min_derivative = 0.0;
  double r_max = 0.0;
  double value_at_r_max = 0.0;
  /// lim_{r→1} F₂ = 2γ + 1.
  double limit = 0.0;
};

/// F₂' on `steps` uniform radii in [0, 1 - 2^{-14}].
F2Report verify_F2_increasing(double gamma, double a, int steps);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
};

/// |ω'(z₀) - ω(z₀)/z₀| ≤ (|z₀|² - |ω(z₀)|²)/(|z₀|(1 - |z₀|²)) for ω(0) = 0.
/// Throws std::invalid_argument for an Automorphism or z₀ = 0.
InequalityCheck dieudonne_check(const SchwarzSpec& w, DiskPoint z0);

/// An analytic self-map of the closed disk given by its derivatives and
/// its Taylor coefficients.
struct BoundedFunction {
  std::function<Complex(Complex, int)> derivative;
  PowerSeries taylor;

  static BoundedFunction of(const SchwarzSpec& w, std::size_t order = 8);
  static BoundedFunction constant(Complex c, std::size_t order = 8);
};

struct Lemma2Report {
  InequalityCheck pointwise;  // |f⁽ⁿ⁾(z)|/n! vs (1-|f(z)|²)/((1-|z|)^{n-1}(1-|z|²))
  InequalityCheck coefficient;  // |a_n| vs 1 - |a₀|²
};

/// Throws std::invalid_argument if n < 1 or n exceeds the series order.
Lemma2Report lemma2_check(const BoundedFunction& f, DiskPoint z, int n);

}  // namespace gft
