#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "gft/class_params.hpp"
#include "gft/schwarz_function.hpp"
#include "gft/series.hpp"

namespace gft {

/// f and its first three derivatives at a point.
struct Jet {
  Complex f;
  Complex d1;
  Complex d2;
  Complex d3;
};

/// P = f''/f' and its derivative P'.
struct LogDerivative {
  Complex P;
  Complex dP;
};

/// f' vanished (or overflowed) at an evaluation point.
class LocalUnivalenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// f₁(z) = (1 - (1-z)^{c+1})/(c+1) with c = γ e^{-iθ} cosθ.
struct ExtremalF1 {
  ClassParams params;
};

/// f''/f' = Γ ω(z)/(z(1-ω(z))) for a Schwarz function ω, in closed form.
struct SchwarzLogDerivative {
  Complex Gamma;
  SchwarzSpec omega;

  LogDerivative eval(Complex z) const;
};

/// A map given by the Taylor series of f'. When built from a Schwarz
/// function the log-derivative is also known in closed form, which makes
/// the pre-Schwarzian and Schwarzian available up to the boundary.
struct SeriesBacked {
  PowerSeries fprime;
  std::optional<SchwarzLogDerivative> closed_log_derivative;
};

/// A named map with a hand-written closed-form jet.
struct ClosedFormProbe {
  std::string name;
  std::function<Jet(Complex)> eval;
};

/// An analytic map of the disk normalized by f(0) = 0, f'(0) = 1.
class AnalyticMap {
 public:
  using Representation = std::variant<ExtremalF1, SeriesBacked, ClosedFormProbe>;

  /// Throws std::invalid_argument if the normalization f(0)=0, f'(0)=1 fails.
  explicit AnalyticMap(Representation rep);

  const Representation& representation() const noexcept { return rep_; }

  /// f, f', f'', f'''. Series-backed maps throw TruncationError past the cap.
  Jet jet(DiskPoint z) const;

  /// P_f and P_f'. Uses closed forms when the representation has them,
  /// otherwise the jet; throws LocalUnivalenceError if f' = 0.
  LogDerivative log_derivative(DiskPoint z) const;

  /// Radius up to which log_derivative is trusted.
  double log_derivative_radius() const noexcept;
  /// True when log_derivative never touches a truncated series.
  bool closed_form() const noexcept;

  /// Taylor series of f', when the representation provides one.
  std::optional<PowerSeries> fprime_series(std::size_t order) const;

  std::string describe() const;

 private:
  Representation rep_;
  // Cached derivatives of fprime for SeriesBacked.
  std::optional<PowerSeries> f_, f2_, f3_;
};

/// f = h + ḡ with dilatation ω = g'/h'.
class HarmonicMap {
 public:
  /// g(0) = 0 holds by construction (g = ∫ ω h').
  HarmonicMap(AnalyticMap h, SchwarzSpec dilatation);

  const AnalyticMap& h() const noexcept { return h_; }
  const SchwarzSpec& dilatation() const noexcept { return omega_; }

  OmegaJet omega(DiskPoint z) const { return omega_.jet(z.z()); }

  /// Taylor series of the co-analytic part g = ∫ ω h'.
  PowerSeries co_analytic_series(std::size_t order = kDefaultOrder) const;

 private:
  AnalyticMap h_;
  SchwarzSpec omega_;
};

}  // namespace gft
