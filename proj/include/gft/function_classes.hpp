#pragma once

#include <vector>

#include "gft/analytic_map.hpp"
#include "gft/class_params.hpp"
#include "gft/schwarz_function.hpp"

namespace gft {

/// The half-plane Re(e^{iθ} w) < (1 + γ/2) cosθ that 1 + z f''/f' must stay in.
struct HalfPlaneSpec {
  Complex normal;  // e^{iθ}
  double offset;   // (1 + γ/2) cosθ

  static HalfPlaneSpec of(const ClassParams& p);

  /// offset - Re(normal · w); positive strictly inside.
  double margin(Complex w) const noexcept { return offset - (normal * w).real(); }
};

/// Evaluation grid of the membership test.
struct MembershipGrid {
  std::vector<double> radii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  int angles = 256;
};

struct MembershipResult {
  bool member = false;
  /// Minimum over the grid of offset - Re(e^{iθ}(1 + z f''/f')).
  double margin = 0.0;
  Complex worst{};
};

AnalyticMap make_extremal_f1(const ClassParams& p);

/// g(z) = (1 - e^{-iθ}(γ cosθ + e^{iθ}) z)/(1 - z), defined for z ≠ 1.
Complex subordination_target(const ClassParams& p, Complex z);

/// Member of the class with 1 + z f''/f' = g(ω(z)), built by formal series
/// composition: P = Γ ω/(z(1-ω)), f' = exp(∫P), f = ∫f'. The closed form of P
/// is retained. Throws std::invalid_argument for an Automorphism.
AnalyticMap member_from_schwarz(const ClassParams& p, const SchwarzSpec& w, std::size_t order = kDefaultOrder);

/// Strict half-plane test over the grid.
MembershipResult membership_test(const AnalyticMap& f, const ClassParams& p, const MembershipGrid& grid = {});

/// Smallest 1 - |ω|² accepted as sense-preserving when building harmonic members.
inline constexpr double kDilatationGapFloor = 1e-12;

/// h + ḡ with g' = ω h', g(0) = 0. Throws std::invalid_argument if h fails the
/// membership test and JacobianError if the Jacobian is not positive on the grid.
HarmonicMap make_harmonic_member(const ClassParams& p, AnalyticMap h, const SchwarzSpec& dilatation,
                                 const MembershipGrid& grid = {});

/// The sharpness witness f₂ = h₂ + ḡ₂ with h₂ = f₁ and ω(z) = (a - z)/(1 - a z).
HarmonicMap make_f2_witness(const ClassParams& p, double a);

// Closed-form probes.
AnalyticMap identity_probe();
/// z/(1 - z).
AnalyticMap mobius_probe();
/// Normalized Möbius map z/(1 + βz), |β| ≤ 1.
AnalyticMap mobius_probe(Complex beta);
/// z/(1 - z)².
AnalyticMap koebe_probe();
/// T∘f with T(w) = w/(1 + βw); same Schwarzian as f.
AnalyticMap post_compose_mobius(const AnalyticMap& f, Complex beta);

}  // namespace gft
