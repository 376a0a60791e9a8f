#include "gft/bounds.hpp"

#include <cfloat>
#include <stdexcept>

namespace gft {

namespace {
// Rounding allowance at criterion boundaries (2cos(π/3) == 1 + 2^-52).
constexpr double kBoundaryUlps = 4.0 * DBL_EPSILON;
}  // namespace

double delta(const ClassParams& p) { return p.delta(); }

double th1_pointwise_bound(const ClassParams& p, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("pointwise bound needs 0 <= r < 1");
  return p.delta() / (2.0 * (1.0 - r) * (1.0 - r));
}

double th2_norm_bound(const ClassParams& p) { return 2.0 * p.delta(); }

double th3_pre_norm_bound(const ClassParams& p) { return 1.0 + 2.0 * p.gamma_cos(); }

double analytic_part_pre_bound(const ClassParams& p) { return 2.0 * p.gamma_cos(); }

double th4_harmonic_schwarzian_bound(const ClassParams& p, bool dilatation_is_z) {
  return 2.0 * p.delta() + 2.0 * p.gamma_cos() + (dilatation_is_z ? 1.5 : 5.5);
}

BoundReport becker_criterion(const ClassParams& p) {
  const double v = 2.0 * p.gamma_cos();
  return {"becker", v, p, v <= 1.0 + kBoundaryUlps};
}

BoundReport nehari_criterion(const ClassParams& p) {
  const double d = p.delta();
  return {"nehari", d, p, d >= 0.0 && d < 1.0 - kBoundaryUlps};
}

double qc_extension_K(const ClassParams& p) {
  const double d = p.delta();
  if (!(d < 1.0 - kBoundaryUlps)) throw std::domain_error("quasiconformal extension needs delta < 1");
  return (1.0 + d) / (1.0 - d);
}

double solve_gamma_max(double theta, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  auto f = [theta](double g) { return ClassParams(theta, g).delta() - 1.0; };
  double lo = 0.0;
  double hi = 1.0;
  while (f(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    // δ is strictly increasing in γ; mid > 0 always.
    if (f(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace gft
