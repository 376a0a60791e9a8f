#include "gft/schwarzian.hpp"

#include <cmath>
#include <sstream>

namespace gft {

namespace {

// 1 - |ω|², rejecting points where the harmonic map stops being sense-preserving.
double dilatation_gap(const OmegaJet& w, DiskPoint z) {
  const double gap = 1.0 - std::norm(w.w);
  if (!(gap > 0.0)) {
    std::ostringstream os;
    os << "non-positive Jacobian at z = " << z.z() << " (|omega| = " << std::abs(w.w) << ")";
    throw JacobianError(os.str());
  }
  return gap;
}

}  // namespace

Complex pre_schwarzian(const AnalyticMap& f, DiskPoint z) { return f.log_derivative(z).P; }

Complex schwarzian(const AnalyticMap& f, DiskPoint z) {
  const LogDerivative d = f.log_derivative(z);
  return d.dP - 0.5 * d.P * d.P;
}

Complex harmonic_pre_schwarzian(const HarmonicMap& F, DiskPoint z) {
  const LogDerivative h = F.h().log_derivative(z);
  const OmegaJet w = F.omega(z);
  const double gap = dilatation_gap(w, z);
  return h.P - std::conj(w.w) * w.d1 / gap;
}

Complex harmonic_schwarzian(const HarmonicMap& F, DiskPoint z) {
  const LogDerivative h = F.h().log_derivative(z);
  const Complex S_h = h.dP - 0.5 * h.P * h.P;
  const OmegaJet w = F.omega(z);
  const double gap = dilatation_gap(w, z);
  const Complex wb = std::conj(w.w);
  const Complex t = w.d1 * wb / gap;
  return S_h + wb / gap * (h.P * w.d1 - w.d2) - 1.5 * t * t;
}

double harmonic_jacobian(const HarmonicMap& F, DiskPoint z) {
  const Jet j = F.h().jet(z);
  return std::norm(j.d1) * (1.0 - std::norm(F.omega(z).w));
}

}  // namespace gft
