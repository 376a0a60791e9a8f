#pragma once

#include "gft/analytic_map.hpp"

namespace gft {

/// The Jacobian |h'|²(1 - |ω|²) is not positive at an evaluation point.
class JacobianError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// P_f = f''/f'.
Complex pre_schwarzian(const AnalyticMap& f, DiskPoint z);

/// S_f = P_f' - P_f²/2, i.e. f'''/f' - (3/2)(f''/f')².
Complex schwarzian(const AnalyticMap& f, DiskPoint z);

/// P_f = h''/h' - ω̄ω'/(1 - |ω|²).
Complex harmonic_pre_schwarzian(const HarmonicMap& F, DiskPoint z);

/// S_f = S_h + ω̄/(1-|ω|²)·(h''/h'·ω' - ω'') - (3/2)(ω'ω̄/(1-|ω|²))².
Complex harmonic_schwarzian(const HarmonicMap& F, DiskPoint z);

/// J_f = |h'|²(1 - |ω|²). Not sign-checked.
double harmonic_jacobian(const HarmonicMap& F, DiskPoint z);

}  // namespace gft
