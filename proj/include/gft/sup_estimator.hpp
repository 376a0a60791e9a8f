#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "gft/analytic_map.hpp"
#include "gft/series.hpp"

namespace gft {

/// Polar grid for weighted suprema over the disk.
///
/// Radii are 0 and r_j = 1 - 2^{-j} for j = 1..J, so r_max = 1 - 2^{-J};
/// each positive radius carries M uniform angles starting at 0. After the
/// base sweep, R refinement rounds each divide the local radial and angular
/// steps by 3 and scan a 7×7 patch around the incumbent.
struct GridSpec {
  int J = 14;
  int M = 512;
  int R = 3;

  /// Throws std::invalid_argument if J < 1, J > 52, M < 8 or R < 0.
  void validate() const;
  double r_max() const;
  /// The radial schedule, truncated to radii ≤ cap.
  std::vector<double> radii(double cap = 1.0) const;
};

struct SupOptions {
  /// Largest radius the evaluator may be called at.
  double radius_cap = 1.0;
  /// Extra sweep along the positive real axis at r = i/radial_samples below
  /// r_max and at r_max, where the extremal maps attain their suprema.
  bool radial_sweep = true;
  int radial_samples = 4096;
  /// Threads for the base sweep; the result does not depend on it.
  unsigned workers = 1;
};

struct NormEstimate {
  double value = 0.0;
  DiskPoint witness{Complex(0.0)};
  GridSpec grid;
  bool closed_form_used = false;
  /// Largest radius actually sampled.
  double r_max = 0.0;
  long evaluations = 0;
};

/// The evaluator threw or returned a non-finite value at `where`.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, DiskPoint where) : std::runtime_error(what), where_(where) {}
  DiskPoint where() const noexcept { return where_; }

 private:
  DiskPoint where_;
};

using PointwiseEvaluator = std::function<Complex(DiskPoint)>;

/// Grid maximum of (1 - |z|²)^k |F(z)|, a lower bound for the supremum over 𝔻.
/// Ties go to the smaller radius, then the smaller angle. Without refinement
/// the value is monotone in J and under doubling of M; it is monotone in R.
NormEstimate weighted_sup(const PointwiseEvaluator& F, int k, const GridSpec& g = {}, const SupOptions& opts = {});

NormEstimate schwarzian_norm(const AnalyticMap& f, const GridSpec& g = {}, SupOptions opts = {});
NormEstimate pre_schwarzian_norm(const AnalyticMap& f, const GridSpec& g = {}, SupOptions opts = {});
/// sup (1 - |z|²)|z P_f(z)|.
NormEstimate becker_quantity(const AnalyticMap& f, const GridSpec& g = {}, SupOptions opts = {});
NormEstimate harmonic_schwarzian_norm(const HarmonicMap& F, const GridSpec& g = {}, SupOptions opts = {});
NormEstimate harmonic_pre_schwarzian_norm(const HarmonicMap& F, const GridSpec& g = {}, SupOptions opts = {});

}  // namespace gft
