#include "gft/sup_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "gft/schwarzian.hpp"

namespace gft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Candidate {
  double value = -1.0;
  double r = 0.0;
  double t = 0.0;
};

// Larger value wins; ties go to the smaller radius, then the smaller angle.
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.r != b.r) return a.r < b.r;
  return a.t < b.t;
}

double weight(double r, int k) {
  const double w = 1.0 - r * r;
  return k == 1 ? w : w * w;
}

class Sampler {
 public:
  Sampler(const PointwiseEvaluator& F, int k) : F_(F), k_(k) {}

  Candidate eval(double r, double t) const {
    const DiskPoint z = DiskPoint::polar(r, t);
    Complex v;
    try {
      v = F_(z);
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "evaluation failed at z = " << z.z() << ": " << e.what();
      throw EvaluationError(os.str(), z);
    }
    const double m = weight(r, k_) * std::abs(v);
    if (!std::isfinite(m)) {
      std::ostringstream os;
      os << "non-finite value at z = " << z.z();
      throw EvaluationError(os.str(), z);
    }
    return {m, r, t};
  }

 private:
  const PointwiseEvaluator& F_;
  int k_;
};

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0.0 ? t + kTwoPi : t;
}

}  // namespace

void GridSpec::validate() const {
  if (J < 1 || J > 52) throw std::invalid_argument("grid J must be in [1, 52]");
  if (M < 8) throw std::invalid_argument("grid M must be >= 8");
  if (R < 0) throw std::invalid_argument("grid R must be >= 0");
}

double GridSpec::r_max() const { return 1.0 - std::ldexp(1.0, -J); }

std::vector<double> GridSpec::radii(double cap) const {
  std::vector<double> r{0.0};
  for (int j = 1; j <= J; ++j) {
    const double rj = 1.0 - std::ldexp(1.0, -j);
    if (rj > cap) break;
    r.push_back(rj);
  }
  return r;
}

NormEstimate weighted_sup(const PointwiseEvaluator& F, int k, const GridSpec& g, const SupOptions& opts) {
  g.validate();
  if (k != 1 && k != 2) throw std::invalid_argument("weight exponent must be 1 or 2");
  const std::vector<double> radii = g.radii(opts.radius_cap);
  const double r_max = radii.back();
  const Sampler s(F, k);
  const double dt0 = kTwoPi / g.M;

  // Base sweep: per-radius best, reduced afterwards so threading cannot
  // change the result.
  const std::size_t nr = radii.size();
  std::vector<Candidate> per_radius(nr);
  std::vector<std::exception_ptr> errors(nr);
  auto sweep = [&](std::size_t i) {
    try {
      const int na = radii[i] == 0.0 ? 1 : g.M;
      Candidate best;
      for (int m = 0; m < na; ++m) {
        const Candidate c = s.eval(radii[i], m * dt0);
        if (better(c, best)) best = c;
      }
      per_radius[i] = best;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const unsigned workers =
      std::max(1u, std::min<unsigned>(opts.workers == 0 ? std::thread::hardware_concurrency() : opts.workers,
                                      static_cast<unsigned>(nr)));
  if (workers == 1) {
    for (std::size_t i = 0; i < nr; ++i) sweep(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < nr; i += workers) sweep(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  long evaluations = 1 + static_cast<long>(nr - 1) * g.M;
  Candidate best;
  for (const auto& c : per_radius) {
    if (better(c, best)) best = c;
  }
  double dr = radii.size() > 1 ? radii[1] : r_max;
  for (std::size_t i = 1; i < nr; ++i) {
    if (radii[i] == best.r) dr = radii[i] - radii[i - 1];
  }

  if (opts.radial_sweep && opts.radial_samples > 0) {
    // Fixed positions i/N below r_max, then r_max itself.
    const double h = 1.0 / opts.radial_samples;
    for (int j = 1;; ++j) {
      const double r = std::min(j * h, r_max);
      const Candidate c = s.eval(r, 0.0);
      ++evaluations;
      if (better(c, best)) {
        best = c;
        dr = h;
      }
      if (r == r_max) break;
    }
  }

  double dt = dt0;
  for (int round = 0; round < g.R; ++round) {
    dr /= 3.0;
    dt /= 3.0;
    const Candidate center = best;
    for (int a = -3; a <= 3; ++a) {
      const double r = center.r + a * dr;
      if (r < 0.0 || r > r_max) continue;
      for (int b = -3; b <= 3; ++b) {
        if (a == 0 && b == 0) continue;
        const Candidate c = s.eval(r, r == 0.0 ? 0.0 : wrap_angle(center.t + b * dt));
        ++evaluations;
        if (better(c, best)) best = c;
      }
    }
  }

  NormEstimate est;
  est.value = best.value;
  est.witness = DiskPoint::polar(best.r, best.t);
  est.grid = g;
  est.r_max = r_max;
  est.evaluations = evaluations;
  return est;
}

NormEstimate schwarzian_norm(const AnalyticMap& f, const GridSpec& g, SupOptions opts) {
  opts.radius_cap = std::min(opts.radius_cap, f.log_derivative_radius());
  auto est = weighted_sup([&f](DiskPoint z) { return schwarzian(f, z); }, 2, g, opts);
  est.closed_form_used = f.closed_form();
  return est;
}

NormEstimate pre_schwarzian_norm(const AnalyticMap& f, const GridSpec& g, SupOptions opts) {
  opts.radius_cap = std::min(opts.radius_cap, f.log_derivative_radius());
  auto est = weighted_sup([&f](DiskPoint z) { return pre_schwarzian(f, z); }, 1, g, opts);
  est.closed_form_used = f.closed_form();
  return est;
}

NormEstimate becker_quantity(const AnalyticMap& f, const GridSpec& g, SupOptions opts) {
  opts.radius_cap = std::min(opts.radius_cap, f.log_derivative_radius());
  auto est = weighted_sup([&f](DiskPoint z) { return z.z() * pre_schwarzian(f, z); }, 1, g, opts);
  est.closed_form_used = f.closed_form();
  return est;
}

NormEstimate harmonic_schwarzian_norm(const HarmonicMap& F, const GridSpec& g, SupOptions opts) {
  opts.radius_cap = std::min(opts.radius_cap, F.h().log_derivative_radius());
  auto est = weighted_sup([&F](DiskPoint z) { return harmonic_schwarzian(F, z); }, 2, g, opts);
  est.closed_form_used = F.h().closed_form();
  return est;
}

NormEstimate harmonic_pre_schwarzian_norm(const HarmonicMap& F, const GridSpec& g, SupOptions opts) {
  opts.radius_cap = std::min(opts.radius_cap, F.h().log_derivative_radius());
  auto est = weighted_sup([&F](DiskPoint z) { return harmonic_pre_schwarzian(F, z); }, 1, g, opts);
  est.closed_form_used = F.h().closed_form();
  return est;
}

}  // namespace gft
