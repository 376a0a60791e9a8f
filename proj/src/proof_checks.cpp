#include "gft/proof_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gft {

double F1(const ClassParams& p, double r, double t) {
  const double A = p.two_minus_Gamma_abs();
  const double s = 1.0 - r * r;
  return (2.0 * r * r + (A * s - 2.0) * t * t) / (2.0 * r * r * s * (1.0 - t) * (1.0 - t));
}

double F1_partial_t(const ClassParams& p, double r, double t) {
  const double A = p.two_minus_Gamma_abs();
  const double s = 1.0 - r * r;
  const double u = 1.0 - t;
  return (2.0 * r * r + (A * s - 2.0) * t) / (r * r * s * u * u * u);
}

F1Report verify_F1_monotone(const ClassParams& p, int steps) {
  if (steps < 10) throw std::invalid_argument("verify_F1_monotone needs steps >= 10");
  const double A = p.two_minus_Gamma_abs();
  F1Report rep;
  rep.min_partial = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= steps; ++i) {
    const double r = static_cast<double>(i) / (steps + 1);
    for (int j = 1; j <= steps; ++j) {
      const double t = r * j / steps;
      const double d = F1_partial_t(p, r, t);
      if (d < rep.min_partial) {
        rep.min_partial = d;
        rep.argmin_r = r;
        rep.argmin_t = t;
      }
    }
    const double diag = A / (2.0 * (1.0 - r) * (1.0 - r));
    rep.max_diagonal_rel_error = std::max(rep.max_diagonal_rel_error, std::abs(F1(p, r, r) - diag) / diag);
  }
  return rep;
}

double F2(double gamma, double a, double r) { return gamma * (1.0 + r) + (r - a) / (1.0 - a * r); }

double F2_prime(double gamma, double a, double r) {
  const double u = 1.0 - a * r;
  return gamma + (1.0 - a * a) / (u * u);
}

F2Report verify_F2_increasing(double gamma, double a, int steps) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("a must lie in (0, 1)");
  if (steps < 2) throw std::invalid_argument("verify_F2_increasing needs steps >= 2");
  F2Report rep;
  rep.r_max = 1.0 - std::ldexp(1.0, -14);
  rep.min_derivative = std::numeric_limits<double>::infinity();
  for (int i = 0; i < steps; ++i) {
    const double r = rep.r_max * i / (steps - 1);
    rep.min_derivative = std::min(rep.min_derivative, F2_prime(gamma, a, r));
  }
  rep.value_at_r_max = F2(gamma, a, rep.r_max);
  rep.limit = 2.0 * gamma + 1.0;
  return rep;
}

InequalityCheck dieudonne_check(const SchwarzSpec& w, DiskPoint z0) {
  if (!w.fixes_origin()) throw std::invalid_argument("Dieudonne's lemma needs w(0) = 0");
  const Complex z = z0.z();
  const double r = std::abs(z);
  if (r == 0.0) throw std::invalid_argument("Dieudonne's lemma needs z0 != 0");
  const OmegaJet j = w.jet(z);
  InequalityCheck c;
  c.lhs = std::abs(j.d1 - j.w / z);
  c.rhs = (r * r - std::norm(j.w)) / (r * (1.0 - r * r));
  c.slack = c.rhs - c.lhs;
  return c;
}

BoundedFunction BoundedFunction::of(const SchwarzSpec& w, std::size_t order) {
  return {[w](Complex z, int n) { return w.derivative(z, n); }, w.taylor(order)};
}

BoundedFunction BoundedFunction::constant(Complex c, std::size_t order) {
  if (std::abs(c) > 1.0) throw std::invalid_argument("constant must satisfy |c| <= 1");
  return {[c](Complex, int n) { return n == 0 ? c : Complex(0.0); }, PowerSeries::constant(c, order)};
}

Lemma2Report lemma2_check(const BoundedFunction& f, DiskPoint zp, int n) {
  if (n < 1) throw std::invalid_argument("lemma2_check needs n >= 1");
  if (static_cast<std::size_t>(n) > f.taylor.order()) throw std::invalid_argument("n exceeds the series order");
  const Complex z = zp.z();
  const double r = std::abs(z);
  double nfact = 1.0;
  for (int j = 2; j <= n; ++j) nfact *= j;
  Lemma2Report rep;
  rep.pointwise.lhs = std::abs(f.derivative(z, n)) / nfact;
  rep.pointwise.rhs = (1.0 - std::norm(f.derivative(z, 0))) / (std::pow(1.0 - r, n - 1) * (1.0 - r * r));
  rep.pointwise.slack = rep.pointwise.rhs - rep.pointwise.lhs;
  rep.coefficient.lhs = std::abs(f.taylor[static_cast<std::size_t>(n)]);
  rep.coefficient.rhs = 1.0 - std::norm(f.taylor[0]);
  rep.coefficient.slack = rep.coefficient.rhs - rep.coefficient.lhs;
  return rep;
}

}  // namespace gft
