#include "gft/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gft {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (!finite(z) || !(std::abs(z) < 1.0)) {
    throw std::domain_error("point outside the open unit disk: |z| = " + std::to_string(std::abs(z)));
  }
}

DiskPoint DiskPoint::polar(double r, double t) { return DiskPoint(std::polar(r, t)); }

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw std::invalid_argument("power series needs order >= 1");
  if (!std::all_of(coeffs_.begin(), coeffs_.end(), finite)) {
    throw std::invalid_argument("power series coefficient is not finite");
  }
}

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<Complex>(order + 1));
}

PowerSeries PowerSeries::constant(Complex c, std::size_t order) {
  std::vector<Complex> v(order + 1);
  v[0] = c;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::monomial(Complex c, std::size_t k, std::size_t order) {
  std::vector<Complex> v(order + 1);
  if (k <= order) v[k] = c;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::geometric(std::size_t order) {
  return PowerSeries(std::vector<Complex>(order + 1, Complex(1.0)));
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return PowerSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::scaled(Complex s) const {
  std::vector<Complex> v(coeffs_);
  for (auto& c : v) c *= s;
  return PowerSeries(std::move(v));
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = a[k] + b[k];
  return PowerSeries(std::move(v));
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
  return ps_add(a, b.scaled(-1.0));
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<Complex> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex s = 0.0;
    for (std::size_t j = 0; j <= k; ++j) s += ac[j] * bc[k - j];
    v[k] = s;
  }
  return PowerSeries(std::move(v));
}

PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b) {
  if (b[0] == Complex(0.0)) throw std::invalid_argument("series division by zero constant term");
  const std::size_t n = std::min(a.order(), b.order());
  const auto bc = b.coeffs();
  std::vector<Complex> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex s = a[k];
    for (std::size_t j = 1; j <= k; ++j) s -= bc[j] * q[k - j];
    q[k] = s / bc[0];
  }
  return PowerSeries(std::move(q));
}

PowerSeries ps_derive(const PowerSeries& a) {
  const std::size_t n = a.order();
  if (n < 2) throw std::invalid_argument("derivative would leave order < 1");
  std::vector<Complex> v(n);
  for (std::size_t k = 1; k <= n; ++k) v[k - 1] = static_cast<double>(k) * a[k];
  return PowerSeries(std::move(v));
}

PowerSeries ps_integrate(const PowerSeries& a) {
  const std::size_t n = a.order();
  std::vector<Complex> v(n + 1);
  for (std::size_t k = 1; k <= n; ++k) v[k] = a[k - 1] / static_cast<double>(k);
  return PowerSeries(std::move(v));
}

PowerSeries ps_exp(const PowerSeries& a) {
  if (a[0] != Complex(0.0)) throw std::invalid_argument("ps_exp requires a zero constant term");
  const std::size_t n = a.order();
  const auto ac = a.coeffs();
  std::vector<Complex> e(n + 1);
  e[0] = 1.0;
  for (std::size_t m = 1; m <= n; ++m) {
    Complex s = 0.0;
    for (std::size_t k = 1; k <= m; ++k) s += static_cast<double>(k) * ac[k] * e[m - k];
    e[m] = s / static_cast<double>(m);
  }
  return PowerSeries(std::move(e));
}

Complex ps_eval(const PowerSeries& a, Complex z, double cap) {
  if (std::abs(z) > cap) {
    throw TruncationError("series evaluation at |z| = " + std::to_string(std::abs(z)) +
                          " exceeds cap " + std::to_string(cap));
  }
  const auto c = a.coeffs();
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PowerSeries ps_neg_log_one_minus_z(std::size_t order) {
  std::vector<Complex> v(order + 1);
  for (std::size_t n = 1; n <= order; ++n) v[n] = 1.0 / static_cast<double>(n);
  return PowerSeries(std::move(v));
}

Complex cf_pow_one_minus_z(Complex c, Complex z) {
  if (c == Complex(0.0)) return 1.0;
  return std::exp(c * std::log(1.0 - z));
}

}  // namespace gft
