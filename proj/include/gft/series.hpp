#pragma once

// Truncated complex power series about the origin.

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace gft {

using Complex = std::complex<double>;

/// Largest |z| at which a truncated series may be evaluated. Beyond this
/// the truncation tail is not controlled and closed forms must be used.
inline constexpr double kSeriesEvalCap = 0.9;

/// Default truncation order for series-built maps.
inline constexpr std::size_t kDefaultOrder = 64;

/// A point of the open unit disk.
class DiskPoint {
 public:
  explicit DiskPoint(Complex z);
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

  static DiskPoint polar(double r, double t);

  Complex z() const noexcept { return z_; }
  double abs() const noexcept { return std::abs(z_); }

 private:
  Complex z_;
};

/// Thrown when a series is evaluated outside its trusted radius.
class TruncationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coefficients c_0..c_N of a polynomial truncation of a Taylor series.
/// The order N is fixed at construction; binary arithmetic truncates to
/// the smaller operand order.
class PowerSeries {
 public:
  /// Throws std::invalid_argument if fewer than two coefficients are given
  /// or any coefficient is not finite.
  explicit PowerSeries(std::vector<Complex> coeffs);

  static PowerSeries zero(std::size_t order);
  static PowerSeries constant(Complex c, std::size_t order);
  /// c·z^k truncated to `order`.
  static PowerSeries monomial(Complex c, std::size_t k, std::size_t order);
  /// Σ z^n, n = 0..order.
  static PowerSeries geometric(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t n) const { return coeffs_.at(n); }

  PowerSeries truncated(std::size_t order) const;
  PowerSeries scaled(Complex s) const;

 private:
  std::vector<Complex> coeffs_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);

/// Long division a/b. Throws std::invalid_argument when b.c0 == 0.
PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b);

/// Termwise derivative; the result has order N-1 (N-1 ≥ 1 required).
PowerSeries ps_derive(const PowerSeries& a);

/// Antiderivative with zero constant term, kept at order N (the z^{N+1}
/// term is dropped), so ps_derive(ps_integrate(a)) == a.truncated(N-1).
PowerSeries ps_integrate(const PowerSeries& a);

/// exp(a) for a normalized exponent (a.c0 == 0), from n·E_n = Σ k·a_k·E_{n-k}.
/// Throws std::invalid_argument for a nonzero constant term.
PowerSeries ps_exp(const PowerSeries& a);

/// Horner evaluation. Throws TruncationError when |z| > cap.
Complex ps_eval(const PowerSeries& a, Complex z, double cap = kSeriesEvalCap);
inline Complex ps_eval(const PowerSeries& a, DiskPoint z, double cap = kSeriesEvalCap) {
  return ps_eval(a, z.z(), cap);
}

/// Series of -log(1-z) = Σ_{n≥1} z^n/n.
PowerSeries ps_neg_log_one_minus_z(std::size_t order);

/// (1-z)^c on the principal branch.
Complex cf_pow_one_minus_z(Complex c, Complex z);
inline Complex cf_pow_one_minus_z(Complex c, DiskPoint z) { return cf_pow_one_minus_z(c, z.z()); }

}  // namespace gft
