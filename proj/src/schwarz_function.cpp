#include "gft/schwarz_function.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gft {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double falling_factorial(int k, int n) {
  double r = 1.0;
  for (int j = 0; j < n; ++j) r *= static_cast<double>(k - j);
  return r;
}

double factorial(int n) { return falling_factorial(n, n); }

// z^n for n >= 0 by repeated multiplication; 0^0 = 1.
Complex ipow(Complex z, int n) {
  Complex r = 1.0;
  for (int j = 0; j < n; ++j) r *= z;
  return r;
}

// n-th derivative of B(z) = (z - a)/(1 - ā z).
Complex mobius_derivative(Complex a, Complex z, int n) {
  const Complex ab = std::conj(a);
  const Complex den = 1.0 - ab * z;
  if (n == 0) return (z - a) / den;
  return factorial(n) * (1.0 - std::norm(a)) * ipow(ab, n - 1) / ipow(den, n + 1);
}

// Coefficients of B about 0: B_0 = -a, B_n = ā^{n-1}(1 - |a|²).
std::vector<Complex> mobius_taylor(Complex a, std::size_t order) {
  std::vector<Complex> v(order + 1);
  const Complex ab = std::conj(a);
  const double s = 1.0 - std::norm(a);
  v[0] = -a;
  Complex p = 1.0;
  for (std::size_t n = 1; n <= order; ++n) {
    v[n] = p * s;
    p *= ab;
  }
  return v;
}

void require_inside(Complex c, const char* what) {
  if (!(std::abs(c) < 1.0)) throw std::invalid_argument(std::string(what) + " must lie in the open unit disk");
}

}  // namespace

SchwarzSpec::SchwarzSpec(Variant v) : v_(v) {
  std::visit(overloaded{
                 [](const Monomial& m) {
                   if (m.k < 1) throw std::invalid_argument("monomial degree must be >= 1");
                 },
                 [](const Rotation& r) {
                   if (!(std::abs(r.lambda) <= 1.0)) throw std::invalid_argument("rotation factor needs |lambda| <= 1");
                 },
                 [](const BlaschkeDeg2Fix0& b) { require_inside(b.a, "Blaschke zero"); },
                 [](const Automorphism& a) { require_inside(a.alpha, "automorphism zero"); },
             },
             v_);
}

bool SchwarzSpec::fixes_origin() const noexcept { return !std::holds_alternative<Automorphism>(v_); }

bool SchwarzSpec::is_rotation_of_identity() const noexcept {
  const auto* a = std::get_if<Automorphism>(&v_);
  return a != nullptr && a->alpha == Complex(0.0);
}

Complex SchwarzSpec::value(Complex z) const { return derivative(z, 0); }

Complex SchwarzSpec::derivative(Complex z, int n) const {
  if (n < 0) throw std::invalid_argument("derivative order must be >= 0");
  return std::visit(
      overloaded{
          [&](const Monomial& m) -> Complex {
            if (n > m.k) return 0.0;
            return falling_factorial(m.k, n) * ipow(z, m.k - n);
          },
          [&](const Rotation& r) -> Complex {
            if (n == 0) return r.lambda * z;
            return n == 1 ? r.lambda : Complex(0.0);
          },
          [&](const BlaschkeDeg2Fix0& b) -> Complex {
            Complex d = z * mobius_derivative(b.a, z, n);
            if (n > 0) d += static_cast<double>(n) * mobius_derivative(b.a, z, n - 1);
            return std::polar(1.0, b.phi) * d;
          },
          [&](const Automorphism& a) -> Complex {
            return std::polar(1.0, a.phi) * mobius_derivative(a.alpha, z, n);
          },
      },
      v_);
}

OmegaJet SchwarzSpec::jet(Complex z) const { return {derivative(z, 0), derivative(z, 1), derivative(z, 2)}; }

OmegaJet SchwarzSpec::quotient_jet(Complex z) const {
  return std::visit(
      overloaded{
          [&](const Monomial& m) -> OmegaJet {
            const int k = m.k;
            const Complex q = ipow(z, k - 1);
            const Complex q1 = k >= 2 ? static_cast<double>(k - 1) * ipow(z, k - 2) : Complex(0.0);
            const Complex q2 = k >= 3 ? static_cast<double>((k - 1) * (k - 2)) * ipow(z, k - 3) : Complex(0.0);
            return {q, q1, q2};
          },
          [&](const Rotation& r) -> OmegaJet { return {r.lambda, 0.0, 0.0}; },
          [&](const BlaschkeDeg2Fix0& b) -> OmegaJet {
            const Complex e = std::polar(1.0, b.phi);
            return {e * mobius_derivative(b.a, z, 0), e * mobius_derivative(b.a, z, 1),
                    e * mobius_derivative(b.a, z, 2)};
          },
          [&](const Automorphism&) -> OmegaJet {
            throw std::invalid_argument("automorphism does not fix the origin");
          },
      },
      v_);
}

PowerSeries SchwarzSpec::taylor(std::size_t order) const {
  return std::visit(
      overloaded{
          [&](const Monomial& m) { return PowerSeries::monomial(1.0, static_cast<std::size_t>(m.k), order); },
          [&](const Rotation& r) { return PowerSeries::monomial(r.lambda, 1, order); },
          [&](const BlaschkeDeg2Fix0& b) {
            // z·B(z): shift the coefficients of B by one.
            const auto bt = mobius_taylor(b.a, order);
            std::vector<Complex> v(order + 1);
            const Complex e = std::polar(1.0, b.phi);
            for (std::size_t n = 1; n <= order; ++n) v[n] = e * bt[n - 1];
            return PowerSeries(std::move(v));
          },
          [&](const Automorphism& a) { return PowerSeries(mobius_taylor(a.alpha, order)).scaled(std::polar(1.0, a.phi)); },
      },
      v_);
}

PowerSeries SchwarzSpec::quotient_taylor(std::size_t order) const {
  if (!fixes_origin()) throw std::invalid_argument("automorphism does not fix the origin");
  const auto t = taylor(order + 1);
  std::vector<Complex> v(order + 1);
  for (std::size_t n = 0; n <= order; ++n) v[n] = t[n + 1];
  return PowerSeries(std::move(v));
}

std::string SchwarzSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  auto cx = [&os](Complex c) { os << c.real() << (std::signbit(c.imag()) ? "-" : "+") << std::abs(c.imag()) << "i"; };
  std::visit(overloaded{
                 [&](const Monomial& m) { os << "monomial(k=" << m.k << ")"; },
                 [&](const Rotation& r) {
                   os << "rotation(lambda=";
                   cx(r.lambda);
                   os << ")";
                 },
                 [&](const BlaschkeDeg2Fix0& b) {
                   os << "blaschke2(a=";
                   cx(b.a);
                   os << ",phi=" << b.phi << ")";
                 },
                 [&](const Automorphism& a) {
                   os << "automorphism(alpha=";
                   cx(a.alpha);
                   os << ",phi=" << a.phi << ")";
                 },
             },
             v_);
  return os.str();
}

OmegaJet aut_disk_eval(const SchwarzSpec& w, DiskPoint z) { return w.jet(z.z()); }

}  // namespace gft
