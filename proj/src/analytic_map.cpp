#include "gft/analytic_map.hpp"

#include <cfloat>
#include <cmath>
#include <sstream>

namespace gft {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kNormalizationTol = 1e-12;

bool usable(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag()) && std::abs(c) > DBL_MIN;
}

LogDerivative from_jet(const Jet& j, Complex z) {
  if (!usable(j.d1)) {
    std::ostringstream os;
    os << "f' vanishes at z = " << z;
    throw LocalUnivalenceError(os.str());
  }
  const Complex P = j.d2 / j.d1;
  return {P, j.d3 / j.d1 - P * P};
}

Jet extremal_jet(const ClassParams& p, Complex z) {
  const Complex c = p.exponent();
  const Complex u = 1.0 - z;
  const Complex fp = cf_pow_one_minus_z(c, z);
  return {(1.0 - fp * u) / (c + 1.0), fp, -c * fp / u, c * (c - 1.0) * fp / (u * u)};
}

}  // namespace

LogDerivative SchwarzLogDerivative::eval(Complex z) const {
  // ω = z q:  P = Γ q/(1 - z q),  P' = Γ (q' + q²)/(1 - z q)².
  const OmegaJet q = omega.quotient_jet(z);
  const Complex den = 1.0 - z * q.w;
  return {Gamma * q.w / den, Gamma * (q.d1 + q.w * q.w) / (den * den)};
}

AnalyticMap::AnalyticMap(Representation rep) : rep_(std::move(rep)) {
  if (auto* s = std::get_if<SeriesBacked>(&rep_)) {
    if (std::abs(s->fprime[0] - 1.0) > kNormalizationTol) {
      throw std::invalid_argument("series-backed map needs f'(0) = 1");
    }
    f_ = ps_integrate(s->fprime);
    f2_ = ps_derive(s->fprime);
    f3_ = ps_derive(*f2_);
  } else if (auto* pr = std::get_if<ClosedFormProbe>(&rep_)) {
    if (!pr->eval) throw std::invalid_argument("probe without an evaluator");
    const Jet j0 = pr->eval(0.0);
    if (std::abs(j0.f) > kNormalizationTol || std::abs(j0.d1 - 1.0) > kNormalizationTol) {
      throw std::invalid_argument("probe '" + pr->name + "' is not normalized");
    }
  }
}

Jet AnalyticMap::jet(DiskPoint pt) const {
  const Complex z = pt.z();
  return std::visit(overloaded{
                        [&](const ExtremalF1& e) { return extremal_jet(e.params, z); },
                        [&](const SeriesBacked& s) {
                          return Jet{ps_eval(*f_, z), ps_eval(s.fprime, z), ps_eval(*f2_, z), ps_eval(*f3_, z)};
                        },
                        [&](const ClosedFormProbe& p) { return p.eval(z); },
                    },
                    rep_);
}

LogDerivative AnalyticMap::log_derivative(DiskPoint pt) const {
  const Complex z = pt.z();
  return std::visit(overloaded{
                        [&](const ExtremalF1& e) {
                          const Complex c = e.params.exponent();
                          const Complex u = 1.0 - z;
                          return LogDerivative{-c / u, -c / (u * u)};
                        },
                        [&](const SeriesBacked& s) {
                          if (s.closed_log_derivative) return s.closed_log_derivative->eval(z);
                          return from_jet(jet(pt), z);
                        },
                        [&](const ClosedFormProbe& p) { return from_jet(p.eval(z), z); },
                    },
                    rep_);
}

double AnalyticMap::log_derivative_radius() const noexcept { return closed_form() ? 1.0 : kSeriesEvalCap; }

bool AnalyticMap::closed_form() const noexcept {
  const auto* s = std::get_if<SeriesBacked>(&rep_);
  return s == nullptr || s->closed_log_derivative.has_value();
}

std::optional<PowerSeries> AnalyticMap::fprime_series(std::size_t order) const {
  return std::visit(overloaded{
                        [&](const ExtremalF1& e) -> std::optional<PowerSeries> {
                          // (1-z)^c = exp(-c · (-log(1-z))).
                          return ps_exp(ps_neg_log_one_minus_z(order).scaled(-e.params.exponent()));
                        },
                        [&](const SeriesBacked& s) -> std::optional<PowerSeries> {
                          return s.fprime.truncated(std::min(order, s.fprime.order()));
                        },
                        [&](const ClosedFormProbe&) -> std::optional<PowerSeries> { return std::nullopt; },
                    },
                    rep_);
}

std::string AnalyticMap::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const ExtremalF1& e) {
                   os << "extremal_f1(theta=" << e.params.theta() << ",gamma=" << e.params.gamma() << ")";
                 },
                 [&](const SeriesBacked& s) {
                   os << "series(order=" << s.fprime.order();
                   if (s.closed_log_derivative) os << ",omega=" << s.closed_log_derivative->omega.describe();
                   os << ")";
                 },
                 [&](const ClosedFormProbe& p) { os << "probe(" << p.name << ")"; },
             },
             rep_);
  return os.str();
}

HarmonicMap::HarmonicMap(AnalyticMap h, SchwarzSpec dilatation) : h_(std::move(h)), omega_(std::move(dilatation)) {}

PowerSeries HarmonicMap::co_analytic_series(std::size_t order) const {
  const auto hp = h_.fprime_series(order);
  if (!hp) throw std::invalid_argument("analytic part has no Taylor series");
  return ps_integrate(ps_mul(omega_.taylor(hp->order()), *hp));
}

}  // namespace gft
