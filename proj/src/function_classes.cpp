#include "gft/function_classes.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gft/schwarzian.hpp"

namespace gft {

HalfPlaneSpec HalfPlaneSpec::of(const ClassParams& p) {
  return {std::polar(1.0, p.theta()), (1.0 + p.gamma() / 2.0) * std::cos(p.theta())};
}

AnalyticMap make_extremal_f1(const ClassParams& p) { return AnalyticMap(ExtremalF1{p}); }

Complex subordination_target(const ClassParams& p, Complex z) {
  if (z == Complex(1.0)) throw std::domain_error("subordination target has a pole at z = 1");
  const Complex k = std::polar(1.0, -p.theta()) * (p.gamma_cos() + std::polar(1.0, p.theta()));
  return (1.0 - k * z) / (1.0 - z);
}

AnalyticMap member_from_schwarz(const ClassParams& p, const SchwarzSpec& w, std::size_t order) {
  if (!w.fixes_origin()) throw std::invalid_argument("member_from_schwarz needs a Schwarz function with w(0) = 0");
  const PowerSeries q = w.quotient_taylor(order);
  const PowerSeries den = ps_sub(PowerSeries::constant(1.0, order), ps_mul(PowerSeries::monomial(1.0, 1, order), q));
  const PowerSeries P = ps_div(q.scaled(p.Gamma()), den);
  PowerSeries fprime = ps_exp(ps_integrate(P));
  return AnalyticMap(SeriesBacked{std::move(fprime), SchwarzLogDerivative{p.Gamma(), w}});
}

MembershipResult membership_test(const AnalyticMap& f, const ClassParams& p, const MembershipGrid& grid) {
  const HalfPlaneSpec hp = HalfPlaneSpec::of(p);
  MembershipResult res;
  res.margin = std::numeric_limits<double>::infinity();
  for (double r : grid.radii) {
    for (int k = 0; k < grid.angles; ++k) {
      const DiskPoint z = DiskPoint::polar(r, 2.0 * std::numbers::pi * k / grid.angles);
      const double m = hp.margin(1.0 + z.z() * pre_schwarzian(f, z));
      if (m < res.margin) {
        res.margin = m;
        res.worst = z.z();
      }
    }
  }
  res.member = res.margin > 0.0;
  return res;
}

HarmonicMap make_harmonic_member(const ClassParams& p, AnalyticMap h, const SchwarzSpec& dilatation,
                                 const MembershipGrid& grid) {
  const MembershipResult m = membership_test(h, p, grid);
  if (!m.member) {
    std::ostringstream os;
    os << "analytic part is not in the class (margin " << m.margin << " at " << m.worst << ")";
    throw std::invalid_argument(os.str());
  }
  HarmonicMap F(std::move(h), dilatation);
  for (double r : grid.radii) {
    for (int k = 0; k < grid.angles; ++k) {
      const DiskPoint z = DiskPoint::polar(r, 2.0 * std::numbers::pi * k / grid.angles);
      const double gap = 1.0 - std::norm(F.omega(z).w);
      // h' = exp(∫P) never vanishes when P is closed-form; otherwise check it.
      const bool h_ok = F.h().closed_form() || r > kSeriesEvalCap || std::abs(F.h().jet(z).d1) > 0.0;
      if (!(gap > kDilatationGapFloor) || !h_ok) {
        std::ostringstream os;
        os << "Jacobian not positive at z = " << z.z() << " (1-|omega|^2 = " << gap << ")";
        throw JacobianError(os.str());
      }
    }
  }
  return F;
}

HarmonicMap make_f2_witness(const ClassParams& p, double a) {
  return make_harmonic_member(p, make_extremal_f1(p), Automorphism{Complex(a, 0.0), std::numbers::pi});
}

AnalyticMap identity_probe() {
  return AnalyticMap(ClosedFormProbe{"identity", [](Complex z) { return Jet{z, 1.0, 0.0, 0.0}; }});
}

AnalyticMap mobius_probe() { return mobius_probe(Complex(-1.0, 0.0)); }

AnalyticMap mobius_probe(Complex beta) {
  std::ostringstream os;
  os << "mobius(beta=" << beta << ")";
  return AnalyticMap(ClosedFormProbe{os.str(), [beta](Complex z) {
                                       const Complex u = 1.0 + beta * z;
                                       const Complex u2 = u * u;
                                       return Jet{z / u, 1.0 / u2, -2.0 * beta / (u2 * u),
                                                  6.0 * beta * beta / (u2 * u2)};
                                     }});
}

AnalyticMap koebe_probe() {
  return AnalyticMap(ClosedFormProbe{"koebe", [](Complex z) {
                                       const Complex u = 1.0 - z;
                                       const Complex u2 = u * u;
                                       return Jet{z / u2, (1.0 + z) / (u2 * u), (4.0 + 2.0 * z) / (u2 * u2),
                                                  (18.0 + 6.0 * z) / (u2 * u2 * u)};
                                     }});
}

AnalyticMap post_compose_mobius(const AnalyticMap& f, Complex beta) {
  std::ostringstream os;
  os << "mobius(beta=" << beta << ")o" << f.describe();
  return AnalyticMap(ClosedFormProbe{os.str(), [f, beta](Complex z) {
                                       const Jet j = f.jet(DiskPoint(z));
                                       const Complex u = 1.0 + beta * j.f;
                                       const Complex t1 = 1.0 / (u * u);
                                       const Complex t2 = -2.0 * beta / (u * u * u);
                                       const Complex t3 = 6.0 * beta * beta / (u * u * u * u);
                                       return Jet{j.f / u, t1 * j.d1, t2 * j.d1 * j.d1 + t1 * j.d2,
                                                  t3 * j.d1 * j.d1 * j.d1 + 3.0 * t2 * j.d1 * j.d2 + t1 * j.d3};
                                     }});
}

}  // namespace gft
