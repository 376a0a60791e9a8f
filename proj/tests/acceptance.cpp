// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gft/bounds.hpp"
#include "gft/function_classes.hpp"
#include "gft/proof_checks.hpp"
#include "gft/reports.hpp"
#include "gft/schwarzian.hpp"
#include "gft/sup_estimator.hpp"

using namespace gft;

namespace {

constexpr double kPi = std::numbers::pi;

// Tolerances and limits, one block per criterion.
constexpr double kTableTol = 5e-6;
constexpr double kTableSeconds = 1.0;
constexpr double kIdentityTol = 1e-12;
constexpr int kIdentityDraws = 1000;
constexpr double kIdentitySeconds = 1.0;
constexpr double kTh2Lo = 5.996, kTh2Hi = 6.0;
constexpr double kRatioLo = 0.997, kRatioHi = 1.0;
constexpr int kSharpDraws = 20;
constexpr double kTh2Seconds = 10.0;
constexpr double kTh3Lo = 2.997, kTh3Hi = 3.0;
constexpr double kTh3Seconds = 5.0;
constexpr std::uint64_t kAuditSeed = 1;
constexpr int kAuditCount = 200;
constexpr double kAuditSeconds = 60.0;
constexpr int kF1Steps = 200;
constexpr int kF1Params = 20;
constexpr double kF1MinTol = 1e-12;
constexpr double kF1DiagTol = 1e-10;
constexpr double kF2Tol = 1e-12;
constexpr double kDieudonneTol = 1e-10;
constexpr double kDieudonneSeconds = 2.0;
constexpr double kCoefEqTol = 1e-12;
constexpr double kCoefSlackTol = 1e-12;
constexpr int kCoefDraws = 1000;
constexpr double kFdStep = 1e-5;
constexpr double kFdRelTol = 1e-5;
constexpr double kMobiusTol = 1e-10;
constexpr double kFigureRho = 0.999;
constexpr double kFigureTol = 1e-12;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

ClassParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> th(-1.4, 1.4), lg(std::log(0.05), std::log(3.0));
  return ClassParams(th(rng), std::exp(lg(rng)));
}

Complex random_in_disk(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmax * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
}

Complex nonzero_in_disk(std::mt19937_64& rng, double rmax) {
  for (;;) {
    const Complex z = random_in_disk(rng, rmax);
    if (std::abs(z) > 1e-3) return z;
  }
}

SchwarzSpec random_schwarz(std::mt19937_64& rng, int family) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  switch (family % 3) {
    case 0: return Monomial{1 + static_cast<int>(rng() % 4)};
    case 1: return Rotation{random_in_disk(rng, 1.0)};
    default: return BlaschkeDeg2Fix0{random_in_disk(rng, 0.9), ang(rng)};
  }
}

Outcome table_reproduction() {
  const double thetas[] = {kPi / 4, kPi / 5, kPi / 6, kPi / 10};
  const double want[] = {0.608465, 0.524526, 0.486367, 0.438151};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(solve_gamma_max(thetas[i]) - want[i]));
  return {worst <= kTableTol, "max |gamma_max - table| = " + num(worst) + " (tol " + num(kTableTol) + ")"};
}

Outcome identity_suite() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> g(0.0, 4.0), th(-1.5, 1.5), lg(std::log(1e-3), std::log(10.0));
  double worst_delta = 0.0, worst_abs = 0.0;
  for (int i = 0; i < kIdentityDraws; ++i) {
    double gamma = g(rng);
    if (gamma == 0.0) gamma = 4.0;
    worst_delta = std::max(worst_delta, std::abs(delta(ClassParams(0.0, gamma)) - gamma * (gamma + 2.0)));
    const double theta = th(rng), gm = std::exp(lg(rng));
    const ClassParams p(theta, gm);
    const double c = std::cos(theta);
    worst_abs = std::max(worst_abs, std::abs(std::abs(2.0 - p.Gamma()) - std::sqrt(4.0 + (gm * gm + 4.0 * gm) * c * c)));
  }
  return {worst_delta <= kIdentityTol && worst_abs <= kIdentityTol,
          "max err delta(g,0) = " + num(worst_delta) + ", |2-Gamma| = " + num(worst_abs) + " over " +
              std::to_string(kIdentityDraws) + " draws (tol " + num(kIdentityTol) + ")"};
}

Outcome th2_sharpness() {
  const double v = schwarzian_norm(make_extremal_f1(ClassParams(0.0, 1.0))).value;
  bool ok = v >= kTh2Lo && v <= kTh2Hi;
  std::mt19937_64 rng(3);
  double lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i < kSharpDraws; ++i) {
    const ClassParams p = random_params(rng);
    const double ratio = schwarzian_norm(make_extremal_f1(p)).value / th2_norm_bound(p);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  ok = ok && lo >= kRatioLo && hi <= kRatioHi;
  return {ok, "||S_f1|| = " + num(v) + " in [" + num(kTh2Lo) + ", " + num(kTh2Hi) + "]; " +
                  std::to_string(kSharpDraws) + " ratios in [" + num(lo) + ", " + num(hi) + "]"};
}

Outcome th3_sharpness() {
  const double v = harmonic_pre_schwarzian_norm(make_f2_witness(ClassParams(0.0, 1.0), 0.5)).value;
  return {v >= kTh3Lo && v <= kTh3Hi, "||P_f2|| = " + num(v) + " in [" + num(kTh3Lo) + ", " + num(kTh3Hi) + "]"};
}

Outcome random_audit() {
  const AuditConfig cfg{kAuditSeed, kAuditCount, GridSpec{}, false, 0};
  const auto recs = run_audit(cfg);
  int failures = 0, harmonic = 0;
  bool families[3] = {false, false, false};
  double worst = INFINITY;
  for (const auto& r : recs) {
    if (!r.pass) ++failures;
    if (r.dilatation) ++harmonic;
    families[0] = families[0] || r.member.find("monomial(") != std::string::npos;
    families[1] = families[1] || r.member.find("rotation(") != std::string::npos;
    families[2] = families[2] || r.member.find("blaschke2(") != std::string::npos;
    for (const auto& c : r.checks) worst = std::min(worst, c.bound - c.norm);
  }
  const bool ok = failures == 0 && static_cast<int>(recs.size()) == kAuditCount && harmonic > 0 && families[0] &&
                  families[1] && families[2] && worst >= -kAuditSlack;
  return {ok, std::to_string(recs.size()) + " members (" + std::to_string(harmonic) + " with harmonic extension), " +
                  std::to_string(failures) + " violations, min slack " + num(worst)};
}

Outcome proof_objects() {
  std::mt19937_64 rng(6);
  double min_partial = INFINITY, diag = 0.0, consistency = 0.0, f2_gap = INFINITY;
  for (int i = 0; i < kF1Params; ++i) {
    const ClassParams p = random_params(rng);
    const F1Report rep = verify_F1_monotone(p, kF1Steps);
    min_partial = std::min(min_partial, rep.min_partial);
    diag = std::max(diag, rep.max_diagonal_rel_error);
    for (int k = 1; k <= kF1Steps; ++k) {
      const double r = static_cast<double>(k) / (kF1Steps + 1);
      const double rhs = th1_pointwise_bound(p, r);
      consistency = std::max(consistency, std::abs(std::abs(p.Gamma()) * F1(p, r, r) - rhs) / rhs);
    }
    std::uniform_real_distribution<double> a(0.01, 0.99);
    const F2Report f2 = verify_F2_increasing(p.gamma(), a(rng), kF1Steps);
    f2_gap = std::min(f2_gap, f2.min_derivative - p.gamma());
  }
  const bool ok = min_partial >= -kF1MinTol && diag <= kF1DiagTol && consistency <= kF1DiagTol && f2_gap >= -kF2Tol;
  return {ok, "min dF1/dt = " + num(min_partial) + ", diagonal rel err " + num(diag) + ", |Gamma|F1(r,r) vs bound " +
                  num(consistency) + ", min F2' - gamma = " + num(f2_gap)};
}

Outcome dieudonne() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  double worst_eq = 0.0, min_strict = INFINITY;
  for (int k = 0; k < 10; ++k) {
    const DiskPoint z0(nonzero_in_disk(rng, 0.95));
    worst_eq = std::max(worst_eq, std::abs(dieudonne_check(Monomial{2}, z0).slack));
    min_strict = std::min(min_strict, dieudonne_check(Rotation{0.5}, z0).slack);
  }
  for (int i = 0; i < 100; ++i) {
    const SchwarzSpec b = BlaschkeDeg2Fix0{random_in_disk(rng, 0.9), ang(rng)};
    for (int k = 0; k < 10; ++k) {
      const DiskPoint z0(nonzero_in_disk(rng, 0.95));
      worst_eq = std::max(worst_eq, std::abs(dieudonne_check(b, z0).slack));
    }
  }
  return {worst_eq <= kDieudonneTol && min_strict > 0.0,
          "max |slack| equality cases = " + num(worst_eq) + ", min Rotation(0.5) slack = " + num(min_strict)};
}

Outcome lemma2() {
  const auto aut = lemma2_check(BoundedFunction::of(Automorphism{0.5, 0.0}), DiskPoint(0.0, 0.0), 1);
  const auto sq = lemma2_check(BoundedFunction::of(Monomial{2}), DiskPoint(0.0, 0.0), 2);
  const double eq = std::max({std::abs(aut.pointwise.slack), std::abs(aut.coefficient.slack),
                              std::abs(sq.pointwise.slack), std::abs(sq.coefficient.slack)});
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  double min_slack = INFINITY;
  for (int i = 0; i < kCoefDraws; ++i) {
    BoundedFunction f = [&]() {
      switch (i % 5) {
        case 0: return BoundedFunction::of(Automorphism{random_in_disk(rng, 0.9), ang(rng)});
        case 1: return BoundedFunction::of(BlaschkeDeg2Fix0{random_in_disk(rng, 0.9), ang(rng)});
        case 2: return BoundedFunction::of(Rotation{random_in_disk(rng, 1.0)});
        case 3: return BoundedFunction::of(Monomial{1 + static_cast<int>(rng() % 4)});
        default: return BoundedFunction::constant(random_in_disk(rng, 1.0));
      }
    }();
    const auto rep = lemma2_check(f, DiskPoint(random_in_disk(rng, 0.95)), 1 + static_cast<int>(rng() % 4));
    min_slack = std::min({min_slack, rep.pointwise.slack, rep.coefficient.slack});
  }
  return {eq <= kCoefEqTol && min_slack >= -kCoefSlackTol,
          "equality cases |slack| = " + num(eq) + ", min slack over " + std::to_string(kCoefDraws) +
              " draws = " + num(min_slack)};
}

Outcome definitions() {
  std::mt19937_64 rng(9);
  double worst_fd = 0.0;
  for (int m = 0; m < 10; ++m) {
    const ClassParams p = random_params(rng);
    const AnalyticMap member = member_from_schwarz(p, random_schwarz(rng, m));
    // Same series without the closed-form log-derivative, so the jet path is exercised.
    const auto& rep = std::get<SeriesBacked>(member.representation());
    const AnalyticMap series_only(SeriesBacked{rep.fprime, std::nullopt});
    for (const AnalyticMap* f : {&member, &series_only}) {
      for (int j = 0; j < 200; ++j) {
        const Complex z = random_in_disk(rng, 0.8);
        const Complex dP = (pre_schwarzian(*f, DiskPoint(z + kFdStep)) - pre_schwarzian(*f, DiskPoint(z - kFdStep))) /
                           (2.0 * kFdStep);
        const Complex P = pre_schwarzian(*f, DiskPoint(z));
        const Complex want = schwarzian(*f, DiskPoint(z)) + 0.5 * P * P;
        worst_fd = std::max(worst_fd, std::abs(dP - want) / std::max(1.0, std::abs(want)));
      }
    }
  }
  double worst_mobius = 0.0;
  for (int j = 0; j < 1000; ++j) {
    const DiskPoint z(random_in_disk(rng, 0.9));
    worst_mobius = std::max(worst_mobius, std::abs(schwarzian(mobius_probe(), z)));
    worst_mobius = std::max(worst_mobius, std::abs(schwarzian(mobius_probe(random_in_disk(rng, 1.0)), z)));
  }
  return {worst_fd <= kFdRelTol && worst_mobius <= kMobiusTol,
          "FD rel err " + num(worst_fd) + " (tol " + num(kFdRelTol) + "), max |S| Mobius " + num(worst_mobius)};
}

Outcome figure_data() {
  std::mt19937_64 rng(10);
  double worst = INFINITY;
  for (int i = 0; i < 5; ++i) {
    const ClassParams p = random_params(rng);
    const auto d = figure1_data(p, kFigureRho, 720);
    const double offset = (1.0 + p.gamma() / 2.0) * std::cos(p.theta());
    for (const auto& pt : d.points) worst = std::min(worst, offset - (std::polar(1.0, p.theta()) * pt.w).real());
  }
  return {worst >= -kFigureTol, "min margin over 5 x 720 points at rho = 0.999: " + num(worst)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double seconds;  // 0 = no limit
  };
  const std::vector<Criterion> criteria{
      {"table reproduction", table_reproduction, kTableSeconds},
      {"closed-form identities", identity_suite, kIdentitySeconds},
      {"Schwarzian norm sharpness", th2_sharpness, kTh2Seconds},
      {"harmonic pre-Schwarzian sharpness", th3_sharpness, kTh3Seconds},
      {"random audit", random_audit, kAuditSeconds},
      {"proof objects F1, F2", proof_objects, 0.0},
      {"Dieudonne oracle", dieudonne, kDieudonneSeconds},
      {"bounded-function coefficient oracle", lemma2, 0.0},
      {"definition consistency", definitions, 0.0},
      {"figure data", figure_data, 0.0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string timing = num(secs) + " s";
    if (criteria[i].seconds > 0.0) {
      timing += " (limit " + num(criteria[i].seconds) + " s)";
      if (secs >= criteria[i].seconds) out.pass = false;
    }
    if (!out.pass) ++failed;
    std::printf("%s  AC%-2zu %s: %s; %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, out.detail.c_str(),
                timing.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
