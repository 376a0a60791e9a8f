#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gft/bounds.hpp"
#include "gft/proof_checks.hpp"

using namespace gft;

namespace {

constexpr double kPi = std::numbers::pi;

ClassParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> th(-1.4, 1.4), lg(std::log(0.05), std::log(3.0));
  return ClassParams(th(rng), std::exp(lg(rng)));
}

Complex random_in_disk(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmax * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
}

}  // namespace

TEST(F1, Examples) {
  const ClassParams p(0.0, 1.0);  // |2 - Γ| = 3
  EXPECT_NEAR(F1(p, 0.5, 0.5), 6.0, 1e-14);
  for (double r : {0.1, 0.5, 0.9}) EXPECT_NEAR(F1(p, r, 1e-12), 1.0 / (1.0 - r * r), 1e-10);
}

TEST(F1, PartialDerivativeMatchesFiniteDifferences) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  const double h = 1e-6;
  for (int i = 0; i < 500; ++i) {
    const ClassParams p = random_params(rng);
    const double r = u(rng);
    const double t = r * u(rng);
    const double fd = (F1(p, r, t + h) - F1(p, r, t - h)) / (2.0 * h);
    const double d = F1_partial_t(p, r, t);
    ASSERT_NEAR(d, fd, 1e-5 * std::max(1.0, std::abs(d)));
  }
}

TEST(F1, DiagonalMatchesPointwiseBound) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 0.999);
  for (int i = 0; i < 1000; ++i) {
    const ClassParams p = random_params(rng);
    const double r = u(rng);
    if (r == 0.0) continue;
    const double lhs = std::abs(p.Gamma()) * F1(p, r, r);
    const double rhs = th1_pointwise_bound(p, r);
    ASSERT_NEAR(lhs, rhs, 1e-10 * rhs);
  }
}

TEST(VerifyF1Monotone, NonNegativeOnGrid) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const ClassParams p = random_params(rng);
    const auto rep = verify_F1_monotone(p, 100);
    EXPECT_GE(rep.min_partial, -1e-12);
    EXPECT_LT(rep.max_diagonal_rel_error, 1e-10);
    EXPECT_GT(rep.argmin_r, 0.0);
    EXPECT_LE(rep.argmin_t, rep.argmin_r);
  }
  EXPECT_THROW(verify_F1_monotone(ClassParams(0.0, 1.0), 9), std::invalid_argument);
}

TEST(F2, ExamplesAndDerivative) {
  EXPECT_DOUBLE_EQ(F2(1.0, 0.5, 0.5), 1.5);
  for (double r : {0.0, 0.3, 0.9}) EXPECT_NEAR(F2(1.0, 1e-15, r), 1.0 + 2.0 * r, 1e-14);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> g(0.05, 3.0), a(0.01, 0.99), r(0.0, 0.99);
  const double h = 1e-6;
  for (int i = 0; i < 500; ++i) {
    const double gg = g(rng), aa = a(rng), rr = r(rng);
    const double fd = (F2(gg, aa, rr + h) - F2(gg, aa, rr - h)) / (2.0 * h);
    ASSERT_NEAR(F2_prime(gg, aa, rr), fd, 1e-5 * std::max(1.0, fd));
  }
}

TEST(VerifyF2Increasing, Examples) {
  auto rep = verify_F2_increasing(1.0, 0.5, 1000);
  EXPECT_GT(rep.min_derivative, 0.0);
  EXPECT_NEAR(rep.value_at_r_max, 3.0, 1e-3);
  EXPECT_LE(rep.value_at_r_max, rep.limit);
  EXPECT_EQ(rep.limit, 3.0);

  rep = verify_F2_increasing(0.1, 0.9, 1000);
  EXPECT_GE(rep.min_derivative, 0.1);

  EXPECT_THROW(verify_F2_increasing(1.0, 0.0, 100), std::invalid_argument);
  EXPECT_THROW(verify_F2_increasing(1.0, 1.0, 100), std::invalid_argument);
  EXPECT_THROW(verify_F2_increasing(0.0, 0.5, 100), std::invalid_argument);
}

TEST(VerifyF2Increasing, DerivativeAtLeastGamma) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> g(0.05, 3.0), a(0.01, 0.99);
  for (int i = 0; i < 50; ++i) {
    const double gg = g(rng);
    ASSERT_GE(verify_F2_increasing(gg, a(rng), 500).min_derivative, gg - 1e-12);
  }
}

TEST(Dieudonne, Examples) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    const DiskPoint z0(random_in_disk(rng, 0.99));
    if (z0.abs() < 1e-3) continue;
    const auto sq = dieudonne_check(Monomial{2}, z0);
    EXPECT_NEAR(sq.lhs, z0.abs(), 1e-14);
    EXPECT_NEAR(sq.slack, 0.0, 1e-10);

    const auto id = dieudonne_check(Rotation{1.0}, z0);
    EXPECT_NEAR(id.lhs, 0.0, 1e-15);
    EXPECT_NEAR(id.rhs, 0.0, 1e-12);

    const auto half = dieudonne_check(Rotation{0.5}, z0);
    const double r = z0.abs();
    EXPECT_NEAR(half.lhs, 0.0, 1e-15);
    EXPECT_NEAR(half.rhs, (r * r - r * r / 4.0) / (r * (1.0 - r * r)), 1e-12 * half.rhs);
    EXPECT_GT(half.slack, 0.0);
  }
}

TEST(Dieudonne, BlaschkeEqualityAndGeneralInequality) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi), lam(0.0, 0.999);
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint z0(random_in_disk(rng, 0.95));
    if (z0.abs() < 1e-3) continue;
    const auto b = dieudonne_check(BlaschkeDeg2Fix0{random_in_disk(rng, 0.9), ang(rng)}, z0);
    ASSERT_NEAR(b.slack, 0.0, 1e-10);
    const auto rot = dieudonne_check(Rotation{std::polar(lam(rng), ang(rng))}, z0);
    ASSERT_GT(rot.slack, 0.0);
    const auto mono = dieudonne_check(Monomial{3 + static_cast<int>(rng() % 3)}, z0);
    ASSERT_GE(mono.slack, -1e-12);
  }
}

TEST(Dieudonne, Errors) {
  EXPECT_THROW(dieudonne_check(Automorphism{0.3, 0.0}, DiskPoint(0.5, 0.0)), std::invalid_argument);
  EXPECT_THROW(dieudonne_check(Monomial{2}, DiskPoint(0.0, 0.0)), std::invalid_argument);
}

TEST(BoundedCoefficient, EqualityCases) {
  auto rep = lemma2_check(BoundedFunction::of(Automorphism{0.5, 0.0}), DiskPoint(0.0, 0.0), 1);
  EXPECT_NEAR(rep.pointwise.lhs, 0.75, 1e-15);
  EXPECT_NEAR(rep.pointwise.slack, 0.0, 1e-12);
  EXPECT_NEAR(rep.coefficient.lhs, 0.75, 1e-15);
  EXPECT_NEAR(rep.coefficient.slack, 0.0, 1e-12);

  rep = lemma2_check(BoundedFunction::of(Monomial{2}), DiskPoint(0.0, 0.0), 2);
  EXPECT_NEAR(rep.pointwise.lhs, 1.0, 1e-15);
  EXPECT_NEAR(rep.pointwise.rhs, 1.0, 1e-15);
  EXPECT_NEAR(rep.pointwise.slack, 0.0, 1e-12);
  EXPECT_NEAR(rep.coefficient.slack, 0.0, 1e-12);

  rep = lemma2_check(BoundedFunction::constant(Complex(0.6, 0.0)), DiskPoint(0.4, 0.4), 3);
  EXPECT_EQ(rep.pointwise.lhs, 0.0);
  EXPECT_EQ(rep.coefficient.lhs, 0.0);
}

TEST(BoundedCoefficient, RandomDrawsHaveNonNegativeSlack) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  for (int i = 0; i < 1000; ++i) {
    BoundedFunction f = [&]() {
      switch (i % 5) {
        case 0: return BoundedFunction::of(Automorphism{random_in_disk(rng, 0.9), ang(rng)});
        case 1: return BoundedFunction::of(BlaschkeDeg2Fix0{random_in_disk(rng, 0.9), ang(rng)});
        case 2: return BoundedFunction::of(Rotation{random_in_disk(rng, 1.0)});
        case 3: return BoundedFunction::of(Monomial{1 + static_cast<int>(rng() % 4)});
        default: return BoundedFunction::constant(random_in_disk(rng, 1.0));
      }
    }();
    const DiskPoint z(random_in_disk(rng, 0.95));
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto rep = lemma2_check(f, z, n);
    ASSERT_GE(rep.pointwise.slack, -1e-12) << i;
    ASSERT_GE(rep.coefficient.slack, -1e-12) << i;
  }
}

TEST(BoundedCoefficient, Errors) {
  EXPECT_THROW(lemma2_check(BoundedFunction::of(Monomial{2}), DiskPoint(0.1, 0.0), 0), std::invalid_argument);
  EXPECT_THROW(lemma2_check(BoundedFunction::of(Monomial{2}, 4), DiskPoint(0.1, 0.0), 5), std::invalid_argument);
  EXPECT_THROW(BoundedFunction::constant(Complex(1.0, 1.0)), std::invalid_argument);
}
