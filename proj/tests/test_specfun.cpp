#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "krl/specfun.hpp"
#include "krl/oracle_values.hpp"

using namespace krl;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }
}  // namespace

TEST(Gamma, ClassicalValues) {
  EXPECT_NEAR(gamma_real(1.0), 1.0, 1e-15);
  EXPECT_LT(rel(gamma_real(0.5), std::sqrt(M_PI)), 1e-13);
  EXPECT_LT(rel(gamma_real(-4.0 / 3.0), 2.25 * gamma_real(2.0 / 3.0)), 1e-13);
  EXPECT_LT(rel(gamma_real(-4.0 / 3.0), oracle::gamma_m4_3), 1e-12);
  EXPECT_LT(rel(gamma_real(2.0 / 3.0), oracle::gamma_2_3), 1e-12);
  EXPECT_LT(rel(gamma_real(1.0 / 3.0), oracle::gamma_1_3), 1e-12);
  EXPECT_LT(rel(gamma_real(-1.0 / 3.0), oracle::gamma_m1_3), 1e-12);
  EXPECT_LT(rel(gamma_real(-17.0 / 2.0), oracle::gamma_m17_2), 1e-12);
  EXPECT_LT(rel(gamma_real(19.7), oracle::gamma_19_7), 1e-12);
  EXPECT_LT(rel(gamma_real(-19.3), oracle::gamma_m19p3), 1e-12);
}

TEST(Gamma, PolesFailAndReciprocalVanishes) {
  EXPECT_THROW(gamma_real(0.0), std::domain_error);
  EXPECT_THROW(gamma_real(-3.0), std::domain_error);
  EXPECT_EQ(rgamma(-3.0), 0.0);
  EXPECT_EQ(rgamma(0.0), 0.0);
}

TEST(Gamma, RecurrenceOnGrid) {
  for (double x = -19.75; x < 19.0; x += 0.37) {
    if (x == std::nearbyint(x)) continue;
    EXPECT_LT(rel(gamma_real(x + 1.0), x * gamma_real(x)), 1e-12) << x;
  }
}

TEST(KummerM, ZeroArgumentIsExactlyOne) {
  for (double a : {-3.5, -2.0, 0.0, 1.7})
    for (double b : {0.3, 2.0 / 3.0, 4.5}) EXPECT_EQ(kummer_m(a, b, 0.0).value, 1.0);
}

TEST(KummerM, ExpSpecialCase) { EXPECT_LT(rel(kummer_m(1, 1, 1).value, std::exp(1.0)), 1e-15); }

TEST(KummerM, PolynomialCase) {
  auto e = kummer_m(-2.0, 0.5, 3.0);
  EXPECT_EQ(e.regime, Regime::PolynomialCase);
  // 1 - 2*2*3/... = 1 + (-2)(3)/0.5 + (-2)(-1)(9)/(0.5*1.5*2)
  EXPECT_NEAR(e.value, 1.0 - 12.0 + 12.0, 1e-13);
}

TEST(KummerM, MatchesOracleGrid) {
  for (const auto& row : oracle::kummer_grid) {
    auto e = kummer_m(row.a, row.b, row.z);
    const double diff = std::fabs(e.value - row.m);
    EXPECT_LT(diff, 1e-11 * std::fabs(row.m) + 1e-300) << row.a << " " << row.b << " " << row.z;
    EXPECT_LE(diff, 10.0 * e.est_abs_error + 1e-300) << row.a << " " << row.b << " " << row.z;
  }
}

TEST(KummerM, KummerTransformationAgainstOracle) {
  // e^z M(b-a; b; -z) evaluated via the library agrees with the oracle value of M(a; b; z).
  for (const auto& row : oracle::kummer_grid) {
    const double t = std::exp(row.z) * kummer_m(row.b - row.a, row.b, -row.z).value;
    EXPECT_LT(rel(t, row.m), 1e-11) << row.a << " " << row.b << " " << row.z;
  }
}

TEST(KummerM, OdeResidual) {
  // z M'' + (b - z) M' - a M = 0 with M' = a/b M(a+1; b+1), M'' = a(a+1)/(b(b+1)) M(a+2; b+2).
  for (double a : {-2.3, -0.4, 0.7, 2.9})
    for (double b : {0.35, 2.0 / 3.0, 1.8})
      for (double z : {-12.0, -3.1, -0.2, 0.6, 4.4, 11.0}) {
        const double m = kummer_m(a, b, z).value;
        const double m1 = a / b * kummer_m(a + 1, b + 1, z).value;
        const double m2 = a * (a + 1) / (b * (b + 1)) * kummer_m(a + 2, b + 2, z).value;
        const double scale = std::fabs(z * m2) + std::fabs((b - z) * m1) + std::fabs(a * m);
        EXPECT_LT(std::fabs(z * m2 + (b - z) * m1 - a * m), 1e-8 * std::max(scale, 1.0));
      }
}

TEST(KummerM, DomainErrors) {
  EXPECT_THROW(kummer_m(1.0, -2.0, 1.0), std::domain_error);
  EXPECT_THROW(kummer_m(1.0, 1.5, 800.0), std::overflow_error);
}

TEST(KummerM, AsymptoticOverlapAtForty) {
  for (double a : {-1.5, 0.4, 1.3})
    for (double b : {2.0 / 3.0, 1.6})
      for (double z : {-40.0, 40.0}) {
        const double s = kummer_m(a, b, z).value;
        EXPECT_LT(rel(asymptotic_m(a, b, z), s), 0.03) << a << " " << b << " " << z;
      }
  EXPECT_LT(rel(asymptotic_m(1, 1, 40), std::exp(40.0)), 1e-12);
}

TEST(KummerM, LargeNegativeUsesAsymptotics) {
  auto e = kummer_m(-5.0 / 3.0 + 0.1, 2.0 / 3.0, -2000.0);
  EXPECT_EQ(e.regime, Regime::Asymptotic);
  EXPECT_TRUE(std::isfinite(e.value));
}

TEST(TricomiU, OriginValue) {
  auto e = tricomi_u(-5.0 / 3.0, 2.0 / 3.0, 0.0);
  EXPECT_LT(rel(e.value, oracle::U_m5_3_2_3_at0), 1e-10);
  EXPECT_LT(rel(e.value, gamma_real(1.0 / 3.0) / gamma_real(-4.0 / 3.0)), 1e-12);
}

TEST(TricomiU, MatchesOracleGrid) {
  for (const auto& row : oracle::tricomi_u_grid) {
    auto e = tricomi_u(row.a, row.b, row.z);
    const double diff = std::fabs(e.value - row.u);
    EXPECT_LT(diff, 1e-10 * std::fabs(row.u) + 1e-12) << row.a << " " << row.b << " " << row.z;
    EXPECT_LE(diff, 10.0 * e.est_abs_error + 1e-300) << row.a << " " << row.b << " " << row.z;
  }
}

TEST(TricomiU, TrivialCases) {
  EXPECT_EQ(tricomi_u(0.0, 2.0 / 3.0, 3.0).value, 1.0);
  EXPECT_EQ(tricomi_u(0.0, 2.0 / 3.0, -3.0).value, 1.0);
  EXPECT_THROW(tricomi_u(0.5, 2.0, 1.0), std::domain_error);
  EXPECT_THROW(tricomi_u(0.5, 0.45, -1.0), std::domain_error);
}

TEST(TricomiU, KineticAsymptotics) {
  const double a = 5.0 / 3.0;
  const double neg = tricomi_u(-a, 2.0 / 3.0, -1000.0).value;
  const double pos = tricomi_u(-a, 2.0 / 3.0, 1000.0).value;
  EXPECT_LT(rel(neg / 1e5, oracle::U_kin_ratio_s10_neg), 1e-10);
  EXPECT_LT(rel(pos / 1e5, oracle::U_kin_ratio_s10_pos), 1e-10);
  EXPECT_LT(std::fabs(neg / asymptotic_u_kinetic(a, 10.0) - 1.0), 0.03);
  EXPECT_LT(std::fabs(pos / asymptotic_u_kinetic(a, -10.0) - 1.0), 0.03);
}

TEST(TricomiU, KummerComboAgreesWithConnection) {
  for (double x : {0.05, 0.3, 1.0, 2.0})
    for (double v : {-1.3, -0.4, 0.0, 0.7, 1.5}) {
      const double tau = -v * v * v / (9.0 * x);
      if (std::fabs(tau) > 20) continue;
      const double u = tricomi_u(-5.0 / 3.0, 2.0 / 3.0, tau).value;
      const double expect = -2.0 * std::pow(9.0, 5.0 / 3.0) * std::pow(x, 5.0 / 3.0) * u;
      EXPECT_LT(std::fabs(real_kummer_combo(3, 1.0, x, v) - expect), 1e-11 * (1.0 + std::fabs(expect)));
    }
}
