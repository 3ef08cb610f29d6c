#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "krl/probe.hpp"
#include "krl/tricomi.hpp"

using namespace krl;

namespace {
const std::vector<double> kRadii = {1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125};
Evaluable tricomi_field(double A = 1.0) {
  return [A](const KineticPoint& z) { return eval_tricomi({A, 3}, z.x[0], z.v[0]); };
}
}  // namespace

TEST(Probe, Halton) {
  auto h = halton3(1);
  EXPECT_EQ(h[0], 0.5);
  EXPECT_NEAR(h[1], 1.0 / 3.0, 1e-16);
  EXPECT_NEAR(h[2], 0.2, 1e-16);
}

TEST(Probe, InSpaceIsExact) {
  Evaluable f = [](const KineticPoint& z) { return 1 + z.t * z.v[0] - 3 * z.x[0] * z.v[0] * z.v[0] + z.v[0] * z.t * z.t; };
  for (auto z0 : {origin(1), point1(0.3, 0.2, -0.4)}) {
    EXPECT_LE(best_approx_error(f, z0, 0.5, PolySpaceSpec::full(5)), 1e-9);
    auto fit = exponent_fit(f, z0, PolySpaceSpec::full(5), {1, 0.5, 0.25, 0.125});
    EXPECT_TRUE(fit.exact);
    EXPECT_TRUE(std::isinf(fit.slope));
  }
  EXPECT_THROW(best_approx_error(f, origin(1), 0.5, PolySpaceSpec::full(5), 20), std::invalid_argument);
}

TEST(Probe, TricomiPlateauAtGrazingOrigin) {
  auto f = tricomi_field();
  std::vector<double> q;
  for (double r : kRadii) q.push_back(best_approx_error(f, origin(1), r, PolySpaceSpec::full(5)) / std::pow(r, 5));
  auto sorted = q;
  std::sort(sorted.begin(), sorted.end());
  const double med = 0.5 * (sorted[2] + sorted[3]);
  for (double v : q) {
    EXPECT_LE(v, 2 * med);
    EXPECT_GE(v, med / 2);
  }
  auto fit = exponent_fit(f, origin(1), PolySpaceSpec::full(5), kRadii);
  EXPECT_NEAR(fit.slope, 5.0, 0.1);
  EXPECT_TRUE(fit.plateau);
  const double r = kRadii.back();
  const double aug = best_approx_error(f, origin(1), r, PolySpaceSpec::tricomi_augmented(1.0));
  EXPECT_LE(aug, q.back() * std::pow(r, 5) / 20);
}

TEST(Probe, NestedSpacesOnSmoothField) {
  Evaluable f = [](const KineticPoint& z) { return std::exp(z.x[0] - z.v[0]) * std::cos(z.t + z.v[0]); };
  for (auto z0 : {origin(1), point1(0, 0.4, 0.3)})
    for (double r : {1.0, 0.5, 0.25}) {
      const double e3 = best_approx_error(f, z0, r, PolySpaceSpec::full(3));
      const double e4 = best_approx_error(f, z0, r, PolySpaceSpec::full(4));
      const double e5 = best_approx_error(f, z0, r, PolySpaceSpec::full(5));
      EXPECT_LE(e5, e4);
      EXPECT_LE(e4, e3);
    }
}

TEST(Probe, ScalingCovariance) {
  Evaluable f = [](const KineticPoint& z) { return std::sin(z.x[0] + z.v[0] * z.v[0]) + z.t * z.v[0]; };
  // frame_map(z0, s, .) maps {x > 0} onto itself only when z0 has x = v = 0.
  const auto z0 = point1(0.1, 0.0, 0.0);
  const double s = 0.5;
  Evaluable g = [&](const KineticPoint& z) { return f(frame_map(z0, s, z)); };
  for (double r : {1.0, 0.5}) {
    const double eg = best_approx_error(g, point1(0, 0, 0), r, PolySpaceSpec::full(4));
    const double ef = best_approx_error(f, z0, s * r, PolySpaceSpec::full(4));
    EXPECT_NEAR(eg, ef, 1e-6 * (1 + ef));
  }
}

TEST(Probe, TauRecovery) {
  auto T = tricomi_field();
  Evaluable f = [&](const KineticPoint& z) { return 3.7 * T(z) + 1 + z.v[0] * z.v[0] - 2 * z.x[0] * z.v[0] + z.t; };
  auto est = gamma0_tricomi_coefficient(f, origin(1), 1.0, {0.5, 0.25, 0.125});
  EXPECT_NEAR(est.tau, 3.7, 1e-3);
  EXPECT_FALSE(est.unstable);
  Evaluable poly = [](const KineticPoint& z) { return 2 + z.x[0] * z.v[0] * z.v[0] - z.v[0] * z.v[0] * z.v[0] * z.v[0]; };
  EXPECT_NEAR(gamma0_tricomi_coefficient(poly, origin(1), 1.0, {0.5, 0.25}).tau, 0.0, 1e-6);
  EXPECT_THROW(gamma0_tricomi_coefficient(poly, point1(0, 0.1, 0), 1.0, {0.5}), std::invalid_argument);
}

TEST(Probe, ExponentFitValidation) {
  auto f = tricomi_field();
  EXPECT_THROW(exponent_fit(f, origin(1), PolySpaceSpec::full(5), {1, 0.5, 0.25}), std::invalid_argument);
  EXPECT_THROW(exponent_fit(f, origin(1), PolySpaceSpec::full(5), {1, 0.5, 0.5, 0.25}), std::invalid_argument);
}
