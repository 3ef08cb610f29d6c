#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "krl/geometry.hpp"

using namespace krl;

namespace {

KineticPoint random_point(std::mt19937_64& rng, std::size_t n, double s = 2.0) {
  std::uniform_real_distribution<double> u(-s, s);
  Vec x(n), v(n);
  for (auto& c : x) c = u(rng);
  for (auto& c : v) c = u(rng);
  return make_point(u(rng), x, v);
}

double gap(const KineticPoint& a, const KineticPoint& b) {
  double g = std::fabs(a.t - b.t);
  for (std::size_t i = 0; i < a.dim(); ++i) g = std::max({g, std::fabs(a.x[i] - b.x[i]), std::fabs(a.v[i] - b.v[i])});
  return g;
}

}  // namespace

TEST(Group, Examples) {
  auto z = compose(point1(1, 2, 3), point1(1, 1, 1));
  EXPECT_EQ(gap(z, point1(2, 6, 4)), 0.0);
  EXPECT_EQ(gap(inverse(point1(1, 1, 1)), point1(-1, 0, -1)), 0.0);
  EXPECT_EQ(gap(scale(2, point1(1, 1, 1)), point1(4, 8, 2)), 0.0);
  EXPECT_EQ(gap(frame_map(point1(1, 2, 3), 2, point1(1, 1, 1)), point1(5, 22, 5)), 0.0);
  EXPECT_EQ(gap(frame_map(point1(1, 2, 3), 1, origin(1)), point1(1, 2, 3)), 0.0);
}

TEST(Group, NotCommutative) {
  auto a = point1(1, 0, 0), b = point1(0, 0, 1);
  EXPECT_GT(gap(compose(a, b), compose(b, a)), 0.5);
}

TEST(Group, ValidationErrors) {
  EXPECT_THROW(make_point(0, {1.0}, {1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(make_point(NAN, {1.0}, {1.0}), std::invalid_argument);
  EXPECT_THROW(scale(0.0, point1(1, 1, 1)), std::invalid_argument);
  EXPECT_THROW(compose(point1(0, 0, 0), origin(2)), std::invalid_argument);
}

TEST(Group, RandomLaws) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ur(0.1, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + i % 3;
    auto a = random_point(rng, n), b = random_point(rng, n), c = random_point(rng, n);
    EXPECT_LT(gap(compose(compose(a, b), c), compose(a, compose(b, c))), 1e-12 * 100);
    EXPECT_LT(gap(compose(a, inverse(a)), origin(n)), 1e-12 * 10);
    EXPECT_LT(gap(compose(inverse(a), a), origin(n)), 1e-12 * 10);
    const double r = ur(rng), s = ur(rng);
    auto lhs = scale(r, scale(s, a)), rhs = scale(r * s, a);
    EXPECT_LT(gap(lhs, rhs), 1e-12 * (1 + std::pow(r * s, 3) * 10));
    auto back = frame_unmap(b, r, frame_map(b, r, a));
    EXPECT_LT(gap(back, a), 1e-9);
  }
}

TEST(Cylinder, Examples) {
  CylinderSpec c{origin(1), 1.0, Sided::TwoSided};
  EXPECT_TRUE(cylinder_contains(c, origin(1)));
  EXPECT_TRUE(cylinder_contains(c, point1(0.5, 0.9, 0.5)));
  EXPECT_FALSE(cylinder_contains(c, point1(0.5, 1.1, 0.5)));
  EXPECT_FALSE(cylinder_contains(c, point1(1.0, 0.0, 0.0)));  // strict
  CylinderSpec past{origin(1), 1.0, Sided::OneSidedPast};
  EXPECT_TRUE(cylinder_contains(past, point1(0.0, 0.0, 0.0)));
  EXPECT_FALSE(cylinder_contains(past, point1(0.1, 0.0, 0.0)));
  EXPECT_TRUE(cylinder_contains(past, point1(-0.9, 0.0, 0.0)));
}

TEST(Cylinder, FrameMapTransportsMembership) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ur(0.2, 3.0);
  for (int i = 0; i < 1000; ++i) {
    auto z0 = random_point(rng, 1), z = random_point(rng, 1), z1 = random_point(rng, 1);
    const double r = ur(rng), R = ur(rng);
    CylinderSpec small{origin(1), R / r, Sided::TwoSided};
    CylinderSpec big{z0, R, Sided::TwoSided};
    EXPECT_EQ(cylinder_contains(small, z), cylinder_contains(big, frame_map(z0, r, z)));
    CylinderSpec c1{z1, 1.3, Sided::TwoSided};
    CylinderSpec c1m{frame_map(z0, 1.0, z1), 1.3, Sided::TwoSided};
    EXPECT_EQ(cylinder_contains(c1, z), cylinder_contains(c1m, frame_map(z0, 1.0, z)));
  }
}

TEST(Distance, Examples) {
  EXPECT_NEAR(kinetic_distance(origin(1), origin(1)), 0.0, 1e-9);
  EXPECT_NEAR(kinetic_distance(origin(1), point1(0, 0, 1)), 0.5, 1e-9);
  EXPECT_NEAR(kinetic_distance(origin(1), point1(1, 0, 0)), 1.0, 1e-9);
  EXPECT_THROW(kinetic_distance(origin(1), point1(0, 0, 1), 0.0), std::invalid_argument);
}

TEST(Distance, SymmetryScalingInvarianceTriangle) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ur(0.1, 10.0);
  const double tol = 1e-9;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + i % 3;
    auto a = random_point(rng, n), b = random_point(rng, n), c = random_point(rng, n);
    const double dab = kinetic_distance(a, b, tol);
    EXPECT_NEAR(dab, kinetic_distance(b, a, tol), 2 * tol);
    const double r = ur(rng);
    EXPECT_NEAR(kinetic_distance(scale(r, a), scale(r, b), tol), r * dab, 2 * tol * std::max(1.0, r));
    EXPECT_NEAR(kinetic_distance(compose(c, a), compose(c, b), tol), dab, 2 * tol);
    // d_l is a quasi-distance; the triangle inequality holds up to the comparability constant.
    EXPECT_LE(dab, 2.0 * (kinetic_distance(a, c, tol) + kinetic_distance(c, b, tol)) + tol);
  }
}

TEST(Distance, BallCylinderSandwichAndComparability) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ur(0.05, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + i % 2;
    auto z2 = random_point(rng, n), z1 = random_point(rng, n, 1.0);
    const double r = ur(rng);
    const double d = kinetic_distance(z1, z2);
    if (cylinder_contains({z2, r, Sided::TwoSided}, z1)) EXPECT_LE(d, r + 1e-9);
    if (d < r) EXPECT_TRUE(cylinder_contains({z2, 2 * r, Sided::TwoSided}, z1));
    double dx = 0, dv = 0;
    for (std::size_t k = 0; k < n; ++k) {
      dx += std::pow(z1.x[k] - z2.x[k] - (z1.t - z2.t) * z1.v[k], 2);
      dv += std::pow(z1.v[k] - z2.v[k], 2);
    }
    const double m = std::max({std::sqrt(std::fabs(z1.t - z2.t)), std::cbrt(std::sqrt(dx)), std::sqrt(dv)});
    EXPECT_LE(d, m + 1e-9);
    EXPECT_LE(m, 4.0 * d + 1e-9);
  }
}

TEST(Distance, InclusionLemma) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1), ur(0.05, 1.0), uR(1.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    auto z0 = random_point(rng, 1);
    auto z1 = point1(0.0, u(rng), u(rng));
    const double r = ur(rng), R = uR(rng);
    const double nz1 = std::max(std::cbrt(std::fabs(z1.x[0])), std::fabs(z1.v[0]));
    auto c = frame_map(z0, r, z1);
    const double rr = R * r;
    auto z = point1(c.t + rr * rr * u(rng), 0, c.v[0] + rr * u(rng));
    z.x[0] = c.x[0] + (z.t - c.t) * c.v[0] + rr * rr * rr * u(rng);
    ASSERT_TRUE(cylinder_contains({c, rr, Sided::TwoSided}, z));
    EXPECT_TRUE(cylinder_contains({z0, 2 * R * r * (1 + nz1), Sided::TwoSided}, z));
  }
}

TEST(Reflection, Basics) {
  HalfSpaceDomain d1{1};
  auto z = make_point(0, {0.0, 0.0}, {1.0, 2.0});
  auto rz = reflect_velocity(z, d1);
  EXPECT_EQ(rz.v[0], 1.0);
  EXPECT_EQ(rz.v[1], -2.0);
  EXPECT_EQ(gap(reflect_velocity(rz, d1), z), 0.0);
  HalfSpaceDomain d0{0};
  auto g = point1(0, 1, 0);
  EXPECT_EQ(gap(reflect_velocity(g, d0), g), 0.0);
}

TEST(Reflection, ReflectedSetMembership) {
  HalfSpaceDomain d{0};
  CylinderSpec c{point1(0, 0.5, 0.5), 0.3, Sided::TwoSided};
  EXPECT_TRUE(reflected_set_membership(c, d, point1(0, 0.5, 0.5)));
  EXPECT_TRUE(reflected_set_membership(c, d, point1(0, 0.5, -0.5)));
  EXPECT_FALSE(reflected_set_membership(c, d, point1(0, 0.5, 0.0)));
  // Center on the grazing set: H_r is reflection invariant.
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1, 1);
  CylinderSpec g{point1(0.2, 0, 0), 0.8, Sided::TwoSided};
  for (int i = 0; i < 1000; ++i) {
    auto z = point1(0.2 + u(rng), std::fabs(u(rng)), u(rng));
    const bool in = half_cylinder_contains(g, d, z);
    EXPECT_EQ(in, half_cylinder_contains(g, d, reflect_velocity(z, d)));
    EXPECT_EQ(reflected_set_membership(g, d, z) && z.x[0] > 0, in);
  }
}

TEST(Distance, SmallTimeGapStaysSymmetric) {
  // For tiny |dt| the x-constraint is a ball of radius r^3 / |dt| far from the velocity balls.
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2, 2), us(-1e-2, 1e-2);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 2 + i % 2;
    auto a = random_point(rng, n), b = random_point(rng, n);
    b.t = a.t + us(rng) * std::pow(10.0, -(i % 6));
    const double d1 = kinetic_distance(a, b, 1e-12), d2 = kinetic_distance(b, a, 1e-12);
    EXPECT_NEAR(d1, d2, 1e-10 * std::max(1.0, d1));
  }
  // Reference minimax value from an independent brute-force minimization.
  auto a = make_point(1.5111495752723214, {-0.41671225144325352, 0.73922720857246604},
                      {1.4655904778452946, -0.42758474378840328});
  auto b = make_point(1.5071063804288398, {0.40600430807487786, -1.5328582243706446},
                      {1.3445709272570321, 0.84167889533261997});
  EXPECT_NEAR(kinetic_distance(a, b, 1e-12), 1.3415891683705, 1e-11);
}
