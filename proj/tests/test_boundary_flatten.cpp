#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "krl/boundary_flatten.hpp"

using namespace krl;

namespace {

std::vector<Eigen::MatrixXd> to_dyn(const std::array<Mat2, 2>& h) { return {Eigen::MatrixXd(h[0]), Eigen::MatrixXd(h[1])}; }

Eigen::MatrixXd diag2(double a, double b) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST(Flatten, FlatDomainIsIdentity) {
  auto fm = build_flatten(GraphDomain::flat());
  for (double a : {-0.2, 0.0, 0.13})
    for (double b : {-0.1, 0.05, 0.2}) {
      const Vec2 x(a, b);
      EXPECT_LT((fm.phi(x) - x).norm(), 1e-15);
      EXPECT_LT((fm.d_phi(x) - Mat2::Identity()).norm(), 1e-15);
      for (const auto& H : fm.d2_phi(x)) EXPECT_LT(H.norm(), 1e-12);
    }
  EXPECT_EQ(reflection_commutation_check(fm), 0.0);
}

TEST(Flatten, ParabolaJacobianAtOrigin) {
  auto fm = build_flatten(GraphDomain::parabola());
  EXPECT_LT(fm.phi(Vec2::Zero()).norm(), 1e-15);
  EXPECT_LT((fm.d_phi(Vec2::Zero()) - Mat2::Identity()).norm(), 1e-10);
  // Jacobian by differences of phi itself.
  const double h = 1e-6;
  Mat2 J;
  for (int k = 0; k < 2; ++k) {
    Vec2 e = Vec2::Zero();
    e(k) = h;
    J.col(k) = (fm.phi(e) - fm.phi(-e)) / (2 * h);
  }
  EXPECT_LT((J - Mat2::Identity()).norm(), 1e-9);
}

TEST(Flatten, BoundaryMapsToFlatLine) {
  for (auto dom : {GraphDomain::parabola(), GraphDomain::parabola(-2.0), GraphDomain::cubic()}) {
    auto fm = build_flatten(dom);
    EXPECT_LT(boundary_image_gap(fm), 1e-10) << dom.name;
    EXPECT_LT(inverse_consistency(fm), 1e-10) << dom.name;
  }
}

TEST(Flatten, NormalAndTangentialColumns) {
  auto fm = build_flatten(GraphDomain::parabola());
  for (double y1 : {-0.2, 0.0, 0.1, 0.25}) {
    const Mat2 J = fm.d_phi_inverse(Vec2(y1, 0.0));
    const Vec2 n = fm.normal(y1);
    EXPECT_LT((J.col(1) + n).norm(), 1e-14);
    EXPECT_LT(std::fabs(J.col(0).dot(n)), 1e-14);
    // (Dphi^{-1})^T grad d = e_2 with grad d = -n.
    EXPECT_LT((J.transpose() * (-n) - Vec2(0, 1)).norm(), 1e-14);
  }
}

TEST(Flatten, ReflectionCommutes) {
  for (auto dom : {GraphDomain::parabola(), GraphDomain::parabola(3.0), GraphDomain::cubic(2.0)}) {
    auto fm = build_flatten(dom);
    EXPECT_LE(reflection_commutation_check(fm, 100), 1e-8) << dom.name;
    EXPECT_EQ(boundary_region_mismatches(fm, 100), 0) << dom.name;
  }
}

TEST(Flatten, SpecularInvariancePreserved) {
  auto fm = build_flatten(GraphDomain::parabola());
  auto invariant = [&fm](const Vec2& x, const Vec2& v) {
    const Vec2 n = fm.normal(x(0));
    const Vec2 t(-n(1), n(0));
    return std::sin(x(0)) + std::pow(v.dot(n), 2) + std::pow(v.dot(t), 3);
  };
  auto odd = [&fm](const Vec2& x, const Vec2& v) { return std::pow(v.dot(fm.normal(x(0))), 3) + x(0); };
  for (int k = 0; k < 50; ++k) {
    const Vec2 y(-0.25 + 0.5 * k / 49.0, 0.0);
    const Vec2 w(std::cos(k), 0.5 + std::sin(2.0 * k));
    const Vec2 wr(w(0), -w(1));
    const Vec2 x = fm.phi_inverse(y);
    const Mat2 J = fm.d_phi_inverse(y);
    EXPECT_NEAR(invariant(x, J * w), invariant(x, J * wr), 1e-12);
    if (std::fabs(w(1)) > 0.1) EXPECT_GT(std::fabs(odd(x, J * w) - odd(x, J * wr)), 1e-4);
  }
}

TEST(Flatten, InjectivityFailureDetected) {
  EXPECT_THROW(build_flatten(GraphDomain::parabola(10.0), 0.25), FlattenError);
  EXPECT_NO_THROW(build_flatten(GraphDomain::parabola(10.0), 0.05));
  GraphDomain tilted{[](double s) { return s; }, [](double) { return 1.0; }, [](double) { return 0.0; }, "tilted"};
  EXPECT_THROW(build_flatten(tilted), std::invalid_argument);
}

TEST(Flatten, MixedHessianOfParabola) {
  for (double kappa : {1.0, -0.5, 2.0}) {
    auto fm = build_flatten(GraphDomain::parabola(kappa));
    const auto H = fm.d2_phi(Vec2::Zero());
    EXPECT_NEAR(H[0](0, 1), kappa, 1e-8);
    EXPECT_NEAR(H[1](0, 0), -kappa, 1e-8);
    EXPECT_NEAR(H[0](1, 1), 0.0, 1e-8);
    EXPECT_NEAR(H[1](1, 1), 0.0, 1e-8);
  }
  const auto Hc = build_flatten(GraphDomain::cubic()).d2_phi(Vec2::Zero());
  EXPECT_NEAR(Hc[0](0, 1), 0.0, 1e-8);
}

TEST(Transform, FlatDomainKeepsCoefficients) {
  auto fm = build_flatten(GraphDomain::flat());
  Coefficients k;
  k.a << 2.0, 0.3, 0.3, 1.0;
  k.b = Vec2(0.5, -1.0);
  k.c = 0.25;
  k.h = 3.0;
  auto t = transform_coefficients(fm, k, Vec2(0.1, 0.05), Vec2(1.0, -2.0));
  EXPECT_LT((t.a - k.a).norm(), 1e-12);
  EXPECT_LT((t.b - k.b).norm(), 1e-9);
  EXPECT_EQ(t.c, 0.25);
  EXPECT_EQ(t.h, 3.0);
}

TEST(Transform, IdentityAtOriginAndLaplacianDrift) {
  auto fm = build_flatten(GraphDomain::parabola());
  const Vec2 v(0.7, -0.4);
  auto t0 = transform_coefficients(fm, Coefficients{}, Vec2::Zero(), v);
  EXPECT_LT((t0.a - Mat2::Identity()).norm(), 1e-10);
  const auto H = fm.d2_phi(Vec2::Zero());
  for (int i = 0; i < 2; ++i) EXPECT_NEAR(t0.b(i), v.dot(H[i] * v), 1e-12);
  // With phi^1 ~ x1 + x1 x2 and phi^2 ~ x2 - x1^2/2: b~ = (2 v1 v2, -v1^2).
  EXPECT_NEAR(t0.b(0), 2 * v(0) * v(1), 1e-8);
  EXPECT_NEAR(t0.b(1), -v(0) * v(0), 1e-8);
}

TEST(Transform, DiagonalFirstOrderExpansion) {
  auto fm = build_flatten(GraphDomain::parabola(1.5));
  const auto H = fm.d2_phi(Vec2::Zero());
  for (double s : {1e-2, 5e-3, 2.5e-3}) {
    const Vec2 x(0.6 * s, 0.8 * s + fm.domain().gamma(0.6 * s));
    auto t = transform_coefficients(fm, Coefficients{}, x, Vec2(1, 1));
    for (int i = 0; i < 2; ++i) {
      double lin = 1.0;
      for (int k = 0; k < 2; ++k) lin += 2.0 * H[i](i, k) * x(k);
      EXPECT_LT(std::fabs(t.a(i, i) - lin), 20.0 * x.squaredNorm());
    }
  }
}

// With |Dphi(x) - I| <= L |x|, L a bound for the Hessians, a~ = J a J^T stays within (1 +- delta) of the
// ellipticity constants of a, delta = (1 + L rho)^2 - 1.
TEST(Transform, EllipticityBoundsOnPatch) {
  auto fm = build_flatten(GraphDomain::parabola());
  Coefficients k;
  k.a << 1.5, 0.2, 0.2, 0.8;
  const Eigen::SelfAdjointEigenSolver<Mat2> base(k.a);
  const double lam = base.eigenvalues()(0), Lam = base.eigenvalues()(1);
  for (double rho : {0.2, 0.1, 0.05}) {
    std::vector<Vec2> pts;
    for (int a = 0; a < 9; ++a)
      for (int b = 0; b < 9; ++b) {
        const double x1 = rho * (-0.7 + 0.175 * a);
        pts.emplace_back(x1, fm.domain().gamma(x1) + 0.7 * rho * b / 8.0);
      }
    double L = 0.0, R = 0.0;
    for (const auto& x : pts) {
      const auto H = fm.d2_phi(x);
      L = std::max(L, std::sqrt(H[0].squaredNorm() + H[1].squaredNorm()));
      R = std::max(R, x.norm());
    }
    const double delta = std::pow(1.0 + L * R, 2) - 1.0;
    for (const auto& x : pts) {
      auto t = transform_coefficients(fm, k, x, Vec2(1, 0));
      EXPECT_LT((t.a - t.a.transpose()).norm(), 1e-14);
      const Eigen::SelfAdjointEigenSolver<Mat2> es(t.a);
      EXPECT_GE(es.eigenvalues()(0), lam * (1 - delta));
      EXPECT_LE(es.eigenvalues()(1), Lam * (1 + delta));
    }
  }
}

TEST(Counterexample, FlatDomainNeverObstructs) {
  auto fm = build_flatten(GraphDomain::flat());
  auto H = to_dyn(fm.d2_phi(Vec2::Zero()));
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 50; ++k) {
    Eigen::MatrixXd hv(2, 2);
    hv << u(rng), 0, 0, u(rng);
    hv(0, 1) = hv(1, 0) = u(rng);
    EXPECT_FALSE(counterexample_condition(H, hv).violated);
  }
}

TEST(Counterexample, ExampleEquivalence) {
  const auto hv = diag2(2.0, -2.0);  // v1^2 - v2^2
  for (auto dom : {GraphDomain::flat(), GraphDomain::cubic(), GraphDomain::parabola(), GraphDomain::parabola(-0.3)}) {
    auto fm = build_flatten(dom);
    auto H = to_dyn(fm.d2_phi(Vec2::Zero()));
    auto r = counterexample_condition(H, hv);
    const bool mixed_nonzero = std::fabs(H[0](0, 1)) > 1e-6;
    EXPECT_EQ(r.violated, mixed_nonzero) << dom.name;
    EXPECT_NEAR(r.lhs, 4.0 * H[0](0, 1), 1e-12);
    EXPECT_NEAR(r.rhs, 0.0, 1e-12);
  }
}

TEST(Counterexample, SizeChecks) {
  std::vector<Eigen::MatrixXd> H{Eigen::MatrixXd::Zero(2, 2), Eigen::MatrixXd::Zero(2, 2)};
  EXPECT_THROW(counterexample_condition(H, Eigen::MatrixXd::Zero(3, 3)), std::invalid_argument);
  EXPECT_THROW(counterexample_condition({Eigen::MatrixXd::Zero(1, 1)}, Eigen::MatrixXd::Zero(1, 1)),
               std::invalid_argument);
}

TEST(LimitRhs, ZeroHessiansGiveZero) {
  std::vector<Eigen::MatrixXd> H{Eigen::MatrixXd::Zero(2, 2), Eigen::MatrixXd::Zero(2, 2)};
  Eigen::MatrixXd alpha(2, 2);
  alpha << 1, 0.5, -2, 3;
  EXPECT_TRUE(limit_rhs_p1(H, alpha).is_zero());
}

TEST(LimitRhs, FrozenSingleMixedEntry) {
  std::vector<Eigen::MatrixXd> H{Eigen::MatrixXd::Zero(2, 2), Eigen::MatrixXd::Zero(2, 2)};
  H[0](0, 1) = H[0](1, 0) = 1.0;
  auto p = limit_rhs_p1(H, diag2(1.0, 0.0));
  KineticPolynomial expect = 4 * KineticPolynomial::var_x(2, 1) -
                             4 * KineticPolynomial::var_v(2, 0) * KineticPolynomial::var_v(2, 0) *
                                 KineticPolynomial::var_v(2, 1);
  EXPECT_EQ(p, expect);
  auto r = restrict_to_normal_line(p);
  EXPECT_EQ(r.alpha, 4);
  EXPECT_EQ(r.beta, 0);
  EXPECT_TRUE(r.obstructs());
}

// The restriction test on p1 and the condition on the velocity Hessian agree.
TEST(LimitRhs, RestrictionMatchesCondition) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> u(-3, 3);
  int obstructing = 0;
  for (int trial = 0; trial < 300; ++trial) {
    for (std::size_t n : {2u, 3u}) {
      const auto N = static_cast<Eigen::Index>(n);
      std::vector<Eigen::MatrixXd> H(n, Eigen::MatrixXd::Zero(N, N));
      for (auto& M : H)
        for (Eigen::Index a = 0; a < N; ++a)
          for (Eigen::Index b = a; b < N; ++b) M(a, b) = M(b, a) = u(rng) * (trial % 3 == 0 ? 0 : 1);
      Eigen::MatrixXd alpha(N, N);
      for (Eigen::Index a = 0; a < N; ++a)
        for (Eigen::Index b = 0; b < N; ++b) alpha(a, b) = 0.5 * u(rng);
      const Eigen::MatrixXd hv = alpha + alpha.transpose();
      auto r = restrict_to_normal_line(limit_rhs_p1(H, alpha));
      EXPECT_FALSE(r.other_terms);
      EXPECT_EQ(r.obstructs(), counterexample_condition(H, hv).violated);
      obstructing += r.obstructs();
    }
  }
  EXPECT_GT(obstructing, 100);
}
