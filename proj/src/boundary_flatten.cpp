#include "krl/boundary_flatten.hpp"

#include <cmath>

#include <fmt/format.h>

namespace krl {

GraphDomain GraphDomain::flat() {
  return {[](double) { return 0.0; }, [](double) { return 0.0; }, [](double) { return 0.0; }, "flat"};
}

GraphDomain GraphDomain::parabola(double kappa) {
  return {[kappa](double s) { return 0.5 * kappa * s * s; }, [kappa](double s) { return kappa * s; },
          [kappa](double) { return kappa; }, fmt::format("parabola({})", kappa)};
}

GraphDomain GraphDomain::cubic(double c) {
  return {[c](double s) { return c * s * s * s; }, [c](double s) { return 3 * c * s * s; },
          [c](double s) { return 6 * c * s; }, fmt::format("cubic({})", c)};
}

void GraphDomain::validate() const {
  if (!gamma || !dgamma || !d2gamma) throw std::invalid_argument("graph domain: gamma and its derivatives required");
  if (std::fabs(gamma(0.0)) > 1e-14 || std::fabs(dgamma(0.0)) > 1e-14)
    throw std::invalid_argument("graph domain: needs gamma(0) = 0 and gamma'(0) = 0");
}

FlattenMap::FlattenMap(GraphDomain dom, double patch_radius) : dom_(std::move(dom)), patch_(patch_radius) {}

Vec2 FlattenMap::normal(double x1) const {
  const double g1 = dom_.dgamma(x1);
  return Vec2(g1, -1.0) / std::sqrt(1.0 + g1 * g1);
}

Vec2 FlattenMap::phi_inverse(const Vec2& y) const {
  return Vec2(y(0), dom_.gamma(y(0))) - y(1) * normal(y(0));
}

Mat2 FlattenMap::d_phi_inverse(const Vec2& y) const {
  const double g1 = dom_.dgamma(y(0)), g2 = dom_.d2gamma(y(0));
  const double s = std::sqrt(1.0 + g1 * g1);
  const double k = y(1) * g2 / (s * s * s);
  Mat2 m;
  m << 1.0 - k, -g1 / s, g1 * (1.0 - k), 1.0 / s;
  return m;
}

Vec2 FlattenMap::phi(const Vec2& x) const {
  Vec2 y(x(0), x(1) - dom_.gamma(x(0)));
  for (int it = 0; it < 60; ++it) {
    const Vec2 step = d_phi_inverse(y).lu().solve(phi_inverse(y) - x);
    y -= step;
    if (step.norm() <= 1e-16 * (1.0 + y.norm())) return y;
  }
  const Vec2 r = phi_inverse(y) - x;
  if (r.norm() <= 1e-13 * (1.0 + x.norm())) return y;
  throw FlattenError(fmt::format("phi: Newton inversion failed at ({}, {})", x(0), x(1)));
}

Mat2 FlattenMap::d_phi(const Vec2& x) const { return d_phi_inverse(phi(x)).inverse(); }

std::array<Mat2, 2> FlattenMap::d2_phi(const Vec2& x) const {
  const double h = 1e-5;
  // Column k of the result: d/dx_k of Dphi; entry (i, j) of Dphi is d_j phi^i.
  std::array<Mat2, 2> dk;
  for (int k = 0; k < 2; ++k) {
    auto central = [&](double step) {
      Vec2 e = Vec2::Zero();
      e(k) = step;
      return Mat2((d_phi(x + e) - d_phi(x - e)) / (2.0 * step));
    };
    dk[k] = (4.0 * central(0.5 * h) - central(h)) / 3.0;
  }
  std::array<Mat2, 2> hess;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) hess[i](j, k) = dk[k](i, j);
    hess[i] = 0.5 * (hess[i] + hess[i].transpose()).eval();
  }
  return hess;
}

FlattenMap build_flatten(const GraphDomain& dom, double patch_radius) {
  dom.validate();
  if (!(patch_radius > 0.0)) throw std::invalid_argument("flatten: patch radius must be positive");
  FlattenMap fm(dom, patch_radius);
  const int m = 21;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Vec2 y(-patch_radius + 2.0 * patch_radius * a / (m - 1), -patch_radius + 2.0 * patch_radius * b / (m - 1));
      const double det = fm.d_phi_inverse(y).determinant();
      if (!(det > 1e-3))
        throw FlattenError(fmt::format("flatten: map degenerates at y = ({}, {}) (det {:.3e}); shrink the patch",
                                       y(0), y(1), det));
      Vec2 back;
      try {
        back = fm.phi(fm.phi_inverse(y));
      } catch (const FlattenError&) {
        throw FlattenError(fmt::format("flatten: not invertible near y = ({}, {})", y(0), y(1)));
      }
      if ((back - y).norm() > 1e-10) throw FlattenError(fmt::format("flatten: not injective near y = ({}, {})", y(0), y(1)));
    }
  return fm;
}

Vec2 reflect(const Vec2& v, const Vec2& n) { return v - 2.0 * v.dot(n) * n; }

namespace {

double sample_y1(const FlattenMap& fm, int k, int samples) {
  return samples == 1 ? 0.0 : -fm.patch_radius() + 2.0 * fm.patch_radius() * k / (samples - 1);
}

Vec2 sample_w(int k) { return Vec2(std::cos(0.7 * k + 0.3), std::sin(1.3 * k + 0.1)) * (1.0 + 0.1 * (k % 7)); }

}  // namespace

double reflection_commutation_check(const FlattenMap& fm, int samples) {
  const Vec2 flat_normal(0.0, -1.0);
  double gap = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Vec2 y(sample_y1(fm, k, samples), 0.0);
    const Mat2 J = fm.d_phi_inverse(y);
    const Vec2 w = sample_w(k);
    const Vec2 lhs = J * reflect(w, flat_normal);
    const Vec2 rhs = reflect(J * w, fm.normal(fm.phi_inverse(y)(0)));
    gap = std::max(gap, (lhs - rhs).norm());
  }
  return gap;
}

int boundary_region_mismatches(const FlattenMap& fm, int samples) {
  int bad = 0;
  for (int k = 0; k < samples; ++k) {
    const double x1 = sample_y1(fm, k, samples);
    const Vec2 x(x1, fm.domain().gamma(x1));
    const Vec2 v = sample_w(k);
    const double flat = (fm.d_phi(x) * v)(1);
    const double phys = -v.dot(fm.normal(x1));
    if (std::fabs(phys) < 1e-12) continue;
    if ((flat > 0) != (phys > 0)) ++bad;
  }
  return bad;
}

double inverse_consistency(const FlattenMap& fm, int per_axis) {
  const double r = fm.patch_radius();
  double gap = 0.0;
  for (int a = 0; a < per_axis; ++a)
    for (int b = 0; b < per_axis; ++b) {
      const Vec2 y(-r + 2.0 * r * a / (per_axis - 1), -r + 2.0 * r * b / (per_axis - 1));
      gap = std::max(gap, (fm.phi(fm.phi_inverse(y)) - y).norm());
      // Same grid read as physical points above the boundary.
      const Vec2 x(y(0), fm.domain().gamma(y(0)) + 0.5 * (y(1) + r));
      gap = std::max(gap, (fm.phi_inverse(fm.phi(x)) - x).norm());
    }
  return gap;
}

double boundary_image_gap(const FlattenMap& fm, int samples) {
  double gap = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double x1 = sample_y1(fm, k, samples);
    gap = std::max(gap, std::fabs(fm.phi(Vec2(x1, fm.domain().gamma(x1)))(1)));
  }
  return gap;
}

TransformedCoefficients transform_coefficients(const FlattenMap& fm, const Coefficients& k, const Vec2& x,
                                               const Vec2& v) {
  const Mat2 J = fm.d_phi(x);
  const auto H = fm.d2_phi(x);
  TransformedCoefficients out;
  out.y = fm.phi(x);
  out.w = J * v;
  out.a = J * k.a * J.transpose();
  out.b = J * k.b;
  for (int i = 0; i < 2; ++i) out.b(i) += v.dot(H[i] * v);
  out.c = k.c;
  out.h = k.h;
  return out;
}

CounterexampleResult counterexample_condition(const std::vector<Eigen::MatrixXd>& d2phi, const Eigen::MatrixXd& hv,
                                              double tol) {
  const auto n = static_cast<Eigen::Index>(d2phi.size());
  if (n < 2) throw std::invalid_argument("counterexample: needs n >= 2");
  if (hv.rows() != n || hv.cols() != n) throw std::invalid_argument("counterexample: velocity Hessian has wrong size");
  for (const auto& H : d2phi)
    if (H.rows() != n || H.cols() != n) throw std::invalid_argument("counterexample: phi Hessian has wrong size");
  const Eigen::Index N = n - 1;  // normal axis
  CounterexampleResult r;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < N; ++i)
      if (i != j) r.lhs += d2phi[j](i, N) * hv(i, j);
  for (Eigen::Index i = 0; i < N; ++i) {
    r.lhs += 2.0 * d2phi[i](i, N) * hv(i, i);
    r.rhs += d2phi[i](N, N) * hv(i, N);
  }
  r.violated = std::fabs(r.lhs - r.rhs) > tol * (1.0 + std::fabs(r.lhs) + std::fabs(r.rhs));
  return r;
}

KineticPolynomial limit_rhs_p1(const std::vector<Eigen::MatrixXd>& d2phi, const Eigen::MatrixXd& alpha) {
  const std::size_t n = d2phi.size();
  const auto N = static_cast<Eigen::Index>(n);
  if (n < 1 || alpha.rows() != N || alpha.cols() != N) throw std::invalid_argument("p1: size mismatch");
  auto q = [](double d) { return to_rational(d); };
  KineticPolynomial p(n);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j)
      for (Eigen::Index k = 0; k < N; ++k) {
        const auto xk = KineticPolynomial::var_x(n, static_cast<std::size_t>(k));
        if (i != j) {
          p += xk * (q(d2phi[j](i, k)) + q(d2phi[i](j, k))) * q(alpha(i, j));
        } else {
          p += xk * (4 * q(d2phi[i](i, k)) * q(alpha(i, i)));
        }
      }
  for (Eigen::Index i = 0; i < N; ++i) {
    KineticPolynomial lin(n);
    for (Eigen::Index l = 0; l < N; ++l)
      lin += KineticPolynomial::var_v(n, static_cast<std::size_t>(l)) * (q(alpha(i, l)) + q(alpha(l, i)));
    KineticPolynomial quad(n);
    for (Eigen::Index j = 0; j < N; ++j)
      for (Eigen::Index k = 0; k < N; ++k)
        quad += KineticPolynomial::var_v(n, static_cast<std::size_t>(j)) *
                KineticPolynomial::var_v(n, static_cast<std::size_t>(k)) * q(d2phi[i](j, k));
    p -= quad * lin;
  }
  return p;
}

NormalRestriction restrict_to_normal_line(const KineticPolynomial& p) {
  const std::size_t n = p.n(), N = n - 1;
  NormalRestriction r;
  for (const auto& [m, c] : p.terms()) {
    bool off_line = m.bt != 0;
    for (std::size_t i = 0; i < N; ++i) off_line = off_line || m.bx[i] != 0 || m.bv[i] != 0;
    if (off_line) continue;
    if (m.bx[N] == 1 && m.bv[N] == 0) {
      r.alpha = c;
    } else if (m.bx[N] == 0 && m.bv[N] == 3) {
      r.beta = c;
    } else {
      r.other_terms = true;
    }
  }
  return r;
}

}  // namespace krl
