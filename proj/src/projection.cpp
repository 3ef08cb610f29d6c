#include "krl/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace krl {

void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  nodes.assign(m, 0.0);
  weights.assign(m, 0.0);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= m; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = m * (x * p1 - p0) / (x * x - 1.0);
    nodes[i] = -x;
    nodes[m - 1 - i] = x;
    weights[i] = weights[m - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  if (m % 2 == 1) nodes[m / 2] = 0.0;
}

std::vector<QuadPoint> half_cylinder_quadrature(const KineticPoint& z0, double r, int m) {
  if (z0.dim() != 1) throw std::invalid_argument("half_cylinder_quadrature: n = 1 only");
  if (!(r > 0.0)) throw std::invalid_argument("half_cylinder_quadrature: r must be positive");
  const double x0 = z0.x[0], v0 = z0.v[0], t0 = z0.t;
  const double r2 = r * r, r3 = r2 * r;
  std::vector<double> gn, gw;
  gauss_legendre(m, gn, gw);

  // Lower bound of xh = x - x0 - s v0 is max(-r^3, -x0 - s v0); split s where -x0 - s v0 = +-r^3.
  std::vector<double> cuts = {-r2, r2};
  if (v0 != 0.0) {
    for (double target : {r3, -r3}) {
      double s = (-x0 - target) / v0;
      if (s > -r2 && s < r2) cuts.push_back(s);
    }
  }
  std::sort(cuts.begin(), cuts.end());

  std::vector<QuadPoint> out;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double sa = cuts[c], sb = cuts[c + 1];
    if (sb - sa <= 0.0) continue;
    const double sm = 0.5 * (sa + sb);
    const double lo_mid = std::max(-r3, -x0 - sm * v0);
    if (lo_mid >= r3) continue;  // empty slice on this piece
    for (int i = 0; i < m; ++i) {
      const double s = sm + 0.5 * (sb - sa) * gn[i];
      const double ws = 0.5 * (sb - sa) * gw[i];
      const double lo = (lo_mid == -r3) ? -r3 : -x0 - s * v0;
      const double hi = r3;
      if (hi <= lo) continue;
      for (int j = 0; j < m; ++j) {
        const double xh = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gn[j];
        const double wx = 0.5 * (hi - lo) * gw[j];
        for (int k = 0; k < m; ++k) {
          QuadPoint q;
          q.z = point1(t0 + s, x0 + xh + s * v0, v0 + r * gn[k]);
          q.w = ws * wx * r * gw[k];
          out.push_back(std::move(q));
        }
      }
    }
  }
  if (out.empty()) throw std::runtime_error("half_cylinder_quadrature: empty domain");
  return out;
}

std::vector<double> l2_project(const Evaluable& f, const KineticPoint& z0, double r, const PolySpaceSpec& spec,
                               int quad_order) {
  if (spec.n != 1) throw std::invalid_argument("l2_project: n = 1 only");
  const auto basis = space_basis(spec);
  const int m = std::max(quad_order, spec.k + 3);
  const auto quad = half_cylinder_quadrature(z0, r, m);
  const Eigen::Index rows = static_cast<Eigen::Index>(quad.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd a(rows, cols);
  Eigen::VectorXd b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double sw = std::sqrt(quad[i].w);
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = sw * basis[j].eval(quad[i].z);
    b(i) = sw * f(quad[i].z);
  }
  Eigen::VectorXd scale = a.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < cols; ++j) {
    if (scale(j) == 0.0) throw std::runtime_error("l2_project: basis element vanishes on the domain");
    a.col(j) /= scale(j);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-13);
  if (qr.rank() < cols) throw std::runtime_error("l2_project: singular Gram system");
  Eigen::VectorXd c = qr.solve(b);
  std::vector<double> out(cols);
  for (Eigen::Index j = 0; j < cols; ++j) out[j] = c(j) / scale(j);
  return out;
}

}  // namespace krl
