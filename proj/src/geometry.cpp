#include "krl/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace krl {

namespace {

void require_same_dim(const KineticPoint& a, const KineticPoint& b) {
  if (a.x.size() != b.x.size() || a.v.size() != b.v.size()) {
    throw std::invalid_argument("kinetic points have different dimensions");
  }
}

bool all_finite(const KineticPoint& z) {
  if (!std::isfinite(z.t)) return false;
  for (double c : z.x)
    if (!std::isfinite(c)) return false;
  for (double c : z.v)
    if (!std::isfinite(c)) return false;
  return true;
}

// Disks in the plane.
struct Disk {
  double cx, cy, r;
};

bool in_all(const std::vector<Disk>& ds, double px, double py, double slack) {
  for (const auto& d : ds) {
    // Candidates on a circle carry rounding proportional to that disk's size; for small |dt| it is huge.
    const double tol = slack + 1e-13 * (d.r + std::abs(d.cx) + std::abs(d.cy));
    if (std::hypot(px - d.cx, py - d.cy) > d.r + tol) return false;
  }
  return true;
}

// Nonempty intersection of closed disks. The leftmost point of the intersection is either
// the leftmost point of one disk or a crossing of two circles, so those candidates suffice.
bool disks_intersect(const std::vector<Disk>& ds, double slack) {
  for (const auto& d : ds) {
    if (in_all(ds, d.cx - d.r, d.cy, slack)) return true;
  }
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      const Disk& a = ds[i];
      const Disk& b = ds[j];
      double dx = b.cx - a.cx, dy = b.cy - a.cy;
      double dd = std::hypot(dx, dy);
      if (dd == 0.0) continue;
      double along = (dd * dd + a.r * a.r - b.r * b.r) / (2.0 * dd);
      double h2 = a.r * a.r - along * along;
      if (h2 < -slack * (a.r + slack)) continue;
      double h = std::sqrt(std::max(h2, 0.0));
      double mx = a.cx + along * dx / dd, my = a.cy + along * dy / dd;
      if (in_all(ds, mx - h * dy / dd, my + h * dx / dd, slack)) return true;
      if (in_all(ds, mx + h * dy / dd, my - h * dx / dd, slack)) return true;
    }
  }
  return false;
}

// Balls in R^n: the minimax point can be projected onto the affine hull of the centers
// (at most a plane for three balls) without leaving any ball.
bool balls_intersect(const std::vector<Vec>& centers, const std::vector<double>& radii, double slack) {
  const std::size_t n = centers[0].size();
  std::vector<Vec> basis;
  for (std::size_t k = 1; k < centers.size(); ++k) {
    Vec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = centers[k][i] - centers[0][i];
    for (const auto& e : basis) {
      double p = 0.0;
      for (std::size_t i = 0; i < n; ++i) p += d[i] * e[i];
      for (std::size_t i = 0; i < n; ++i) d[i] -= p * e[i];
    }
    double nd = norm(d);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(centers[k][i] - centers[0][i]));
    if (nd > 1e-13 * std::max(scale, 1e-300)) {
      for (double& c : d) c /= nd;
      basis.push_back(d);
    }
  }
  std::vector<Disk> ds;
  for (std::size_t k = 0; k < centers.size(); ++k) {
    std::array<double, 2> c{0.0, 0.0};
    for (std::size_t b = 0; b < basis.size(); ++b) {
      for (std::size_t i = 0; i < n; ++i) c[b] += (centers[k][i] - centers[0][i]) * basis[b][i];
    }
    ds.push_back({c[0], c[1], radii[k]});
  }
  return disks_intersect(ds, slack);
}

bool feasible(const KineticPoint& z1, const KineticPoint& z2, double r, double slack) {
  const double dt = z1.t - z2.t;
  if (std::abs(dt) > r * r + slack) return false;
  const std::size_t n = z1.dim();
  const double r3 = r * r * r;
  if (n == 1) {
    double lo = std::max(z1.v[0], z2.v[0]) - r;
    double hi = std::min(z1.v[0], z2.v[0]) + r;
    const double dx = z1.x[0] - z2.x[0];
    if (dt != 0.0) {
      double a = (dx - r3) / dt, b = (dx + r3) / dt;
      lo = std::max(lo, std::min(a, b));
      hi = std::min(hi, std::max(a, b));
    } else if (std::abs(dx) > r3 + slack) {
      return false;
    }
    return lo <= hi + slack;
  }
  std::vector<Vec> centers{z1.v, z2.v};
  std::vector<double> radii{r, r};
  Vec dx(n);
  for (std::size_t i = 0; i < n; ++i) dx[i] = z1.x[i] - z2.x[i];
  if (dt != 0.0) {
    Vec c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = dx[i] / dt;
    centers.push_back(c);
    radii.push_back(r3 / std::abs(dt));
  } else if (norm(dx) > r3 + slack) {
    return false;
  }
  return balls_intersect(centers, radii, slack);
}

}  // namespace

double norm(const Vec& a) {
  double s = 0.0;
  for (double c : a) s += c * c;
  return std::sqrt(s);
}

KineticPoint make_point(double t, Vec x, Vec v) {
  if (x.empty() || x.size() != v.size()) {
    throw std::invalid_argument("x and v must have equal dimension n >= 1");
  }
  KineticPoint z{t, std::move(x), std::move(v)};
  if (!all_finite(z)) throw std::invalid_argument("kinetic point has non-finite components");
  return z;
}

KineticPoint point1(double t, double x, double v) { return make_point(t, {x}, {v}); }

KineticPoint origin(std::size_t n) { return make_point(0.0, Vec(n, 0.0), Vec(n, 0.0)); }

KineticPoint compose(const KineticPoint& a, const KineticPoint& b) {
  require_same_dim(a, b);
  KineticPoint z{a.t + b.t, Vec(a.dim()), Vec(a.dim())};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    z.x[i] = a.x[i] + b.x[i] + b.t * a.v[i];
    z.v[i] = a.v[i] + b.v[i];
  }
  return z;
}

KineticPoint inverse(const KineticPoint& z) {
  KineticPoint w{-z.t, Vec(z.dim()), Vec(z.dim())};
  for (std::size_t i = 0; i < z.dim(); ++i) {
    w.x[i] = -z.x[i] + z.t * z.v[i];
    w.v[i] = -z.v[i];
  }
  return w;
}

KineticPoint scale(double r, const KineticPoint& z) {
  if (!(r > 0.0)) throw std::invalid_argument("scaling factor must be positive");
  KineticPoint w{r * r * z.t, z.x, z.v};
  const double r3 = r * r * r;
  for (double& c : w.x) c *= r3;
  for (double& c : w.v) c *= r;
  return w;
}

KineticPoint frame_map(const KineticPoint& z0, double r, const KineticPoint& z) {
  return compose(z0, scale(r, z));
}

KineticPoint frame_unmap(const KineticPoint& z0, double r, const KineticPoint& z) {
  return scale(1.0 / r, compose(inverse(z0), z));
}

bool cylinder_contains(const CylinderSpec& c, const KineticPoint& z) {
  require_same_dim(c.center, z);
  const double r = c.radius;
  const double dt = z.t - c.center.t;
  if (c.sided == Sided::TwoSided) {
    if (!(std::abs(dt) < r * r)) return false;
  } else if (!(dt > -r * r && dt <= 0.0)) {
    return false;
  }
  double sx = 0.0, sv = 0.0;
  for (std::size_t i = 0; i < z.dim(); ++i) {
    double ex = z.x[i] - c.center.x[i] - dt * c.center.v[i];
    double ev = z.v[i] - c.center.v[i];
    sx += ex * ex;
    sv += ev * ev;
  }
  return std::sqrt(sx) < r * r * r && std::sqrt(sv) < r;
}

bool half_cylinder_contains(const CylinderSpec& c, const HalfSpaceDomain& d, const KineticPoint& z) {
  return z.x.at(d.normal_axis) > 0.0 && cylinder_contains(c, z);
}

double kinetic_distance(const KineticPoint& z1, const KineticPoint& z2, double tol) {
  require_same_dim(z1, z2);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!all_finite(z1) || !all_finite(z2)) throw std::invalid_argument("non-finite kinetic point");
  const std::size_t n = z1.dim();
  const double dt = z1.t - z2.t;
  Vec ex(n), dv(n);
  for (std::size_t i = 0; i < n; ++i) {
    ex[i] = z1.x[i] - z2.x[i] - dt * z1.v[i];
    dv[i] = z1.v[i] - z2.v[i];
  }
  const double mx = norm(ex), mv = norm(dv);
  // w = v1 is always admissible.
  double hi = std::max({std::sqrt(std::abs(dt)), std::cbrt(mx), mv});
  double lo = 0.0;
  if (hi == 0.0) return 0.0;
  const double slack = 1e-14 * std::max(1.0, hi * hi * hi);
  while (hi - lo > 0.25 * tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (feasible(z1, z2, mid, slack)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

KineticPoint reflect_velocity(const KineticPoint& z, const HalfSpaceDomain& d) {
  KineticPoint w = z;
  w.v.at(d.normal_axis) = -w.v.at(d.normal_axis);
  return w;
}

bool reflected_set_membership(const CylinderSpec& c, const HalfSpaceDomain& d, const KineticPoint& z) {
  return cylinder_contains(c, z) || cylinder_contains(c, reflect_velocity(z, d));
}

}  // namespace krl
