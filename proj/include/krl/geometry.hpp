#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace krl {

using Vec = std::vector<double>;

// Phase-space event z = (t, x, v) with x, v in R^n.
struct KineticPoint {
  double t = 0.0;
  Vec x;
  Vec v;

  std::size_t dim() const { return x.size(); }
};

// Validating constructor: equal dimensions n >= 1, finite components.
KineticPoint make_point(double t, Vec x, Vec v);
// Shorthand for n = 1.
KineticPoint point1(double t, double x, double v);
KineticPoint origin(std::size_t n);

// Galilean group law (s,y,w) o (t,x,v) = (s+t, x+y+t w, v+w).
KineticPoint compose(const KineticPoint& a, const KineticPoint& b);
KineticPoint inverse(const KineticPoint& z);
// S_r(t,x,v) = (r^2 t, r^3 x, r v).
KineticPoint scale(double r, const KineticPoint& z);
// z0 o S_r z and its inverse.
KineticPoint frame_map(const KineticPoint& z0, double r, const KineticPoint& z);
KineticPoint frame_unmap(const KineticPoint& z0, double r, const KineticPoint& z);

enum class Sided { TwoSided, OneSidedPast };

struct CylinderSpec {
  KineticPoint center;
  double radius = 1.0;
  Sided sided = Sided::TwoSided;
};

enum class HalfSide { Positive };

// Omega = {x_k > 0} with k = normal_axis, over an open time window.
struct HalfSpaceDomain {
  std::size_t normal_axis = 0;
  HalfSide side = HalfSide::Positive;
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
};

bool cylinder_contains(const CylinderSpec& c, const KineticPoint& z);
// H_r(z0) = Q_r(z0) intersected with the half space.
bool half_cylinder_contains(const CylinderSpec& c, const HalfSpaceDomain& d, const KineticPoint& z);

// d_l(z1,z2) = min_w max(|dt|^(1/2), |dx - dt w|^(1/3), |v1 - w|, |v2 - w|), to within tol.
double kinetic_distance(const KineticPoint& z1, const KineticPoint& z2, double tol = 1e-9);

KineticPoint reflect_velocity(const KineticPoint& z, const HalfSpaceDomain& d);
// Membership in Q u R(Q).
bool reflected_set_membership(const CylinderSpec& c, const HalfSpaceDomain& d, const KineticPoint& z);

double norm(const Vec& a);

}  // namespace krl
