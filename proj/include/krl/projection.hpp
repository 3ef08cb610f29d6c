#pragma once

#include <functional>
#include <vector>

#include "krl/geometry.hpp"
#include "krl/polynomial.hpp"

namespace krl {

using Evaluable = std::function<double(const KineticPoint&)>;

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int m, std::vector<double>& nodes, std::vector<double>& weights);

struct QuadPoint {
  KineticPoint z;
  double w = 0.0;
};

// Quadrature on H_r(z0) = Q_r(z0) with x > 0 (n = 1), exact for polynomials of per-variable degree
// <= 2m - 1 in (t, x - x0 - (t - t0) v0, v). The t-range is split where the moving x-window meets x = 0.
std::vector<QuadPoint> half_cylinder_quadrature(const KineticPoint& z0, double r, int m);

// Best L^2(H_r(z0)) approximation of f in span(space_basis(spec)); coefficients follow space_basis order.
// Uses max(quad_order, k + 3) nodes per axis. Throws std::runtime_error on a singular Gram system.
std::vector<double> l2_project(const Evaluable& f, const KineticPoint& z0, double r, const PolySpaceSpec& spec,
                               int quad_order = 0);

}  // namespace krl
