#pragma once

#include <iosfwd>
#include <vector>

#include "krl/geometry.hpp"

namespace krl {

// T_{A,lambda}(x, v) = A^(-(l+2)/2) v^(l+2) - 2 9^((l+2)/3) A^(-(l+2)/6) x^((l+2)/3) U(-(l+2)/3; 2/3; tau),
// tau = -v^3 / (9 A x), for lambda = 6k + 3.
struct TricomiParams {
  double A = 1.0;
  int lambda = 3;
};

// Throws std::invalid_argument unless A > 0 and lambda = 6k + 3 with k >= 0.
void validate(const TricomiParams& p);

// x >= 0; at x = 0 the boundary trace -3 A^(-(l+2)/2) |v|^(l+2).
double eval_tricomi(const TricomiParams& p, double x, double v);

// v d_x T - A d_vv T by centered differences with h_x = h (1 + x), h_v = h (1 + |v|).
double pde_residual(const TricomiParams& p, double x, double v, double h = 1e-4);

// The exact right-hand side: L T = -(l+2)(l+1) A^(1-(l+2)/2) v^l.
double exact_rhs(const TricomiParams& p, double v);

// T(x, 0) / x^((l+2)/3).
double cusp_ratio(const TricomiParams& p, double x);

// max over rho = r, r/2, r/4, r/8 of (sup error of the best fit from P_4 on H_rho(z_star)) / rho^5.
double c41_seminorm_probe(const TricomiParams& p, const KineticPoint& z_star, double r);

// CSV with columns x,v,T,residual,cusp_ratio over the tensor grid xs x vs (xs > 0).
void write_tricomi_csv(std::ostream& os, const TricomiParams& p, const std::vector<double>& xs,
                       const std::vector<double>& vs);

}  // namespace krl
