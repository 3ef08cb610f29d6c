#include "krl/tricomi.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "krl/polynomial.hpp"
#include "krl/probe.hpp"
#include "krl/specfun.hpp"

namespace krl {

void validate(const TricomiParams& p) {
  if (!(p.A > 0.0) || !std::isfinite(p.A)) throw std::invalid_argument("Tricomi: A must be positive");
  if (p.lambda < 3 || (p.lambda - 3) % 6 != 0) throw std::invalid_argument("Tricomi: lambda must be 6k+3");
}

double eval_tricomi(const TricomiParams& p, double x, double v) {
  validate(p);
  if (!(x >= 0.0)) throw std::invalid_argument("Tricomi: x must be nonnegative");
  const int e = p.lambda + 2;
  const double amp = std::pow(p.A, -0.5 * e);
  if (x == 0.0) return -3.0 * amp * std::pow(std::fabs(v), e);
  const double tau = -(v * v * v) / (9.0 * p.A * x);
  const double u = tricomi_u(-e / 3.0, 2.0 / 3.0, tau).value;
  const double c = 2.0 * std::pow(9.0, e / 3.0) * std::pow(p.A, -e / 6.0);
  return amp * std::pow(v, e) - c * std::pow(x, e / 3.0) * u;
}

double pde_residual(const TricomiParams& p, double x, double v, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("pde_residual: step must be positive");
  const double hx = h * (1.0 + x);
  const double hv = h * (1.0 + std::fabs(v));
  if (x - hx <= 0.0) throw std::domain_error("pde_residual: x too close to the boundary for the step");
  if (hx * hx < 1e-300 || hv * hv < 1e-300) throw std::underflow_error("pde_residual: step underflow");
  const double dx = (eval_tricomi(p, x + hx, v) - eval_tricomi(p, x - hx, v)) / (2.0 * hx);
  const double dvv =
      (eval_tricomi(p, x, v + hv) - 2.0 * eval_tricomi(p, x, v) + eval_tricomi(p, x, v - hv)) / (hv * hv);
  return v * dx - p.A * dvv;
}

double exact_rhs(const TricomiParams& p, double v) {
  validate(p);
  const int e = p.lambda + 2;
  return -static_cast<double>(e) * (e - 1) * std::pow(p.A, 1.0 - 0.5 * e) * std::pow(v, p.lambda);
}

double cusp_ratio(const TricomiParams& p, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("cusp_ratio: x must be positive");
  return eval_tricomi(p, x, 0.0) / std::pow(x, (p.lambda + 2) / 3.0);
}

double c41_seminorm_probe(const TricomiParams& p, const KineticPoint& z_star, double r) {
  validate(p);
  if (z_star.dim() != 1 || !(z_star.x[0] >= 0.0)) throw std::invalid_argument("c41 probe: z_star must be in the half line");
  if (!(r > 0.0) || r > 1.0) throw std::invalid_argument("c41 probe: need 0 < r <= 1");
  Evaluable f = [&p](const KineticPoint& z) { return eval_tricomi(p, z.x[0], z.v[0]); };
  double best = 0.0;
  double rho = r;
  for (int j = 0; j < 4; ++j, rho *= 0.5) {
    best = std::max(best, best_approx_error(f, z_star, rho, PolySpaceSpec::full(4)) / std::pow(rho, 5));
  }
  return best;
}

void write_tricomi_csv(std::ostream& os, const TricomiParams& p, const std::vector<double>& xs,
                       const std::vector<double>& vs) {
  os << "x,v,T,residual,cusp_ratio\n";
  for (double x : xs) {
    const double cr = cusp_ratio(p, x);
    for (double v : vs) {
      os << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", x, v, eval_tricomi(p, x, v),
                        pde_residual(p, x, v), cr);
    }
  }
}

}  // namespace krl
