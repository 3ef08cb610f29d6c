#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "krl/geometry.hpp"
#include "krl/polynomial.hpp"
#include "krl/projection.hpp"

namespace krl {

struct ProbeOptions {
  std::uint64_t seed = 0;  // offset into the Halton sequence
  int fit_factor = 20;     // fit points per basis element
  int check_factor = 4;    // check points per fit point
};

// Radical-inverse Halton point number `index` in [0,1)^3 with bases 2, 3, 5.
std::array<double, 3> halton3(std::uint64_t index);

struct ApproxResult {
  double error = 0.0;  // sup |f - fit| over fit and check samples
  double scale = 0.0;  // sup |f| over the same samples
  std::vector<double> coeffs;  // coefficients of the normalized columns, see best_approx
};

// LSQ fit over span(spec) on Halton samples of H_r(z0), then sup of the residual.
// samples = 0 selects fit_factor * dim. Throws std::runtime_error when the fit is rank deficient.
ApproxResult best_approx(const Evaluable& f, const KineticPoint& z0, double r, const PolySpaceSpec& spec,
                         int samples = 0, const ProbeOptions& opt = {});
double best_approx_error(const Evaluable& f, const KineticPoint& z0, double r, const PolySpaceSpec& spec,
                         int samples = 0, const ProbeOptions& opt = {});

struct ExponentFit {
  std::vector<double> radii;
  std::vector<double> errors;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  bool exact = false;           // every error at round-off level; slope is +inf
  double plateau_ratio = 0.0;   // max/min of error / r^round(slope)
  bool plateau = false;         // plateau_ratio <= 4
};

// Needs >= 4 strictly decreasing radii.
ExponentFit exponent_fit(const Evaluable& f, const KineticPoint& z0, const PolySpaceSpec& spec,
                         const std::vector<double>& radii, const ProbeOptions& opt = {});

struct TauEstimate {
  double tau = 0.0;                 // at the smallest radius
  std::vector<double> per_radius;
  double variation = 0.0;           // (max - min) / |tau|
  bool unstable = false;            // variation > 50%
};

// Coefficient of T_{A,3} in the fit over the Tricomi-augmented space.
TauEstimate gamma0_tricomi_coefficient(const Evaluable& f, const KineticPoint& z0, double A,
                                       const std::vector<double>& radii, const ProbeOptions& opt = {});

}  // namespace krl
