#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "krl/polynomial.hpp"

namespace krl {

// v d_x f - A d_vv f = p on {x > 0} with f(0, v) = f(0, -v); p depends on (x, v) only.
struct HalfSpaceRHS {
  KineticPolynomial p{1};
  mpq_class A = 1;
};

struct TricomiTerm {
  int lambda = 3;
  double m = 0.0;  // multiplier of T_{A,lambda}
};

struct ClassificationResult {
  KineticPolynomial particular{1};
  std::vector<TricomiTerm> tricomi_terms;
  bool is_polynomial = true;
  // Per layer lambda: the v^(lambda+2) trace coefficient left after the kernel correction.
  std::vector<std::pair<int, mpq_class>> trace_coefficients;
};

inline constexpr int kMaxRhsDegree = 9;

// p homogeneous of kinetic degree lambda (or zero).
ClassificationResult classify_homogeneous(const HalfSpaceRHS& rhs, int lambda);
// Layer by layer; throws std::invalid_argument above kMaxRhsDegree.
ClassificationResult classify(const HalfSpaceRHS& rhs);

// Homogeneous t-free kernel of v d_x - A d_vv in degree d.
std::vector<KineticPolynomial> stationary_kernel(int d, const mpq_class& A);

struct SamplingSpec {
  int nx = 12, nv = 16;
  double x_lo = 0.1, x_hi = 2.0, v_max = 2.0;
  double residual_tol = 1e-4;
  double trace_eps = 1e-4;
  double trace_tol = 1e-3;
  double growth_eps = 0.5;
};

struct VerificationReport {
  bool passed = true;
  double residual = 0.0;        // max |L f - p| / (1 + max |p|)
  double trace_gap = 0.0;       // max |f(eps,v) - f(eps,-v)| / max |f| over all samples
  double growth_inner = 0.0;    // sup |f| / (1 + d)^(deg + eps) over inner shells
  double growth_outer = 0.0;    // same over the outermost shell
  std::vector<std::string> failures;
};

VerificationReport verify_solution(const ClassificationResult& res, const HalfSpaceRHS& rhs,
                                   const SamplingSpec& grid = {});

// a^{i,n} = 0 for i != n, b_n = 0 and p invariant under (x_n, v_n) -> (-x_n, -v_n).
bool flip_symmetric_shortcut(const OperatorSpec& op, const KineticPolynomial& p);

// f = particular + sum m T_{A,lambda}
double eval_solution(const ClassificationResult& res, double A, double x, double v);

}  // namespace krl
