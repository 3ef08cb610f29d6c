#pragma once

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "krl/polynomial.hpp"

namespace krl {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Omega = {x2 > gamma(x1)} near 0 with gamma(0) = gamma'(0) = 0.
struct GraphDomain {
  std::function<double(double)> gamma;
  std::function<double(double)> dgamma;
  std::function<double(double)> d2gamma;
  std::string name;

  static GraphDomain flat();
  static GraphDomain parabola(double kappa = 1.0);  // kappa x1^2 / 2
  static GraphDomain cubic(double c = 1.0);         // c x1^3, flat to second order at 0
  void validate() const;
};

class FlattenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Normal coordinates off the boundary: phi^{-1}(y) = (y1, gamma(y1)) - y2 n(y1), n the outward unit normal.
class FlattenMap {
 public:
  FlattenMap(GraphDomain dom, double patch_radius);

  const GraphDomain& domain() const { return dom_; }
  double patch_radius() const { return patch_; }

  Vec2 phi_inverse(const Vec2& y) const;
  Mat2 d_phi_inverse(const Vec2& y) const;
  // Newton inversion of phi_inverse.
  Vec2 phi(const Vec2& x) const;
  Mat2 d_phi(const Vec2& x) const;
  // Hessians of phi^1 and phi^2: centred differences of d_phi, step 1e-5, one Richardson step.
  std::array<Mat2, 2> d2_phi(const Vec2& x) const;

  // Outward unit normal at the boundary point above x1.
  Vec2 normal(double x1) const;

 private:
  GraphDomain dom_;
  double patch_;
};

// Throws FlattenError when the map is not invertible on [-r, r]^2 in y.
FlattenMap build_flatten(const GraphDomain& dom, double patch_radius = 0.25);

// v - 2 (v.n) n
Vec2 reflect(const Vec2& v, const Vec2& n);

// max over boundary samples y = (y1, 0) of |Dphi^{-1}(y) R_y w - R_x (Dphi^{-1}(y) w)|, x = phi^{-1}(y).
double reflection_commutation_check(const FlattenMap& fm, int samples = 100);

// Number of boundary samples where sign((Dphi(x) v)_2) differs from sign(-v.n_x).
int boundary_region_mismatches(const FlattenMap& fm, int samples = 100);

// max |phi(phi^{-1}(y)) - y| and max |phi^{-1}(phi(x)) - x| over a grid of the patch.
double inverse_consistency(const FlattenMap& fm, int per_axis = 21);

// max |phi(x1, gamma(x1))_2| for |x1| <= patch radius.
double boundary_image_gap(const FlattenMap& fm, int samples = 101);

struct Coefficients {
  Mat2 a = Mat2::Identity();
  Vec2 b = Vec2::Zero();
  double c = 0.0;
  double h = 0.0;
};

struct TransformedCoefficients {
  Vec2 y, w;
  Mat2 a;
  Vec2 b;
  double c = 0.0;
  double h = 0.0;
};

// Coefficients of the equation for f o Phi^{-1} at Phi(x, v):
// a~ = J a J^T, b~^i = <v, D^2 phi^i v> + (J b)^i, c~ = c, h~ = h with J = Dphi(x).
TransformedCoefficients transform_coefficients(const FlattenMap& fm, const Coefficients& k, const Vec2& x,
                                               const Vec2& v);

struct CounterexampleResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool violated = false;  // lhs != rhs: no C^5 expansion at the grazing point
};

// d2phi[i] is the Hessian of phi^i at 0 (n x n); hv the velocity Hessian of f at z0.
// violated when |lhs - rhs| > tol (1 + |lhs| + |rhs|).
CounterexampleResult counterexample_condition(const std::vector<Eigen::MatrixXd>& d2phi, const Eigen::MatrixXd& hv,
                                              double tol = 1e-8);

// The cubic limit polynomial p1 for P with degree-two velocity coefficients alpha (P contains
// sum_ij alpha_ij v_i v_j). Coefficients are converted to exact rationals.
KineticPolynomial limit_rhs_p1(const std::vector<Eigen::MatrixXd>& d2phi, const Eigen::MatrixXd& alpha);

struct NormalRestriction {
  mpq_class alpha;  // coefficient of x_n
  mpq_class beta;   // coefficient of v_n^3
  bool other_terms = false;
  bool obstructs() const { return alpha != -2 * beta; }
};

// p restricted to t = 0, x' = 0, v' = 0.
NormalRestriction restrict_to_normal_line(const KineticPolynomial& p);

}  // namespace krl
