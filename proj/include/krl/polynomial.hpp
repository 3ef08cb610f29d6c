#pragma once

#include <gmpxx.h>

#include <climits>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "krl/geometry.hpp"

namespace krl {

struct MultiIndex {
  int bt = 0;
  std::vector<int> bx;
  std::vector<int> bv;

  static MultiIndex zero(std::size_t n) { return {0, std::vector<int>(n, 0), std::vector<int>(n, 0)}; }
  std::size_t dim() const { return bx.size(); }
  // Kinetic degree 2 bt + 3 |bx| + |bv|.
  int degree() const;
  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;
};

// All multi-indices in dimension n with kinetic degree <= k, in a fixed order.
std::vector<MultiIndex> multi_indices(std::size_t n, int k, bool include_t = true);

inline constexpr int kZeroDegree = INT_MIN;

// Sparse polynomial in (t, x, v) with exact rational coefficients.
class KineticPolynomial {
 public:
  using Terms = std::map<MultiIndex, mpq_class>;

  explicit KineticPolynomial(std::size_t n = 1) : n_(n) {}

  static KineticPolynomial constant(std::size_t n, const mpq_class& c);
  static KineticPolynomial monomial(const MultiIndex& m, const mpq_class& c = 1);
  static KineticPolynomial var_t(std::size_t n);
  static KineticPolynomial var_x(std::size_t n, std::size_t i);
  static KineticPolynomial var_v(std::size_t n, std::size_t i);

  std::size_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Maximal kinetic degree; kZeroDegree for the zero polynomial.
  int degree() const;
  int min_degree() const;
  bool is_homogeneous() const;
  bool depends_on_t() const;
  mpq_class coeff(const MultiIndex& m) const;

  void add_term(const MultiIndex& m, const mpq_class& c);
  KineticPolynomial homogeneous_part(int d) const;

  double eval(const KineticPoint& z) const;

  KineticPolynomial& operator+=(const KineticPolynomial& o);
  KineticPolynomial& operator-=(const KineticPolynomial& o);
  KineticPolynomial& operator*=(const mpq_class& c);
  friend KineticPolynomial operator+(KineticPolynomial a, const KineticPolynomial& b) { return a += b; }
  friend KineticPolynomial operator-(KineticPolynomial a, const KineticPolynomial& b) { return a -= b; }
  friend KineticPolynomial operator*(KineticPolynomial a, const mpq_class& c) { return a *= c; }
  friend KineticPolynomial operator*(const mpq_class& c, KineticPolynomial a) { return a *= c; }
  friend KineticPolynomial operator*(const KineticPolynomial& a, const KineticPolynomial& b);
  bool operator==(const KineticPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::size_t n_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const KineticPolynomial& p);

KineticPolynomial pow(const KineticPolynomial& p, int e);

KineticPolynomial diff_t(const KineticPolynomial& p);
KineticPolynomial diff_x(const KineticPolynomial& p, std::size_t i);
KineticPolynomial diff_v(const KineticPolynomial& p, std::size_t i);
// (d_t + v . grad_x) p
KineticPolynomial transport(const KineticPolynomial& p);
// D^beta p = (d_t + v . grad_x)^bt d_x^bx d_v^bv p.
KineticPolynomial transport_derivative(const KineticPolynomial& p, const MultiIndex& beta);

// q(z) = p(z0 o S_r z); stays in the same P_k.
KineticPolynomial pullback(const KineticPolynomial& p, const KineticPoint& z0, double r);
// p restricted to {x_axis = 0}.
KineticPolynomial trace_at_zero(const KineticPolynomial& p, std::size_t axis);
// p(t, x', -x_n, v', -v_n)
KineticPolynomial flip(const KineticPolynomial& p, std::size_t axis);

// L = d_t + v . grad_x - a_ij d_vi d_vj + b . grad_v + c.
struct OperatorSpec {
  std::vector<std::vector<double>> a;
  Vec b;
  double c = 0.0;

  static OperatorSpec isotropic(std::size_t n, double A);
  std::size_t dim() const { return a.size(); }
  bool constant_coefficient_homogeneous() const;  // b = 0 and c = 0
};

// Checks symmetry and lambda |xi|^2 <= a xi.xi <= Lambda |xi|^2.
bool is_uniformly_elliptic(const OperatorSpec& op, double lambda, double Lambda);

KineticPolynomial apply_operator(const OperatorSpec& op, const KineticPolynomial& p);

enum class SpaceKind { Full, SpecularConstrained, TricomiAugmented };

struct PolySpaceSpec {
  SpaceKind kind = SpaceKind::Full;
  int k = 0;
  std::size_t n = 1;
  std::size_t normal_axis = 0;
  double A = 1.0;

  static PolySpaceSpec full(int k, std::size_t n = 1) { return {SpaceKind::Full, k, n, 0, 1.0}; }
  static PolySpaceSpec specular(int k, std::size_t n = 1, std::size_t axis = 0) {
    return {SpaceKind::SpecularConstrained, k, n, axis, 1.0};
  }
  static PolySpaceSpec tricomi_augmented(double A, std::size_t n = 1, std::size_t axis = 0) {
    return {SpaceKind::TricomiAugmented, 5, n, axis, A};
  }
};

// A basis element is a polynomial or the marker for T_{A,3}(x_n, v_n).
struct BasisElement {
  bool tricomi = false;
  KineticPolynomial poly;
  double A = 1.0;
  std::size_t axis = 0;

  int degree() const { return tricomi ? 5 : poly.degree(); }
  double eval(const KineticPoint& z) const;
};

std::vector<BasisElement> space_basis(const PolySpaceSpec& spec);

// Homogeneous P of degree 3 l1 + l2 + 2 with (v d_x - A d_vv) P = amp x^l1 v^l2.
KineticPolynomial particular_solve_1d(int lambda1, int lambda2, const mpq_class& amp, const mpq_class& A);

// Minimal-norm P with apply_operator(op, P) = p; t-free when p is t-free.
KineticPolynomial particular_solve_general(const OperatorSpec& op, const KineticPolynomial& p);

// Rational nullspace of apply_operator on the polynomial part of span(spec).
std::vector<KineticPolynomial> kernel_basis(const OperatorSpec& op, const PolySpaceSpec& spec);

// Exact conversion of a finite double to a rational.
mpq_class to_rational(double x);
// Accepts "p/q", integers and decimal/scientific floats.
mpq_class parse_rational(const std::string& s);

}  // namespace krl
