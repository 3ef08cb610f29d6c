#include "krl/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "krl/tricomi.hpp"
#include "qlinalg.hpp"

namespace krl {

namespace {

MultiIndex xv(int i, int j) {
  MultiIndex m = MultiIndex::zero(1);
  m.bx[0] = i;
  m.bv[0] = j;
  return m;
}

// v d_x - A d_vv with exact A.
KineticPolynomial apply_stationary(const KineticPolynomial& p, const mpq_class& A) {
  KineticPolynomial vv = KineticPolynomial::var_v(1, 0);
  return vv * diff_x(p, 0) - A * diff_v(diff_v(p, 0), 0);
}

void check_rhs(const HalfSpaceRHS& rhs) {
  if (rhs.p.n() != 1) throw std::invalid_argument("liouville: n = 1 only");
  if (rhs.A <= 0) throw std::invalid_argument("liouville: A must be positive");
  if (rhs.p.depends_on_t()) throw std::invalid_argument("liouville: p must not depend on t");
}

}  // namespace

std::vector<KineticPolynomial> stationary_kernel(int d, const mpq_class& A) {
  std::vector<KineticPolynomial> cols;
  for (int i = 0; 3 * i <= d; ++i) cols.push_back(KineticPolynomial::monomial(xv(i, d - 3 * i)));
  std::map<MultiIndex, std::size_t> rows;
  std::vector<KineticPolynomial> images;
  for (const auto& c : cols) {
    images.push_back(apply_stationary(c, A));
    for (const auto& [m, _] : images.back().terms()) rows.emplace(m, 0);
  }
  if (rows.empty()) return cols;
  std::size_t r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  detail::QMatrix mat(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [m, c] : images[j].terms()) mat(rows.at(m), j) = c;
  std::vector<KineticPolynomial> out;
  for (const auto& v : detail::nullspace(mat)) {
    KineticPolynomial q(1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (v[j] != 0) q += cols[j] * v[j];
    out.push_back(std::move(q));
  }
  return out;
}

ClassificationResult classify_homogeneous(const HalfSpaceRHS& rhs, int lambda) {
  check_rhs(rhs);
  if (lambda < 0) throw std::invalid_argument("liouville: negative degree");
  ClassificationResult res;
  if (rhs.p.is_zero()) return res;
  if (!rhs.p.is_homogeneous() || rhs.p.degree() != lambda)
    throw std::invalid_argument("liouville: p is not homogeneous of degree " + std::to_string(lambda));

  KineticPolynomial P(1);
  for (const auto& [m, c] : rhs.p.terms()) P += particular_solve_1d(m.bx[0], m.bv[0], c, rhs.A);

  const int e = lambda + 2;
  const MultiIndex top = xv(0, e);
  mpq_class c = P.coeff(top);
  if (e % 2 == 1 && c != 0) {
    // An odd trace is removable when the kernel reaches v^(lambda+2).
    for (const auto& k : stationary_kernel(e, rhs.A)) {
      const mpq_class kc = k.coeff(top);
      if (kc == 0) continue;
      P -= k * (c / kc);
      c = 0;
      break;
    }
  }
  if (e % 2 == 1 && c != 0) {
    P -= KineticPolynomial::monomial(top, c);
    res.is_polynomial = false;
    res.tricomi_terms.push_back({lambda, c.get_d() * std::pow(rhs.A.get_d(), 0.5 * e)});
  }
  res.particular = std::move(P);
  res.trace_coefficients.emplace_back(lambda, e % 2 == 1 ? c : mpq_class(0));
  return res;
}

ClassificationResult classify(const HalfSpaceRHS& rhs) {
  check_rhs(rhs);
  ClassificationResult out;
  if (rhs.p.is_zero()) return out;
  if (rhs.p.degree() > kMaxRhsDegree)
    throw std::invalid_argument(fmt::format("liouville: degree {} exceeds the cap {}", rhs.p.degree(), kMaxRhsDegree));
  for (int d = rhs.p.min_degree(); d <= rhs.p.degree(); ++d) {
    HalfSpaceRHS layer{rhs.p.homogeneous_part(d), rhs.A};
    if (layer.p.is_zero()) continue;
    auto r = classify_homogeneous(layer, d);
    out.particular += r.particular;
    for (const auto& t : r.tricomi_terms) out.tricomi_terms.push_back(t);
    for (const auto& t : r.trace_coefficients) out.trace_coefficients.push_back(t);
  }
  out.is_polynomial = out.tricomi_terms.empty();
  return out;
}

double eval_solution(const ClassificationResult& res, double A, double x, double v) {
  double f = res.particular.eval(point1(0, x, v));
  for (const auto& t : res.tricomi_terms) f += t.m * eval_tricomi({A, t.lambda}, x, v);
  return f;
}

VerificationReport verify_solution(const ClassificationResult& res, const HalfSpaceRHS& rhs, const SamplingSpec& g) {
  check_rhs(rhs);
  VerificationReport rep;
  const double A = rhs.A.get_d();
  if (res.is_polynomial != res.tricomi_terms.empty()) rep.failures.push_back("is_polynomial inconsistent with terms");

  // (i) residual: the polynomial part exactly, the Tricomi part by finite differences.
  const KineticPolynomial lp = apply_stationary(res.particular, rhs.A) - rhs.p;
  double pmax = 0.0, rmax = 0.0, fscale = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    const double x = g.x_lo + (g.x_hi - g.x_lo) * i / std::max(1, g.nx - 1);
    for (int j = 0; j < g.nv; ++j) {
      const double v = -g.v_max + 2.0 * g.v_max * (j + 0.5) / g.nv;
      const auto z = point1(0, x, v);
      double r = lp.eval(z);
      for (const auto& t : res.tricomi_terms) r += t.m * pde_residual({A, t.lambda}, x, v);
      pmax = std::max(pmax, std::fabs(rhs.p.eval(z)));
      fscale = std::max(fscale, std::fabs(eval_solution(res, A, x, v)));
      rmax = std::max(rmax, std::fabs(r));
    }
  }
  rep.residual = rmax / (1.0 + pmax);
  if (!(rep.residual <= g.residual_tol))
    rep.failures.push_back(fmt::format("PDE residual {:.3e} above {:.1e}", rep.residual, g.residual_tol));

  // (ii) specular trace at x = eps, relative to the solution scale on the whole sample set.
  double gap = 0.0, fmax = fscale;
  for (int j = 0; j < 4 * g.nv; ++j) {
    const double v = g.v_max * (j + 0.5) / (4 * g.nv);
    const double fp = eval_solution(res, A, g.trace_eps, v), fm = eval_solution(res, A, g.trace_eps, -v);
    gap = std::max(gap, std::fabs(fp - fm));
    fmax = std::max({fmax, std::fabs(fp), std::fabs(fm)});
  }
  rep.trace_gap = fmax > 0 ? gap / fmax : gap;
  if (trace_at_zero(res.particular, 0) != flip(trace_at_zero(res.particular, 0), 0))
    rep.failures.push_back("polynomial part has an odd boundary trace");
  if (!(rep.trace_gap <= g.trace_tol))
    rep.failures.push_back(fmt::format("trace evenness gap {:.3e} above {:.1e}", rep.trace_gap, g.trace_tol));

  // (iii) growth on dyadic shells d_l(z, 0) ~ R, with d_l((0,x,v),0) = max(|x|^(1/3), |v|/2).
  int deg = res.particular.is_zero() ? 0 : res.particular.degree();
  for (const auto& t : res.tricomi_terms) deg = std::max(deg, t.lambda + 2);
  const int shells = 10;
  for (int s = 0; s <= shells; ++s) {
    const double R = std::ldexp(1.0, s);
    double worst = 0.0;
    for (int k = 0; k < 24; ++k) {
      const double th = M_PI * (k + 0.5) / 24.0;  // x = R^3 sin(th) >= 0, v = 2R cos(th)
      const double x = R * R * R * std::sin(th), v = 2.0 * R * std::cos(th);
      const double d = std::max(std::cbrt(x), std::fabs(v) / 2.0);
      worst = std::max(worst, std::fabs(eval_solution(res, A, x, v)) / std::pow(1.0 + d, deg + g.growth_eps));
    }
    if (s < shells) {
      rep.growth_inner = std::max(rep.growth_inner, worst);
    } else {
      rep.growth_outer = worst;
    }
  }
  if (!(rep.growth_outer <= 2.0 * rep.growth_inner + 1e-300))
    rep.failures.push_back(fmt::format("growth ratio rises on the outer shell ({:.3e} vs {:.3e})", rep.growth_outer,
                                       rep.growth_inner));
  rep.passed = rep.failures.empty();
  return rep;
}

bool flip_symmetric_shortcut(const OperatorSpec& op, const KineticPolynomial& p) {
  const std::size_t n = p.n();
  if (op.dim() != n) throw std::invalid_argument("flip_symmetric_shortcut: dimension mismatch");
  const std::size_t k = n - 1;
  for (std::size_t i = 0; i < n; ++i)
    if (i != k && (op.a[i][k] != 0.0 || op.a[k][i] != 0.0)) return false;
  if (!op.b.empty() && op.b[k] != 0.0) return false;
  return flip(p, k) == p;
}

}  // namespace krl
