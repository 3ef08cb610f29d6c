#include "krl/probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace krl {

namespace {

double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

struct Samples {
  std::vector<KineticPoint> fit, check;
};

// Halton points of the normalized cylinder, kept when the physical point lies in x > 0.
Samples draw(const KineticPoint& z0, double r, std::size_t nfit, std::size_t ncheck, std::uint64_t seed) {
  Samples s;
  const double x0 = z0.x[0], v0 = z0.v[0];
  std::uint64_t idx = seed + 1;
  const std::size_t cap = 200 * (nfit + ncheck) + 1000;
  for (std::size_t tries = 0; s.fit.size() + s.check.size() < nfit + ncheck; ++tries, ++idx) {
    if (tries > cap) throw std::runtime_error("probe: half cylinder too thin to sample");
    auto h = halton3(idx);
    const double th = 2.0 * h[0] - 1.0, xh = 2.0 * h[1] - 1.0, vh = 2.0 * h[2] - 1.0;
    if (xh <= -(x0 + r * r * th * v0) / (r * r * r)) continue;
    KineticPoint zh = point1(th, xh, vh);
    (s.fit.size() < nfit ? s.fit : s.check).push_back(std::move(zh));
  }
  return s;
}

// Columns evaluated at the normalized point zh (physical z = frame_map(z0, r, zh)).
struct Columns {
  std::vector<BasisElement> basis;
  bool normalized_monomials = false;
  double r = 1.0;
  KineticPoint z0;

  double eval(std::size_t j, const KineticPoint& zh, const KineticPoint& z) const {
    if (normalized_monomials) return basis[j].poly.eval(zh);
    return basis[j].eval(z) * std::pow(r, -basis[j].degree());
  }
};

}  // namespace

std::array<double, 3> halton3(std::uint64_t index) {
  return {radical_inverse(index, 2), radical_inverse(index, 3), radical_inverse(index, 5)};
}

ApproxResult best_approx(const Evaluable& f, const KineticPoint& z0, double r, const PolySpaceSpec& spec, int samples,
                         const ProbeOptions& opt) {
  if (spec.n != 1 || z0.dim() != 1) throw std::invalid_argument("probe: n = 1 only");
  if (!(r > 0.0) || r > 1.0) throw std::invalid_argument("probe: need 0 < r <= 1");
  Columns cols;
  cols.basis = space_basis(spec);
  cols.normalized_monomials = spec.kind == SpaceKind::Full;
  cols.r = r;
  cols.z0 = z0;
  const std::size_t dim = cols.basis.size();
  if (samples != 0 && samples < static_cast<int>(10 * dim)) throw std::invalid_argument("probe: samples < 10 dim");
  const std::size_t nfit = samples > 0 ? static_cast<std::size_t>(samples) : opt.fit_factor * dim;
  const std::size_t ncheck = nfit * opt.check_factor;
  Samples s = draw(z0, r, nfit, ncheck, opt.seed);

  Eigen::MatrixXd a(nfit, dim);
  Eigen::VectorXd b(nfit);
  for (std::size_t i = 0; i < nfit; ++i) {
    KineticPoint z = frame_map(z0, r, s.fit[i]);
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = cols.eval(j, s.fit[i], z);
    b(i) = f(z);
  }
  Eigen::VectorXd scale = a.colwise().norm().transpose();
  for (std::size_t j = 0; j < dim; ++j) {
    if (scale(j) == 0.0) throw std::runtime_error("probe: rank-deficient fit");
    a.col(j) /= scale(j);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-12);
  if (qr.rank() < static_cast<Eigen::Index>(dim)) throw std::runtime_error("probe: rank-deficient fit");
  Eigen::VectorXd c = qr.solve(b);
  for (std::size_t j = 0; j < dim; ++j) c(j) /= scale(j);

  ApproxResult out;
  auto visit = [&](const KineticPoint& zh) {
    KineticPoint z = frame_map(z0, r, zh);
    double fit = 0.0;
    for (std::size_t j = 0; j < dim; ++j) fit += c(j) * cols.eval(j, zh, z);
    const double fz = f(z);
    out.error = std::max(out.error, std::fabs(fz - fit));
    out.scale = std::max(out.scale, std::fabs(fz));
  };
  for (const auto& zh : s.fit) visit(zh);
  for (const auto& zh : s.check) visit(zh);
  out.coeffs.assign(c.data(), c.data() + c.size());
  return out;
}

double best_approx_error(const Evaluable& f, const KineticPoint& z0, double r, const PolySpaceSpec& spec, int samples,
                         const ProbeOptions& opt) {
  return best_approx(f, z0, r, spec, samples, opt).error;
}

ExponentFit exponent_fit(const Evaluable& f, const KineticPoint& z0, const PolySpaceSpec& spec,
                         const std::vector<double>& radii, const ProbeOptions& opt) {
  if (radii.size() < 4) throw std::invalid_argument("exponent_fit: need at least 4 radii");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] < radii[i - 1])) throw std::invalid_argument("exponent_fit: radii must decrease strictly");
  ExponentFit fit;
  fit.radii = radii;
  bool all_exact = true;
  for (double r : radii) {
    ApproxResult a = best_approx(f, z0, r, spec, 0, opt);
    fit.errors.push_back(a.error);
    if (a.error > 1e-12 * (1.0 + a.scale)) all_exact = false;
  }
  if (all_exact) {
    fit.exact = true;
    fit.slope = std::numeric_limits<double>::infinity();
    return fit;
  }
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (fit.errors[i] <= 0.0) continue;
    lx.push_back(std::log(radii[i]));
    ly.push_back(std::log(fit.errors[i]));
  }
  const double n = static_cast<double>(lx.size());
  if (n < 2) {
    fit.exact = true;
    fit.slope = std::numeric_limits<double>::infinity();
    return fit;
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i] / n, my += ly[i] / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  const double p = std::round(fit.slope);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double q = fit.errors[i] / std::pow(radii[i], p);
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  fit.plateau_ratio = lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
  fit.plateau = fit.plateau_ratio <= 4.0;
  return fit;
}

TauEstimate gamma0_tricomi_coefficient(const Evaluable& f, const KineticPoint& z0, double A,
                                       const std::vector<double>& radii, const ProbeOptions& opt) {
  if (radii.empty()) throw std::invalid_argument("gamma0_tricomi_coefficient: no radii");
  if (z0.dim() != 1 || z0.x[0] != 0.0 || z0.v[0] != 0.0)
    throw std::invalid_argument("gamma0_tricomi_coefficient: z0 must lie on the grazing set");
  const PolySpaceSpec spec = PolySpaceSpec::tricomi_augmented(A);
  TauEstimate out;
  double rmin = radii.front();
  for (double r : radii) {
    ApproxResult a = best_approx(f, z0, r, spec, 0, opt);
    // The marker is the last column, scaled by r^-5.
    out.per_radius.push_back(a.coeffs.back() * std::pow(r, -5.0));
    if (r <= rmin) {
      rmin = r;
      out.tau = out.per_radius.back();
    }
  }
  const auto [mn, mx] = std::minmax_element(out.per_radius.begin(), out.per_radius.end());
  const double spread = *mx - *mn;
  out.variation = spread / std::max(std::fabs(out.tau), 1e-300);
  out.unstable = out.variation > 0.5 && spread > 1e-8;
  return out;
}

}  // namespace krl
