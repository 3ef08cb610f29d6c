#include "krl/kfp_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <fmt/format.h>

namespace krl {

void HalfStripGrid::validate() const {
  if (!(x_max > 0.0) || !(v_max > 0.0)) throw std::invalid_argument("grid: extents must be positive");
  if (nx < 16 || nv < 16) throw std::invalid_argument("grid: nx and nv must be at least 16");
  if (nv % 2 != 0) throw std::invalid_argument("grid: nv must be even");
  if (nt < 0 || (nt > 0 && !(dt > 0.0))) throw std::invalid_argument("grid: bad time stepping");
}

double Field::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::fabs(v));
  return m;
}

Field make_field(const HalfStripGrid& g, const PhaseFn& f, std::string description) {
  g.validate();
  Field out;
  out.grid = g;
  out.description = std::move(description);
  out.values.resize(static_cast<std::size_t>(g.nx + 1) * g.nv);
  for (int i = 0; i <= g.nx; ++i)
    for (int j = 0; j < g.nv; ++j) out.at(i, j) = f(out.x(i), g.v(j));
  return out;
}

namespace {

// Discretization on nodes i = 0..N of a strip whose left end is either specular or in-flow.
struct Strip {
  int N = 0;
  int nv = 0;
  double hx = 0, hv = 0, v_max = 0;
  bool specular = true;
  int kink = -1;  // node where a mirror-extended solution has a derivative jump (full strip: nx)
  std::function<double(int j)> left;         // in-flow value, v_j > 0
  std::function<double(int j)> right;        // Dirichlet value, v_j < 0
  std::function<double(int i, bool top)> wall;  // ghost value beyond the last/first cell
  std::function<double(int i, int j)> src;
  double A = 1.0;
  Scheme scheme = Scheme::Linear2;
  mutable std::vector<double> corr;  // relaxed minmod correction

  double v(int j) const { return -v_max + (j + 0.5) * hv; }
  int m(int j) const { return nv - 1 - j; }
  std::size_t id(int i, int j) const { return static_cast<std::size_t>(i) * nv + j; }
};

enum class RowKind { Fixed, Copy, Pde };

RowKind row_kind(const Strip& s, int i, int j) {
  const bool pos = j >= s.nv / 2;
  if (i == 0 && pos) return s.specular ? RowKind::Copy : RowKind::Fixed;
  if (i == s.N && !pos) return RowKind::Fixed;
  return RowKind::Pde;
}

double fixed_value(const Strip& s, int i, int j) { return i == 0 ? s.left(j) : s.right(j); }

struct Entry {
  int i, j;
  double c;
};

// First order when the upwind stencil would leave the strip or reach across the kink.
bool second_order_ok(const Strip& s, int i, int j) {
  if (s.v(j) > 0) return i >= 2 && i - 1 != s.kink;
  return i + 2 <= s.N && i + 1 != s.kink;
}

// v d_x f at (i, j) as a combination of unknowns.
int x_stencil(const Strip& s, int i, int j, Entry* e) {
  const double vj = s.v(j);
  const double a = vj / s.hx;
  const bool second = s.scheme == Scheme::Linear2 && second_order_ok(s, i, j);
  if (vj > 0) {
    if (second) {
      e[0] = {i, j, 1.5 * a};
      e[1] = {i - 1, j, -2.0 * a};
      e[2] = {i - 2, j, 0.5 * a};
      return 3;
    }
    e[0] = {i, j, a};
    e[1] = {i - 1, j, -a};
    return 2;
  }
  if (second) {
    e[0] = {i, j, -1.5 * a};
    e[1] = {i + 1, j, 2.0 * a};
    e[2] = {i + 2, j, -0.5 * a};
    return 3;
  }
  e[0] = {i, j, -a};
  e[1] = {i + 1, j, a};
  return 2;
}

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::fabs(a) < std::fabs(b) ? a : b;
}

// Limited slope at node k of row j; one-sided where the strip ends. The specular ghost is f(hx, -v).
double slope(const Strip& s, const std::vector<double>& f, int k, int j) {
  const bool has_left = k >= 1 || s.specular;
  const bool has_right = k + 1 <= s.N;
  const double left = has_left ? f[s.id(k, j)] - (k >= 1 ? f[s.id(k - 1, j)] : f[s.id(1, s.m(j))]) : 0.0;
  const double right = has_right ? f[s.id(k + 1, j)] - f[s.id(k, j)] : 0.0;
  if (!has_left) return right;
  if (!has_right) return left;
  return minmod(left, right);
}

// Deferred second-order correction of the minmod scheme, added to the first-order upwind derivative.
double minmod_correction(const Strip& s, const std::vector<double>& f, int i, int j) {
  if (!second_order_ok(s, i, j)) return 0.0;
  const double vj = s.v(j);
  if (vj > 0) return vj * (slope(s, f, i, j) - slope(s, f, i - 1, j)) / (2.0 * s.hx);
  return -vj * (slope(s, f, i + 1, j) - slope(s, f, i, j)) / (2.0 * s.hx);
}

// Row (i, j') of a diffusion neighbour, folded into column 0's v < 0 half under specular reflection.
int fold(const Strip& s, int i, int jn) {
  if (i == 0 && s.specular && jn >= s.nv / 2) return s.m(jn);
  return jn;
}

void thomas(std::vector<double>& a, std::vector<double>& b, std::vector<double>& c, std::vector<double>& d,
            std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t k = 1; k < n; ++k) {
    const double w = a[k] / b[k - 1];
    b[k] -= w * c[k - 1];
    d[k] -= w * d[k - 1];
  }
  x[n - 1] = d[n - 1] / b[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) x[k] = (d[k] - c[k] * x[k + 1]) / b[k];
}

struct ColumnWork {
  std::vector<double> a, b, c, d, x;
  explicit ColumnWork(int nv) : a(nv), b(nv), c(nv), d(nv), x(nv) {}
};

// Solve column i with everything outside the column lagged.
void solve_column(const Strip& s, std::vector<double>& f, int i, ColumnWork& w) {
  const double dcoef = s.A / (s.hv * s.hv);
  Entry e[3];
  for (int j = 0; j < s.nv; ++j) {
    w.a[j] = w.c[j] = 0.0;
    const RowKind k = row_kind(s, i, j);
    if (k == RowKind::Fixed) {
      w.b[j] = 1.0;
      w.d[j] = fixed_value(s, i, j);
      continue;
    }
    if (k == RowKind::Copy) {
      w.b[j] = 1.0;
      w.d[j] = 0.0;  // filled after the solve
      continue;
    }
    double diag = 2.0 * dcoef;
    double rhs = s.src(i, j);
    const int n = x_stencil(s, i, j, e);
    for (int q = 0; q < n; ++q) {
      if (e[q].i == i && e[q].j == j) {
        diag += e[q].c;
      } else {
        rhs -= e[q].c * f[s.id(e[q].i, e[q].j)];
      }
    }
    if (s.scheme == Scheme::Minmod2) {
      double& c = s.corr[s.id(i, j)];
      c = 0.5 * (c + minmod_correction(s, f, i, j));
      rhs -= c;
    }
    for (int side : {-1, 1}) {
      const int jn = j + side;
      if (jn < 0 || jn >= s.nv) {
        rhs += dcoef * s.wall(i, jn >= s.nv);
        continue;
      }
      const int jf = fold(s, i, jn);
      if (jf == j) {
        diag -= dcoef;
      } else if (jf == j - 1) {
        w.a[j] -= dcoef;
      } else {
        w.c[j] -= dcoef;
      }
    }
    w.b[j] = diag;
    w.d[j] = rhs;
  }
  thomas(w.a, w.b, w.c, w.d, w.x);
  for (int j = 0; j < s.nv; ++j) f[s.id(i, j)] = w.x[j];
  if (i == 0 && s.specular)
    for (int j = s.nv / 2; j < s.nv; ++j) f[s.id(0, j)] = f[s.id(0, s.m(j))];
}

std::vector<double> sweep_solve(const Strip& s, const SolverOptions& opt, SolveStats* stats) {
  std::vector<double> f(static_cast<std::size_t>(s.N + 1) * s.nv, 0.0);
  for (int i = 0; i <= s.N; ++i)
    for (int j = 0; j < s.nv; ++j)
      if (row_kind(s, i, j) == RowKind::Fixed) f[s.id(i, j)] = fixed_value(s, i, j);
  ColumnWork w(s.nv);
  s.corr.assign(f.size(), 0.0);
  std::vector<double> old;
  std::vector<double> history;
  for (long it = 1; it <= opt.max_iter; ++it) {
    old = f;
    for (int i = 0; i <= s.N; ++i) solve_column(s, f, i, w);
    for (int i = s.N; i >= 0; --i) solve_column(s, f, i, w);
    double du = 0.0, fm = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (!std::isfinite(f[k])) throw SolverError("stationary solve produced a non-finite value", history);
      du = std::max(du, std::fabs(f[k] - old[k]));
      fm = std::max(fm, std::fabs(f[k]));
    }
    const double rel = fm > 0.0 ? du / fm : du;
    history.push_back(rel);
    if (rel < opt.tol) {
      if (stats) {
        stats->iterations = it;
        stats->history = std::move(history);
      }
      return f;
    }
  }
  throw SolverError(fmt::format("stationary sweeps did not reach {:.1e} in {} iterations (last {:.3e})", opt.tol,
                                opt.max_iter, history.empty() ? 0.0 : history.back()),
                    history);
}

std::vector<double> direct_solve(const Strip& s) {
  if (s.scheme == Scheme::Minmod2) throw std::invalid_argument("direct solve supports Upwind1 and Linear2 only");
  const std::size_t n = static_cast<std::size_t>(s.N + 1) * s.nv;
  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  const double dcoef = s.A / (s.hv * s.hv);
  Entry e[3];
  for (int i = 0; i <= s.N; ++i)
    for (int j = 0; j < s.nv; ++j) {
      const auto r = static_cast<int>(s.id(i, j));
      const RowKind k = row_kind(s, i, j);
      if (k == RowKind::Fixed) {
        trip.emplace_back(r, r, 1.0);
        rhs(r) = fixed_value(s, i, j);
        continue;
      }
      if (k == RowKind::Copy) {
        trip.emplace_back(r, r, 1.0);
        trip.emplace_back(r, static_cast<int>(s.id(0, s.m(j))), -1.0);
        continue;
      }
      rhs(r) = s.src(i, j);
      const int nst = x_stencil(s, i, j, e);
      for (int q = 0; q < nst; ++q) trip.emplace_back(r, static_cast<int>(s.id(e[q].i, e[q].j)), e[q].c);
      trip.emplace_back(r, r, 2.0 * dcoef);
      for (int side : {-1, 1}) {
        const int jn = j + side;
        if (jn < 0 || jn >= s.nv) {
          rhs(r) += dcoef * s.wall(i, jn >= s.nv);
          continue;
        }
        trip.emplace_back(r, static_cast<int>(s.id(i, fold(s, i, jn))), -dcoef);
      }
    }
  Eigen::SparseMatrix<double> mat(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  mat.setFromTriplets(trip.begin(), trip.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
  lu.compute(mat);
  if (lu.info() != Eigen::Success) throw std::runtime_error("direct solve: factorization failed");
  Eigen::VectorXd x = lu.solve(rhs);
  return std::vector<double>(x.data(), x.data() + x.size());
}

void check_bc(const BoundaryCondition& bc) {
  if (!bc.at_xmax) throw std::invalid_argument("boundary: at_xmax data missing");
  if (!bc.at_vmax) throw std::invalid_argument("boundary: at_vmax data missing");
  if (bc.at_x0 == X0Kind::InFlow && !bc.inflow) throw std::invalid_argument("boundary: in-flow data missing");
}

Strip half_strip(const HalfStripGrid& g, const PhaseFn& h, const BoundaryCondition& bc, double A, Scheme scheme) {
  g.validate();
  check_bc(bc);
  if (!(A > 0.0)) throw std::invalid_argument("solver: A must be positive");
  if (bc.v_walls != VWall::Dirichlet) throw std::invalid_argument("stationary solver: Dirichlet v-walls only");
  Strip s;
  s.N = g.nx;
  s.nv = g.nv;
  s.hx = g.hx();
  s.hv = g.hv();
  s.v_max = g.v_max;
  s.specular = bc.at_x0 == X0Kind::SpecularMirror;
  s.A = A;
  s.scheme = scheme;
  const double hx = s.hx, xm = g.x_max, vg = g.v_max + 0.5 * s.hv;
  s.left = [bc, g](int j) { return bc.inflow(0.0, 0.0, g.v(j)); };
  s.right = [bc, g, xm](int j) { return bc.at_xmax(0.0, xm, g.v(j)); };
  s.wall = [bc, hx, vg](int i, bool top) { return bc.at_vmax(0.0, i * hx, top ? vg : -vg); };
  s.src = [h, hx, g](int i, int j) { return h(i * hx, g.v(j)); };
  return s;
}

Field to_field(const HalfStripGrid& g, std::vector<double> vals, bool full, std::string desc) {
  Field f;
  f.grid = g;
  f.full_strip = full;
  f.values = std::move(vals);
  f.description = std::move(desc);
  return f;
}

}  // namespace

Field solve_stationary(const HalfStripGrid& g, const PhaseFn& h, const BoundaryCondition& bc, double A,
                       const SolverOptions& opt, SolveStats* stats) {
  Strip s = half_strip(g, h, bc, A, opt.scheme);
  return to_field(g, sweep_solve(s, opt, stats), false, "stationary");
}

Field solve_stationary_direct(const HalfStripGrid& g, const PhaseFn& h, const BoundaryCondition& bc, double A,
                              const SolverOptions& opt) {
  if (static_cast<long>(g.nx) * g.nv > (1L << 14)) throw std::invalid_argument("direct solve limited to nx*nv <= 2^14");
  Strip s = half_strip(g, h, bc, A, opt.scheme);
  return to_field(g, direct_solve(s), false, "stationary (direct)");
}

Field solve_full_strip(const HalfStripGrid& g, const PhaseFn& h, const BoundaryCondition& bc, double A,
                       const SolverOptions& opt, bool direct) {
  if (bc.at_x0 != X0Kind::SpecularMirror) throw std::invalid_argument("full strip: needs the specular condition");
  Strip s = half_strip(g, h, bc, A, opt.scheme);
  const int nx = g.nx;
  const double hx = s.hx, xm = g.x_max, vg = g.v_max + 0.5 * s.hv;
  s.N = 2 * nx;
  s.kink = nx;
  s.specular = false;
  s.left = [bc, g, xm](int j) { return bc.at_xmax(0.0, xm, -g.v(j)); };
  s.wall = [bc, hx, vg, nx](int i, bool top) {
    const double v = top ? vg : -vg;
    return i < nx ? bc.at_vmax(0.0, (nx - i) * hx, -v) : bc.at_vmax(0.0, (i - nx) * hx, v);
  };
  s.src = [h, hx, g, nx](int i, int j) {
    const double v = g.v(j);
    if (i < nx) return h((nx - i) * hx, -v);
    if (i == nx && v > 0) return h(0.0, -v);
    return h((i - nx) * hx, v);
  };
  std::vector<double> vals;
  if (direct) {
    if (static_cast<long>(2 * g.nx + 1) * g.nv > (1L << 15)) throw std::invalid_argument("full strip: grid too large for LU");
    vals = direct_solve(s);
  } else {
    vals = sweep_solve(s, opt, nullptr);
  }
  return to_field(g, std::move(vals), true, "full strip");
}

Field mirror_extend(const Field& f) {
  if (f.full_strip) throw std::invalid_argument("mirror_extend: field is already on the full strip");
  const auto& g = f.grid;
  Field out = to_field(g, std::vector<double>(static_cast<std::size_t>(2 * g.nx + 1) * g.nv), true,
                       f.description + " (mirror extended)");
  for (int i = 0; i <= 2 * g.nx; ++i)
    for (int j = 0; j < g.nv; ++j)
      out.at(i, j) = i >= g.nx ? f.at(i - g.nx, j) : f.at(g.nx - i, g.mirror(j));
  return out;
}

Field restrict_half(const Field& f) {
  if (!f.full_strip) return f;
  const auto& g = f.grid;
  Field out = to_field(g, std::vector<double>(static_cast<std::size_t>(g.nx + 1) * g.nv), false, f.description);
  for (int i = 0; i <= g.nx; ++i)
    for (int j = 0; j < g.nv; ++j) out.at(i, j) = f.at(i + g.nx, j);
  return out;
}

Trajectory solve_timedep(const Field& f0, const TimePhaseFn& h, const BoundaryCondition& bc, double A, double T,
                         const TimeOptions& opt) {
  const auto& g = f0.grid;
  g.validate();
  if (f0.full_strip) throw std::invalid_argument("time stepping runs on the half strip");
  if (!(A > 0.0)) throw std::invalid_argument("solver: A must be positive");
  if (!(g.dt > 0.0)) throw std::invalid_argument("time stepping: grid.dt must be positive");
  const double hx = g.hx(), hv = g.hv();
  if (g.dt > 0.5 * hx / g.v_max * (1.0 + 1e-12))
    throw std::invalid_argument(fmt::format("CFL violated: dt = {:.3e} > 0.5 hx / v_max = {:.3e}", g.dt,
                                            0.5 * hx / g.v_max));
  if (!bc.periodic_x) check_bc(bc);
  if (bc.v_walls == VWall::Dirichlet && !bc.at_vmax) throw std::invalid_argument("boundary: at_vmax data missing");
  const int N = g.nx, nv = g.nv;
  const bool spec = !bc.periodic_x && bc.at_x0 == X0Kind::SpecularMirror;
  const long steps = std::lround(std::ceil(T / g.dt - 1e-9));
  const double r = A * g.dt / (hv * hv);
  const double vg = g.v_max + 0.5 * hv;

  Trajectory out;
  Field f = f0;
  std::vector<double> rhs(f.values.size());
  ColumnWork w(nv);
  auto idx = [nv](int i, int j) { return static_cast<std::size_t>(i) * nv + j; };
  if (opt.save_every > 0) {
    out.times.push_back(0.0);
    out.frames.push_back(f);
  }
  double t = 0.0;
  for (long n = 1; n <= std::max(steps, 0L); ++n) {
    const double dt = std::min(g.dt, T - t);
    const double tn = t + dt;
    const double rr = r * dt / g.dt;
    // Explicit first-order upwind transport.
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j < nv; ++j) {
        const double v = g.v(j);
        double dfx = 0.0;
        if (bc.periodic_x) {
          const int ip = (i + 1) % N, im = (i - 1 + N) % N, ic = i % N;
          dfx = v > 0 ? (f.values[idx(ic, j)] - f.values[idx(im, j)]) : (f.values[idx(ip, j)] - f.values[idx(ic, j)]);
        } else if (v > 0) {
          dfx = i > 0 ? f.values[idx(i, j)] - f.values[idx(i - 1, j)] : 0.0;
        } else {
          dfx = i < N ? f.values[idx(i + 1, j)] - f.values[idx(i, j)] : 0.0;
        }
        rhs[idx(i, j)] = f.values[idx(i, j)] - dt * v * dfx / hx + dt * h(t, f.x(i), v);
      }
    // Implicit diffusion per column.
    for (int i = 0; i <= N; ++i) {
      const bool col0_spec = spec && i == 0;
      for (int j = 0; j < nv; ++j) {
        w.a[j] = w.c[j] = 0.0;
        const bool pos = g.v(j) > 0;
        const bool fixed = !bc.periodic_x && ((i == 0 && pos && !spec) || (i == N && !pos));
        const bool copy = col0_spec && pos;
        if (fixed) {
          w.b[j] = 1.0;
          w.d[j] = i == 0 ? bc.inflow(tn, 0.0, g.v(j)) : bc.at_xmax(tn, g.x_max, g.v(j));
          continue;
        }
        if (copy) {
          w.b[j] = 1.0;
          w.d[j] = 0.0;
          continue;
        }
        double diag = 1.0 + 2.0 * rr;
        double d = rhs[idx(i, j)];
        for (int side : {-1, 1}) {
          const int jn = j + side;
          if (jn < 0 || jn >= nv) {
            if (bc.v_walls == VWall::NoFlux) {
              diag -= rr;
            } else {
              d += rr * bc.at_vmax(tn, f.x(i), jn >= nv ? vg : -vg);
            }
            continue;
          }
          const int jf = (col0_spec && jn >= nv / 2) ? nv - 1 - jn : jn;
          if (jf == j) {
            diag -= rr;
          } else if (jf < j) {
            w.a[j] -= rr;
          } else {
            w.c[j] -= rr;
          }
        }
        w.b[j] = diag;
        w.d[j] = d;
      }
      thomas(w.a, w.b, w.c, w.d, w.x);
      for (int j = 0; j < nv; ++j) f.values[idx(i, j)] = w.x[j];
      if (col0_spec)
        for (int j = nv / 2; j < nv; ++j) f.values[idx(0, j)] = f.values[idx(0, nv - 1 - j)];
    }
    if (bc.periodic_x)
      for (int j = 0; j < nv; ++j) f.values[idx(N, j)] = f.values[idx(0, j)];
    t = tn;
    if (opt.save_every > 0 && n % opt.save_every == 0) {
      out.times.push_back(t);
      out.frames.push_back(f);
    }
  }
  if (opt.save_every <= 0 || out.times.empty() || out.times.back() != t) {
    out.times.push_back(t);
    out.frames.push_back(f);
  }
  return out;
}

double bilinear(const Field& f, double x, double v) {
  const auto& g = f.grid;
  const double hx = g.hx(), hv = g.hv();
  const double fx = (x - f.x(0)) / hx;
  const int nxn = f.x_nodes();
  int i = std::clamp(static_cast<int>(std::floor(fx)), 0, nxn - 2);
  const double sx = fx - i;
  const double fv = (v - g.v(0)) / hv;
  int j = std::clamp(static_cast<int>(std::floor(fv)), 0, g.nv - 2);
  const double sv = fv - j;
  return (1 - sx) * ((1 - sv) * f.at(i, j) + sv * f.at(i, j + 1)) + sx * ((1 - sv) * f.at(i + 1, j) + sv * f.at(i + 1, j + 1));
}

namespace {

std::vector<int> spread_indices(double lo, double hi, double origin, double h, int count, int n) {
  if (count > n) throw std::invalid_argument("interpolant: not enough grid nodes");
  std::vector<int> idx(count);
  for (int k = 0; k < count; ++k) {
    const double pos = lo + (hi - lo) * k / std::max(1, count - 1);
    idx[k] = std::clamp(static_cast<int>(std::lround((pos - origin) / h)), 0, n - 1);
  }
  for (int k = 1; k < count; ++k) idx[k] = std::max(idx[k], idx[k - 1] + 1);
  if (idx.back() > n - 1) {
    const int shift = idx.back() - (n - 1);
    for (auto& v : idx) v -= shift;
  }
  return idx;
}

std::vector<double> bary_weights(const std::vector<double>& xs) {
  std::vector<double> w(xs.size(), 1.0);
  for (std::size_t k = 0; k < xs.size(); ++k)
    for (std::size_t l = 0; l < xs.size(); ++l)
      if (l != k) w[k] /= (xs[k] - xs[l]);
  return w;
}

// Lagrange basis values at x by the barycentric formula.
void lagrange_row(const std::vector<double>& xs, const std::vector<double>& w, double x, std::vector<double>& out) {
  out.assign(xs.size(), 0.0);
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (x == xs[k]) {
      out[k] = 1.0;
      return;
    }
  double den = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) den += w[k] / (x - xs[k]);
  for (std::size_t k = 0; k < xs.size(); ++k) out[k] = w[k] / (x - xs[k]) / den;
}

}  // namespace

LagrangeInterpolant::LagrangeInterpolant(const Field& f, double x_lo, double x_hi, double v_lo, double v_hi,
                                         int degree) {
  if (degree < 1) throw std::invalid_argument("interpolant: degree must be positive");
  const auto& g = f.grid;
  auto ix = spread_indices(x_lo, x_hi, f.x(0), g.hx(), degree + 1, f.x_nodes());
  auto iv = spread_indices(v_lo, v_hi, g.v(0), g.hv(), degree + 1, g.nv);
  for (int i : ix) xs_.push_back(f.x(i));
  for (int j : iv) vs_.push_back(g.v(j));
  wx_ = bary_weights(xs_);
  wv_ = bary_weights(vs_);
  for (int i : ix)
    for (int j : iv) vals_.push_back(f.at(i, j));
}

double LagrangeInterpolant::operator()(double x, double v) const {
  thread_local std::vector<double> lx, lv;
  lagrange_row(xs_, wx_, x, lx);
  lagrange_row(vs_, wv_, v, lv);
  double s = 0.0;
  const std::size_t nvv = vs_.size();
  for (std::size_t k = 0; k < xs_.size(); ++k) {
    if (lx[k] == 0.0) continue;
    double row = 0.0;
    for (std::size_t l = 0; l < nvv; ++l) row += lv[l] * vals_[k * nvv + l];
    s += lx[k] * row;
  }
  return s;
}

void write_csv(std::ostream& os, const Field& f) {
  os << "x,v,value\n";
  for (int i = 0; i < f.x_nodes(); ++i)
    for (int j = 0; j < f.grid.nv; ++j) os << fmt::format("{:.17g},{:.17g},{:.17g}\n", f.x(i), f.grid.v(j), f.at(i, j));
}

Field read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("x,v,value", 0) != 0) throw std::runtime_error("field csv: expected header x,v,value");
  std::vector<std::array<double, 3>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::array<double, 3> r{};
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
      const std::size_t end = k < 2 ? line.find(',', pos) : line.size();
      if (end == std::string::npos) throw std::runtime_error(fmt::format("field csv: bad row '{}'", line));
      try {
        r[k] = std::stod(line.substr(pos, end - pos));
      } catch (const std::exception&) {
        throw std::runtime_error(fmt::format("field csv: bad number in row '{}'", line));
      }
      pos = end + 1;
    }
    rows.push_back(r);
  }
  std::size_t nv = 0;
  while (nv < rows.size() && rows[nv][0] == rows[0][0]) ++nv;
  if (nv < 2 || rows.size() % nv != 0 || rows.size() / nv < 2) throw std::runtime_error("field csv: not a tensor grid");
  const std::size_t nxn = rows.size() / nv;
  const double hx = rows[nv][0] - rows[0][0], hv = rows[1][1] - rows[0][1];
  for (std::size_t i = 0; i < nxn; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      const auto& r = rows[i * nv + j];
      if (std::fabs(r[0] - (rows[0][0] + i * hx)) > 1e-9 * (1 + std::fabs(r[0])) ||
          std::fabs(r[1] - (rows[0][1] + j * hv)) > 1e-9 * (1 + std::fabs(r[1])))
        throw std::runtime_error("field csv: grid is not uniform or not ordered x-major");
    }
  Field f;
  f.full_strip = rows[0][0] < 0.0;
  f.grid.x_max = rows.back()[0];
  f.grid.v_max = rows[nv - 1][1] + 0.5 * hv;
  f.grid.nv = static_cast<int>(nv);
  f.grid.nx = static_cast<int>(f.full_strip ? (nxn - 1) / 2 : nxn - 1);
  if (f.x_nodes() != static_cast<int>(nxn) || std::fabs(rows[0][0] - f.x(0)) > 1e-9 ||
      std::fabs(rows[0][1] + f.grid.v_max - 0.5 * hv) > 1e-9 * (1 + f.grid.v_max))
    throw std::runtime_error("field csv: grid does not match the solver layout");
  f.grid.validate();
  f.values.reserve(rows.size());
  for (const auto& r : rows) f.values.push_back(r[2]);
  return f;
}

// Header: "KFP1", uint32 x_nodes, uint32 nv, double x_lo, x_hi, v_max; then values row-major (x slowest).
void write_binary(std::ostream& os, const Field& f) {
  os.write("KFP1", 4);
  const std::uint32_t dims[2] = {static_cast<std::uint32_t>(f.x_nodes()), static_cast<std::uint32_t>(f.grid.nv)};
  os.write(reinterpret_cast<const char*>(dims), sizeof dims);
  const double ext[3] = {f.x(0), f.x(f.x_nodes() - 1), f.grid.v_max};
  os.write(reinterpret_cast<const char*>(ext), sizeof ext);
  os.write(reinterpret_cast<const char*>(f.values.data()), static_cast<std::streamsize>(f.values.size() * sizeof(double)));
}

Field read_binary(std::istream& is) {
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, "KFP1", 4) != 0) throw std::runtime_error("not a KFP1 field");
  std::uint32_t dims[2];
  double ext[3];
  if (!is.read(reinterpret_cast<char*>(dims), sizeof dims) || !is.read(reinterpret_cast<char*>(ext), sizeof ext))
    throw std::runtime_error("truncated KFP1 header");
  Field f;
  f.full_strip = ext[0] < 0.0;
  f.grid.nx = f.full_strip ? static_cast<int>((dims[0] - 1) / 2) : static_cast<int>(dims[0] - 1);
  f.grid.nv = static_cast<int>(dims[1]);
  f.grid.x_max = ext[1];
  f.grid.v_max = ext[2];
  f.values.resize(static_cast<std::size_t>(dims[0]) * dims[1]);
  if (!is.read(reinterpret_cast<char*>(f.values.data()), static_cast<std::streamsize>(f.values.size() * sizeof(double))))
    throw std::runtime_error("truncated KFP1 data");
  f.description = "read from KFP1";
  return f;
}

}  // namespace krl
