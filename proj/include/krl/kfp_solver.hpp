#pragma once

#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace krl {

// x nodes x_i = i hx, i = 0..nx; velocity cells v_j = -v_max + (j + 1/2) hv, j = 0..nv-1 (nv even),
// so v = 0 is a cell face and no node sits on the grazing velocity.
struct HalfStripGrid {
  double x_max = 1.0;
  double v_max = 1.0;
  int nx = 64;
  int nv = 64;
  int nt = 0;
  double dt = 0.0;

  double hx() const { return x_max / nx; }
  double hv() const { return 2.0 * v_max / nv; }
  double v(int j) const { return -v_max + (j + 0.5) * hv(); }
  int mirror(int j) const { return nv - 1 - j; }
  void validate() const;
};

using PhaseFn = std::function<double(double x, double v)>;
using TimePhaseFn = std::function<double(double t, double x, double v)>;

enum class X0Kind { SpecularMirror, InFlow };
enum class VWall { Dirichlet, NoFlux };

struct BoundaryCondition {
  X0Kind at_x0 = X0Kind::SpecularMirror;
  TimePhaseFn inflow;   // f(t, 0, v) for v > 0 when at_x0 = InFlow
  TimePhaseFn at_xmax;  // f(t, x_max, v) for v < 0
  TimePhaseFn at_vmax;  // ghost values at v = +-(v_max + hv/2)
  VWall v_walls = VWall::Dirichlet;
  bool periodic_x = false;  // time stepping only; replaces both x conditions
};

// Values on the nodes; values[i * nv + j]. A full-strip field covers x in [-x_max, x_max] with
// 2 nx + 1 nodes, x_i = (i - nx) hx.
struct Field {
  HalfStripGrid grid;
  bool full_strip = false;
  std::vector<double> values;
  std::string description;

  int x_nodes() const { return full_strip ? 2 * grid.nx + 1 : grid.nx + 1; }
  double x(int i) const { return full_strip ? (i - grid.nx) * grid.hx() : i * grid.hx(); }
  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.nv + j]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.nv + j]; }
  double max_abs() const;
};

Field make_field(const HalfStripGrid& g, const PhaseFn& f, std::string description = {});

enum class Scheme { Upwind1, Linear2, Minmod2 };

struct SolverOptions {
  Scheme scheme = Scheme::Linear2;
  double tol = 1e-10;
  long max_iter = 100000;
};

struct SolveStats {
  long iterations = 0;
  std::vector<double> history;  // relative update per sweep pair
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, std::vector<double> history)
      : std::runtime_error(what), history_(std::move(history)) {}
  const std::vector<double>& history() const { return history_; }

 private:
  std::vector<double> history_;
};

// v d_x f - A d_vv f = h on (0, x_max) x (-v_max, v_max) by x-line Gauss-Seidel sweeps
// (forward then backward), implicit tridiagonal in v per column.
Field solve_stationary(const HalfStripGrid& g, const PhaseFn& h, const BoundaryCondition& bc, double A,
                       const SolverOptions& opt = {}, SolveStats* stats = nullptr);

// Same discrete system by one sparse LU factorization (Upwind1 or Linear2); nx * nv <= 2^14.
Field solve_stationary_direct(const HalfStripGrid& g, const PhaseFn& h, const BoundaryCondition& bc, double A,
                              const SolverOptions& opt = {});

// The mirror-extended problem on (-x_max, x_max): source h(-x, -v) for x < 0 (h(0, -v) on the v > 0
// rows at x = 0), in-flow at -x_max from f(x_max, -v), walls mirrored. Needs SpecularMirror in bc.
Field solve_full_strip(const HalfStripGrid& g, const PhaseFn& h, const BoundaryCondition& bc, double A,
                       const SolverOptions& opt = {}, bool direct = false);

// f(x, v) = f(-x, -v) for x < 0.
Field mirror_extend(const Field& f);
// Restriction of a full-strip field to x >= 0.
Field restrict_half(const Field& f);

struct TimeOptions {
  int save_every = 0;  // 0: only the final state
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Field> frames;
};

// d_t f + v d_x f - A d_vv f = h by IMEX Euler: explicit first-order upwind transport, implicit diffusion.
// Refuses dt > 0.5 hx / v_max. Uses f0.grid.dt and steps until t = T.
Trajectory solve_timedep(const Field& f0, const TimePhaseFn& h, const BoundaryCondition& bc, double A, double T,
                         const TimeOptions& opt = {});

// Interpolation of node values.
double bilinear(const Field& f, double x, double v);

// Tensor Lagrange interpolant on a fixed set of (degree+1) x (degree+1) nodes spread over a box.
class LagrangeInterpolant {
 public:
  LagrangeInterpolant(const Field& f, double x_lo, double x_hi, double v_lo, double v_hi, int degree = 7);
  double operator()(double x, double v) const;

 private:
  std::vector<double> xs_, vs_, wx_, wv_, vals_;
};

void write_csv(std::ostream& os, const Field& f);
// Inverse of write_csv; the grid layout is recovered from the rows.
Field read_csv(std::istream& is);
void write_binary(std::ostream& os, const Field& f);
Field read_binary(std::istream& is);

}  // namespace krl
