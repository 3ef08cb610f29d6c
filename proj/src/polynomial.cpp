#include "krl/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "krl/tricomi.hpp"
#include "qlinalg.hpp"

namespace krl {

using detail::QMatrix;
using detail::QVec;

int MultiIndex::degree() const {
  int d = 2 * bt;
  for (int e : bx) d += 3 * e;
  for (int e : bv) d += e;
  return d;
}

namespace {

void enumerate(std::size_t n, int budget, std::size_t slot, MultiIndex& cur, std::vector<MultiIndex>& out) {
  // slot 0 .. n-1: x components, n .. 2n-1: v components
  if (slot == 2 * n) {
    out.push_back(cur);
    return;
  }
  const int w = slot < n ? 3 : 1;
  for (int e = 0; e * w <= budget; ++e) {
    if (slot < n) {
      cur.bx[slot] = e;
    } else {
      cur.bv[slot - n] = e;
    }
    enumerate(n, budget - e * w, slot + 1, cur, out);
  }
  if (slot < n) {
    cur.bx[slot] = 0;
  } else {
    cur.bv[slot - n] = 0;
  }
}

double ipow(double x, int e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

void check_dim(const KineticPolynomial& a, const KineticPolynomial& b) {
  if (a.n() != b.n()) throw std::invalid_argument("polynomials have different dimensions");
}

std::string var_name(char base, std::size_t n, std::size_t i) {
  return n == 1 ? std::string(1, base) : std::string(1, base) + std::to_string(i + 1);
}

}  // namespace

std::vector<MultiIndex> multi_indices(std::size_t n, int k, bool include_t) {
  std::vector<MultiIndex> out;
  if (k < 0) return out;
  for (int bt = 0; 2 * bt <= k; ++bt) {
    if (bt > 0 && !include_t) break;
    MultiIndex cur = MultiIndex::zero(n);
    cur.bt = bt;
    enumerate(n, k - 2 * bt, 0, cur, out);
  }
  std::stable_sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  return out;
}

KineticPolynomial KineticPolynomial::constant(std::size_t n, const mpq_class& c) {
  KineticPolynomial p(n);
  p.add_term(MultiIndex::zero(n), c);
  return p;
}

KineticPolynomial KineticPolynomial::monomial(const MultiIndex& m, const mpq_class& c) {
  KineticPolynomial p(m.dim());
  p.add_term(m, c);
  return p;
}

KineticPolynomial KineticPolynomial::var_t(std::size_t n) {
  MultiIndex m = MultiIndex::zero(n);
  m.bt = 1;
  return monomial(m);
}

KineticPolynomial KineticPolynomial::var_x(std::size_t n, std::size_t i) {
  MultiIndex m = MultiIndex::zero(n);
  m.bx.at(i) = 1;
  return monomial(m);
}

KineticPolynomial KineticPolynomial::var_v(std::size_t n, std::size_t i) {
  MultiIndex m = MultiIndex::zero(n);
  m.bv.at(i) = 1;
  return monomial(m);
}

int KineticPolynomial::degree() const {
  int d = kZeroDegree;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int KineticPolynomial::min_degree() const {
  if (terms_.empty()) return kZeroDegree;
  int d = INT_MAX;
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

bool KineticPolynomial::is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

bool KineticPolynomial::depends_on_t() const {
  for (const auto& [m, c] : terms_)
    if (m.bt > 0) return true;
  return false;
}

mpq_class KineticPolynomial::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void KineticPolynomial::add_term(const MultiIndex& m, const mpq_class& c) {
  if (m.dim() != n_ || m.bv.size() != n_) throw std::invalid_argument("multi-index dimension mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

KineticPolynomial KineticPolynomial::homogeneous_part(int d) const {
  KineticPolynomial out(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace(m, c);
  return out;
}

double KineticPolynomial::eval(const KineticPoint& z) const {
  if (z.dim() != n_) throw std::invalid_argument("evaluation point has the wrong dimension");
  double s = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = c.get_d() * ipow(z.t, m.bt);
    for (std::size_t i = 0; i < n_; ++i) term *= ipow(z.x[i], m.bx[i]) * ipow(z.v[i], m.bv[i]);
    s += term;
  }
  return s;
}

KineticPolynomial& KineticPolynomial::operator+=(const KineticPolynomial& o) {
  check_dim(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

KineticPolynomial& KineticPolynomial::operator-=(const KineticPolynomial& o) {
  check_dim(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

KineticPolynomial& KineticPolynomial::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

KineticPolynomial operator*(const KineticPolynomial& a, const KineticPolynomial& b) {
  check_dim(a, b);
  KineticPolynomial out(a.n());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      MultiIndex m = ma;
      m.bt += mb.bt;
      for (std::size_t i = 0; i < a.n(); ++i) {
        m.bx[i] += mb.bx[i];
        m.bv[i] += mb.bv[i];
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

std::string KineticPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  std::vector<std::pair<MultiIndex, mpq_class>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
  for (const auto& [m, c] : ts) {
    mpq_class a = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    auto push = [&](const std::string& name, int e) {
      if (e == 1) factors.push_back(name);
      if (e > 1) factors.push_back(name + "^" + std::to_string(e));
    };
    push("t", m.bt);
    for (std::size_t i = 0; i < n_; ++i) push(var_name('x', n_, i), m.bx[i]);
    for (std::size_t i = 0; i < n_; ++i) push(var_name('v', n_, i), m.bv[i]);
    if (factors.empty() || a != 1) factors.insert(factors.begin(), a.get_str());
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const KineticPolynomial& p) { return os << p.to_string(); }

KineticPolynomial pow(const KineticPolynomial& p, int e) {
  KineticPolynomial r = KineticPolynomial::constant(p.n(), 1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

KineticPolynomial diff_t(const KineticPolynomial& p) {
  KineticPolynomial out(p.n());
  for (const auto& [m, c] : p.terms()) {
    if (m.bt == 0) continue;
    MultiIndex d = m;
    d.bt -= 1;
    out.add_term(d, c * m.bt);
  }
  return out;
}

KineticPolynomial diff_x(const KineticPolynomial& p, std::size_t i) {
  KineticPolynomial out(p.n());
  for (const auto& [m, c] : p.terms()) {
    if (m.bx.at(i) == 0) continue;
    MultiIndex d = m;
    d.bx[i] -= 1;
    out.add_term(d, c * m.bx[i]);
  }
  return out;
}

KineticPolynomial diff_v(const KineticPolynomial& p, std::size_t i) {
  KineticPolynomial out(p.n());
  for (const auto& [m, c] : p.terms()) {
    if (m.bv.at(i) == 0) continue;
    MultiIndex d = m;
    d.bv[i] -= 1;
    out.add_term(d, c * m.bv[i]);
  }
  return out;
}

KineticPolynomial transport(const KineticPolynomial& p) {
  KineticPolynomial out = diff_t(p);
  for (std::size_t i = 0; i < p.n(); ++i) out += KineticPolynomial::var_v(p.n(), i) * diff_x(p, i);
  return out;
}

KineticPolynomial transport_derivative(const KineticPolynomial& p, const MultiIndex& beta) {
  if (beta.dim() != p.n()) throw std::invalid_argument("multi-index dimension mismatch");
  KineticPolynomial q = p;
  for (std::size_t i = 0; i < p.n(); ++i)
    for (int e = 0; e < beta.bv[i]; ++e) q = diff_v(q, i);
  for (std::size_t i = 0; i < p.n(); ++i)
    for (int e = 0; e < beta.bx[i]; ++e) q = diff_x(q, i);
  for (int e = 0; e < beta.bt; ++e) q = transport(q);
  return q;
}

KineticPolynomial pullback(const KineticPolynomial& p, const KineticPoint& z0, double r) {
  const std::size_t n = p.n();
  if (z0.dim() != n) throw std::invalid_argument("base point has the wrong dimension");
  const mpq_class R = to_rational(r);
  const mpq_class R2 = R * R, R3 = R2 * R;
  const KineticPolynomial T = KineticPolynomial::var_t(n);
  KineticPolynomial ts = KineticPolynomial::constant(n, to_rational(z0.t)) + T * R2;
  std::vector<KineticPolynomial> xs, vs;
  for (std::size_t i = 0; i < n; ++i) {
    const mpq_class v0 = to_rational(z0.v[i]);
    xs.push_back(KineticPolynomial::constant(n, to_rational(z0.x[i])) + KineticPolynomial::var_x(n, i) * R3 +
                 T * (R2 * v0));
    vs.push_back(KineticPolynomial::constant(n, v0) + KineticPolynomial::var_v(n, i) * R);
  }
  std::map<std::pair<int, int>, KineticPolynomial> cache;  // (slot, exponent)
  auto power = [&](int slot, int e) -> const KineticPolynomial& {
    auto key = std::make_pair(slot, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const KineticPolynomial& base = slot == 0 ? ts : (slot <= static_cast<int>(n) ? xs[slot - 1] : vs[slot - 1 - n]);
    return cache.emplace(key, pow(base, e)).first->second;
  };
  KineticPolynomial out(n);
  for (const auto& [m, c] : p.terms()) {
    KineticPolynomial term = power(0, m.bt);
    for (std::size_t i = 0; i < n; ++i) {
      if (m.bx[i]) term = term * power(static_cast<int>(1 + i), m.bx[i]);
      if (m.bv[i]) term = term * power(static_cast<int>(1 + n + i), m.bv[i]);
    }
    out += term * c;
  }
  return out;
}

KineticPolynomial trace_at_zero(const KineticPolynomial& p, std::size_t axis) {
  KineticPolynomial out(p.n());
  for (const auto& [m, c] : p.terms())
    if (m.bx.at(axis) == 0) out.add_term(m, c);
  return out;
}

KineticPolynomial flip(const KineticPolynomial& p, std::size_t axis) {
  KineticPolynomial out(p.n());
  for (const auto& [m, c] : p.terms()) {
    const bool odd = ((m.bx.at(axis) + m.bv.at(axis)) % 2) != 0;
    out.add_term(m, odd ? mpq_class(-c) : c);
  }
  return out;
}

OperatorSpec OperatorSpec::isotropic(std::size_t n, double A) {
  OperatorSpec op;
  op.a.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) op.a[i][i] = A;
  op.b.assign(n, 0.0);
  return op;
}

bool OperatorSpec::constant_coefficient_homogeneous() const {
  if (c != 0.0) return false;
  return std::all_of(b.begin(), b.end(), [](double x) { return x == 0.0; });
}

bool is_uniformly_elliptic(const OperatorSpec& op, double lambda, double Lambda) {
  const std::size_t n = op.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (op.a[i].size() != n) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (op.a[i][j] != op.a[j][i]) return false;
  }
  // Cyclic Jacobi rotations until the matrix is diagonal.
  std::vector<std::vector<double>> m = op.a;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += m[p][q] * m[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (m[i][i] < lambda || m[i][i] > Lambda) return false;
  return true;
}

KineticPolynomial apply_operator(const OperatorSpec& op, const KineticPolynomial& p) {
  const std::size_t n = p.n();
  if (op.dim() != n) throw std::invalid_argument("operator and polynomial dimensions differ");
  KineticPolynomial out = transport(p);
  for (std::size_t i = 0; i < n; ++i) {
    KineticPolynomial di = diff_v(p, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (op.a[i][j] == 0.0) continue;
      out -= diff_v(di, j) * to_rational(op.a[i][j]);
    }
    if (i < op.b.size() && op.b[i] != 0.0) out += di * to_rational(op.b[i]);
  }
  if (op.c != 0.0) out += p * to_rational(op.c);
  return out;
}

double BasisElement::eval(const KineticPoint& z) const {
  if (!tricomi) return poly.eval(z);
  return eval_tricomi(TricomiParams{A, 3}, z.x.at(axis), z.v.at(axis));
}

std::vector<BasisElement> space_basis(const PolySpaceSpec& spec) {
  if (spec.normal_axis >= spec.n) throw std::invalid_argument("normal axis out of range");
  if (spec.kind == SpaceKind::TricomiAugmented) {
    if (spec.k != 5) throw std::invalid_argument("the Tricomi-augmented space is defined for k = 5 only");
    if (!(spec.A > 0.0)) throw std::invalid_argument("the Tricomi-augmented space needs A > 0");
  }
  std::vector<BasisElement> out;
  for (const auto& m : multi_indices(spec.n, spec.k)) {
    if (spec.kind != SpaceKind::Full) {
      const std::size_t a = spec.normal_axis;
      if (m.bx[a] == 0 && m.bv[a] % 2 == 1) continue;
    }
    BasisElement e;
    e.poly = KineticPolynomial::monomial(m);
    e.axis = spec.normal_axis;
    out.push_back(std::move(e));
  }
  if (spec.kind == SpaceKind::TricomiAugmented) {
    BasisElement e;
    e.tricomi = true;
    e.poly = KineticPolynomial(spec.n);
    e.A = spec.A;
    e.axis = spec.normal_axis;
    out.push_back(std::move(e));
  }
  return out;
}

KineticPolynomial particular_solve_1d(int lambda1, int lambda2, const mpq_class& amp, const mpq_class& A) {
  if (lambda1 < 0 || lambda2 < 0) throw std::invalid_argument("exponents must be nonnegative");
  if (A <= 0) throw std::invalid_argument("A must be positive");
  KineticPolynomial out(1);
  // x^l1 P0 cancels the target up to a term c x^(l1-1) v^(l2+3), which is handled recursively.
  mpq_class a = amp;
  int l1 = lambda1, l2 = lambda2;
  while (a != 0) {
    mpq_class c0 = -a / (A * (l2 + 2) * (l2 + 1));
    MultiIndex m = MultiIndex::zero(1);
    m.bx[0] = l1;
    m.bv[0] = l2 + 2;
    out.add_term(m, c0);
    if (l1 == 0) break;
    a = -c0 * l1;
    l1 -= 1;
    l2 += 3;
  }
  return out;
}

namespace {

// Matrix of apply_operator on the given columns, rows indexed by the monomials that occur.
QMatrix operator_matrix(const OperatorSpec& op, const std::vector<KineticPolynomial>& cols,
                        std::map<MultiIndex, std::size_t>& rows) {
  std::vector<KineticPolynomial> images;
  images.reserve(cols.size());
  for (const auto& c : cols) {
    images.push_back(apply_operator(op, c));
    for (const auto& [m, v] : images.back().terms()) rows.emplace(m, 0);
  }
  std::size_t idx = 0;
  for (auto& [m, i] : rows) i = idx++;
  QMatrix mat(rows.size(), cols.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [m, v] : images[j].terms()) mat(rows.at(m), j) = v;
  return mat;
}

}  // namespace

KineticPolynomial particular_solve_general(const OperatorSpec& op, const KineticPolynomial& p) {
  const std::size_t n = p.n();
  if (op.dim() != n) throw std::invalid_argument("operator and polynomial dimensions differ");
  if (p.is_zero()) return KineticPolynomial(n);
  const bool with_t = p.depends_on_t();
  const int d = std::max(p.degree(), 0);
  for (int k : {d + 2, d + 4}) {
    std::vector<KineticPolynomial> cols;
    for (const auto& m : multi_indices(n, k, with_t)) cols.push_back(KineticPolynomial::monomial(m));
    std::map<MultiIndex, std::size_t> rows;
    for (const auto& [m, c] : p.terms()) rows.emplace(m, 0);
    QMatrix mat = operator_matrix(op, cols, rows);
    QVec rhs(rows.size(), 0);
    for (const auto& [m, c] : p.terms()) rhs[rows.at(m)] = c;
    auto sol = detail::solve_min_norm(mat, rhs);
    if (!sol) continue;
    KineticPolynomial out(n);
    for (std::size_t j = 0; j < cols.size(); ++j) out += cols[j] * (*sol)[j];
    return out;
  }
  throw std::runtime_error("no polynomial solution within the degree cap for L P = " + p.to_string());
}

std::vector<KineticPolynomial> kernel_basis(const OperatorSpec& op, const PolySpaceSpec& spec) {
  if (op.dim() != spec.n) throw std::invalid_argument("operator and space dimensions differ");
  std::vector<KineticPolynomial> cols;
  // The Tricomi marker is left out: L T is a nonzero multiple of v_n^3, which no element of the
  // specular degree-5 space can cancel.
  for (const auto& e : space_basis(spec))
    if (!e.tricomi) cols.push_back(e.poly);
  std::map<MultiIndex, std::size_t> rows;
  QMatrix mat = operator_matrix(op, cols, rows);
  std::vector<KineticPolynomial> out;
  if (rows.empty()) return cols;
  for (const auto& v : detail::nullspace(mat)) {
    KineticPolynomial q(spec.n);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (v[j] != 0) q += cols[j] * v[j];
    out.push_back(std::move(q));
  }
  return out;
}

mpq_class to_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot convert a non-finite value to a rational");
  return mpq_class(x);
}

mpq_class parse_rational(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty coefficient");
  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + raw);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + raw);
    q.canonicalize();
    return q;
  }
  // Decimal with optional exponent, parsed exactly.
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
  std::string digits;
  int scale = 0;
  bool seen_dot = false, any = false;
  for (; pos < s.size(); ++pos) {
    char ch = s[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
      any = true;
      if (seen_dot) ++scale;
    } else if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any) throw std::invalid_argument("bad number: " + raw);
  long exp10 = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw std::invalid_argument("bad number: " + raw);
    try {
      std::size_t used = 0;
      exp10 = std::stol(s.substr(pos + 1), &used);
      if (pos + 1 + used != s.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent: " + raw);
    }
  }
  mpz_class num(digits, 10);
  long e = exp10 - scale;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e)));
  mpq_class q = e >= 0 ? mpq_class(num * p10) : mpq_class(num, p10);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

}  // namespace krl
