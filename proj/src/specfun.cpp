#include "krl/specfun.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace krl {

namespace {

using ld = long double;

constexpr ld kPi = 3.141592653589793238462643383279502884L;
constexpr double kDoubleEps = 0x1p-53;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// sin(pi x) with exact zeros at the integers.
ld sinpi(ld x) {
  ld n = std::nearbyint(x);
  ld r = x - n;
  ld s = std::sin(kPi * r);
  return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

ld gamma_positive(ld x) {
  static const ld g = 7.0L;
  static const ld p[9] = {0.99999999999980993227684700473478L,  676.520368121885098567009190444019L,
                          -1259.13921672240287047156078755283L, 771.3234287776530788486528258894L,
                          -176.61502916214059906584551354L,     12.507343278686904814458936853L,
                          -0.13857109526572011689554707L,       9.984369578019570859563e-6L,
                          1.50563273514931155834e-7L};
  ld y = x - 1.0L;
  ld s = p[0];
  for (int i = 1; i < 9; ++i) s += p[i] / (y + i);
  ld t = y + g + 0.5L;
  return std::sqrt(2.0L * kPi) * std::pow(t, y + 0.5L) * std::exp(-t) * s;
}

ld gamma_ld(ld x) {
  if (x < 0.5L) return kPi / (sinpi(x) * gamma_positive(1.0L - x));
  return gamma_positive(x);
}

ld rgamma_ld(ld x) {
  if (x <= 0 && x == std::nearbyint(x)) return 0.0L;
  if (x < 0.5L) return sinpi(x) * gamma_positive(1.0L - x) / kPi;
  return 1.0L / gamma_positive(x);
}

struct SeriesSum {
  ld sum = 0;
  ld abs_sum = 0;
  ld err = 0;
  int terms = 0;
};

// sum_k (a)_k / (b)_k z^k / k!
SeriesSum m_series(ld a, ld b, ld z) {
  SeriesSum s;
  ld term = 1.0L;
  s.sum = 1.0L;
  s.abs_sum = 1.0L;
  int small = 0;
  int k = 0;
  ld tail = 0.0L;
  const int cap = 10000;
  for (; k < cap; ++k) {
    term *= (a + k) * z / ((b + k) * (k + 1));
    if (term == 0.0L) break;  // terminating series
    s.sum += term;
    s.abs_sum += std::fabs(term);
    if (std::fabs(term) < 1e-17L * std::fabs(s.sum)) {
      ++small;
    } else {
      small = 0;
    }
    if (small >= 3 && (k + 1) > -a) {
      ld rho = std::fabs((a + k + 1) * z / ((b + k + 1) * (k + 2)));
      tail = rho < 1.0L ? std::fabs(term) * rho / (1.0L - rho) : std::fabs(term);
      break;
    }
  }
  if (k == cap) throw std::runtime_error("hypergeometric series did not converge");
  s.terms = k + 1;
  s.err = (s.terms + 4) * LDBL_EPSILON * s.abs_sum + tail;
  return s;
}

struct AsymSum {
  ld sum = 0;
  ld err = 0;
  int terms = 0;
};

// sum_n (p)_n (q)_n / n! w^n truncated before the smallest term.
AsymSum asym_series(ld p, ld q, ld w) {
  AsymSum s;
  ld term = 1.0L;
  s.sum = 1.0L;
  s.terms = 1;
  ld prev = 1.0L;
  for (int n = 0; n < 2000; ++n) {
    ld next = term * (p + n) * (q + n) / (n + 1) * w;
    if (next == 0.0L) {
      s.err = LDBL_EPSILON * 8 * std::fabs(s.sum);
      return s;
    }
    if (std::fabs(next) >= prev && n > 0) break;
    term = next;
    prev = std::fabs(term);
    s.sum += term;
    ++s.terms;
  }
  // The first omitted term bounds the error for these real-argument expansions up to a modest factor.
  s.err = 2.0L * std::fabs(term) + LDBL_EPSILON * 8 * std::fabs(s.sum);
  return s;
}

HypergeomEval finish(ld value, ld err, int terms, Regime r) {
  HypergeomEval e;
  e.value = static_cast<double>(value);
  e.est_abs_error = static_cast<double>(err) + kDoubleEps * std::fabs(e.value);
  e.terms_used = terms;
  e.regime = r;
  return e;
}

// M(a; b; -s), s >= 0 large, from the algebraic branch; the exponentially small branch enters the error.
HypergeomEval m_negative_asymptotic(ld a, ld b, ld s) {
  AsymSum as = asym_series(a, a - b + 1, 1.0L / s);
  ld lead = gamma_ld(b) * rgamma_ld(b - a) * std::pow(s, -a);
  ld expo = std::fabs(gamma_ld(b) * rgamma_ld(a)) * std::exp(-s) * std::pow(s, a - b) * 2.0L;
  return finish(lead * as.sum, std::fabs(lead) * as.err + expo, as.terms, Regime::Asymptotic);
}

// U(a; b; z) for a > 0, z > 0 from z^-a / G(a) int_0^inf e^-u u^(a-1) (1 + u/z)^(b-a-1) du,
// trapezoid rule after u = exp(pi/2 sinh s), halving the step until two levels agree.
bool u_integral(ld a, ld b, ld z, ld& value, ld& err) {
  auto g = [&](ld s) -> ld {
    const ld u = std::exp(kPi / 2 * std::sinh(s));
    if (u == 0.0L || !std::isfinite(u) || u > 1e5L) return 0.0L;
    const ld du = u * kPi / 2 * std::cosh(s);
    return std::exp(-u) * std::pow(u, a - 1) * std::pow(1 + u / z, b - a - 1) * du;
  };
  ld h = 0.5L;
  ld sum = g(0);
  for (int k = 1; k * h <= 5.0L; ++k) sum += g(k * h) + g(-k * h);
  ld prev = sum * h;
  for (int level = 0; level < 8; ++level) {
    h /= 2;
    for (int k = 1; k * h <= 5.0L; k += 2) sum += g(k * h) + g(-k * h);
    const ld cur = sum * h;
    if (std::fabs(cur - prev) <= 1e-17L * std::fabs(cur) && level >= 2) {
      value = cur * std::pow(z, -a) * rgamma_ld(a);
      err = (std::fabs(cur - prev) + 64 * LDBL_EPSILON * std::fabs(cur)) * std::pow(z, -a) * std::fabs(rgamma_ld(a));
      return true;
    }
    prev = cur;
  }
  return false;
}

// Integral at a + N, a + N + 1 with a + N >= 1, then U(c-1) = (2c + z - b) U(c) - c (c - b + 1) U(c+1),
// which is the stable direction for the recessive solution.
bool u_positive_by_recurrence(ld a, ld b, ld z, ld& value, ld& err) {
  const int n = a >= 1.0L ? 0 : static_cast<int>(std::ceil(1.0L - a));
  ld u0, e0, u1, e1;
  if (!u_integral(a + n, b, z, u0, e0) || !u_integral(a + n + 1, b, z, u1, e1)) return false;
  ld rel = std::max(e0 / std::fabs(u0), e1 / std::fabs(u1));
  ld mag = std::max(std::fabs(u0), std::fabs(u1));
  for (int k = 0; k < n; ++k) {
    const ld c = a + n - k;
    const ld t0 = (2 * c + z - b) * u0;
    const ld t1 = c * (c - b + 1) * u1;
    const ld next = t0 - t1;
    mag = std::max({mag, std::fabs(t0), std::fabs(t1)});
    u1 = u0;
    u0 = next;
  }
  value = u0;
  err = rel * mag * (n + 1) + 8 * LDBL_EPSILON * mag * (n + 1);
  return true;
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Series:
      return "series";
    case Regime::Asymptotic:
      return "asymptotic";
    case Regime::PolynomialCase:
      return "polynomial";
    case Regime::ConnectionFormula:
      return "connection";
    case Regime::Integral:
      return "integral";
  }
  return "unknown";
}

double gamma_real(double x) {
  if (is_nonpositive_integer(x)) throw std::domain_error("Gamma has a pole at " + std::to_string(x));
  if (!std::isfinite(x)) throw std::domain_error("Gamma of a non-finite argument");
  return static_cast<double>(gamma_ld(x));
}

double rgamma(double x) { return static_cast<double>(rgamma_ld(x)); }

HypergeomEval kummer_m(double a, double b, double z) {
  if (is_nonpositive_integer(b)) throw std::domain_error("M(a; b; z) undefined for nonpositive integer b");
  if (z > 700.0) throw std::overflow_error("M(a; b; z) overflows for z > 700");
  if (z == 0.0 || a == 0.0) return finish(1.0L, 0.0L, 1, Regime::Series);
  if (is_nonpositive_integer(a)) {
    SeriesSum s = m_series(a, b, z);
    return finish(s.sum, s.err, s.terms, Regime::PolynomialCase);
  }
  if (z > 0.0 || z >= -1.0) {
    SeriesSum s = m_series(a, b, z);
    return finish(s.sum, s.err, s.terms, Regime::Series);
  }
  // z < -1: Kummer transformation to a series whose terms are eventually positive.
  HypergeomEval best;
  bool have = false;
  if (z >= -700.0) {
    SeriesSum s = m_series(static_cast<ld>(b) - a, b, -static_cast<ld>(z));
    ld ez = std::exp(static_cast<ld>(z));
    ld val = ez * s.sum;
    best = finish(val, ez * s.err + std::fabs(val) * LDBL_EPSILON * (std::fabs(z) + 2), s.terms, Regime::Series);
    have = true;
  }
  if (z <= -40.0 && rgamma(b - a) != 0.0) {
    HypergeomEval as = m_negative_asymptotic(a, b, -static_cast<ld>(z));
    if (!have || as.est_abs_error < best.est_abs_error) best = as;
    have = true;
  }
  if (!have) {
    // b - a a nonpositive integer: e^z times a polynomial, which underflows harmlessly.
    SeriesSum s = m_series(static_cast<ld>(b) - a, b, -static_cast<ld>(z));
    ld ez = std::exp(static_cast<ld>(z));
    best = finish(ez * s.sum, ez * s.err, s.terms, Regime::Series);
  }
  return best;
}

HypergeomEval tricomi_u(double a, double b, double z) {
  if (b == std::nearbyint(b)) throw std::domain_error("U(a; b; z) is implemented for non-integer b only");
  const ld la = a, lb = b, lz = z;
  if (is_nonpositive_integer(a)) {
    // U(-N; b; z) = (-1)^N (b)_N M(-N; b; z)
    const int N = static_cast<int>(-a);
    ld poch = 1.0L;
    for (int i = 0; i < N; ++i) poch *= (lb + i);
    if (N % 2) poch = -poch;
    SeriesSum s = m_series(la, lb, lz);
    return finish(poch * s.sum, std::fabs(poch) * s.err, s.terms, Regime::PolynomialCase);
  }
  const ld c1 = gamma_ld(1.0L - lb) * rgamma_ld(la - lb + 1.0L);
  const ld c2 = gamma_ld(lb - 1.0L) * rgamma_ld(la);
  if (z == 0.0) {
    if (b > 1.0) throw std::domain_error("U(a; b; 0) is infinite for b > 1");
    return finish(c1, std::fabs(c1) * 4 * LDBL_EPSILON, 1, Regime::ConnectionFormula);
  }
  ld zpow;
  if (z > 0.0) {
    zpow = std::pow(lz, 1.0L - lb);
  } else {
    const double k3 = 3.0 * (1.0 - b);
    if (std::fabs(k3 - std::nearbyint(k3)) > 1e-12) {
      throw std::domain_error("real continuation of U to z < 0 needs 3 (1 - b) integer");
    }
    zpow = std::pow(std::cbrt(lz), static_cast<int>(std::nearbyint(k3)));
  }
  HypergeomEval best;
  bool have = false;
  if (z <= 700.0) {
    HypergeomEval m1 = kummer_m(a, b, z);
    HypergeomEval m2 = kummer_m(a - b + 1.0, 2.0 - b, z);
    ld v = c1 * m1.value + c2 * zpow * m2.value;
    ld err = std::fabs(c1) * m1.est_abs_error + std::fabs(c2 * zpow) * m2.est_abs_error;
    err += LDBL_EPSILON * 4 * (std::fabs(c1 * m1.value) + std::fabs(c2 * zpow * m2.value));
    best = finish(v, err, m1.terms_used + m2.terms_used, Regime::ConnectionFormula);
    have = true;
  }
  if (z >= 1.0) {
    ld v, err;
    if (u_positive_by_recurrence(la, lb, lz, v, err)) {
      HypergeomEval q = finish(v, err, 0, Regime::Integral);
      if (!have || q.est_abs_error < best.est_abs_error) best = q;
      have = true;
    }
  }
  if (z >= 8.0) {
    AsymSum s = asym_series(la, la - lb + 1.0L, -1.0L / lz);
    ld lead = std::pow(lz, -la);
    HypergeomEval as = finish(lead * s.sum, std::fabs(lead) * s.err, s.terms, Regime::Asymptotic);
    if (!have || as.est_abs_error < best.est_abs_error) best = as;
  }
  return best;
}

double asymptotic_m(double a, double b, double z) {
  const ld la = a, lb = b, lz = z;
  if (z > 0.0) {
    AsymSum e = asym_series(lb - la, 1.0L - la, 1.0L / lz);
    AsymSum g = asym_series(la, la - lb + 1.0L, -1.0L / lz);
    ld expo = rgamma_ld(la) * std::exp(lz) * std::pow(lz, la - lb) * e.sum;
    ld alg = rgamma_ld(lb - la) * std::cos(kPi * la) * std::pow(lz, -la) * g.sum;
    return static_cast<double>(gamma_ld(lb) * (expo + alg));
  }
  const ld s = -lz;
  AsymSum g = asym_series(la, la - lb + 1.0L, 1.0L / s);
  AsymSum e = asym_series(lb - la, 1.0L - la, -1.0L / s);
  ld alg = rgamma_ld(lb - la) * std::pow(s, -la) * g.sum;
  ld expo = rgamma_ld(la) * std::cos(kPi * (lb - la)) * std::exp(-s) * std::pow(s, la - lb) * e.sum;
  return static_cast<double>(gamma_ld(lb) * (alg + expo));
}

double asymptotic_u_kinetic(double a, double tau) {
  const double p = std::pow(std::fabs(tau), 3.0 * a);
  if (tau > 0.0) return 2.0 * std::cos(M_PI * (a + 1.0 / 3.0)) * p;
  return p;
}

double real_kummer_combo(int lambda, double A, double x, double v) {
  if (!(x > 0.0)) throw std::domain_error("real_kummer_combo needs x > 0");
  if (!(A > 0.0)) throw std::domain_error("real_kummer_combo needs A > 0");
  const ld e = lambda + 2;
  const ld a = -e / 3.0L;
  const ld pref = -2.0L * std::pow(9.0L, e / 3.0L) * std::pow(static_cast<ld>(A), -e / 6.0L);
  const ld c1 = pref * gamma_ld(1.0L / 3.0L) * rgamma_ld(a + 1.0L / 3.0L);
  const ld c2 = pref * gamma_ld(-1.0L / 3.0L) * rgamma_ld(a);
  const ld lx = x, lv = v;
  const double tau = static_cast<double>(-lv * lv * lv / (9.0L * A * lx));
  const ld psi1 = kummer_m(static_cast<double>(a), 2.0 / 3.0, tau).value;
  const ld m2 = kummer_m(static_cast<double>(a + 1.0L / 3.0L), 4.0 / 3.0, tau).value;
  // x^(e/3) tau^(1/3) = -x^((e-1)/3) v / (9A)^(1/3)
  const ld h1 = std::pow(lx, e / 3.0L) * psi1;
  const ld h2 = -std::pow(lx, (e - 1.0L) / 3.0L) * lv / std::cbrt(9.0L * A) * m2;
  return static_cast<double>(c1 * h1 + c2 * h2);
}

}  // namespace krl
