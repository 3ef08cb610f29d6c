#pragma once

namespace krl {

enum class Regime { Series, Asymptotic, PolynomialCase, ConnectionFormula, Integral };

const char* regime_name(Regime r);

struct HypergeomEval {
  double value = 0.0;
  double est_abs_error = 0.0;
  int terms_used = 0;
  Regime regime = Regime::Series;
};

// Lanczos (g = 7, 9 terms) with reflection; throws std::domain_error at poles.
double gamma_real(double x);
// 1 / Gamma(x), zero at the poles.
double rgamma(double x);

// Kummer M(a; b; z) = 1F1(a; b; z). Negative z goes through e^z M(b-a; b; -z); large |z| may
// switch to the optimally truncated asymptotic series when that has the smaller error bound.
// Throws std::domain_error for nonpositive integer b and std::overflow_error for z > 700.
HypergeomEval kummer_m(double a, double b, double z);

// Tricomi U(a; b; z). For z >= 1 an integral representation with downward recurrence in a competes
// with the connection formula and the asymptotic series. For z < 0 the real continuation
//   U = G(1-b)/G(a-b+1) M(a; b; z) + G(b-1)/G(a) z^(1-b) M(a-b+1; 2-b; z)
// with the real branch of z^(1-b); this needs 3 (1 - b) to be an integer.
// Throws std::domain_error for integer b.
HypergeomEval tricomi_u(double a, double b, double z);

// Both exponential and algebraic asymptotic contributions of M, each with its asymptotic series.
double asymptotic_m(double a, double b, double z);

// Leading behaviour of U(-a; 2/3; -tau^3): K |tau|^(3a) for tau > 0 with K = 2 cos(pi (a + 1/3)),
// and |tau|^(3a) for tau < 0.
double asymptotic_u_kinetic(double a, double tau);

// x^((l+2)/3) (C1 Psi1(tau) + C2 Psi2(tau)), tau = -v^3 / (9 A x), with
// Psi1 = M(-(l+2)/3; 2/3; tau), Psi2 = tau^(1/3) M(-(l+1)/3; 4/3; tau) and the constants that make
// the sum equal to -2 9^((l+2)/3) A^(-(l+2)/6) x^((l+2)/3) U(-(l+2)/3; 2/3; tau). Requires x > 0.
double real_kummer_combo(int lambda, double A, double x, double v);

}  // namespace krl
