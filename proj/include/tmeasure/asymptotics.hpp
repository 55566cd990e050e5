#pragma once

// The asymptotic constant for |e^beta - alpha| >= |beta|^{-c |beta|} over
// imaginary quadratic integers, with K = floor(c1 |beta|),
// L = floor(c2 log |beta|) and E fixed.
//
// Dropping the o(1) terms, the parameter inequality becomes
//   c1 c2 log E > c1 c2 (1 + log 2) + 2 c1 + E c2,
// whose best constant is c1 c2 log E with c2 = 4/(log E - 1 - log 2),
// c1 = c2 E/(c2 (log E - 1 - log 2) - 2), leaving the one-variable objective
//   f(E) = 8 E log E / (log E - 1 - log 2)^2.

#include "tmeasure/real.hpp"

namespace tmeasure {

struct AsymptoticSolution {
  Interval E;
  Interval c1;
  Interval c2;
  Interval gamma;  // log^2 2 + 8 log 2 + 8
  Interval objective;
};

/// E = exp(1 + log 2/2 + sqrt(gamma)/2) and
/// c1 c2 log E = 16 sqrt 2 exp(1 + sqrt(gamma)/2) (2 + log 2 + sqrt(gamma)) / (sqrt(gamma) - log 2)^2.
AsymptoticSolution closed_form_solution(mpfr_prec_t prec = kDefaultPrecision);

/// f(E); requires log E > 1 + log 2.
Interval corollary_objective(const Interval& E);
/// f'(E) = 8 ((u+1)(u-c) - 2u) / (u-c)^3 with u = log E, c = 1 + log 2.
Interval corollary_objective_derivative(const Interval& E);
/// c2^2 E log E / (c2 (log E - 1 - log 2) - 2), the two-variable form.
Interval corollary_objective_two_variable(const Interval& E, const Interval& c2);

/// Bisection on the sign of f' over E in (2e, 1000], stopped once the bracket
/// is below tolerance * E. Throws std::runtime_error past the iteration cap
/// and std::invalid_argument for tolerance <= 0.
AsymptoticSolution numeric_optimize(double tolerance, mpfr_prec_t prec = kDefaultPrecision);

/// KL log E / (|beta| log |beta|). Requires |beta| > e.
Interval effective_exponent(const Interval& beta_abs, unsigned long K, unsigned long L, const Interval& E);

struct FiniteSizePoint {
  unsigned long K = 0;
  unsigned long L = 0;
  double E = 0;
  Interval exponent;  // effective_exponent at (K, L, E)
  bool feasible = false;
  /// The inequality at (K, L, E) re-checked with outward rounding.
  bool certified = false;
};

/// Imaginary quadratic integers (D = 1, A = B = 1) with |beta| = beta_abs:
/// the smallest KL log E satisfying the untruncated parameter inequality,
/// over L <= 4 c2 log|beta| + 8, log E on a 0.02 grid below 8 and, per (L, E), the
/// smallest admissible K. Evaluated in double precision; an illustration of
/// the finite-size gap, not a certificate. At the asymptotic floors
/// K = floor(c1 |beta|), L = floor(c2 log |beta|) the inequality fails for
/// every E at any practical |beta|, so the cell is optimized instead.
FiniteSizePoint finite_size_exponent(double beta_abs, mpfr_prec_t prec = 128);

/// Earlier constants for alpha, beta in Z, quoted for context only.
struct HistoricalConstant {
  const char* author;
  const char* value;
};
inline constexpr HistoricalConstant kHistoricalConstants[] = {
    {"Mahler", "33"}, {"Mignotte", "21"}, {"Wielonsky", "19.187"}};

}  // namespace tmeasure
