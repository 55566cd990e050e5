#include "tmeasure/asymptotics.hpp"

#include "tmeasure/numtheory.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tmeasure {

namespace {

Interval shift(const Interval& E) {
  const mpfr_prec_t prec = E.precision();
  return log(E) - Interval(1L, prec) - Interval::log2(prec);
}

AsymptoticSolution complete(const Interval& E) {
  const mpfr_prec_t prec = E.precision();
  const Interval l2 = Interval::log2(prec);
  AsymptoticSolution s;
  s.E = E;
  s.gamma = sqr(l2) + Interval(8L, prec) * l2 + Interval(8L, prec);
  s.c2 = Interval(4L, prec) / shift(E);
  s.c1 = s.c2 * E / (s.c2 * shift(E) - Interval(2L, prec));
  s.objective = s.c1 * s.c2 * log(E);
  return s;
}

}  // namespace

AsymptoticSolution closed_form_solution(mpfr_prec_t prec) {
  const Interval l2 = Interval::log2(prec);
  const Interval two(2L, prec);
  const Interval gamma = sqr(l2) + Interval(8L, prec) * l2 + Interval(8L, prec);
  const Interval root = sqrt(gamma);
  AsymptoticSolution s = complete(exp(Interval(1L, prec) + l2 / two + root / two));
  s.objective = Interval(16L, prec) * sqrt(two) * exp(Interval(1L, prec) + root / two) * (two + l2 + root) /
                sqr(root - l2);
  return s;
}

Interval corollary_objective(const Interval& E) {
  const mpfr_prec_t prec = E.precision();
  const Interval d = shift(E);
  if (!d.is_positive()) throw std::invalid_argument("corollary_objective: need log E > 1 + log 2");
  return Interval(8L, prec) * E * log(E) / sqr(d);
}

Interval corollary_objective_derivative(const Interval& E) {
  const mpfr_prec_t prec = E.precision();
  const Interval u = log(E);
  const Interval d = shift(E);
  if (!d.is_positive()) throw std::invalid_argument("corollary_objective_derivative: need log E > 1 + log 2");
  return Interval(8L, prec) * ((u + Interval(1L, prec)) * d - Interval(2L, prec) * u) / pow(d, 3);
}

Interval corollary_objective_two_variable(const Interval& E, const Interval& c2) {
  return sqr(c2) * E * log(E) / (c2 * shift(E) - Interval(2L, E.precision()));
}

AsymptoticSolution numeric_optimize(double tolerance, mpfr_prec_t prec) {
  if (!(tolerance > 0)) throw std::invalid_argument("numeric_optimize: tolerance must be positive");
  // f' < 0 just right of 2e and f' > 0 at 1000.
  Interval lo = Interval(2L, prec) * Interval::e(prec) + Interval(1L, prec) / Interval(100L, prec);
  Interval hi(1000L, prec);
  const Interval tol = Interval::from_double(tolerance, prec);
  for (int iter = 0; iter < 4 * static_cast<int>(prec); ++iter) {
    if (certainly_lt(hi - lo, tol * lo)) return complete(hull(lo, hi));
    const Interval mid = (lo + hi) / Interval(2L, prec);
    const Interval m(mid.lower(), mid.lower());
    if (corollary_objective_derivative(m).mid() < 0) {
      lo = m;
    } else {
      hi = m;
    }
  }
  throw std::runtime_error("numeric_optimize: no convergence within the iteration cap");
}

Interval effective_exponent(const Interval& beta_abs, unsigned long K, unsigned long L, const Interval& E) {
  const mpfr_prec_t prec = E.precision();
  const Interval lb = log(beta_abs);
  if (!certainly_lt(Interval(1L, prec), lb)) throw std::invalid_argument("effective_exponent: need |beta| > e");
  return Interval(static_cast<long>(K * L), prec) * log(E) / (beta_abs * lb);
}

namespace {

// E-free part of the right-hand side (D = 1, log A = log B = 0), in doubles.
double rhs_constant(unsigned long K, unsigned long L, const std::vector<double>& log_d, const std::vector<unsigned long>& primes) {
  double log_dmn = std::lgamma(static_cast<double>(K));
  for (unsigned long q : primes) {
    if (q > L - 1) break;
    log_dmn -= PrimeTable::factorial_valuation(K - 1, q) * std::log(static_cast<double>(q));
  }
  const double l2 = std::log(2.0);
  const double min_term = std::min((K - 1) * log_d[L - 2], std::lgamma(static_cast<double>(L - 1)));
  return K * L * l2 + (K - 1) * (1 + 0.5 * std::log(3.0 * L) + log_d[L - 1]) + log_dmn +
         (L - 1) * (std::log(4.0) + 1) + min_term + std::lgamma(static_cast<double>(K)) - (K - 1) * l2 - (L - 1) * l2;
}

}  // namespace

FiniteSizePoint finite_size_exponent(double beta_abs, mpfr_prec_t prec) {
  if (!(beta_abs > std::exp(1.0))) throw std::invalid_argument("finite_size_exponent: need |beta| > e");
  const AsymptoticSolution sol = closed_form_solution(prec);
  const unsigned long L_cap = 8 + static_cast<unsigned long>(4 * sol.c2.mid() * std::log(beta_abs));
  const PrimeTable table(L_cap);
  std::vector<double> log_d(L_cap + 1, 0.0);
  for (unsigned long n = 1; n <= L_cap; ++n) log_d[n] = log_of(lcm_upto(n), 64).mid();
  const double K_cap = 1e17;

  FiniteSizePoint best;
  double best_value = 0;
  for (unsigned long L = 2; L <= L_cap; ++L) {
    for (double logE = 0.02; logE < 8; logE += 0.02) {
      const double E = std::exp(logE);
      const auto margin = [&](double K) {
        const auto k = static_cast<unsigned long>(K);
        return static_cast<double>(k * L) * logE - rhs_constant(k, L, log_d, table.primes()) - L * E * beta_abs -
               L * logE;
      };
      // margin is concave in K; find a feasible K by doubling, then the left root.
      double hi = 2;
      while (hi < K_cap && margin(hi) <= 0 && margin(2 * hi) > margin(hi)) hi *= 2;
      if (hi >= K_cap || margin(hi) <= 0) continue;
      double lo = hi / 2 < 2 ? 1 : hi / 2;
      while (hi - lo > 1) {
        const double m = std::floor(0.5 * (lo + hi));
        (margin(m) > 0 ? hi : lo) = m;
      }
      const double value = hi * L * logE;
      if (!best.feasible || value < best_value) {
        best = FiniteSizePoint{static_cast<unsigned long>(hi), L, E, Interval(prec), true, false};
        best_value = value;
      }
    }
  }
  if (!best.feasible) return best;
  const Interval b = Interval::from_double(beta_abs, prec);
  const Interval E = Interval::from_double(best.E, prec);
  best.exponent = effective_exponent(b, best.K, best.L, E);

  const unsigned long K = best.K, L = best.L;
  const auto n = [prec](unsigned long v) { return Interval(static_cast<long>(v), prec); };
  const Interval l2 = Interval::log2(prec);
  const Interval e = Interval::e(prec);
  const Interval logE = log(E);
  Interval rhs = n(K * L) * l2;
  rhs += n(K - 1) * log(e * sqrt(n(3 * L)) * Interval(lcm_upto(L - 1), prec));
  rhs += log_dmn(K - 1, L - 1, prec);
  rhs += n(L - 1) * log(Interval(4L, prec) * e);
  rhs += min(n(K - 1) * log_of(lcm_upto(L - 2), prec), log_factorial(L - 2, prec));
  rhs += log_factorial(K - 1, prec);
  rhs -= n(K - 1) * l2 + n(L - 1) * l2;
  rhs += n(L) * E * b + n(L) * logE;
  best.certified = certainly_le(rhs, n(K * L) * logE);
  return best;
}

}  // namespace tmeasure
