#include "tmeasure/analytic.hpp"

#include "tmeasure/numtheory.hpp"

#include <vector>

namespace tmeasure {

namespace {

// sum_j C(mu,j) k!/(k-j)! l^{mu-j} x^{k-j}
ComplexInterval derivative_sum(unsigned long k, unsigned long l, unsigned long mu, const ComplexInterval& x) {
  const mpfr_prec_t prec = x.precision();
  ComplexInterval sum(Interval(0L, prec), Interval(0L, prec));
  for (unsigned long j = 0; j <= std::min(mu, k); ++j) {
    BigInt lp;
    mpz_ui_pow_ui(lp.get_mpz_t(), l, mu - j);
    const BigInt c = binomial(mu, j) * (factorial(k) / factorial(k - j)) * lp;
    if (c == 0) continue;
    sum = sum + Interval(c, prec) * pow(x, k - j);
  }
  return sum;
}

ComplexInterval scale(long s, const ComplexInterval& z) { return Interval(s, z.precision()) * z; }

}  // namespace

ComplexInterval phi_mu_at(unsigned long k, unsigned long l, unsigned long mu, const ComplexInterval& z) {
  return exp(scale(static_cast<long>(l), z)) * derivative_sum(k, l, mu, z);
}

Interval epsilon(const Algebraic& alpha, const Algebraic& beta, mpfr_prec_t prec, bool require_positive) {
  for (mpfr_prec_t p = prec;; p *= 2) {
    const Interval eps = (exp(embed(beta, p)) - embed(alpha, p)).abs();
    if (!require_positive || eps.is_positive()) return eps;
    if (p >= 4 * prec) throw std::runtime_error("|e^beta - alpha| not separated from 0 at the working precision");
  }
}

ComplexInterval w_weight(unsigned long k, unsigned long l, unsigned long mu, const Algebraic& alpha, const Algebraic& beta,
                         mpfr_prec_t prec) {
  const Interval eps = epsilon(alpha, beta, prec, true);
  const mpfr_prec_t p = eps.precision();
  const ComplexInterval b = embed(beta, p);
  const ComplexInterval numerator = pow(embed(alpha, p), l) - exp(scale(static_cast<long>(l), b));
  return (numerator / eps) * derivative_sum(k, l, mu, b);
}

Interval w_weight_bound(unsigned long k, unsigned long l, unsigned long mu, const Algebraic& beta, const Interval& eps) {
  const mpfr_prec_t prec = eps.precision();
  Interval bound = Interval(static_cast<long>(l), prec) * pow(exp(abs(beta, prec)) + eps, l);
  bound *= Interval(factorial(k), prec);
  bound *= pow(Interval(static_cast<long>(l + 1), prec), mu);
  return bound;
}

Interval big_n(const AnalyticParams& p, const Interval& eps) {
  if (p.L < 2) throw std::invalid_argument("big_n: need L >= 2");
  const mpfr_prec_t prec = p.precision;
  const long L = static_cast<long>(p.L);
  const Interval first = p.E * abs(p.beta, prec) * Interval(L, prec);
  const Interval second = log(Interval(L - 1, prec)) + Interval(L - 1, prec) * log(exp(abs(p.beta, prec)) + eps);
  Interval n = max(first, second);
  n += log_factorial(p.K - 1, prec);
  n += Interval(static_cast<long>(p.mu + 1), prec) * log(Interval(L + 1, prec));
  n += Interval::log2(prec);
  return n;
}

Interval big_n(const AnalyticParams& p) { return big_n(p, epsilon(p.alpha, p.beta, p.precision)); }

EnvelopeCheck check_envelope(const AnalyticParams& p, unsigned samples) {
  const mpfr_prec_t prec = p.precision;
  EnvelopeCheck out{big_n(p), Interval(prec), Interval(prec), false};
  Interval sum_w(0L, prec);
  for (unsigned long k = 0; k < p.K; ++k) {
    for (unsigned long l = 1; l < p.L; ++l) sum_w += w_weight(k, l, p.mu, p.alpha, p.beta, prec).abs();
  }
  const ComplexInterval b = embed(p.beta, prec);
  const Interval two_pi = Interval(2L, prec) * Interval::pi(prec);
  std::vector<ComplexInterval> points;
  for (unsigned s = 0; s < samples; ++s) {
    const Interval theta = two_pi * Interval(static_cast<long>(s), prec) / Interval(static_cast<long>(samples), prec);
    points.push_back(ComplexInterval(p.E * cos(theta), p.E * sin(theta)) * b);
  }
  Interval sum_phi(0L, prec);
  for (unsigned long k = 0; k < p.K; ++k) {
    for (unsigned long l = 0; l < p.L; ++l) {
      Interval sup(0L, prec);
      for (const auto& z : points) sup = max(sup, phi_mu_at(k, l, p.mu, z).abs());
      sum_phi += sup;
    }
  }
  // l = 0 contributes nothing to sum_w; an empty sum has no logarithm.
  out.log_sum_w = sum_w.is_positive() ? log(sum_w) : Interval(0L, prec);
  out.log_sum_phi_sampled = log(sum_phi);
  const Interval log2 = Interval::log2(prec);
  out.holds = (!sum_w.is_positive() || certainly_le(out.log_sum_w, out.N)) &&
              certainly_le(out.log_sum_phi_sampled + log2, out.N);
  return out;
}

Interval schwarz_bound(unsigned long T, const Interval& r, const Interval& R, const Interval& sup_R) {
  if (!r.is_positive()) throw std::invalid_argument("schwarz_bound: need r > 0");
  if (mpfr_cmp(r.lower().get(), R.upper().get()) > 0) throw std::invalid_argument("schwarz_bound: need r <= R");
  return sup_R / pow(R / r, T);
}

Interval det_upper_bound(const AnalyticParams& p, const InterpolationSystem& sys) {
  const mpfr_prec_t prec = p.precision;
  const unsigned long S = p.K * p.L;
  const Interval eps = epsilon(p.alpha, p.beta, prec);
  const Interval log_e = log(p.E);
  if (!certainly_lt(eps, exp(-(Interval(static_cast<long>(S), prec) * log_e)))) {
    throw NotApplicable("det_upper_bound: eps < E^{-KL} does not hold");
  }
  const HeightReport h = m0_height(sys, prec);
  Interval bound = -(Interval(static_cast<long>(S - p.mu - 1), prec) * log_e);
  bound += big_n(p, eps);
  bound += log(h.archimedean);
  bound += Interval::log2(prec);
  return bound;
}

ComplexInterval numeric_det(const AnalyticParams& p, const InterpolationSystem& sys, const ComplexInterval& z,
                            bool include_eps) {
  const mpfr_prec_t prec = p.precision;
  const ComplexInterval bz = embed(p.beta, prec) * z;
  Interval eps(0L, prec);
  if (include_eps) eps = epsilon(p.alpha, p.beta, prec, true);
  ComplexInterval sum(Interval(0L, prec), Interval(0L, prec));
  for (unsigned long k = 0; k < p.K; ++k) {
    for (unsigned long l = 0; l < p.L; ++l) {
      const BigInt& cof = sys.cofactors[sys.column(k, l)];
      if (cof == 0) continue;
      ComplexInterval entry = phi_mu_at(k, l, p.mu, bz);
      if (include_eps && l > 0) entry = entry + eps * w_weight(k, l, p.mu, p.alpha, p.beta, prec);
      sum = sum + Interval(cof, prec) * entry;
    }
  }
  return sum;
}

}  // namespace tmeasure
