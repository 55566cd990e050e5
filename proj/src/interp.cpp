#include "tmeasure/interp.hpp"

#include "tmeasure/feldman.hpp"
#include "tmeasure/hermite_pade.hpp"
#include "tmeasure/numtheory.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace tmeasure {

BigInt m0_entry(unsigned long s, unsigned long k, unsigned long l) {
  if (k > s) return 0;
  BigInt lp;
  mpz_ui_pow_ui(lp.get_mpz_t(), l, s - k);
  return binomial(s, k) * factorial(k) * lp;
}

InterpolationSystem InterpolationSystem::build(unsigned long K, unsigned long L) {
  if (K < 1 || L < 1) throw std::invalid_argument("InterpolationSystem: need K >= 1 and L >= 1");
  InterpolationSystem sys;
  sys.K = K;
  sys.L = L;
  const unsigned long S = K * L;
  sys.m0 = IntMatrix(S - 1, S);
  for (unsigned long s = 0; s + 1 < S; ++s) {
    for (unsigned long k = 0; k < K; ++k) {
      for (unsigned long l = 0; l < L; ++l) sys.m0(s, sys.column(k, l)) = m0_entry(s, k, l);
    }
  }
  sys.rank = tmeasure::rank(sys.m0);
  if (sys.rank != S - 1) throw InternalInconsistency("M0 does not have full row rank");

  sys.minors.assign(S, BigInt(0));
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  if (S < 12 || workers == 1) {
    for (unsigned long c = 0; c < S; ++c) sys.minors[c] = bareiss_determinant(sys.m0.without_column(c));
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&sys, w, workers, S] {
        for (unsigned long c = w; c < S; c += workers) sys.minors[c] = bareiss_determinant(sys.m0.without_column(c));
      }));
    }
    for (auto& j : jobs) j.get();
  }

  sys.cofactors.resize(S);
  sys.minor_gcd = 0;
  for (unsigned long c = 0; c < S; ++c) {
    sys.cofactors[c] = ((S - 1 + c) % 2 == 0) ? sys.minors[c] : BigInt(-sys.minors[c]);
    mpz_gcd(sys.minor_gcd.get_mpz_t(), sys.minor_gcd.get_mpz_t(), sys.minors[c].get_mpz_t());
  }
  if (sys.minor_gcd == 0) throw InternalInconsistency("all maximal minors of M0 vanish");
  return sys;
}

namespace {

std::vector<BigRational> hermite_pade_kernel(unsigned long K, unsigned long L) {
  std::vector<BigRational> nodes;
  for (unsigned long l = 0; l < L; ++l) nodes.emplace_back(static_cast<long>(l));
  const HPSystem hp = hp_coefficients(nodes, std::vector<unsigned long>(L, K));
  std::vector<BigRational> v(K * L);
  for (unsigned long k = 0; k < K; ++k) {
    for (unsigned long l = 0; l < L; ++l) v[k * L + l] = hp.coeffs[l][k] / BigRational(factorial(k));
  }
  return v;
}

}  // namespace

InterpolationSystem InterpolationSystem::from_hermite_pade(unsigned long K, unsigned long L) {
  if (K < 1 || L < 2) throw std::invalid_argument("InterpolationSystem: need K >= 1 and L >= 2");
  InterpolationSystem sys;
  sys.K = K;
  sys.L = L;
  sys.primitive = true;
  const unsigned long S = K * L;
  sys.m0 = IntMatrix(S - 1, S);
  for (unsigned long s = 0; s + 1 < S; ++s) {
    for (unsigned long k = 0; k < K; ++k) {
      for (unsigned long l = 0; l < L; ++l) sys.m0(s, sys.column(k, l)) = m0_entry(s, k, l);
    }
  }
  const auto v = hermite_pade_kernel(K, L);
  for (const auto& x : multiply(sys.m0, v)) {
    if (sgn(x) != 0) throw InternalInconsistency("M0 v != 0 for the Hermite-Pade vector");
  }
  BigInt den = 1, g = 0;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  sys.cofactors.resize(S);
  for (unsigned long c = 0; c < S; ++c) {
    sys.cofactors[c] = v[c].get_num() * (den / v[c].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), sys.cofactors[c].get_mpz_t());
  }
  if (g == 0) throw InternalInconsistency("Hermite-Pade kernel vector vanishes");
  sys.minors.resize(S);
  for (unsigned long c = 0; c < S; ++c) {
    sys.cofactors[c] /= g;
    sys.minors[c] = ((S - 1 + c) % 2 == 0) ? sys.cofactors[c] : BigInt(-sys.cofactors[c]);
  }
  sys.minor_gcd = 1;
  // The kernel is one-dimensional because the Hermite-Pade system is unique.
  sys.rank = S - 1;
  return sys;
}

BiPoly InterpolationSystem::h_polynomial() const {
  BiPoly h;
  for (unsigned long k = 0; k < K; ++k) {
    for (unsigned long l = 0; l < L; ++l) h.add_term(k, l, BigRational(cofactors[column(k, l)]));
  }
  return h;
}

std::vector<BigRational> m0_orthogonal(const InterpolationSystem& sys) {
  if (sys.L < 2) throw std::invalid_argument("m0_orthogonal: need L >= 2");
  const std::vector<BigRational> v = hermite_pade_kernel(sys.K, sys.L);
  for (const auto& x : multiply(sys.m0, v)) {
    if (sgn(x) != 0) throw InternalInconsistency("M0 v != 0 for the Hermite-Pade vector");
  }
  std::size_t pivot = 0;
  while (pivot < v.size() && sys.cofactors[pivot] == 0) ++pivot;
  const BigRational ratio = v[pivot] / BigRational(sys.cofactors[pivot]);
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] != ratio * BigRational(sys.cofactors[c])) {
      throw InternalInconsistency("Hermite-Pade vector not proportional to the cofactors");
    }
  }
  return v;
}

HeightReport m0_height(const InterpolationSystem& sys, mpfr_prec_t prec) {
  HeightReport r;
  r.sum_squares = 0;
  for (const auto& m : sys.minors) r.sum_squares += m * m;
  r.gcd = sys.minor_gcd;
  r.archimedean = sqrt(Interval(r.sum_squares, prec));
  r.ultrametric = BigRational(BigInt(1), r.gcd);
  r.H = r.archimedean / Interval(r.gcd, prec);

  std::vector<BigRational> v;
  if (sys.L >= 2) {
    v = m0_orthogonal(sys);
  } else {
    // No Hermite-Pade system with a single node; take the kernel directly.
    RatMatrix m(sys.m0.rows(), sys.m0.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = BigRational(sys.m0(i, j));
    }
    v = nullspace(m).at(0);
  }
  BigInt den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  r.dual_gcd = 0;
  r.dual_sum_squares = 0;
  for (const auto& x : v) {
    const BigInt w = x.get_num() * (den / x.get_den());
    mpz_gcd(r.dual_gcd.get_mpz_t(), r.dual_gcd.get_mpz_t(), w.get_mpz_t());
    r.dual_sum_squares += w * w;
  }
  r.dual_H = sqrt(Interval(r.dual_sum_squares, prec)) / Interval(r.dual_gcd, prec);
  r.duality_holds = r.sum_squares * r.dual_gcd * r.dual_gcd == r.dual_sum_squares * r.gcd * r.gcd;
  return r;
}

Prop310Check check_prop310(const InterpolationSystem& sys, mpfr_prec_t prec) {
  const unsigned long K = sys.K, L = sys.L;
  if (L < 2) throw std::invalid_argument("check_prop310: need L >= 2");
  Prop310Check out;
  out.H = m0_height(sys, prec).H;
  const Interval two(2L, prec);
  const Interval sqrtL = sqrt(Interval(static_cast<long>(L), prec));
  Interval bound = sqrt(Interval(6L, prec)) / Interval(static_cast<long>(16 * L), prec);
  bound *= pow(two, K * L + L);
  bound *= Interval(dmn(K - 1, L - 1), prec);
  Interval inner = sqrt(Interval(3L, prec)) * Interval::e(prec) * Interval(lcm_upto(L - 1), prec);
  inner *= Interval(static_cast<long>(std::min(K, L)), prec);
  inner /= two * sqrtL;
  bound *= pow(inner, K - 1);
  out.bound = bound;
  out.passed = certainly_le(out.H, out.bound);
  return out;
}

Prop310Check check_prop310(unsigned long K, unsigned long L, mpfr_prec_t prec) {
  return check_prop310(InterpolationSystem::build(K, L), prec);
}

Algebraic delta_monomial_at(unsigned long mu, unsigned long k, unsigned long l, const Algebraic& x, const Algebraic& y) {
  Algebraic sum(0);
  const Algebraic yl = pow(y, l);
  for (unsigned long j = 0; j <= std::min(mu, k); ++j) {
    BigInt lp;
    mpz_ui_pow_ui(lp.get_mpz_t(), l, mu - j);
    const BigInt c = binomial(mu, j) * (factorial(k) / factorial(k - j)) * lp;
    if (c == 0) continue;
    sum += Algebraic(BigRational(c)) * pow(x, k - j);
  }
  return sum * yl;
}

MuReport find_mu(const InterpolationSystem& sys, const Algebraic& alpha, const Algebraic& beta) {
  if (alpha.is_zero()) throw std::invalid_argument("find_mu: alpha must be nonzero");
  if (beta.is_zero()) throw std::invalid_argument("find_mu: beta must be nonzero");
  if (sys.L < 2) throw std::invalid_argument("find_mu: need L >= 2");
  common_radicand(alpha, beta);
  // The zero lemma bounds the vanishing order at (beta, alpha) by L-1, so a
  // nonzero value appears for some mu <= L-1; running past that is a bug.
  std::vector<Algebraic> bx{Algebraic(1)}, ay{Algebraic(1)};
  for (unsigned long k = 1; k < sys.K; ++k) bx.push_back(bx.back() * beta);
  for (unsigned long l = 1; l < sys.L; ++l) ay.push_back(ay.back() * alpha);
  for (unsigned long mu = 0; mu < sys.L; ++mu) {
    Algebraic F(0);
    for (unsigned long k = 0; k < sys.K; ++k) {
      for (unsigned long l = 0; l < sys.L; ++l) {
        const BigInt& cof = sys.cofactors[sys.column(k, l)];
        if (cof == 0) continue;
        Algebraic inner(0);
        for (unsigned long j = 0; j <= std::min(mu, k); ++j) {
          BigInt lp;
          mpz_ui_pow_ui(lp.get_mpz_t(), l, mu - j);
          const BigInt c = binomial(mu, j) * (factorial(k) / factorial(k - j)) * lp;
          if (c != 0) inner += Algebraic(BigRational(c)) * bx[k - j];
        }
        F += Algebraic(BigRational(cof)) * inner * ay[l];
      }
    }
    if (!F.is_zero()) return MuReport{mu, F};
  }
  throw InternalInconsistency("no mu <= L-1 with delta^mu H(beta, alpha) != 0");
}

GReport g_value(const InterpolationSystem& sys, const MuReport& report, const Algebraic& alpha, const Algebraic& beta,
                mpfr_prec_t prec) {
  GReport g;
  g.mu = report.mu;
  g.F = report.F;
  const unsigned long mu = report.mu;
  const BigInt dmu = mu == 0 ? BigInt(1) : lcm_upto(mu);
  mpz_pow_ui(g.d_mu_power.get_mpz_t(), dmu.get_mpz_t(), sys.K - 1);
  const BigRational inv_g(BigInt(1), sys.minor_gcd);

  const BiPoly H = sys.h_polynomial();
  const FeldmanPoly fel = feldman(mu);
  BiPoly feldman_h;
  BiPoly dj = H;
  for (unsigned long j = 0; j <= mu; ++j) {
    if (j > 0) dj = apply_delta(dj);
    feldman_h += dj * fel.coeffs[j];
  }
  g.G1 = feldman_h * (BigRational(g.d_mu_power) * inv_g);
  g.G2 = dj * inv_g;
  if (!g.G1.is_integral()) throw InternalInconsistency("G1 has a non-integer coefficient");
  if (!g.G2.is_integral()) throw InternalInconsistency("G2 has a non-integer coefficient");

  g.G1_value = g.G1.evaluate(beta, alpha);
  g.G2_value = g.G2.evaluate(beta, alpha);
  const BigRational mu_fact(factorial(mu));
  if (g.G1_value * Algebraic(mu_fact) != Algebraic(BigRational(g.d_mu_power) * inv_g) * report.F) {
    throw InternalInconsistency("mu! G1(beta, alpha) != d_mu^{K-1} F(beta, alpha) / g");
  }
  if (g.G2_value != Algebraic(inv_g) * report.F) throw InternalInconsistency("G2(beta, alpha) != F(beta, alpha) / g");

  // G^2 is an exact rational: min(1, d^{K-1}/mu!)^2 |F|^2 / g^2.
  BigRational factor = BigRational(g.d_mu_power) / mu_fact;
  if (factor > 1) factor = 1;
  const BigRational g_squared = factor * factor * report.F.abs_squared() * inv_g * inv_g;
  g.G = sqrt(Interval(g_squared, prec));
  g.log_G = log(Interval(g_squared, prec)) / Interval(2L, prec);
  return g;
}

}  // namespace tmeasure
