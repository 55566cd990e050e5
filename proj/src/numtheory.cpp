#include "tmeasure/numtheory.hpp"

#include <mutex>
#include <stdexcept>

namespace tmeasure {

PrimeTable::PrimeTable(unsigned long bound) : bound_(bound), sieve_(bound + 1, true) {
  sieve_[0] = false;
  if (bound >= 1) sieve_[1] = false;
  for (unsigned long p = 2; p <= bound; ++p) {
    if (!sieve_[p]) continue;
    primes_.push_back(p);
    for (unsigned long q = p * p; q <= bound; q += p) sieve_[q] = false;
  }
}

bool PrimeTable::is_prime(unsigned long n) const {
  if (n > bound_) throw std::out_of_range("PrimeTable::is_prime: beyond sieve bound");
  return sieve_[n];
}

unsigned long PrimeTable::factorial_valuation(unsigned long m, unsigned long p) {
  unsigned long v = 0;
  for (unsigned long q = m / p; q > 0; q /= p) v += q;
  return v;
}

BigInt lcm_upto(unsigned long n) {
  BigInt out = 1;
  PrimeTable table(n);
  for (unsigned long p : table.primes()) {
    unsigned long power = p;
    while (power <= n / p) power *= p;
    out *= power;
  }
  return out;
}

BigInt dmn(unsigned long m, unsigned long n) {
  BigInt out = factorial(m);
  PrimeTable table(n);
  for (unsigned long q : table.primes()) {
    BigInt qv;
    mpz_ui_pow_ui(qv.get_mpz_t(), q, PrimeTable::factorial_valuation(m, q));
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), qv.get_mpz_t());
  }
  return out;
}

Interval log_dmn(unsigned long m, unsigned long n, mpfr_prec_t prec) {
  Interval out = log_factorial(m, prec);
  PrimeTable table(n);
  for (unsigned long q : table.primes()) {
    const unsigned long v = PrimeTable::factorial_valuation(m, q);
    if (v > 0) out -= Interval(static_cast<long>(v), prec) * log(Interval(static_cast<long>(q), prec));
  }
  return out;
}

namespace {

// Rows s(nu, 0..nu), grown on demand.
std::mutex stirling_mutex;
std::vector<std::vector<BigInt>> stirling_rows{{BigInt(1)}};

}  // namespace

BigInt stirling_first(unsigned long nu, unsigned long j) {
  if (j > nu) return 0;
  std::lock_guard<std::mutex> lock(stirling_mutex);
  while (stirling_rows.size() <= nu) {
    const auto& prev = stirling_rows.back();
    const unsigned long v = stirling_rows.size() - 1;
    std::vector<BigInt> row(v + 2, BigInt(0));
    for (unsigned long i = 0; i <= v + 1; ++i) {
      if (i >= 1) row[i] += prev[i - 1];
      if (i <= v) row[i] -= BigInt(v) * prev[i];
    }
    stirling_rows.push_back(std::move(row));
  }
  return stirling_rows[nu][j];
}

Interval chebyshev_psi(unsigned long x, mpfr_prec_t prec) {
  Interval sum(0L, prec);
  PrimeTable table(x);
  for (unsigned long p : table.primes()) {
    const Interval lp = log(Interval(static_cast<long>(p), prec));
    for (unsigned long power = p;; power *= p) {
      sum += lp;
      if (power > x / p) break;
    }
  }
  return sum;
}

Real chebyshev_psi(unsigned long x, Round rounding, mpfr_prec_t prec) {
  Interval v = chebyshev_psi(x, prec + 32);
  Real out(prec);
  mpfr_srcptr src = rounding == Round::Up ? v.upper().get() : v.lower().get();
  if (rounding == Round::Nearest) {
    mpfr_add(out.get(), v.lower().get(), v.upper().get(), MPFR_RNDN);
    mpfr_div_2ui(out.get(), out.get(), 1, MPFR_RNDN);
  } else {
    mpfr_set(out.get(), src, to_mpfr(rounding));
  }
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::vector<BinomialBoundCheck> check_binomial_bounds(unsigned long n_max, mpfr_prec_t prec) {
  BinomialBoundCheck strict{"C(n,k) < 2^n sqrt(2/(pi(n+1/2)))"};
  BinomialBoundCheck second{"C(n,k) <= 2^n sqrt(1/(n+1))"};
  BinomialBoundCheck third{"C(n,k) <= 2^n sqrt(3/(4(n+1)))"};
  const Interval pi = Interval::pi(prec);
  for (unsigned long n = 0; n <= n_max; ++n) {
    BigInt four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
    for (unsigned long k = 0; k <= n; ++k) {
      const BigInt c = binomial(n, k);
      const BigInt c2 = c * c;
      // C^2 pi (2n+1) < 4^(n+1)
      ++strict.cases;
      const Interval lhs = Interval(BigInt(c2 * (2 * n + 1)), prec) * pi;
      if (!certainly_lt(lhs, Interval(BigInt(4 * four_n), prec))) ++strict.failures;
      ++second.cases;
      if (c2 * (n + 1) > four_n) ++second.failures;
      if (n >= 1) {
        ++third.cases;
        if (4 * c2 * (n + 1) > 3 * four_n) ++third.failures;
      }
    }
  }
  return {strict, second, third};
}

}  // namespace tmeasure
