#pragma once

// Arithmetic functions: d_n, D_{m,n}, Chebyshev psi, Stirling numbers of the
// first kind, binomials and the explicit binomial estimates.

#include "tmeasure/real.hpp"

#include <string>
#include <vector>

namespace tmeasure {

class PrimeTable {
 public:
  /// All primes <= bound (sieve of Eratosthenes).
  explicit PrimeTable(unsigned long bound);

  const std::vector<unsigned long>& primes() const { return primes_; }
  unsigned long bound() const { return bound_; }
  bool is_prime(unsigned long n) const;

  /// v_p(m!) by Legendre's formula.
  static unsigned long factorial_valuation(unsigned long m, unsigned long p);

 private:
  unsigned long bound_;
  std::vector<unsigned long> primes_;
  std::vector<bool> sieve_;
};

/// lcm(1, ..., n), with d_0 = 1.
BigInt lcm_upto(unsigned long n);

/// m! with every prime factor q <= n removed.
BigInt dmn(unsigned long m, unsigned long n);

/// log D_{m,n} without forming m!; usable for m in the millions.
Interval log_dmn(unsigned long m, unsigned long n, mpfr_prec_t prec = kDefaultPrecision);

/// Signed Stirling number of the first kind; zero when j > nu.
BigInt stirling_first(unsigned long nu, unsigned long j);

/// sum_{p^k <= x} log p.
Interval chebyshev_psi(unsigned long x, mpfr_prec_t prec = kDefaultPrecision);
Real chebyshev_psi(unsigned long x, Round rounding, mpfr_prec_t prec = kDefaultPrecision);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

struct BinomialBoundCheck {
  std::string name;
  unsigned long cases = 0;
  unsigned long failures = 0;
  bool passed() const { return failures == 0; }
};

/// Checks, for n <= n_max and 0 <= k <= n:
///   C(n,k) <  2^n sqrt(2/(pi(n+1/2)))             (n >= 0)
///   C(n,k) <= 2^n sqrt(1/(n+1))                   (n >= 0)
///   C(n,k) <= 2^n sqrt(3/(4(n+1)))                (n >= 1)
/// The last two are compared exactly after squaring; the first uses an
/// outward enclosure of pi.
std::vector<BinomialBoundCheck> check_binomial_bounds(unsigned long n_max, mpfr_prec_t prec = kDefaultPrecision);

}  // namespace tmeasure
