#include <doctest.h>

#include "tmeasure/feldman.hpp"
#include "tmeasure/numtheory.hpp"

using namespace tmeasure;

namespace {

// Expand z(z-1)...(z-nu+1)/nu! directly.
std::vector<BigRational> expanded(unsigned long nu) {
  std::vector<BigRational> c{BigRational(1)};
  for (unsigned long i = 0; i < nu; ++i) {
    std::vector<BigRational> next(c.size() + 1, BigRational(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= c[j] * BigRational(static_cast<long>(i));
    }
    c = next;
  }
  for (auto& x : c) x /= BigRational(factorial(nu));
  return c;
}

// u-th derivative at l from the expanded coefficients.
BigRational derivative_oracle(unsigned long nu, unsigned long u, long l) {
  const auto c = expanded(nu);
  BigRational sum = 0;
  for (unsigned long i = u; i < c.size(); ++i) {
    BigRational term = c[i] * BigRational(factorial(i) / factorial(i - u));
    for (unsigned long p = 0; p < i - u; ++p) term *= l;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("coefficients") {
  CHECK(feldman(0).coeffs == std::vector<BigRational>{1});
  CHECK(feldman(2).coeffs == std::vector<BigRational>{0, BigRational(-1, 2), BigRational(1, 2)});
  CHECK(feldman(3).coeffs == std::vector<BigRational>{0, BigRational(1, 3), BigRational(-1, 2), BigRational(1, 6)});
  for (unsigned long nu = 0; nu <= 20; ++nu) {
    const auto f = feldman(nu);
    CHECK(f.coeffs == expanded(nu));
    CHECK(f.coeffs.back() == BigRational(BigInt(1), factorial(nu)));
    if (nu >= 1) CHECK(f.coeffs.front() == 0);
  }
}

TEST_CASE("weighted coefficient sum") {
  CHECK(weighted_coeff_sum(0) == 1);
  CHECK(weighted_coeff_sum(1) == 1);
  CHECK(weighted_coeff_sum(3) == BigRational(7, 3));
  for (unsigned long nu = 0; nu <= 40; ++nu) {
    BigInt bound = 1;
    bound <<= nu;
    CHECK(weighted_coeff_sum(nu) <= BigRational(bound));
  }
}

TEST_CASE("derivatives at integers") {
  CHECK(derivative_at_integer(2, 0, 3) == 3);
  CHECK(derivative_at_integer(2, 1, 0) == BigRational(-1, 2));
  CHECK(derivative_at_integer(0, 0, 5) == 1);
  CHECK(derivative_at_integer(3, 4, 2) == 0);
  for (unsigned long nu = 0; nu <= 8; ++nu) {
    for (unsigned long u = 0; u <= nu + 1; ++u) {
      for (long l = -6; l <= 6; ++l) CHECK(derivative_at_integer(nu, u, l) == derivative_oracle(nu, u, l));
    }
  }
  CHECK(feldman(4).derivative(2, BigRational(1, 2)) == derivative_at_integer(4, 2, 0) +
                                                         derivative_at_integer(4, 3, 0) / 2 +
                                                         derivative_at_integer(4, 4, 0) / 8);
}

TEST_CASE("F_nu(l) = C(l, nu) on non-negative integers") {
  for (unsigned long nu = 0; nu <= 20; ++nu) {
    for (unsigned long l = 0; l <= 25; ++l) CHECK(derivative_at_integer(nu, 0, static_cast<long>(l)) == BigRational(binomial(l, nu)));
  }
}

TEST_CASE("d_nu^k F_nu^(u)(l) is an integer") {
  for (unsigned long nu = 0; nu <= 10; ++nu) {
    for (unsigned long k = 0; k <= 10; ++k) {
      BigInt dk;
      mpz_pow_ui(dk.get_mpz_t(), lcm_upto(nu).get_mpz_t(), k);
      for (unsigned long u = 0; u <= k; ++u) {
        for (long l = -12; l <= 12; ++l) CHECK(BigRational(BigRational(dk) * derivative_at_integer(nu, u, l)).get_den() == 1);
      }
    }
  }
}
