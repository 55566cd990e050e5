#include "tmeasure/feldman.hpp"

#include "tmeasure/numtheory.hpp"

namespace tmeasure {

BigRational FeldmanPoly::derivative(unsigned long u, const BigRational& x) const {
  // Horner on the u-th derivative: sum_{i>=u} lambda_i * i!/(i-u)! * x^{i-u}.
  BigRational acc = 0;
  for (unsigned long i = coeffs.size(); i-- > u;) {
    BigInt falling = 1;
    for (unsigned long t = 0; t < u; ++t) falling *= static_cast<unsigned long>(i - t);
    acc = acc * x + coeffs[i] * BigRational(falling);
  }
  return acc;
}

FeldmanPoly feldman(unsigned long nu) {
  FeldmanPoly f;
  f.nu = nu;
  const BigInt nf = factorial(nu);
  f.coeffs.reserve(nu + 1);
  for (unsigned long j = 0; j <= nu; ++j) {
    BigRational c(stirling_first(nu, j), nf);
    c.canonicalize();
    f.coeffs.push_back(c);
  }
  return f;
}

BigRational weighted_coeff_sum(unsigned long nu) {
  const FeldmanPoly f = feldman(nu);
  BigRational sum = 0;
  for (unsigned long j = 0; j <= nu; ++j) sum += BigRational(factorial(j)) * abs(f.coeffs[j]);
  return sum;
}

BigRational derivative_at_integer(unsigned long nu, unsigned long u, long ell) {
  return feldman(nu).derivative(u, BigRational(ell));
}

}  // namespace tmeasure
