#pragma once

// Feldman polynomials F_nu(z) = z(z-1)...(z-nu+1)/nu!.

#include "tmeasure/real.hpp"

#include <vector>

namespace tmeasure {

struct FeldmanPoly {
  unsigned long nu = 0;
  /// lambda_{0,nu} ... lambda_{nu,nu}
  std::vector<BigRational> coeffs;

  /// F_nu^{(u)}(x) for rational x.
  BigRational derivative(unsigned long u, const BigRational& x) const;
};

/// lambda_{j,nu} = s(nu, j) / nu!
FeldmanPoly feldman(unsigned long nu);

/// sum_j j! |lambda_{j,nu}|; bounded by 2^nu.
BigRational weighted_coeff_sum(unsigned long nu);

/// F_nu^{(u)}(ell) = sum_{i>=u} lambda_{i,nu} i!/(i-u)! ell^{i-u}.
BigRational derivative_at_integer(unsigned long nu, unsigned long u, long ell);

}  // namespace tmeasure
