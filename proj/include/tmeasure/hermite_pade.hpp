#pragma once

// Type-I Hermite-Pade approximants for e^{x_0 z}, ..., e^{x_m z}.
//
// P_l(z) = sum_k p_{l,k} z^k / k!, and R(z) = sum_l P_l(z) e^{x_l z} vanishes
// at 0 to order exactly sigma - 1, sigma = n_0 + ... + n_m.

#include "tmeasure/matrix.hpp"
#include "tmeasure/real.hpp"

#include <stdexcept>
#include <vector>

namespace tmeasure {

using MultiIndex = std::vector<unsigned long>;

struct HPSystem {
  std::vector<BigRational> nodes;
  std::vector<unsigned long> params;
  /// coeffs[l][k] = p_{l,k}, 0 <= k < n_l.
  std::vector<std::vector<BigRational>> coeffs;

  std::size_t m() const { return nodes.size() - 1; }
  unsigned long sigma() const;
};

/// All gamma = (gamma_p)_{p != ell} with sum n_ell - k - 1, in lexicographic
/// order. Tuples have length m (the index ell is skipped).
std::vector<MultiIndex> enumerate_lambda(std::size_t ell, unsigned long k, const std::vector<unsigned long>& params);

/// Closed-form coefficients. Throws std::invalid_argument on coincident nodes,
/// fewer than two nodes, or a zero parameter.
HPSystem hp_coefficients(const std::vector<BigRational>& nodes, const std::vector<unsigned long>& params);

/// Taylor coefficients r_0 ... r_{count-1} of R at 0.
std::vector<BigRational> remainder_taylor(const HPSystem& sys, unsigned long count);

/// Exact order of R at 0, scanning up to order_to_check inclusive; returns
/// order_to_check + 1 if every scanned coefficient vanishes. Throws if
/// order_to_check < sigma - 1.
unsigned long remainder_order(const HPSystem& sys, unsigned long order_to_check);

/// sigma x sigma matrix with rows s and columns (l, k) (l-major), entry
/// C(s,k) x_l^{s-k}.
RatMatrix generalized_vandermonde_matrix(const std::vector<BigRational>& nodes, const std::vector<unsigned long>& params);
BigRational generalized_vandermonde(const std::vector<BigRational>& nodes, const std::vector<unsigned long>& params);
/// prod_{k<l} (x_l - x_k)^{n_l n_k}
BigRational vandermonde_product(const std::vector<BigRational>& nodes, const std::vector<unsigned long>& params);

}  // namespace tmeasure
