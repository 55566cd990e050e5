#include "tmeasure/hermite_pade.hpp"

#include "tmeasure/numtheory.hpp"

namespace tmeasure {

namespace {

BigRational rat_pow(const BigRational& x, unsigned long e) {
  BigRational out;
  mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), e);
  return out;
}

void compositions(unsigned long total, std::size_t parts, MultiIndex& current, std::vector<MultiIndex>& out) {
  if (current.size() + 1 == parts) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (unsigned long first = 0; first <= total; ++first) {
    current.push_back(first);
    compositions(total - first, parts, current, out);
    current.pop_back();
  }
}

void validate(const std::vector<BigRational>& nodes, const std::vector<unsigned long>& params) {
  if (nodes.size() < 2) throw std::invalid_argument("Hermite-Pade system needs at least two nodes");
  if (nodes.size() != params.size()) throw std::invalid_argument("nodes and parameters differ in length");
  for (auto n : params) {
    if (n == 0) throw std::invalid_argument("Hermite-Pade parameters must be positive");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j]) throw std::invalid_argument("Hermite-Pade nodes must be distinct");
    }
  }
}

}  // namespace

unsigned long HPSystem::sigma() const {
  unsigned long s = 0;
  for (auto n : params) s += n;
  return s;
}

std::vector<MultiIndex> enumerate_lambda(std::size_t ell, unsigned long k, const std::vector<unsigned long>& params) {
  if (ell >= params.size() || k >= params[ell]) throw std::invalid_argument("enumerate_lambda: need k < n_ell");
  std::vector<MultiIndex> out;
  MultiIndex current;
  compositions(params[ell] - k - 1, params.size() - 1, current, out);
  return out;
}

HPSystem hp_coefficients(const std::vector<BigRational>& nodes, const std::vector<unsigned long>& params) {
  validate(nodes, params);
  HPSystem sys{nodes, params, {}};
  const std::size_t count = nodes.size();
  sys.coeffs.resize(count);
  for (std::size_t ell = 0; ell < count; ++ell) {
    // Per other node p: 1/(x_ell - x_p) and the binomial weights, cached by gamma_p.
    std::vector<BigRational> inv_gap(count);
    for (std::size_t p = 0; p < count; ++p) {
      if (p != ell) inv_gap[p] = 1 / (nodes[ell] - nodes[p]);
    }
    for (unsigned long k = 0; k < params[ell]; ++k) {
      BigRational sum = 0;
      for (const auto& gamma : enumerate_lambda(ell, k, params)) {
        BigRational term = 1;
        for (std::size_t p = 0, g = 0; p < count; ++p) {
          if (p == ell) continue;
          const unsigned long gp = gamma[g++];
          term *= rat_pow(inv_gap[p], gp + params[p]) * BigRational(binomial(gp + params[p] - 1, params[p] - 1));
          if (gp % 2 == 1) term = -term;
        }
        sum += term;
      }
      sys.coeffs[ell].push_back(sum);
    }
  }
  return sys;
}

std::vector<BigRational> remainder_taylor(const HPSystem& sys, unsigned long count) {
  std::vector<BigRational> r(count, BigRational(0));
  for (unsigned long s = 0; s < count; ++s) {
    for (std::size_t ell = 0; ell < sys.nodes.size(); ++ell) {
      for (unsigned long k = 0; k < sys.params[ell] && k <= s; ++k) {
        BigRational t = sys.coeffs[ell][k] * rat_pow(sys.nodes[ell], s - k);
        t /= BigRational(factorial(k) * factorial(s - k));
        r[s] += t;
      }
    }
  }
  return r;
}

unsigned long remainder_order(const HPSystem& sys, unsigned long order_to_check) {
  if (order_to_check + 1 < sys.sigma()) throw std::invalid_argument("remainder_order: scan shorter than sigma - 1 is inconclusive");
  const auto r = remainder_taylor(sys, order_to_check + 1);
  for (unsigned long s = 0; s < r.size(); ++s) {
    if (sgn(r[s]) != 0) return s;
  }
  return order_to_check + 1;
}

RatMatrix generalized_vandermonde_matrix(const std::vector<BigRational>& nodes, const std::vector<unsigned long>& params) {
  if (nodes.size() != params.size()) throw std::invalid_argument("nodes and parameters differ in length");
  unsigned long sigma = 0;
  for (auto n : params) sigma += n;
  RatMatrix m(sigma, sigma);
  std::size_t col = 0;
  for (std::size_t ell = 0; ell < nodes.size(); ++ell) {
    for (unsigned long k = 0; k < params[ell]; ++k, ++col) {
      for (unsigned long s = k; s < sigma; ++s) m(s, col) = BigRational(binomial(s, k)) * rat_pow(nodes[ell], s - k);
    }
  }
  return m;
}

BigRational generalized_vandermonde(const std::vector<BigRational>& nodes, const std::vector<unsigned long>& params) {
  return determinant(generalized_vandermonde_matrix(nodes, params));
}

BigRational vandermonde_product(const std::vector<BigRational>& nodes, const std::vector<unsigned long>& params) {
  BigRational out = 1;
  for (std::size_t ell = 0; ell < nodes.size(); ++ell) {
    for (std::size_t k = 0; k < ell; ++k) out *= rat_pow(nodes[ell] - nodes[k], params[ell] * params[k]);
  }
  return out;
}

}  // namespace tmeasure
