#include <doctest.h>

#include "tmeasure/hermite_pade.hpp"
#include "tmeasure/matrix.hpp"
#include "tmeasure/numtheory.hpp"

#include <random>

using namespace tmeasure;

namespace {

std::vector<BigRational> rationals(std::initializer_list<long> xs) {
  std::vector<BigRational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

BigRational power(const BigRational& x, unsigned long n) {
  BigRational r = 1;
  for (unsigned long i = 0; i < n; ++i) r *= x;
  return r;
}

// s-th derivative at 0 of sum_l P_l(z) e^{x_l z} with P_l^{(k)}(0) = p_{l,k}:
// sum_l sum_k C(s,k) p_{l,k} x_l^{s-k}.
BigRational remainder_derivative(const HPSystem& sys, unsigned long s) {
  BigRational sum = 0;
  for (std::size_t l = 0; l < sys.nodes.size(); ++l) {
    for (unsigned long k = 0; k < sys.params[l] && k <= s; ++k) {
      sum += BigRational(binomial(s, k)) * sys.coeffs[l][k] * power(sys.nodes[l], s - k);
    }
  }
  return sum;
}

// Brute-force order: first s with a nonzero derivative.
unsigned long order_oracle(const HPSystem& sys, unsigned long cap) {
  for (unsigned long s = 0; s <= cap; ++s) {
    if (sgn(remainder_derivative(sys, s)) != 0) return s;
  }
  return cap + 1;
}

}  // namespace

TEST_CASE("index sets") {
  CHECK(enumerate_lambda(0, 2, {3, 3, 3}).size() == 1);
  for (const auto& idx : enumerate_lambda(0, 2, {3, 3, 3})) {
    for (auto v : idx) CHECK(v == 0);
  }
  CHECK(enumerate_lambda(0, 0, {3, 3, 3}).size() == 3);
  CHECK(enumerate_lambda(0, 0, {2, 2}).size() == 1);
  // Cardinality C(K-k-1+L-2, L-2) for equal parameters K.
  for (unsigned long K = 1; K <= 5; ++K) {
    for (std::size_t L = 2; L <= 5; ++L) {
      for (unsigned long k = 0; k < K; ++k) {
        CHECK(enumerate_lambda(1, k, std::vector<unsigned long>(L, K)).size() == binomial(K - k - 1 + L - 2, L - 2));
      }
    }
  }
}

TEST_CASE("coefficients") {
  const HPSystem two = hp_coefficients(rationals({0, 1}), {1, 1});
  CHECK(two.coeffs[0] == std::vector<BigRational>{-1});
  CHECK(two.coeffs[1] == std::vector<BigRational>{1});
  CHECK(remainder_order(two, 1) == 1);

  const HPSystem three = hp_coefficients(rationals({0, 1, 2}), {2, 2, 2});
  CHECK(three.coeffs[0] == std::vector<BigRational>{BigRational(3, 4), BigRational(1, 4)});
  CHECK(three.coeffs[1] == std::vector<BigRational>{0, 1});
  CHECK(three.coeffs[2] == std::vector<BigRational>{BigRational(-3, 4), BigRational(1, 4)});
  CHECK(three.sigma() == 6);
  CHECK(three.m() == 2);
  CHECK(remainder_order(three, 6) == 5);
  CHECK(remainder_order(hp_coefficients(rationals({0, 1}), {3, 3}), 6) >= 5);
}

TEST_CASE("leading coefficient closed form") {
  // p_{l, n_l - 1} = prod_{p != l} (x_l - x_p)^{-n_p}
  const auto nodes = rationals({-2, 0, 1, 5});
  const std::vector<unsigned long> params{2, 3, 1, 2};
  const HPSystem sys = hp_coefficients(nodes, params);
  for (std::size_t l = 0; l < nodes.size(); ++l) {
    BigRational expected = 1;
    for (std::size_t p = 0; p < nodes.size(); ++p) {
      if (p != l) expected /= power(nodes[l] - nodes[p], params[p]);
    }
    CHECK(sys.coeffs[l].back() == expected);
  }
}

TEST_CASE("Taylor scan matches a brute-force derivative scan") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-7, 7), den(1, 4), count(2, 4), extra(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BigRational> nodes;
    const long n = count(rng);
    while (static_cast<long>(nodes.size()) < n) {
      BigRational x(num(rng), den(rng));
      x.canonicalize();
      if (std::find(nodes.begin(), nodes.end(), x) == nodes.end()) nodes.push_back(x);
    }
    std::vector<unsigned long> params;
    for (long i = 0; i < n; ++i) params.push_back(1 + extra(rng));
    const HPSystem sys = hp_coefficients(nodes, params);
    const unsigned long sigma = sys.sigma();
    CHECK(order_oracle(sys, sigma + 2) == remainder_order(sys, sigma + 2));
    CHECK(order_oracle(sys, sigma + 2) >= sigma - 1);
    const auto taylor = remainder_taylor(sys, sigma + 1);
    for (unsigned long s = 0; s <= sigma; ++s) {
      CHECK(taylor[s] * BigRational(factorial(s)) == remainder_derivative(sys, s));
    }
  }
}

TEST_CASE("kernel of the derivative conditions is the coefficient vector") {
  const auto nodes = rationals({0, 1, 3});
  const std::vector<unsigned long> params{2, 1, 3};
  const HPSystem sys = hp_coefficients(nodes, params);
  const RatMatrix gv = generalized_vandermonde_matrix(nodes, params);
  RatMatrix conditions(gv.rows() - 1, gv.cols());
  for (std::size_t i = 0; i + 1 < gv.rows(); ++i) {
    for (std::size_t j = 0; j < gv.cols(); ++j) conditions(i, j) = gv(i, j);
  }
  const auto kernel = nullspace(conditions);
  REQUIRE(kernel.size() == 1);
  std::vector<BigRational> flat;
  for (const auto& c : sys.coeffs) flat.insert(flat.end(), c.begin(), c.end());
  std::size_t pivot = 0;
  while (sgn(kernel[0][pivot]) == 0) ++pivot;
  const BigRational ratio = flat[pivot] / kernel[0][pivot];
  for (std::size_t j = 0; j < flat.size(); ++j) CHECK(flat[j] == ratio * kernel[0][j]);
}

TEST_CASE("generalized Vandermonde determinant") {
  CHECK(generalized_vandermonde(rationals({0, 1}), {1, 1}) == 1);
  CHECK(generalized_vandermonde(rationals({0, 2}), {2, 2}) == 16);
  CHECK(generalized_vandermonde(rationals({0, 1, 3}), {1, 1, 1}) == 6);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5), count(2, 4), extra(0, 2);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<BigRational> nodes;
    const long n = count(rng);
    while (static_cast<long>(nodes.size()) < n) {
      BigRational x(num(rng), den(rng));
      x.canonicalize();
      if (std::find(nodes.begin(), nodes.end(), x) == nodes.end()) nodes.push_back(x);
    }
    std::vector<unsigned long> params;
    for (long i = 0; i < n; ++i) params.push_back(1 + extra(rng));
    CHECK(generalized_vandermonde(nodes, params) == vandermonde_product(nodes, params));
  }
}

TEST_CASE("invalid systems") {
  CHECK_THROWS_AS(hp_coefficients(rationals({0, 0}), {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(hp_coefficients(rationals({0}), {2}), std::invalid_argument);
  CHECK_THROWS_AS(hp_coefficients(rationals({0, 1}), {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(hp_coefficients(rationals({0, 1}), {1}), std::invalid_argument);
  CHECK_THROWS_AS(remainder_order(hp_coefficients(rationals({0, 1, 2}), {2, 2, 2}), 3), std::invalid_argument);
}
