#pragma once

// Sparse bivariate polynomials in X, Y with rational coefficients.

#include "tmeasure/algebraic.hpp"
#include "tmeasure/real.hpp"

#include <map>
#include <string>
#include <utility>

namespace tmeasure {

class BiPoly {
 public:
  using Exponent = std::pair<unsigned long, unsigned long>;  // (deg X, deg Y)

  BiPoly() = default;
  static BiPoly monomial(unsigned long i, unsigned long j, BigRational c = 1);
  static BiPoly constant(BigRational c) { return monomial(0, 0, std::move(c)); }

  const std::map<Exponent, BigRational>& terms() const { return terms_; }
  BigRational coeff(unsigned long i, unsigned long j) const;
  /// Adds c X^i Y^j, dropping the entry if it cancels.
  void add_term(unsigned long i, unsigned long j, const BigRational& c);

  bool is_zero() const { return terms_.empty(); }
  unsigned long degree_x() const;
  unsigned long degree_y() const;
  /// Every coefficient is an integer.
  bool is_integral() const;
  /// Sum of absolute values of the coefficients.
  BigRational length() const;

  Algebraic evaluate(const Algebraic& x, const Algebraic& y) const;
  BigRational evaluate(const BigRational& x, const BigRational& y) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BigRational& s);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Exponent, BigRational> terms_;
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator*(BiPoly a, const BigRational& s);
BiPoly pow(const BiPoly& p, unsigned long n);

/// delta = d/dX + Y d/dY, applied `times` times.
BiPoly apply_delta(const BiPoly& p, unsigned long times = 1);

/// delta^i (X^k Y^l) by the closed form sum_j C(i,j) k!/(k-j)! l^{i-j} X^{k-j} Y^l.
BiPoly delta_monomial(unsigned long i, unsigned long k, unsigned long l);

std::string to_string(const BiPoly& p);

}  // namespace tmeasure
