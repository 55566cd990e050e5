#pragma once

// Exact algebraic numbers of degree <= 2: rationals and elements a + b*sqrt(d)
// of an imaginary quadratic field (d < 0 squarefree).

#include "tmeasure/real.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tmeasure {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Thrown when two operands live in different quadratic fields.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Algebraic {
 public:
  Algebraic() = default;
  Algebraic(long n);  // NOLINT(google-explicit-constructor)
  Algebraic(BigRational q);  // NOLINT(google-explicit-constructor)
  /// a + b*sqrt(d). `d` must be negative and squarefree whenever b != 0.
  Algebraic(BigRational a, BigRational b, BigInt d);

  /// i = sqrt(-1)
  static Algebraic imaginary_unit();

  const BigRational& real_part_coeff() const { return a_; }
  const BigRational& sqrt_coeff() const { return b_; }
  /// Radicand, 0 for rationals.
  const BigInt& radicand() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  unsigned degree() const { return is_rational() ? 1 : 2; }

  Algebraic conjugate() const;
  /// a^2 - b^2 d (field norm; equals |x|^2 for imaginary quadratic x).
  BigRational norm() const;
  /// Exact |x|^2.
  BigRational abs_squared() const;

  /// Minimal polynomial over Z, coefficients from the constant term up;
  /// primitive with positive leading coefficient.
  std::vector<BigInt> minimal_polynomial() const;

  Algebraic& operator+=(const Algebraic& o);
  Algebraic& operator-=(const Algebraic& o);
  Algebraic& operator*=(const Algebraic& o);
  Algebraic& operator/=(const Algebraic& o);

  friend bool operator==(const Algebraic& x, const Algebraic& y);

 private:
  void normalize();

  BigRational a_{0};
  BigRational b_{0};
  BigInt d_{0};
};

Algebraic operator+(Algebraic x, const Algebraic& y);
Algebraic operator-(Algebraic x, const Algebraic& y);
Algebraic operator*(Algebraic x, const Algebraic& y);
Algebraic operator/(Algebraic x, const Algebraic& y);
Algebraic operator-(const Algebraic& x);
Algebraic pow(const Algebraic& x, unsigned long n);
inline bool operator!=(const Algebraic& x, const Algebraic& y) { return !(x == y); }

/// Common radicand of x and y (0 if both rational); throws FieldMismatch.
BigInt common_radicand(const Algebraic& x, const Algebraic& y);

/// Grammar: sums/products/quotients of integer literals, `sqrt(n)` with
/// integer n, `i`, and parentheses. Whitespace is ignored. The result must
/// lie in Q or a single imaginary quadratic field.
Algebraic parse_algebraic(const std::string& text);
/// Canonical text (`p/q`, `a+b*sqrt(d)`); parse_algebraic(to_string(x)) == x.
std::string to_string(const Algebraic& x);

/// Absolute logarithmic Weil height as an enclosure.
Interval weil_height(const Algebraic& x, mpfr_prec_t prec = kDefaultPrecision);
/// Weil height rounded in one direction.
Real weil_height(const Algebraic& x, Round rounding, mpfr_prec_t prec = kDefaultPrecision);

/// Complex enclosure of the embedding a + b*i*sqrt(|d|).
ComplexInterval embed(const Algebraic& x, mpfr_prec_t prec = kDefaultPrecision);
/// |x| enclosure.
Interval abs(const Algebraic& x, mpfr_prec_t prec);

/// [Q(alpha, beta):Q] / [R(alpha, beta):R]; throws FieldMismatch for two
/// different quadratic fields.
unsigned field_degree_ratio(const Algebraic& alpha, const Algebraic& beta);

/// Largest squarefree part: n = s^2 * f with f squarefree; returns {s, f}.
std::pair<BigInt, BigInt> split_square(const BigInt& n);

}  // namespace tmeasure
