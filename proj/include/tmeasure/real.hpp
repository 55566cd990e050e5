#pragma once

// Outward-rounded real and complex intervals on top of MPFR.
//
// Every operation returns an enclosure of the exact result: the lower end is
// rounded toward -inf and the upper end toward +inf. Certified comparisons
// only ever look at one end of each operand.

#include <mpfr.h>
#include <gmpxx.h>

#include <string>

namespace tmeasure {

using BigInt = mpz_class;
using BigRational = mpq_class;

enum class Round { Down, Up, Nearest };

inline constexpr mpfr_prec_t kDefaultPrecision = 256;

mpfr_rnd_t to_mpfr(Round r);

/// A single MPFR value carrying its own precision. Used for results that are
/// reported "rounded in one direction" rather than as enclosures.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = kDefaultPrecision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific decimal string with `digits` significant digits, rounded in
  /// direction `r` (so the printed value is itself a valid bound).
  std::string to_decimal(Round r, int digits = 30) const;

 private:
  mpfr_t value_;
};

bool operator<(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = kDefaultPrecision);
  Interval(long value, mpfr_prec_t prec);
  Interval(const BigInt& value, mpfr_prec_t prec);
  Interval(const BigRational& value, mpfr_prec_t prec);
  Interval(const Real& lower, const Real& upper);

  static Interval from_double(double value, mpfr_prec_t prec);
  /// Enclosure of a decimal string (rounded outward on parse).
  static Interval from_decimal(const std::string& text, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);
  static Interval log2(mpfr_prec_t prec);
  static Interval e(mpfr_prec_t prec);

  const Real& lower() const { return lo_; }
  const Real& upper() const { return hi_; }
  Real& lower() { return lo_; }
  Real& upper() { return hi_; }

  mpfr_prec_t precision() const { return lo_.precision(); }
  double mid() const;
  double width() const;
  bool contains(const Interval& other) const;
  bool contains_zero() const;
  bool is_positive() const;  // certainly > 0
  bool is_negative() const;  // certainly < 0

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

 private:
  Real lo_;
  Real hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(long s, const Interval& a);

Interval abs(const Interval& a);
Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);
Interval log(const Interval& a);  // throws std::domain_error unless a > 0
Interval exp(const Interval& a);
Interval cos(const Interval& a);
Interval sin(const Interval& a);
Interval pow(const Interval& a, unsigned long n);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);
/// Union hull.
Interval hull(const Interval& a, const Interval& b);

/// log(n!) enclosure; exact factorial for small n, lngamma otherwise.
Interval log_factorial(unsigned long n, mpfr_prec_t prec);
/// log of a positive big integer.
Interval log_of(const BigInt& n, mpfr_prec_t prec);

/// a.upper <= b.lower
bool certainly_le(const Interval& a, const Interval& b);
/// a.upper < b.lower
bool certainly_lt(const Interval& a, const Interval& b);

struct ComplexInterval {
  Interval re;
  Interval im;

  explicit ComplexInterval(mpfr_prec_t prec = kDefaultPrecision);
  ComplexInterval(Interval real, Interval imag);

  mpfr_prec_t precision() const { return re.precision(); }
  /// |z| enclosure.
  Interval abs() const;
  bool contains(const ComplexInterval& other) const;
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const Interval& s, const ComplexInterval& a);
ComplexInterval operator/(const ComplexInterval& a, const Interval& s);
ComplexInterval exp(const ComplexInterval& z);
ComplexInterval pow(const ComplexInterval& z, unsigned long n);

}  // namespace tmeasure
