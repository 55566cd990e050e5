#include "tmeasure/real.hpp"

#include <algorithm>
#include <stdexcept>

namespace tmeasure {

mpfr_rnd_t to_mpfr(Round r) {
  switch (r) {
    case Round::Down:
      return MPFR_RNDD;
    case Round::Up:
      return MPFR_RNDU;
    case Round::Nearest:
      break;
  }
  return MPFR_RNDN;
}

// ---------------------------------------------------------------- Real

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_decimal(Round r, int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*R*e", digits - 1, to_mpfr(r), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()); }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()); }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()); }

// ---------------------------------------------------------------- Interval

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

template <typename F>
Interval monotone_up(const Interval& a, F f) {
  Interval r(a.precision());
  f(r.lower().get(), a.lower().get(), MPFR_RNDD);
  f(r.upper().get(), a.upper().get(), MPFR_RNDU);
  return r;
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(long value, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
  mpfr_set_si(lo_.get(), value, MPFR_RNDD);
  mpfr_set_si(hi_.get(), value, MPFR_RNDU);
}

Interval::Interval(const BigInt& value, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
  mpfr_set_z(lo_.get(), value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_.get(), value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const BigRational& value, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
  mpfr_set_q(lo_.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Real& lower, const Real& upper) : lo_(lower), hi_(upper) {
  if (mpfr_greater_p(lo_.get(), hi_.get())) throw std::invalid_argument("Interval: lower > upper");
}

Interval Interval::from_double(double value, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_.get(), value, MPFR_RNDD);
  mpfr_set_d(r.hi_.get(), value, MPFR_RNDU);
  return r;
}

Interval Interval::from_decimal(const std::string& text, mpfr_prec_t prec) {
  Interval r(prec);
  if (mpfr_set_str(r.lo_.get(), text.c_str(), 10, MPFR_RNDD) == -1 ||
      mpfr_set_str(r.hi_.get(), text.c_str(), 10, MPFR_RNDU) == -1) {
    throw std::invalid_argument("not a decimal number: " + text);
  }
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::log2(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_log2(r.lo_.get(), MPFR_RNDD);
  mpfr_const_log2(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::e(mpfr_prec_t prec) { return exp(Interval(1L, prec)); }

double Interval::mid() const {
  Real m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double();
}

double Interval::width() const {
  Real w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w.to_double();
}

bool Interval::contains(const Interval& o) const {
  return mpfr_lessequal_p(lo_.get(), o.lo_.get()) && mpfr_lessequal_p(o.hi_.get(), hi_.get());
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_.get()) < 0; }

Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_add(r.lower().get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
  mpfr_add(r.upper().get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_sub(r.lower().get(), a.lower().get(), b.upper().get(), MPFR_RNDD);
  mpfr_sub(r.upper().get(), a.upper().get(), b.lower().get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lower().get(), a.upper().get(), MPFR_RNDD);
  mpfr_neg(r.upper().get(), a.lower().get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = joint(a, b);
  Interval r(prec);
  Real t(prec);
  mpfr_srcptr as[2] = {a.lower().get(), a.upper().get()};
  mpfr_srcptr bs[2] = {b.lower().get(), b.upper().get()};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lower().get())) mpfr_set(r.lower().get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.upper().get())) mpfr_set(r.upper().get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval operator*(long s, const Interval& a) { return Interval(s, a.precision()) * a; }

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("Interval division by an interval containing zero");
  const mpfr_prec_t prec = joint(a, b);
  Interval r(prec);
  Real t(prec);
  mpfr_srcptr bs[2] = {b.lower().get(), b.upper().get()};
  mpfr_srcptr as[2] = {a.lower().get(), a.upper().get()};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lower().get())) mpfr_set(r.lower().get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.upper().get())) mpfr_set(r.upper().get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval abs(const Interval& a) {
  if (mpfr_sgn(a.lower().get()) >= 0) return a;
  if (mpfr_sgn(a.upper().get()) <= 0) return -a;
  Interval r(a.precision());
  mpfr_set_zero(r.lower().get(), 1);
  mpfr_neg(r.upper().get(), a.lower().get(), MPFR_RNDU);
  if (mpfr_greater_p(a.upper().get(), r.upper().get())) mpfr_set(r.upper().get(), a.upper().get(), MPFR_RNDU);
  return r;
}

Interval sqr(const Interval& a) { return pow(a, 2); }

Interval sqrt(const Interval& a) {
  if (a.is_negative()) throw std::domain_error("sqrt of a negative interval");
  Interval r(a.precision());
  if (mpfr_sgn(a.lower().get()) <= 0) {
    mpfr_set_zero(r.lower().get(), 1);
  } else {
    mpfr_sqrt(r.lower().get(), a.lower().get(), MPFR_RNDD);
  }
  mpfr_sqrt(r.upper().get(), a.upper().get(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& a) {
  if (!a.is_positive()) throw std::domain_error("log of an interval not certainly positive");
  return monotone_up(a, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t m) { mpfr_log(r, x, m); });
}

Interval exp(const Interval& a) {
  return monotone_up(a, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t m) { mpfr_exp(r, x, m); });
}

namespace {

// f is 1-Lipschitz with range [-1, 1]; enclose f over [mid - rad, mid + rad].
template <typename F>
Interval lipschitz_trig(const Interval& a, F f) {
  const mpfr_prec_t prec = a.precision();
  Real mid(prec + 1);
  mpfr_add(mid.get(), a.lower().get(), a.upper().get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  Real rad(prec);
  Real t(prec);
  mpfr_sub(rad.get(), mid.get(), a.lower().get(), MPFR_RNDU);
  mpfr_sub(t.get(), a.upper().get(), mid.get(), MPFR_RNDU);
  if (mpfr_greater_p(t.get(), rad.get())) mpfr_set(rad.get(), t.get(), MPFR_RNDU);
  Interval r(prec);
  f(r.lower().get(), mid.get(), MPFR_RNDD);
  f(r.upper().get(), mid.get(), MPFR_RNDU);
  mpfr_sub(r.lower().get(), r.lower().get(), rad.get(), MPFR_RNDD);
  mpfr_add(r.upper().get(), r.upper().get(), rad.get(), MPFR_RNDU);
  if (mpfr_cmp_si(r.lower().get(), -1) < 0) mpfr_set_si(r.lower().get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(r.upper().get(), 1) > 0) mpfr_set_si(r.upper().get(), 1, MPFR_RNDU);
  return r;
}

}  // namespace

Interval cos(const Interval& a) {
  return lipschitz_trig(a, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t m) { mpfr_cos(r, x, m); });
}

Interval sin(const Interval& a) {
  return lipschitz_trig(a, [](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t m) { mpfr_sin(r, x, m); });
}

Interval pow(const Interval& a, unsigned long n) {
  const mpfr_prec_t prec = a.precision();
  if (n == 0) return Interval(1L, prec);
  Interval r(prec);
  mpfr_srcptr lo = a.lower().get();
  mpfr_srcptr hi = a.upper().get();
  const bool even = (n % 2 == 0);
  if (mpfr_sgn(lo) >= 0 || !even) {
    mpfr_pow_ui(r.lower().get(), lo, n, MPFR_RNDD);
    mpfr_pow_ui(r.upper().get(), hi, n, MPFR_RNDU);
  } else if (mpfr_sgn(hi) <= 0) {
    mpfr_pow_ui(r.lower().get(), hi, n, MPFR_RNDD);
    mpfr_pow_ui(r.upper().get(), lo, n, MPFR_RNDU);
  } else {
    Real t(prec);
    mpfr_set_zero(r.lower().get(), 1);
    mpfr_pow_ui(r.upper().get(), lo, n, MPFR_RNDU);
    mpfr_pow_ui(t.get(), hi, n, MPFR_RNDU);
    if (mpfr_greater_p(t.get(), r.upper().get())) mpfr_set(r.upper().get(), t.get(), MPFR_RNDU);
  }
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_max(r.lower().get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
  mpfr_max(r.upper().get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_min(r.lower().get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
  mpfr_min(r.upper().get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_min(r.lower().get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
  mpfr_max(r.upper().get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
  return r;
}

Interval log_of(const BigInt& n, mpfr_prec_t prec) {
  if (sgn(n) <= 0) throw std::domain_error("log_of: non-positive integer");
  return log(Interval(n, prec));
}

Interval log_factorial(unsigned long n, mpfr_prec_t prec) {
  if (n <= 1) return Interval(0L, prec);
  if (n <= 2000) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return log_of(f, prec);
  }
  Interval arg(static_cast<long>(n) + 1, prec + 16);
  Interval r(prec);
  mpfr_lngamma(r.lower().get(), arg.lower().get(), MPFR_RNDD);
  mpfr_lngamma(r.upper().get(), arg.upper().get(), MPFR_RNDU);
  return r;
}

bool certainly_le(const Interval& a, const Interval& b) {
  return mpfr_lessequal_p(a.upper().get(), b.lower().get());
}

bool certainly_lt(const Interval& a, const Interval& b) {
  return mpfr_less_p(a.upper().get(), b.lower().get());
}

// ---------------------------------------------------------------- Complex

ComplexInterval::ComplexInterval(mpfr_prec_t prec) : re(prec), im(prec) {}

ComplexInterval::ComplexInterval(Interval real, Interval imag)
    : re(std::move(real)), im(std::move(imag)) {}

Interval ComplexInterval::abs() const { return sqrt(sqr(re) + sqr(im)); }

bool ComplexInterval::contains(const ComplexInterval& other) const {
  return re.contains(other.re) && im.contains(other.im);
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator*(const Interval& s, const ComplexInterval& a) {
  return {s * a.re, s * a.im};
}

ComplexInterval operator/(const ComplexInterval& a, const Interval& s) {
  return {a.re / s, a.im / s};
}

ComplexInterval exp(const ComplexInterval& z) {
  Interval m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

ComplexInterval pow(const ComplexInterval& z, unsigned long n) {
  ComplexInterval result(Interval(1L, z.precision()), Interval(0L, z.precision()));
  ComplexInterval base = z;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace tmeasure
