#include "tmeasure/algebraic.hpp"

#include <cctype>
#include <sstream>

namespace tmeasure {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

std::pair<BigInt, BigInt> split_square(const BigInt& n) {
  if (n == 0) return {BigInt(0), BigInt(0)};
  const BigInt trial_limit = 1000000;
  BigInt rest = abs(n);
  BigInt root = 1;
  BigInt free = 1;
  for (BigInt p = 2; p * p <= rest; p = (p == 2) ? BigInt(3) : BigInt(p + 2)) {
    if (p > trial_limit) {
      if (!mpz_perfect_square_p(rest.get_mpz_t())) {
        throw std::invalid_argument("radicand too large to certify squarefree");
      }
      BigInt r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      root *= r;
      rest = 1;
      break;
    }
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (; e >= 2; e -= 2) root *= p;
    if (e == 1) free *= p;
  }
  free *= rest;
  return {root, sgn(n) < 0 ? BigInt(-free) : free};
}

Algebraic::Algebraic(long n) : a_(n) {}

Algebraic::Algebraic(BigRational q) : a_(std::move(q)) { a_.canonicalize(); }

Algebraic::Algebraic(BigRational a, BigRational b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) != 0) {
    if (d_ >= 0) throw std::invalid_argument("only imaginary quadratic fields (d < 0) are supported");
    auto [s, f] = split_square(d_);
    if (s != 1) throw std::invalid_argument("radicand must be squarefree");
  }
  normalize();
}

Algebraic Algebraic::imaginary_unit() { return Algebraic(BigRational(0), BigRational(1), BigInt(-1)); }

void Algebraic::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

Algebraic Algebraic::conjugate() const {
  Algebraic r = *this;
  r.b_ = -r.b_;
  return r;
}

BigRational Algebraic::norm() const {
  BigRational r = a_ * a_ - b_ * b_ * BigRational(d_);
  r.canonicalize();
  return r;
}

BigRational Algebraic::abs_squared() const { return norm(); }

std::vector<BigInt> Algebraic::minimal_polynomial() const {
  if (is_rational()) {
    // q X - p
    return {-a_.get_num(), a_.get_den()};
  }
  // X^2 - 2a X + (a^2 - b^2 d), cleared to a primitive integer polynomial
  BigRational c1 = -2 * a_;
  BigRational c0 = norm();
  c1.canonicalize();
  BigInt den;
  mpz_lcm(den.get_mpz_t(), c1.get_den_mpz_t(), c0.get_den_mpz_t());
  BigInt i2 = den;
  BigInt i1 = c1.get_num() * (den / c1.get_den());
  BigInt i0 = c0.get_num() * (den / c0.get_den());
  BigInt g;
  mpz_gcd(g.get_mpz_t(), i2.get_mpz_t(), i1.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), i0.get_mpz_t());
  return {i0 / g, i1 / g, i2 / g};
}

BigInt common_radicand(const Algebraic& x, const Algebraic& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw FieldMismatch("operands lie in different quadratic fields: sqrt(" +
                      x.radicand().get_str() + ") and sqrt(" + y.radicand().get_str() + ")");
}

Algebraic& Algebraic::operator+=(const Algebraic& o) {
  d_ = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Algebraic& Algebraic::operator-=(const Algebraic& o) {
  d_ = common_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Algebraic& Algebraic::operator*=(const Algebraic& o) {
  const BigInt d = common_radicand(*this, o);
  BigRational a = a_ * o.a_ + b_ * o.b_ * BigRational(d);
  BigRational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

Algebraic& Algebraic::operator/=(const Algebraic& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  const BigRational n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  normalize();
  return *this;
}

bool operator==(const Algebraic& x, const Algebraic& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
}

Algebraic operator+(Algebraic x, const Algebraic& y) { return x += y; }
Algebraic operator-(Algebraic x, const Algebraic& y) { return x -= y; }
Algebraic operator*(Algebraic x, const Algebraic& y) { return x *= y; }
Algebraic operator/(Algebraic x, const Algebraic& y) { return x /= y; }
Algebraic operator-(const Algebraic& x) { return Algebraic(0) - x; }

Algebraic pow(const Algebraic& x, unsigned long n) {
  Algebraic result(1);
  Algebraic base = x;
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        positions_.push_back(i);
      }
    }
  }

  Algebraic parse() {
    if (chars_.empty()) throw ParseError("empty expression", 0);
    Algebraic v = expr();
    if (pos_ != chars_.size()) fail("unexpected character '" + std::string(1, chars_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_ < positions_.size() ? positions_[pos_] : (positions_.empty() ? 0 : positions_.back() + 1));
  }

  bool peek(char c) const { return pos_ < chars_.size() && chars_[pos_] == c; }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Algebraic expr() {
    Algebraic v;
    if (accept('-')) {
      v = -term();
    } else {
      accept('+');
      v = term();
    }
    while (true) {
      if (accept('+')) {
        v = combine(v, term(), '+');
      } else if (accept('-')) {
        v = combine(v, term(), '-');
      } else {
        return v;
      }
    }
  }

  Algebraic term() {
    Algebraic v = factor();
    while (true) {
      if (accept('*')) {
        v = combine(v, factor(), '*');
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Algebraic rhs = factor();
        if (rhs.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v = combine(v, rhs, '/');
      } else {
        return v;
      }
    }
  }

  Algebraic combine(const Algebraic& x, const Algebraic& y, char op) {
    try {
      switch (op) {
        case '+':
          return x + y;
        case '-':
          return x - y;
        case '*':
          return x * y;
        default:
          return x / y;
      }
    } catch (const FieldMismatch& e) {
      fail(e.what());
    }
  }

  Algebraic factor() {
    if (accept('(')) {
      Algebraic v = expr();
      expect(')');
      return v;
    }
    if (accept('-')) return -factor();
    if (peek('i')) {
      ++pos_;
      return Algebraic::imaginary_unit();
    }
    if (peek('s')) return sqrt_call();
    return Algebraic(BigRational(integer()));
  }

  Algebraic sqrt_call() {
    for (char c : std::string("sqrt")) expect(c);
    expect('(');
    const std::size_t at = pos_;
    bool negative = accept('-');
    BigInt n = integer();
    expect(')');
    if (negative) n = -n;
    if (n == 0) return Algebraic(0);
    auto [s, f] = split_square(n);
    if (f == 1) return Algebraic(BigRational(s));
    if (f > 0) {
      pos_ = at;
      fail("real quadratic irrationalities are not supported (sqrt of a positive non-square)");
    }
    return Algebraic(BigRational(0), BigRational(s), f);
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer literal");
    return BigInt(std::string(chars_.begin() + static_cast<long>(start), chars_.begin() + static_cast<long>(pos_)));
  }

  std::vector<char> chars_;
  std::vector<std::size_t> positions_;
  std::size_t pos_ = 0;
};

std::string rational_text(const BigRational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

Algebraic parse_algebraic(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const Algebraic& x) {
  if (x.is_rational()) return rational_text(x.real_part_coeff());
  std::ostringstream out;
  const BigRational& b = x.sqrt_coeff();
  const bool has_real = sgn(x.real_part_coeff()) != 0;
  if (has_real) out << rational_text(x.real_part_coeff());
  if (sgn(b) < 0) {
    out << '-';
  } else if (has_real) {
    out << '+';
  }
  const BigRational mag = abs(b);
  if (mag != 1) out << rational_text(mag) << '*';
  out << "sqrt(" << x.radicand().get_str() << ')';
  return out.str();
}

// ---------------------------------------------------------------- heights

Interval abs(const Algebraic& x, mpfr_prec_t prec) {
  return sqrt(Interval(x.abs_squared(), prec));
}

Interval weil_height(const Algebraic& x, mpfr_prec_t prec) {
  if (x.is_zero()) return Interval(0L, prec);
  const std::vector<BigInt> poly = x.minimal_polynomial();
  const unsigned deg = x.degree();
  // all conjugates share |x| (rational, or complex-conjugate pair)
  const Interval one(1L, prec);
  Interval sum = log_of(poly.back(), prec);
  const Interval m = max(one, abs(x, prec));
  sum += static_cast<long>(deg) * log(m);
  return sum / Interval(static_cast<long>(deg), prec);
}

Real weil_height(const Algebraic& x, Round rounding, mpfr_prec_t prec) {
  Interval h = weil_height(x, prec + 32);
  Real r(prec);
  switch (rounding) {
    case Round::Down:
      mpfr_set(r.get(), h.lower().get(), MPFR_RNDD);
      break;
    case Round::Up:
      mpfr_set(r.get(), h.upper().get(), MPFR_RNDU);
      break;
    case Round::Nearest: {
      Real m(prec + 33);
      mpfr_add(m.get(), h.lower().get(), h.upper().get(), MPFR_RNDN);
      mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
      mpfr_set(r.get(), m.get(), MPFR_RNDN);
      break;
    }
  }
  return r;
}

ComplexInterval embed(const Algebraic& x, mpfr_prec_t prec) {
  Interval re(x.real_part_coeff(), prec);
  if (x.is_rational()) return {re, Interval(0L, prec)};
  Interval im = Interval(x.sqrt_coeff(), prec) * sqrt(Interval(BigInt(-x.radicand()), prec));
  return {re, im};
}

unsigned field_degree_ratio(const Algebraic& alpha, const Algebraic& beta) {
  const BigInt d = common_radicand(alpha, beta);
  // Q(alpha, beta) is Q (degree 1, real) or an imaginary quadratic field
  // (degree 2 over Q, generating C over R): both give ratio 1.
  (void)d;
  return 1;
}

}  // namespace tmeasure
