#include "tmeasure/bipoly.hpp"

#include "tmeasure/numtheory.hpp"

#include <sstream>
#include <vector>

namespace tmeasure {

BiPoly BiPoly::monomial(unsigned long i, unsigned long j, BigRational c) {
  BiPoly p;
  p.add_term(i, j, c);
  return p;
}

BigRational BiPoly::coeff(unsigned long i, unsigned long j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigRational(0) : it->second;
}

void BiPoly::add_term(unsigned long i, unsigned long j, const BigRational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

unsigned long BiPoly::degree_x() const {
  unsigned long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

unsigned long BiPoly::degree_y() const {
  unsigned long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

bool BiPoly::is_integral() const {
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

BigRational BiPoly::length() const {
  BigRational sum = 0;
  for (const auto& [e, c] : terms_) sum += abs(c);
  return sum;
}

namespace {

template <typename T>
std::vector<T> powers(const T& x, unsigned long n) {
  std::vector<T> out{T(1)};
  for (unsigned long i = 1; i <= n; ++i) out.push_back(out.back() * x);
  return out;
}

}  // namespace

Algebraic BiPoly::evaluate(const Algebraic& x, const Algebraic& y) const {
  if (terms_.empty()) return Algebraic(0);
  const auto px = powers(x, degree_x());
  const auto py = powers(y, degree_y());
  Algebraic sum(0);
  for (const auto& [e, c] : terms_) sum += Algebraic(c) * px[e.first] * py[e.second];
  return sum;
}

BigRational BiPoly::evaluate(const BigRational& x, const BigRational& y) const {
  if (terms_.empty()) return 0;
  const auto px = powers(x, degree_x());
  const auto py = powers(y, degree_y());
  BigRational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * px[e.first] * py[e.second];
  return sum;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BigRational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  }
  return out;
}

BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
BiPoly operator*(BiPoly a, const BigRational& s) { return a *= s; }

BiPoly pow(const BiPoly& p, unsigned long n) {
  BiPoly out = BiPoly::constant(1);
  for (unsigned long i = 0; i < n; ++i) out = out * p;
  return out;
}

BiPoly apply_delta(const BiPoly& p, unsigned long times) {
  BiPoly cur = p;
  for (unsigned long t = 0; t < times; ++t) {
    BiPoly next;
    for (const auto& [e, c] : cur.terms()) {
      const auto [i, j] = e;
      if (i > 0) next.add_term(i - 1, j, c * i);
      if (j > 0) next.add_term(i, j, c * j);
    }
    cur = std::move(next);
  }
  return cur;
}

BiPoly delta_monomial(unsigned long i, unsigned long k, unsigned long l) {
  BiPoly out;
  for (unsigned long j = 0; j <= std::min(i, k); ++j) {
    BigInt lp;
    mpz_ui_pow_ui(lp.get_mpz_t(), l, i - j);
    const BigInt c = binomial(i, j) * (factorial(k) / factorial(k - j)) * lp;
    out.add_term(k - j, l, BigRational(c));
  }
  return out;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    os << abs(c);
    if (e.first > 0) os << "*X^" << e.first;
    if (e.second > 0) os << "*Y^" << e.second;
  }
  return os.str();
}

}  // namespace tmeasure
