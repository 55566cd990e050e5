#include <doctest.h>

#include "tmeasure/analytic.hpp"
#include "tmeasure/lemma_suites.hpp"

#include <cmath>
#include <complex>

using namespace tmeasure;

namespace {

std::complex<double> f(unsigned long k, unsigned long l, std::complex<double> z) {
  return std::pow(z, static_cast<int>(k)) * std::exp(static_cast<double>(l) * z);
}

std::complex<double> to_complex(const ComplexInterval& z) { return {z.re.mid(), z.im.mid()}; }

ComplexInterval point(double re, double im) {
  return ComplexInterval(Interval::from_double(re, kDefaultPrecision), Interval::from_double(im, kDefaultPrecision));
}

}  // namespace

TEST_CASE("derivatives against finite differences") {
  const double h = 1e-4;
  const std::complex<double> z(0.3, -0.7);
  for (unsigned long k = 0; k <= 4; ++k) {
    for (unsigned long l = 0; l <= 3; ++l) {
      const auto d0 = to_complex(phi_mu_at(k, l, 0, point(z.real(), z.imag())));
      CHECK(std::abs(d0 - f(k, l, z)) < 1e-12 * (1 + std::abs(d0)));
      const auto d1 = to_complex(phi_mu_at(k, l, 1, point(z.real(), z.imag())));
      const auto fd1 = (f(k, l, z + h) - f(k, l, z - h)) / (2 * h);
      CHECK(std::abs(d1 - fd1) < 1e-6 * (1 + std::abs(d1)));
      const auto d2 = to_complex(phi_mu_at(k, l, 2, point(z.real(), z.imag())));
      const auto fd2 = (f(k, l, z + h) - 2.0 * f(k, l, z) + f(k, l, z - h)) / (h * h);
      CHECK(std::abs(d2 - fd2) < 1e-4 * (1 + std::abs(d2)));
    }
  }
}

TEST_CASE("epsilon") {
  const Interval eps = epsilon(Algebraic(3), Algebraic(1), kDefaultPrecision);
  CHECK(eps.mid() == doctest::Approx(3 - std::exp(1.0)).epsilon(1e-14));
  CHECK(eps.width() < 1e-60);
  const Interval eps_i = epsilon(Algebraic(1), parse_algebraic("i"), kDefaultPrecision);
  CHECK(eps_i.mid() == doctest::Approx(std::abs(std::exp(std::complex<double>(0, 1)) - 1.0)).epsilon(1e-14));
}

TEST_CASE("w weights stay below their bounds") {
  const Algebraic alpha = parse_algebraic("2718/1000"), beta(1);
  const Interval eps = epsilon(alpha, beta, kDefaultPrecision);
  for (unsigned long mu = 0; mu <= 2; ++mu) {
    for (unsigned long k = 0; k <= 3; ++k) {
      for (unsigned long l = 1; l <= 3; ++l) {
        CHECK(certainly_le(w_weight(k, l, mu, alpha, beta).abs(), w_weight_bound(k, l, mu, beta, eps)));
      }
    }
  }
}

TEST_CASE("envelope") {
  AnalyticParams p;
  p.K = 3;
  p.L = 3;
  p.mu = 1;
  p.E = Interval(BigRational(5, 2), kDefaultPrecision);
  p.alpha = parse_algebraic("2718/1000");
  p.beta = Algebraic(1);
  const EnvelopeCheck c = check_envelope(p, 32);
  CHECK(c.holds);
  CHECK_THROWS_AS(big_n(AnalyticParams{3, 1, 0, p.E, p.alpha, p.beta, kDefaultPrecision}), std::invalid_argument);
}

TEST_CASE("Schwarz lemma") {
  const Interval one(1L, kDefaultPrecision), two(2L, kDefaultPrecision), eight(8L, kDefaultPrecision);
  CHECK(schwarz_bound(3, one, two, eight).contains(one));
  CHECK_THROWS_AS(schwarz_bound(3, Interval(0L, kDefaultPrecision), two, eight), std::invalid_argument);
  CHECK_THROWS_AS(schwarz_bound(3, two, one, eight), std::invalid_argument);
  // z^3 (1 + z/10) on |z| = 1 against its maximum on |z| = 2.
  const double sup2 = 8 * 1.2;
  const Interval bound = schwarz_bound(3, one, two, Interval::from_double(sup2, kDefaultPrecision));
  for (int s = 0; s < 16; ++s) {
    const std::complex<double> z = std::polar(1.0, 2 * M_PI * s / 16);
    CHECK(std::abs(z * z * z * (1.0 + z / 10.0)) <= bound.mid() + 1e-12);
  }
}

TEST_CASE("determinant bound needs a small epsilon") {
  const auto sys = InterpolationSystem::build(2, 3);
  AnalyticParams p;
  p.K = 2;
  p.L = 3;
  p.E = Interval(3L, kDefaultPrecision);
  p.alpha = Algebraic(3);
  p.beta = Algebraic(1);
  p.mu = find_mu(sys, p.alpha, p.beta).mu;
  CHECK_THROWS_AS(det_upper_bound(p, sys), NotApplicable);
}

TEST_CASE("determinant bound on near-approximations") {
  for (const auto& c : small_eps_cases()) {
    CAPTURE(c.alpha);
    const auto sys = InterpolationSystem::build(c.K, c.L);
    AnalyticParams p;
    p.K = c.K;
    p.L = c.L;
    p.E = Interval(BigRational(c.E_num, c.E_den), kDefaultPrecision);
    p.alpha = parse_algebraic(c.alpha);
    p.beta = parse_algebraic(c.beta);
    p.mu = find_mu(sys, p.alpha, p.beta).mu;
    const Interval bound = det_upper_bound(p, sys);
    const Interval actual = numeric_det(p, sys, ComplexInterval(Interval(1L, kDefaultPrecision), Interval(0L, kDefaultPrecision))).abs();
    if (actual.is_positive()) CHECK(certainly_le(log(actual), bound));
  }
}
