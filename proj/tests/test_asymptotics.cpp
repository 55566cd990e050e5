#include <doctest.h>

#include "tmeasure/asymptotics.hpp"

#include <cmath>

using namespace tmeasure;

namespace {

// f(E) = 8 E log E / (log E - 1 - log 2)^2 in long double
long double objective(long double E) {
  const long double u = std::log(E) - 1 - std::log(2.0L);
  return 8 * E * std::log(E) / (u * u);
}

}  // namespace

TEST_CASE("closed form") {
  const AsymptoticSolution s = closed_form_solution();
  CHECK(s.E.mid() == doctest::Approx(25.0059552782).epsilon(1e-10));
  CHECK(s.objective.mid() == doctest::Approx(276.553786929).epsilon(1e-10));
  CHECK(s.c2.mid() == doctest::Approx(2.62128896189).epsilon(1e-10));
  CHECK(s.c1.mid() == doctest::Approx(32.7739172761).epsilon(1e-10));
  CHECK(s.gamma.mid() == doctest::Approx(14.0256304584).epsilon(1e-10));
  CHECK(s.objective.width() < 1e-50);
  CHECK(corollary_objective(s.E).mid() == doctest::Approx(s.objective.mid()).epsilon(1e-14));
  CHECK(corollary_objective_two_variable(s.E, s.c2).mid() == doctest::Approx(s.objective.mid()).epsilon(1e-14));
  CHECK(std::abs(corollary_objective_derivative(s.E).mid()) < 1e-40);
}

TEST_CASE("the closed form is a minimum") {
  const long double E = closed_form_solution().E.mid();
  const long double f0 = objective(E);
  CHECK(static_cast<double>(f0) == doctest::Approx(276.553786929).epsilon(1e-10));
  for (long double d : {1e-2L, 1e-1L, 1.0L, 5.0L}) {
    CHECK(objective(E + d) > f0);
    CHECK(objective(E - d) > f0);
  }
  // derivative sign change, with a finite-difference oracle
  const long double h = 1e-4L;
  CHECK((objective(E - 1 + h) - objective(E - 1 - h)) / (2 * h) < 0);
  CHECK((objective(E + 1 + h) - objective(E + 1 - h)) / (2 * h) > 0);
  const Interval at = Interval::from_double(30.0, kDefaultPrecision);
  const double fd = static_cast<double>((objective(30 + h) - objective(30 - h)) / (2 * h));
  CHECK(corollary_objective_derivative(at).mid() == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("numeric optimization agrees") {
  const AsymptoticSolution closed = closed_form_solution();
  const AsymptoticSolution num = numeric_optimize(1e-12);
  CHECK(std::abs(num.E.mid() - closed.E.mid()) / closed.E.mid() < 1e-6);
  CHECK(std::abs(num.objective.mid() - closed.objective.mid()) / closed.objective.mid() < 1e-6);
  CHECK_THROWS_AS(numeric_optimize(0), std::invalid_argument);
  CHECK_THROWS_AS(corollary_objective(Interval(5L, kDefaultPrecision)), std::invalid_argument);
}

TEST_CASE("effective exponent") {
  const Interval b = Interval::from_double(100.0, kDefaultPrecision);
  const Interval v = effective_exponent(b, 10, 3, Interval(20L, kDefaultPrecision));
  CHECK(v.mid() == doctest::Approx(30 * std::log(20.0) / (100 * std::log(100.0))));
  CHECK_THROWS_AS(effective_exponent(Interval(2L, kDefaultPrecision), 10, 3, Interval(20L, kDefaultPrecision)),
                  std::invalid_argument);
}

TEST_CASE("finite sizes") {
  const double limit = closed_form_solution().objective.mid();
  const FiniteSizePoint small = finite_size_exponent(1e3);
  CHECK(small.feasible);
  CHECK(small.certified);
  CHECK(small.exponent.mid() > limit);
  const FiniteSizePoint large = finite_size_exponent(1e6);
  CHECK(large.feasible);
  CHECK(large.certified);
  // The finite-size optimum lies below the asymptotic constant here.
  CHECK(large.exponent.mid() < limit);
  CHECK(large.exponent.mid() < small.exponent.mid());
}

TEST_CASE("historical constants") {
  CHECK(std::size(kHistoricalConstants) == 3);
  CHECK(std::string(kHistoricalConstants[0].value) == "33");
}
