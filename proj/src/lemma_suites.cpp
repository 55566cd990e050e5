#include "tmeasure/lemma_suites.hpp"

#include "tmeasure/algebraic.hpp"
#include "tmeasure/analytic.hpp"
#include "tmeasure/asymptotics.hpp"
#include "tmeasure/feldman.hpp"
#include "tmeasure/hermite_pade.hpp"
#include "tmeasure/interp.hpp"
#include "tmeasure/numtheory.hpp"
#include "tmeasure/zerolemma.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

namespace tmeasure {

namespace {

using Clock = std::chrono::steady_clock;

// Runs `body` once per case index; body returns "" on success.
LemmaResult lemma(const std::string& suite, const std::string& name, const std::function<void(std::function<void(const std::string&)>)>& body) {
  LemmaResult r{suite, name, 0, 0, 0, ""};
  const auto start = Clock::now();
  const auto record = [&r](const std::string& failure) {
    ++r.cases;
    if (!failure.empty()) {
      ++r.failures;
      if (r.note.empty()) r.note = failure;
    }
  };
  try {
    body(record);
  } catch (const std::exception& e) {
    record(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::string when(bool ok, const std::string& what) { return ok ? std::string() : what; }

std::vector<BigRational> integer_nodes(std::size_t count) {
  std::vector<BigRational> nodes;
  for (std::size_t i = 0; i < count; ++i) nodes.emplace_back(static_cast<long>(i));
  return nodes;
}

// Compositions of sigma into `parts` positive parts.
void compositions(unsigned long sigma, std::size_t parts, std::vector<unsigned long>& prefix,
                  const std::function<void(const std::vector<unsigned long>&)>& visit) {
  if (prefix.size() + 1 == parts) {
    if (sigma >= 1) {
      prefix.push_back(sigma);
      visit(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (unsigned long first = 1; first + (parts - prefix.size() - 1) <= sigma; ++first) {
    prefix.push_back(first);
    compositions(sigma - first, parts, prefix, visit);
    prefix.pop_back();
  }
}

struct RandomSystem {
  std::vector<BigRational> nodes;
  std::vector<unsigned long> params;
};

RandomSystem random_system(std::mt19937_64& rng, unsigned long max_sigma) {
  auto uniform = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  RandomSystem s;
  const std::size_t count = static_cast<std::size_t>(uniform(2, 4));
  while (s.nodes.size() < count) {
    BigRational x(uniform(-9, 9), uniform(1, 5));
    x.canonicalize();
    bool fresh = true;
    for (const auto& y : s.nodes) fresh = fresh && y != x;
    if (fresh) s.nodes.push_back(x);
  }
  unsigned long budget = static_cast<unsigned long>(uniform(static_cast<long>(count), static_cast<long>(max_sigma)));
  s.params.assign(count, 1);
  for (unsigned long extra = budget - count; extra > 0; --extra) ++s.params[uniform(0, static_cast<long>(count) - 1)];
  return s;
}

std::vector<LemmaResult> numtheory_suite(const SuiteOptions&) {
  const std::string suite = "numtheory";
  std::vector<LemmaResult> out;
  for (const auto& check : check_binomial_bounds(200)) {
    LemmaResult r{suite, "binomial: " + check.name, check.cases, check.failures, 0, ""};
    out.push_back(r);
  }
  out.push_back(lemma(suite, "psi(n) = log d_n", [](auto record) {
    for (unsigned long n = 1; n <= 300; ++n) {
      const Interval a = chebyshev_psi(n), b = log_of(lcm_upto(n), kDefaultPrecision);
      record(when(!certainly_lt(a, b) && !certainly_lt(b, a), "psi(" + std::to_string(n) + ")"));
    }
  }));
  out.push_back(lemma(suite, "D_{m,n} m!-cofactor coprime to primes <= n", [](auto record) {
    for (unsigned long m = 0; m <= 30; ++m) {
      for (unsigned long n = 0; n <= 12; ++n) {
        const BigInt d = dmn(m, n);
        bool ok = factorial(m) % d == 0;
        for (unsigned long q : PrimeTable(n).primes()) ok = ok && d % q != 0;
        const Interval a = log_dmn(m, n, 128), b = log_of(d, 128);
        ok = ok && !certainly_lt(a, b) && !certainly_lt(b, a);
        record(when(ok, "D(" + std::to_string(m) + "," + std::to_string(n) + ")"));
      }
    }
  }));
  out.push_back(lemma(suite, "Stirling numbers expand the falling factorial", [](auto record) {
    for (unsigned long nu = 0; nu <= 20; ++nu) {
      bool ok = true;
      for (long z = -5; z <= 25; ++z) {
        BigInt falling = 1, sum = 0, zp = 1;
        for (unsigned long i = 0; i < nu; ++i) falling *= BigInt(z - static_cast<long>(i));
        for (unsigned long j = 0; j <= nu; ++j, zp *= z) sum += stirling_first(nu, j) * zp;
        ok = ok && sum == falling;
      }
      record(when(ok, "nu = " + std::to_string(nu)));
    }
  }));
  return out;
}

std::vector<LemmaResult> feldman_suite(const SuiteOptions&) {
  const std::string suite = "feldman";
  std::vector<LemmaResult> out;
  out.push_back(lemma(suite, "sum j! |lambda_{j,nu}| <= 2^nu (nu <= 40)", [](auto record) {
    for (unsigned long nu = 0; nu <= 40; ++nu) {
      BigInt two_nu = 1;
      two_nu <<= nu;
      record(when(weighted_coeff_sum(nu) <= BigRational(two_nu), "nu = " + std::to_string(nu)));
    }
  }));
  out.push_back(lemma(suite, "d_nu^k F_nu^{(u)}(l) is an integer (nu, k <= 10, |l| <= 12)", [](auto record) {
    for (unsigned long nu = 0; nu <= 10; ++nu) {
      const BigInt d = lcm_upto(nu);
      for (unsigned long k = 0; k <= 10; ++k) {
        BigInt dk;
        mpz_pow_ui(dk.get_mpz_t(), d.get_mpz_t(), k);
        for (unsigned long u = 0; u <= k; ++u) {
          for (long l = -12; l <= 12; ++l) {
            const BigRational v = BigRational(dk) * derivative_at_integer(nu, u, l);
            record(when(v.get_den() == 1, "nu=" + std::to_string(nu) + " k=" + std::to_string(k) + " u=" +
                                              std::to_string(u) + " l=" + std::to_string(l)));
          }
        }
      }
    }
  }));
  out.push_back(lemma(suite, "F_nu(l) = C(l, nu)", [](auto record) {
    for (unsigned long nu = 0; nu <= 20; ++nu) {
      for (unsigned long l = 0; l <= 30; ++l) {
        record(when(derivative_at_integer(nu, 0, static_cast<long>(l)) == BigRational(binomial(l, nu)),
                    "nu=" + std::to_string(nu) + " l=" + std::to_string(l)));
      }
    }
  }));
  return out;
}

std::vector<LemmaResult> hermite_pade_suite(const SuiteOptions& options) {
  const std::string suite = "hermite_pade";
  std::vector<LemmaResult> out;
  out.push_back(lemma(suite, "ord R >= sigma - 1, nodes 0..m, sigma <= 14", [](auto record) {
    for (unsigned long sigma = 2; sigma <= 14; ++sigma) {
      for (std::size_t parts = 2; parts <= sigma; ++parts) {
        std::vector<unsigned long> prefix;
        compositions(sigma, parts, prefix, [&](const std::vector<unsigned long>& params) {
          const HPSystem sys = hp_coefficients(integer_nodes(params.size()), params);
          record(when(remainder_order(sys, sigma) >= sigma - 1, "sigma " + std::to_string(sigma)));
        });
      }
    }
  }));
  out.push_back(lemma(suite, "ord R >= sigma - 1, random rational nodes", [&options](auto record) {
    std::mt19937_64 rng(options.seed);
    for (int t = 0; t < 50; ++t) {
      const RandomSystem s = random_system(rng, 14);
      const HPSystem sys = hp_coefficients(s.nodes, s.params);
      record(when(remainder_order(sys, sys.sigma()) >= sys.sigma() - 1, "random system " + std::to_string(t)));
    }
  }));
  out.push_back(lemma(suite, "generalized Vandermonde product formula", [&options](auto record) {
    std::mt19937_64 rng(options.seed + 1);
    for (int t = 0; t < 50; ++t) {
      const RandomSystem s = random_system(rng, 12);
      record(when(generalized_vandermonde(s.nodes, s.params) == vandermonde_product(s.nodes, s.params),
                  "random instance " + std::to_string(t)));
    }
  }));
  return out;
}

std::vector<std::pair<Algebraic, Algebraic>> sample_pairs() {
  const char* const texts[][2] = {
      {"3", "1"},       {"2", "1/2"},      {"-5/3", "2"},     {"7", "-3"},        {"1/2", "5/7"},
      {"11", "1/3"},    {"-2", "-1"},      {"4/9", "3"},      {"13/5", "-2/3"},   {"100", "1/10"},
      {"1+i", "i"},     {"2-3*i", "1+i"},  {"i", "2*i"},      {"5", "1-2*i"},     {"3/2+i/2", "1"},
      {"-1+2*i", "-i"}, {"7*i", "3+4*i"},  {"1/3-i", "2-i"},  {"-4-i", "1/2*i"},  {"6+5*i", "-1+i"}};
  std::vector<std::pair<Algebraic, Algebraic>> out;
  for (const auto& t : texts) out.emplace_back(parse_algebraic(t[0]), parse_algebraic(t[1]));
  return out;
}

std::vector<LemmaResult> interp_suite(const SuiteOptions&) {
  const std::string suite = "interp";
  std::vector<LemmaResult> out;
  out.push_back(lemma(suite, "H(M0) via minors equals H via the dual vector (K <= 4, L in [2,5])", [](auto record) {
    for (unsigned long K = 1; K <= 4; ++K) {
      for (unsigned long L = 2; L <= 5; ++L) {
        const HeightReport h = m0_height(InterpolationSystem::build(K, L));
        record(when(h.duality_holds, "K=" + std::to_string(K) + " L=" + std::to_string(L)));
      }
    }
  }));
  out.push_back(lemma(suite, "H(M0) below the closed-form bound (K in [1,5], L in [2,5])", [](auto record) {
    for (unsigned long K = 1; K <= 5; ++K) {
      for (unsigned long L = 2; L <= 5; ++L) {
        const Prop310Check c = check_prop310(K, L);
        record(when(c.passed, "K=" + std::to_string(K) + " L=" + std::to_string(L) + ": H=" +
                                  c.H.upper().to_decimal(Round::Up, 6) + " bound=" +
                                  c.bound.lower().to_decimal(Round::Down, 6)));
      }
    }
  }));
  out.push_back(lemma(suite, "mu <= L-2 with F(beta, alpha) != 0 (K <= 4, L in [2,5])", [](auto record) {
    for (const auto& [alpha, beta] : sample_pairs()) {
      for (unsigned long K = 1; K <= 4; ++K) {
        for (unsigned long L = 2; L <= 5; ++L) {
          const auto sys = InterpolationSystem::from_hermite_pade(K, L);
          const MuReport m = find_mu(sys, alpha, beta);
          record(when(m.within_L_minus_2(L) && !m.F.is_zero(), "alpha=" + to_string(alpha) + " beta=" + to_string(beta) + " K=" +
                                                                     std::to_string(K) + " L=" + std::to_string(L) + ": mu=" +
                                                                     std::to_string(m.mu)));
        }
      }
    }
  }));
  out.push_back(lemma(suite, "G1, G2 integral and mu! G1 = d^{K-1} F / g (K <= 4, L in [2,4])", [](auto record) {
    const auto pairs = sample_pairs();
    for (unsigned long K = 1; K <= 4; ++K) {
      for (unsigned long L = 2; L <= 4; ++L) {
        const auto sys = InterpolationSystem::build(K, L);
        for (std::size_t i = 0; i < pairs.size(); i += 4) {
          const auto& [alpha, beta] = pairs[i];
          g_value(sys, find_mu(sys, alpha, beta), alpha, beta);  // throws on any mismatch
          record("");
        }
      }
    }
  }));
  return out;
}

std::vector<LemmaResult> zerolemma_suite(const SuiteOptions& options) {
  const std::string suite = "zerolemma";
  std::vector<LemmaResult> out;
  out.push_back(lemma(suite, "randomized configurations stay below the threshold", [&options](auto record) {
    const ZeroTrialStats stats = run_zero_lemma_trials(options.trials, options.seed);
    for (unsigned long t = 0; t < stats.trials; ++t) record(when(t >= stats.violations, "threshold violated"));
  }));
  out.push_back(lemma(suite, "(Y-1)^{D1} meets the threshold with equality (D1, M <= 6)", [](auto record) {
    for (unsigned long D1 = 1; D1 <= 6; ++D1) {
      const BiPoly P = pow(BiPoly::monomial(0, 1) - BiPoly::constant(1), D1);
      for (unsigned long M = 1; M <= 6; ++M) {
        ZeroConfig c;
        c.P = P;
        c.D0 = 0;
        c.D1 = D1;
        for (unsigned long k = 0; k < M; ++k) c.points.emplace_back(BigRational(static_cast<long>(k)), BigRational(1));
        c.multiplicities.assign(M, D1);
        const ZeroVerdict v = check_zero_lemma(c);
        record(when(v.conditions_hold && v.lemma_holds && v.order_sum == v.threshold,
                    "D1=" + std::to_string(D1) + " M=" + std::to_string(M)));
      }
    }
  }));
  return out;
}

std::vector<LemmaResult> analytic_suite(const SuiteOptions&) {
  const std::string suite = "analytic";
  std::vector<LemmaResult> out;
  const mpfr_prec_t prec = 256;
  out.push_back(lemma(suite, "log |D(1)| below the determinant bound when eps < E^{-KL}", [&](auto record) {
    for (const auto& c : small_eps_cases()) {
      const Algebraic alpha = parse_algebraic(c.alpha), beta = parse_algebraic(c.beta);
      const auto sys = InterpolationSystem::build(c.K, c.L);
      const MuReport m = find_mu(sys, alpha, beta);
      AnalyticParams p{c.K, c.L, m.mu, Interval(BigRational(c.E_num, c.E_den), prec), alpha, beta, prec};
      const ComplexInterval one(Interval(1L, prec), Interval(0L, prec));
      const Interval value = numeric_det(p, sys, one).abs();
      record(when(certainly_le(log(value), det_upper_bound(p, sys)), c.alpha + " / " + c.beta));
    }
  }));
  out.push_back(lemma(suite, "numeric D(1) equals F(beta, alpha) to 2^-100", [&](auto record) {
    for (const auto& c : small_eps_cases()) {
      const Algebraic alpha = parse_algebraic(c.alpha), beta = parse_algebraic(c.beta);
      const auto sys = InterpolationSystem::build(c.K, c.L);
      const MuReport m = find_mu(sys, alpha, beta);
      AnalyticParams p{c.K, c.L, m.mu, Interval(BigRational(c.E_num, c.E_den), prec), alpha, beta, prec};
      const ComplexInterval one(Interval(1L, prec), Interval(0L, prec));
      const ComplexInterval diff = numeric_det(p, sys, one) - embed(m.F, prec);
      const Interval rel = diff.abs() / embed(m.F, prec).abs();
      record(when(certainly_le(rel, Interval(1L, prec) / pow(Interval(2L, prec), 100)), c.alpha + " / " + c.beta));
    }
  }));
  out.push_back(lemma(suite, "sum |w| and sampled sup |Phi| below e^N", [&](auto record) {
    for (const auto& c : small_eps_cases()) {
      const Algebraic alpha = parse_algebraic(c.alpha), beta = parse_algebraic(c.beta);
      AnalyticParams p{c.K, c.L, 0, Interval(BigRational(c.E_num, c.E_den), prec), alpha, beta, prec};
      record(when(check_envelope(p).holds, c.alpha + " / " + c.beta));
    }
  }));
  out.push_back(lemma(suite, "Schwarz bound dominates z^T (1 + z/10) on |z| = r", [&](auto record) {
    const Interval R(5L, prec), r(2L, prec), ten(10L, prec), one(1L, prec);
    for (unsigned long T = 0; T <= 8; ++T) {
      const Interval sup_r = pow(r, T) * (one + r / ten);
      const Interval sup_R = pow(R, T) * (one + R / ten);
      record(when(certainly_le(sup_r, schwarz_bound(T, r, R, sup_R)), "T=" + std::to_string(T)));
    }
  }));
  return out;
}

std::vector<LemmaResult> asymptotics_suite(const SuiteOptions&) {
  const std::string suite = "asymptotics";
  std::vector<LemmaResult> out;
  out.push_back(lemma(suite, "closed form and numeric optimum agree to 1e-6", [](auto record) {
    const AsymptoticSolution cf = closed_form_solution(128);
    const AsymptoticSolution num = numeric_optimize(1e-9, 128);
    record(when(std::abs(cf.E.mid() - num.E.mid()) <= 1e-6 * cf.E.mid(), "E"));
    record(when(std::abs(cf.objective.mid() - num.objective.mid()) <= 1e-6 * cf.objective.mid(), "objective"));
  }));
  out.push_back(lemma(suite, "f'(E) = 0 at the closed form to 1e-20", [](auto record) {
    const Interval d = corollary_objective_derivative(closed_form_solution(256).E);
    record(when(certainly_le(abs(d), Interval::from_decimal("1e-20", 256)), "derivative"));
  }));
  out.push_back(lemma(suite, "two-variable objective reduces to 8 E log E/(log E - 1 - log 2)^2", [](auto record) {
    const mpfr_prec_t prec = 128;
    for (long i = 6; i <= 200; i += 2) {
      const Interval E(i, prec);
      const Interval c2 = Interval(4L, prec) / (log(E) - Interval(1L, prec) - Interval::log2(prec));
      const Interval diff = corollary_objective_two_variable(E, c2) - corollary_objective(E);
      record(when(certainly_le(abs(diff), Interval::from_decimal("1e-25", prec)), "E=" + std::to_string(i)));
    }
  }));
  return out;
}

}  // namespace

const std::vector<SmallEpsCase>& small_eps_cases() {
  // alpha is a rational (or Gaussian rational) approximation of e^beta.
  static const std::vector<SmallEpsCase> cases = {
      {"2718281828/1000000000", "1", 2, 3, 2, 1},
      {"7389056099/1000000000", "2", 2, 2, 3, 1},
      {"1648721271/1000000000", "1/2", 3, 2, 3, 2},
      {"540302306/1000000000+841470985/1000000000*i", "i", 2, 3, 2, 1},
      {"367879441/1000000000", "-1", 3, 3, 5, 4},
  };
  return cases;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"numtheory", "feldman",   "hermite_pade", "interp",
                                                 "zerolemma", "analytic",  "asymptotics"};
  return names;
}

std::vector<LemmaResult> run_suite(const std::string& name, const SuiteOptions& options) {
  using Runner = std::vector<LemmaResult> (*)(const SuiteOptions&);
  const std::pair<const char*, Runner> table[] = {
      {"numtheory", numtheory_suite}, {"feldman", feldman_suite},     {"hermite_pade", hermite_pade_suite},
      {"interp", interp_suite},       {"zerolemma", zerolemma_suite}, {"analytic", analytic_suite},
      {"asymptotics", asymptotics_suite}};
  std::vector<LemmaResult> out;
  for (const auto& [suite, runner] : table) {
    if (name != "all" && name != suite) continue;
    auto part = runner(options);
    out.insert(out.end(), part.begin(), part.end());
  }
  if (out.empty()) throw std::invalid_argument("unknown suite: " + name);
  return out;
}

}  // namespace tmeasure
