// Acceptance checks. One line per criterion: "criterion N PASS|FAIL name: detail".
// Usage: acceptance --cli PATH [--criterion N]

#include "tmeasure/algebraic.hpp"
#include "tmeasure/analytic.hpp"
#include "tmeasure/bound_engine.hpp"
#include "tmeasure/feldman.hpp"
#include "tmeasure/hermite_pade.hpp"
#include "tmeasure/interp.hpp"
#include "tmeasure/lemma_suites.hpp"
#include "tmeasure/numtheory.hpp"
#include "tmeasure/zerolemma.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace tmeasure;

namespace {

// Tolerances and limits.
constexpr double kCorollaryE = 25.0059;
constexpr double kCorollaryETol = 1e-3;
constexpr double kCorollaryConstant = 276.55;
constexpr double kCorollaryConstantTol = 1e-2;
constexpr double kNumericRelTol = 1e-6;
constexpr double kCorollarySeconds = 1.0;
constexpr double kHermitePadeSeconds = 30.0;
constexpr double kBoundSeconds = 60.0;
constexpr unsigned long kHermitePadeMaxSigma = 14;
constexpr unsigned long kVandermondeMaxSigma = 12;
constexpr unsigned long kRandomSystems = 50;
constexpr unsigned long kZeroTrials = 1000;
constexpr mpfr_prec_t kDetPrecision = 256;
constexpr unsigned long kDetRelativeBits = 100;
constexpr std::uint64_t kSeed = 7134;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Command {
  int status = -1;
  std::string output;
};

Command run(const std::string& command) {
  Command c;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return c;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) c.output.append(buffer, n);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

BigRational ratio(long num, long den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<BigRational> integer_nodes(std::size_t count) {
  std::vector<BigRational> nodes;
  for (std::size_t i = 0; i < count; ++i) nodes.emplace_back(static_cast<long>(i));
  return nodes;
}

void for_each_composition(unsigned long sigma, std::vector<unsigned long>& prefix, std::size_t parts,
                          const std::function<void(const std::vector<unsigned long>&)>& visit) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(sigma);
    visit(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned long first = 1; first + (parts - prefix.size() - 1) <= sigma; ++first) {
    prefix.push_back(first);
    for_each_composition(sigma - first, prefix, parts, visit);
    prefix.pop_back();
  }
}

// Distinct rational nodes and positive parameters with total at most max_sigma.
std::pair<std::vector<BigRational>, std::vector<unsigned long>> random_system(std::mt19937_64& rng,
                                                                              unsigned long max_sigma) {
  auto uniform = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const std::size_t count = static_cast<std::size_t>(uniform(2, 4));
  std::vector<BigRational> nodes;
  while (nodes.size() < count) {
    const BigRational x = ratio(uniform(-9, 9), uniform(1, 5));
    if (std::find(nodes.begin(), nodes.end(), x) == nodes.end()) nodes.push_back(x);
  }
  std::vector<unsigned long> params(count, 1);
  unsigned long sigma = count;
  const unsigned long target = static_cast<unsigned long>(uniform(static_cast<long>(count), static_cast<long>(max_sigma)));
  while (sigma < target) {
    ++params[static_cast<std::size_t>(uniform(0, static_cast<long>(count) - 1))];
    ++sigma;
  }
  return {nodes, params};
}

Outcome corollary(const std::string& cli) {
  const auto start = Clock::now();
  const Command c = run(quote(cli) + " corollary4 --numeric --json");
  const double elapsed = seconds_since(start);
  if (c.status != 0) return {false, "corollary4 exited with " + std::to_string(c.status)};
  const auto j = nlohmann::json::parse(c.output);
  const auto mid = [](const nlohmann::json& e) {
    return (std::stod(e.at("lower").get<std::string>()) + std::stod(e.at("upper").get<std::string>())) / 2;
  };
  const double E = mid(j.at("closed_form").at("E"));
  const double C = mid(j.at("closed_form").at("objective"));
  const double nE = mid(j.at("numeric").at("E"));
  const double nC = mid(j.at("numeric").at("objective"));
  const double dE = std::abs(nE - E) / E, dC = std::abs(nC - C) / C;
  std::ostringstream s;
  s << "E=" << E << " constant=" << C << " rel diff " << dE << "/" << dC << " in " << elapsed << " s";
  return {std::abs(E - kCorollaryE) <= kCorollaryETol && std::abs(C - kCorollaryConstant) <= kCorollaryConstantTol &&
              dE <= kNumericRelTol && dC <= kNumericRelTol && elapsed < kCorollarySeconds,
          s.str()};
}

Outcome hermite_pade_order() {
  const auto start = Clock::now();
  unsigned long cases = 0, failures = 0;
  for (unsigned long sigma = 2; sigma <= kHermitePadeMaxSigma; ++sigma) {
    for (std::size_t parts = 2; parts <= sigma; ++parts) {
      std::vector<unsigned long> prefix;
      for_each_composition(sigma, prefix, parts, [&](const std::vector<unsigned long>& params) {
        ++cases;
        const HPSystem sys = hp_coefficients(integer_nodes(params.size()), params);
        if (remainder_order(sys, sigma) < sigma - 1) ++failures;
      });
    }
  }
  std::mt19937_64 rng(kSeed);
  for (unsigned long t = 0; t < kRandomSystems; ++t) {
    const auto [nodes, params] = random_system(rng, kHermitePadeMaxSigma);
    const HPSystem sys = hp_coefficients(nodes, params);
    ++cases;
    if (remainder_order(sys, sys.sigma()) < sys.sigma() - 1) ++failures;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream s;
  s << failures << " failures in " << cases << " systems, " << elapsed << " s";
  return {failures == 0 && elapsed < kHermitePadeSeconds, s.str()};
}

Outcome vandermonde() {
  std::mt19937_64 rng(kSeed + 1);
  unsigned long failures = 0;
  for (unsigned long t = 0; t < kRandomSystems; ++t) {
    const auto [nodes, params] = random_system(rng, kVandermondeMaxSigma);
    BigRational expected = 1;
    for (std::size_t l = 0; l < nodes.size(); ++l) {
      for (std::size_t k = 0; k < l; ++k) {
        for (unsigned long e = 0; e < params[l] * params[k]; ++e) expected *= nodes[l] - nodes[k];
      }
    }
    if (generalized_vandermonde(nodes, params) != expected) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " mismatches in " + std::to_string(kRandomSystems) + " instances"};
}

Outcome duality() {
  unsigned long failures = 0, cases = 0;
  for (unsigned long K = 1; K <= 4; ++K) {
    for (unsigned long L = 2; L <= 5; ++L) {
      ++cases;
      const HeightReport h = m0_height(InterpolationSystem::build(K, L));
      const HeightReport dual = m0_height(InterpolationSystem::from_hermite_pade(K, L));
      const bool same = h.sum_squares * h.dual_gcd * h.dual_gcd == h.dual_sum_squares * h.gcd * h.gcd &&
                        h.sum_squares * dual.gcd * dual.gcd == dual.sum_squares * h.gcd * h.gcd;
      if (!same || !h.duality_holds) ++failures;
    }
  }
  return {failures == 0, std::to_string(failures) + " disagreements on " + std::to_string(cases) + " cells"};
}

Outcome prop310() {
  std::string failed;
  unsigned long failures = 0;
  for (unsigned long K = 1; K <= 5; ++K) {
    for (unsigned long L = 2; L <= 5; ++L) {
      const Prop310Check c = check_prop310(K, L);
      if (!c.passed) {
        ++failures;
        std::ostringstream s;
        s << " (K=" << K << ",L=" << L << ": H=" << c.H.mid() << " > " << c.bound.mid() << ")";
        failed += s.str();
      }
    }
  }
  return {failures == 0, std::to_string(failures) + " of 20 cells exceed the bound" + failed};
}

Outcome feldman_lemmas() {
  unsigned long failures = 0;
  for (unsigned long nu = 0; nu <= 40; ++nu) {
    // sum_j j! |lambda_{j,nu}| <= 2^nu, lambda from the expansion of z(z-1)...(z-nu+1)/nu!
    std::vector<BigInt> poly{1};
    for (unsigned long i = 0; i < nu; ++i) {
      std::vector<BigInt> next(poly.size() + 1, 0);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] += poly[j];
        next[j] -= poly[j] * static_cast<long>(i);
      }
      poly = next;
    }
    BigRational sum = 0;
    for (std::size_t j = 0; j < poly.size(); ++j) sum += BigRational(factorial(j) * abs(poly[j]));
    sum /= BigRational(factorial(nu));
    if (weighted_coeff_sum(nu) != sum) ++failures;
    if (sum > BigRational(BigInt(1) << nu)) ++failures;
  }
  for (unsigned long nu = 0; nu <= 10; ++nu) {
    const BigInt d = lcm_upto(nu);
    for (unsigned long k = 0; k <= 10; ++k) {
      BigInt dk = 1;
      for (unsigned long i = 0; i < k; ++i) dk *= d;
      for (unsigned long u = 0; u <= k; ++u) {
        for (long l = -12; l <= 12; ++l) {
          const BigRational v = BigRational(dk) * derivative_at_integer(nu, u, l);
          if (v.get_den() != 1) ++failures;
        }
      }
    }
  }
  return {failures == 0, std::to_string(failures) + " failures"};
}

Outcome zero_lemma() {
  const ZeroTrialStats stats = run_zero_lemma_trials(kZeroTrials, kSeed);
  unsigned long optimality_failures = 0;
  for (unsigned long D1 = 1; D1 <= 6; ++D1) {
    for (unsigned long M = 1; M <= 6; ++M) {
      ZeroConfig c;
      c.P = pow(BiPoly::monomial(0, 1) - BiPoly::constant(1), D1);
      c.D1 = D1;
      for (unsigned long k = 0; k < M; ++k) c.points.emplace_back(BigRational(static_cast<long>(k)), BigRational(1));
      c.multiplicities.assign(M, D1);
      const ZeroVerdict v = check_zero_lemma(c);
      if (!(v.conditions_hold && v.lemma_holds && v.order_sum == v.threshold)) ++optimality_failures;
    }
  }
  std::ostringstream s;
  s << stats.violations << " violations in " << stats.trials << " trials (" << stats.with_solution
    << " with a nonzero P), " << optimality_failures << " optimality failures";
  return {stats.trials == kZeroTrials && stats.violations == 0 && optimality_failures == 0, s.str()};
}

Outcome mu_existence() {
  const char* pairs[][2] = {{"3", "1"},        {"2", "1/2"},         {"-5/3", "2"},      {"7", "-3"},
                            {"1/2", "5/7"},    {"11", "1/3"},        {"-2", "-1"},       {"4/9", "3"},
                            {"13/5", "-2/3"},  {"100", "1/10"},      {"1+i", "i"},       {"2-3*i", "1+i"},
                            {"i", "2*i"},      {"5", "1-2*i"},       {"3/2+i/2", "1"},   {"-1+2*i", "-i"},
                            {"7*i", "3+4*i"},  {"1/3-i", "2-i"},     {"-4-i", "1/2*i"},  {"6+5*i", "-1+i"}};
  unsigned long cases = 0, failures = 0;
  std::string first;
  for (const auto& p : pairs) {
    const Algebraic alpha = parse_algebraic(p[0]), beta = parse_algebraic(p[1]);
    for (unsigned long K = 1; K <= 4; ++K) {
      for (unsigned long L = 2; L <= 5; ++L) {
        ++cases;
        const MuReport m = find_mu(InterpolationSystem::build(K, L), alpha, beta);
        const bool nonzero = !m.F.is_zero();
        if (!nonzero || !m.within_L_minus_2(L)) {
          ++failures;
          std::ostringstream s;
          s << " (" << p[0] << ", " << p[1] << ", K=" << K << ", L=" << L << ": mu=" << m.mu << ")";
          first += s.str();
        }
      }
    }
  }
  return {failures == 0, std::to_string(failures) + " of " + std::to_string(cases) + " cases exceed L-2" + first};
}

Outcome end_to_end(const std::string& cli) {
  const auto start = Clock::now();
  const std::filesystem::path cert_path =
      std::filesystem::temp_directory_path() / ("tmeasure_acceptance_" + std::to_string(::getpid()) + ".json");
  const Command bound = run(quote(cli) + " bound --alpha 3 --beta 1 --max-K 40 --max-L 12 --out " + quote(cert_path.string()));
  const Command check = run(quote(cli) + " verify --cert " + quote(cert_path.string()));
  const double elapsed = seconds_since(start);
  std::ifstream in(cert_path);
  std::stringstream text;
  text << in.rdbuf();
  std::filesystem::remove(cert_path);
  if (bound.status != 0 || check.status != 0) {
    return {false, "bound exit " + std::to_string(bound.status) + ", verify exit " + std::to_string(check.status)};
  }
  const BoundCertificate cert = certificate_from_json(text.str());
  // |e - 3| >= E^{-KL}, computed here at four times the certificate precision
  const mpfr_prec_t high = 4 * cert.precision_bits;
  const Interval lhs = Interval(static_cast<long>(cert.K * cert.L), high) * log(Interval(cert.E, high));
  const Interval eps = Interval(3L, high) - Interval::e(high);
  const bool high_ok = certainly_le(exp(-lhs), eps);
  bool doubled_ok = true;
  try {
    CertifyOptions o;
    o.precision = 2 * cert.precision_bits;
    doubled_ok = verify(certify(Algebraic(3), Algebraic(1), cert.K, cert.L, cert.E, o)).ok;
  } catch (const std::exception&) {
    doubled_ok = false;
  }
  std::ostringstream s;
  s << "K=" << cert.K << " L=" << cert.L << " E=" << cert.E.get_str() << " log bound " << cert.log_eps_lower
    << "; high precision " << (high_ok ? "ok" : "FAILED") << ", doubled precision " << (doubled_ok ? "ok" : "FAILED")
    << ", " << elapsed << " s";
  return {high_ok && doubled_ok && elapsed < kBoundSeconds, s.str()};
}

Outcome determinant_bound() {
  unsigned long failures = 0, cases = 0;
  const mpfr_prec_t prec = kDetPrecision;
  const Interval tolerance = Interval(1L, prec) / pow(Interval(2L, prec), kDetRelativeBits);
  for (const auto& c : small_eps_cases()) {
    ++cases;
    const Algebraic alpha = parse_algebraic(c.alpha), beta = parse_algebraic(c.beta);
    const auto sys = InterpolationSystem::build(c.K, c.L);
    const MuReport m = find_mu(sys, alpha, beta);
    AnalyticParams p{c.K, c.L, m.mu, Interval(ratio(c.E_num, c.E_den), prec), alpha, beta, prec};
    const Interval log_e = log(p.E);
    const bool hypothesis =
        certainly_lt(epsilon(alpha, beta, prec), exp(-(Interval(static_cast<long>(c.K * c.L), prec) * log_e)));
    const ComplexInterval value = numeric_det(p, sys, ComplexInterval(Interval(1L, prec), Interval(0L, prec)));
    const ComplexInterval exact = embed(m.F, prec);
    const bool below = hypothesis && certainly_le(log(value.abs()), det_upper_bound(p, sys));
    const bool matches = certainly_le((value - exact).abs() / exact.abs(), tolerance);
    if (!below || !matches) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " failures in " + std::to_string(cases) + " parameter sets"};
}

Outcome contradiction() {
  SearchOptions o;
  o.max_K = 31;
  o.max_L = 5;
  const auto best = search_best(Algebraic(3), Algebraic(1), o);
  if (!best) return {false, "no feasible cell with K <= 31, L <= 5"};
  const BoundCertificate& cert = best->certificate;
  const DiagnosticReport r = diagnose(Algebraic(3), Algebraic(1), cert.K, cert.L, cert.E);
  std::ostringstream s;
  s << "K=" << cert.K << " L=" << cert.L << " mu=" << r.mu << ": upper " << r.upper.mid() << " < lower "
    << r.lower.mid() << (r.contradiction ? "" : " FAILS") << "; lower <= log G = " << r.log_G.mid()
    << (r.lower_le_exact ? "" : " FAILS");
  return {r.contradiction && r.lower_le_exact && verify(cert).ok, s.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::string cli;
  int only = 0;
  app.add_option("--cli", cli, "path to the tmeasure executable")->required();
  app.add_option("--criterion", only, "run a single criterion (1-11)")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"corollary constants", [&] { return corollary(cli); }},
      {"Hermite-Pade order", hermite_pade_order},
      {"generalized Vandermonde", vandermonde},
      {"height duality", duality},
      {"closed-form height bound", prop310},
      {"Feldman lemmas", feldman_lemmas},
      {"zero lemma", zero_lemma},
      {"mu <= L-2", mu_existence},
      {"end-to-end bound", [&] { return end_to_end(cli); }},
      {"determinant bound", determinant_bound},
      {"diagnostic contradiction", contradiction},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
