#include "tmeasure/bound_engine.hpp"

#include "tmeasure/analytic.hpp"
#include "tmeasure/interp.hpp"
#include "tmeasure/numtheory.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <future>

#ifndef TMEASURE_VERSION
#define TMEASURE_VERSION "0.0.0"
#endif

namespace tmeasure {

namespace {

constexpr int kDigits = 40;
constexpr long kSnapBits = 20;

Interval rational_log(const BigRational& q, mpfr_prec_t prec) { return log(Interval(q, prec)); }

std::string up(const Interval& x) { return x.upper().to_decimal(Round::Up, kDigits); }
std::string down(const Interval& x) { return x.lower().to_decimal(Round::Down, kDigits); }

void check_shape(const Algebraic& beta, unsigned long K, unsigned long L, const BigRational& E) {
  if (beta.is_zero()) throw std::invalid_argument("beta must be nonzero");
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  if (L < 2) throw std::invalid_argument("L must be at least 2");
  if (E <= 1) throw std::invalid_argument("E must exceed 1");
}

struct Evaluation {
  Interval logA;  // parsed back from the emitted string
  Interval logB;
  std::string logA_text;
  std::string logB_text;
  Interval lhs;
  RhsBreakdown rhs;
  unsigned D = 1;
};

Evaluation evaluate(const Algebraic& alpha, const Algebraic& beta, unsigned long K, unsigned long L, const BigRational& E,
                    const Interval& logA, const Interval& logB, mpfr_prec_t prec) {
  Evaluation ev;
  ev.D = field_degree_ratio(alpha, beta);
  ev.logA_text = up(logA);
  ev.logB_text = up(logB);
  ev.logA = Interval::from_decimal(ev.logA_text, prec);
  ev.logB = Interval::from_decimal(ev.logB_text, prec);
  BoundInputs in{alpha, beta, ev.D, ev.logA, ev.logB, K, L, E};
  ev.lhs = theorem1_lhs(K, L, E, prec);
  ev.rhs = theorem1_rhs(in, prec);
  return ev;
}

bool passes(const Evaluation& ev) { return ev.rhs.total.upper() <= ev.lhs.lower(); }

}  // namespace

Rejection::Rejection(const std::string& what, RhsBreakdown breakdown, Interval lhs)
    : std::runtime_error(what), breakdown_(std::move(breakdown)), lhs_(std::move(lhs)) {}

Interval theorem1_lhs(unsigned long K, unsigned long L, const BigRational& E, mpfr_prec_t prec) {
  return Interval(static_cast<long>(K * L), prec) * rational_log(E, prec);
}

RhsBreakdown theorem1_rhs(const BoundInputs& in, mpfr_prec_t prec) {
  const unsigned long K = in.K, L = in.L;
  if (L < 2 || K < 1) throw std::invalid_argument("theorem1_rhs: need K >= 1 and L >= 2");
  const Interval D(static_cast<long>(in.D), prec);
  const Interval log2 = Interval::log2(prec);
  const Interval e = Interval::e(prec);
  const Interval logE = rational_log(in.E, prec);
  const auto n = [prec](unsigned long v) { return Interval(static_cast<long>(v), prec); };

  RhsBreakdown out;
  out.terms.emplace_back("D K L log 2", D * n(K * L) * log2);
  out.terms.emplace_back("D (K-1) log(e sqrt(3L) d_{L-1})",
                         D * n(K - 1) * log(e * sqrt(n(3 * L)) * Interval(lcm_upto(L - 1), prec)));
  out.terms.emplace_back("D log D_{K-1,L-1}", D * log_of(dmn(K - 1, L - 1), prec));
  BigInt d_power;
  mpz_pow_ui(d_power.get_mpz_t(), lcm_upto(L - 2).get_mpz_t(), K - 1);
  const BigInt smaller = std::min(d_power, factorial(L - 2));
  out.terms.emplace_back("D log((4e)^{L-1} min(d_{L-2}^{K-1}, (L-2)!))",
                         D * (n(L - 1) * log(Interval(4L, prec) * e) + log_of(smaller, prec)));
  out.terms.emplace_back("log((K-1)!)", log_factorial(K - 1, prec));
  out.terms.emplace_back("(K-1) log(B/2)", n(K - 1) * (in.logB - log2));
  out.terms.emplace_back("(L-1) log(A/2)", n(L - 1) * (in.logA - log2));
  out.terms.emplace_back("L E |beta|", n(L) * Interval(in.E, prec) * abs(in.beta, prec));
  out.terms.emplace_back("L log E", n(L) * logE);
  out.total = Interval(0L, prec);
  for (const auto& [name, value] : out.terms) out.total += value;
  return out;
}

Interval tight_log_bound(const Algebraic& x, unsigned D, mpfr_prec_t prec) {
  if (x.is_zero()) return Interval(0L, prec);
  if (D == 1) {
    const auto poly = x.minimal_polynomial();
    return log_of(poly.back(), prec) / Interval(static_cast<long>(x.degree()), prec);
  }
  const Interval v = Interval(static_cast<long>(D), prec) * weil_height(x, prec) - log(max(Interval(1L, prec), abs(x, prec)));
  return max(Interval(0L, prec), v);
}

BoundCertificate certify(const Algebraic& alpha, const Algebraic& beta, unsigned long K, unsigned long L,
                         const BigRational& E, const CertifyOptions& options) {
  check_shape(beta, K, L, E);
  const mpfr_prec_t prec = options.precision;
  const unsigned D = field_degree_ratio(alpha, beta);
  const Interval tightA = tight_log_bound(alpha, D, prec);
  const Interval tightB = tight_log_bound(beta, D, prec);
  Interval logA = tightA, logB = tightB;
  if (options.logA) {
    if (!certainly_le(tightA, *options.logA)) throw std::invalid_argument("log A is below max(0, D h(alpha) - log max(1,|alpha|))");
    logA = *options.logA;
  }
  if (options.logB) {
    if (!certainly_le(tightB, *options.logB)) throw std::invalid_argument("log B is below max(0, D h(beta) - log max(1,|beta|))");
    logB = *options.logB;
  }
  const Evaluation ev = evaluate(alpha, beta, K, L, E, logA, logB, prec);
  if (!passes(ev)) throw Rejection("inequality fails: KL log E < right-hand side", ev.rhs, ev.lhs);

  // Sanity only: the theorem is unconditional.
  const mpfr_prec_t high = 4 * prec;
  const Interval bound = exp(-theorem1_lhs(K, L, E, high));
  if (!certainly_le(bound, epsilon(alpha, beta, high))) {
    throw std::logic_error("certificate contradicts |e^beta - alpha| evaluated at high precision");
  }

  BoundCertificate cert;
  cert.alpha = to_string(alpha);
  cert.beta = to_string(beta);
  cert.D = D;
  cert.logA = ev.logA_text;
  cert.logB = ev.logB_text;
  cert.K = K;
  cert.L = L;
  cert.E = E;
  cert.lhs = down(ev.lhs);
  cert.rhs = up(ev.rhs.total);
  cert.log_eps_lower = down(-ev.lhs);
  cert.precision_bits = prec;
  cert.version = TMEASURE_VERSION;
  return cert;
}

namespace {

struct CellResult {
  unsigned long K = 0, L = 0;
  double objective = 0;
  std::optional<BoundCertificate> cert;
};

CellResult search_cell(const Algebraic& alpha, const Algebraic& beta, unsigned long K, unsigned long L, double beta_abs,
                       const Interval& logA, const Interval& logB, mpfr_prec_t prec) {
  CellResult out{K, L, 0, std::nullopt};
  // margin(E) = (K-1) L log E - L |beta| E - c; concave with peak at (K-1)/|beta|.
  if (K < 2) return out;
  const unsigned D = field_degree_ratio(alpha, beta);
  BoundInputs in{alpha, beta, D, logA, logB, K, L, BigRational(2)};
  const RhsBreakdown at_two = theorem1_rhs(in, 64);
  const double E_dep = L * 2.0 * beta_abs + L * std::log(2.0);
  const double c = at_two.total.mid() - E_dep;
  const auto margin = [&](double E) {
    return static_cast<double>(K * L) * std::log(E) - c - L * beta_abs * E - L * std::log(E);
  };
  const double peak = (K - 1) / beta_abs;
  if (peak <= 1 || margin(peak) <= 0) return out;
  // Largest feasible E: margin(peak) > 0 > margin(hi) for hi far enough right.
  double lo = peak, hi = 2 * peak;
  while (margin(hi) > 0) hi *= 2;
  while ((hi - lo) > lo * std::ldexp(1.0, -30)) {
    const double m = 0.5 * (lo + hi);
    (margin(m) > 0 ? lo : hi) = m;
  }
  for (int attempt = 0; attempt < 8; ++attempt) {
    const double target = lo * (1.0 - attempt * std::ldexp(1.0, -kSnapBits));
    BigRational E(BigInt(static_cast<long>(std::floor(std::ldexp(target, kSnapBits)))), BigInt(1) << kSnapBits);
    E.canonicalize();
    if (E <= 1) return out;
    try {
      CertifyOptions opts;
      opts.precision = prec;
      opts.logA = logA;
      opts.logB = logB;
      out.cert = certify(alpha, beta, K, L, E, opts);
      out.objective = static_cast<double>(K * L) * std::log(E.get_d());
      return out;
    } catch (const Rejection&) {
    }
  }
  return out;
}

}  // namespace

std::optional<SearchResult> search_best(const Algebraic& alpha, const Algebraic& beta, const SearchOptions& options) {
  if (beta.is_zero()) throw std::invalid_argument("beta must be nonzero");
  if (options.max_K < 1 || options.max_L < 2) throw std::invalid_argument("search caps: need max-K >= 1 and max-L >= 2");
  const mpfr_prec_t prec = options.precision;
  const unsigned D = field_degree_ratio(alpha, beta);
  const Interval logA = tight_log_bound(alpha, D, prec);
  const Interval logB = tight_log_bound(beta, D, prec);
  const double beta_abs = abs(beta, 64).mid();

  const auto run_row = [&](unsigned long K) {
    std::vector<CellResult> row;
    for (unsigned long L = 2; L <= options.max_L; ++L) row.push_back(search_cell(alpha, beta, K, L, beta_abs, logA, logB, prec));
    return row;
  };
  std::vector<CellResult> cells;
  // MPFR caches constants per thread only when built thread-safe.
  if (options.parallel && mpfr_buildopt_tls_p()) {
    std::vector<std::future<std::vector<CellResult>>> rows;
    for (unsigned long K = 1; K <= options.max_K; ++K) rows.push_back(std::async(std::launch::async, run_row, K));
    for (auto& r : rows) {
      auto row = r.get();
      cells.insert(cells.end(), row.begin(), row.end());
    }
  } else {
    for (unsigned long K = 1; K <= options.max_K; ++K) {
      auto row = run_row(K);
      cells.insert(cells.end(), row.begin(), row.end());
    }
  }

  SearchResult result;
  result.cells_total = cells.size();
  const CellResult* best = nullptr;
  for (const auto& c : cells) {
    if (!c.cert) continue;
    ++result.cells_feasible;
    if (!best || c.objective > best->objective) best = &c;
  }
  if (!best) return std::nullopt;
  result.certificate = *best->cert;
  return result;
}

VerifyResult verify(const BoundCertificate& cert) {
  VerifyResult r;
  const auto fail = [&r](std::string msg) { r.problems.push_back(std::move(msg)); };
  try {
    const Algebraic alpha = parse_algebraic(cert.alpha);
    const Algebraic beta = parse_algebraic(cert.beta);
    check_shape(beta, cert.K, cert.L, cert.E);
    if (cert.precision_bits < 64) throw std::invalid_argument("precision below 64 bits");
    const mpfr_prec_t prec = cert.precision_bits;
    const unsigned D = field_degree_ratio(alpha, beta);
    if (D != cert.D) fail("D does not match the field degrees of alpha and beta");
    const Interval logA = Interval::from_decimal(cert.logA, prec);
    const Interval logB = Interval::from_decimal(cert.logB, prec);
    if (!certainly_le(tight_log_bound(alpha, D, prec), logA)) fail("logA is below the admissible minimum");
    if (!certainly_le(tight_log_bound(beta, D, prec), logB)) fail("logB is below the admissible minimum");
    const Evaluation ev = evaluate(alpha, beta, cert.K, cert.L, cert.E, logA, logB, prec);
    if (ev.logA_text != cert.logA || ev.logB_text != cert.logB) fail("logA/logB are not in canonical rounded form");
    if (down(ev.lhs) != cert.lhs) fail("lhs does not match the recomputed value");
    if (up(ev.rhs.total) != cert.rhs) fail("rhs does not match the recomputed value");
    if (down(-ev.lhs) != cert.log_eps_lower) fail("log_eps_lower does not match -KL log E");
    if (!passes(ev)) fail("KL log E is below the right-hand side");
  } catch (const std::exception& e) {
    fail(e.what());
  }
  r.ok = r.problems.empty();
  return r;
}

std::string to_json(const BoundCertificate& cert) {
  nlohmann::ordered_json j;
  j["alpha"] = cert.alpha;
  j["beta"] = cert.beta;
  j["D"] = cert.D;
  j["logA"] = cert.logA;
  j["logB"] = cert.logB;
  j["K"] = cert.K;
  j["L"] = cert.L;
  j["E"] = cert.E.get_str();
  j["lhs"] = cert.lhs;
  j["rhs"] = cert.rhs;
  j["log_eps_lower"] = cert.log_eps_lower;
  j["precision_bits"] = cert.precision_bits;
  j["version"] = cert.version;
  j["rounding"] = {{"logA", "up"}, {"logB", "up"}, {"lhs", "down"}, {"rhs", "up"}, {"log_eps_lower", "down"}};
  return j.dump(2) + "\n";
}

BoundCertificate certificate_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    BoundCertificate c;
    c.alpha = j.at("alpha").get<std::string>();
    c.beta = j.at("beta").get<std::string>();
    c.D = j.at("D").get<unsigned>();
    c.logA = j.at("logA").get<std::string>();
    c.logB = j.at("logB").get<std::string>();
    c.K = j.at("K").get<unsigned long>();
    c.L = j.at("L").get<unsigned long>();
    if (c.E.set_str(j.at("E").get<std::string>(), 10) != 0) throw std::invalid_argument("E is not a rational");
    c.E.canonicalize();
    c.lhs = j.at("lhs").get<std::string>();
    c.rhs = j.at("rhs").get<std::string>();
    c.log_eps_lower = j.at("log_eps_lower").get<std::string>();
    c.precision_bits = j.at("precision_bits").get<long>();
    c.version = j.at("version").get<std::string>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

Interval liouville_lower(const BigRational& length, const std::vector<Algebraic>& points,
                         const std::vector<unsigned long>& degrees, unsigned D, mpfr_prec_t prec) {
  if (points.size() != degrees.size()) throw std::invalid_argument("liouville_lower: one degree per point");
  if (sgn(length) <= 0) throw std::invalid_argument("liouville_lower: length must be positive");
  Interval out = -(Interval(static_cast<long>(D) - 1, prec) * rational_log(length, prec));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Interval N(static_cast<long>(degrees[i]), prec);
    out += N * log(max(Interval(1L, prec), abs(points[i], prec)));
    out -= Interval(static_cast<long>(D), prec) * N * weil_height(points[i], prec);
  }
  return out;
}

DiagnosticReport diagnose(const Algebraic& alpha, const Algebraic& beta, unsigned long K, unsigned long L,
                          const BigRational& E, mpfr_prec_t prec) {
  check_shape(beta, K, L, E);
  if (alpha.is_zero()) throw std::invalid_argument("diagnose: alpha must be nonzero");
  const unsigned D = field_degree_ratio(alpha, beta);
  const auto sys = InterpolationSystem::from_hermite_pade(K, L);
  const MuReport mu_report = find_mu(sys, alpha, beta);
  const GReport g = g_value(sys, mu_report, alpha, beta, prec);
  const HeightReport height = m0_height(sys, prec);
  const unsigned long mu = mu_report.mu;
  const auto n = [prec](long v) { return Interval(v, prec); };

  DiagnosticReport r;
  r.mu = mu;
  r.H = height.H;
  r.log_G = g.log_G;
  const BigInt mu_fact = factorial(mu);
  const BigInt smaller = std::min(g.d_mu_power, mu_fact);
  const Interval logA = tight_log_bound(alpha, D, prec);
  const Interval logB = tight_log_bound(beta, D, prec);
  const Interval e = Interval::e(prec);

  // Length bounds: X H 2^{mu+K-1} e^{L-1} sqrt(L) with X = d_mu^{K-1} or mu!.
  const Interval common = height.H * pow(n(2), mu + K - 1) * pow(e, L - 1) * sqrt(n(static_cast<long>(L)));
  r.length_G1 = g.G1.length();
  r.length_G2 = g.G2.length();
  r.length_G1_bound = Interval(g.d_mu_power, prec) * common;
  r.length_G2_bound = Interval(mu_fact, prec) * common;

  r.lower = -(n(static_cast<long>(D) - 1) * log(Interval(smaller, prec) * common));
  r.lower -= n(static_cast<long>(K) - 1) * logB;
  r.lower -= n(static_cast<long>(L) - 1) * logA;

  const Interval logE = rational_log(E, prec);
  const unsigned long S = K * L;
  const Interval eps_hyp = exp(-(n(static_cast<long>(S)) * logE));
  const Interval beta_abs = abs(beta, prec);
  r.upper = -(n(static_cast<long>(S - mu - 1)) * logE);
  r.upper += log(n(4));
  r.upper += log_factorial(K - 1, prec);
  r.upper += max(Interval(E, prec) * beta_abs * n(static_cast<long>(L)),
                 log(n(static_cast<long>(L))) + n(static_cast<long>(L)) * log(exp(beta_abs) + eps_hyp));
  r.upper += n(static_cast<long>(mu + 1)) * log(n(static_cast<long>(L + 1)));
  r.upper += log_of(smaller, prec);
  r.upper += log(height.H);
  r.upper -= log_factorial(mu, prec);

  r.gap = r.lower - r.upper;
  r.contradiction = certainly_lt(r.upper, r.lower);
  r.lower_le_exact = certainly_le(r.lower, r.log_G);
  r.eps_hypothesis_holds = certainly_lt(epsilon(alpha, beta, prec), eps_hyp);
  r.exact_le_upper = certainly_le(r.log_G, r.upper);
  return r;
}

}  // namespace tmeasure
