#include "tmeasure/cli.hpp"

#include "tmeasure/algebraic.hpp"
#include "tmeasure/asymptotics.hpp"
#include "tmeasure/bound_engine.hpp"
#include "tmeasure/hermite_pade.hpp"
#include "tmeasure/lemma_suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace tmeasure::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

mpfr_prec_t default_precision() {
  if (const char* env = std::getenv("TMEASURE_PRECISION")) {
    try {
      return std::stol(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("TMEASURE_PRECISION is not an integer: ") + env);
    }
  }
  return kDefaultPrecision;
}

void check_precision(long bits) {
  if (bits < 64) throw UsageError("precision must be at least 64 bits");
}

Algebraic parse_arg(const std::string& name, const std::string& text) {
  try {
    return parse_algebraic(text);
  } catch (const ParseError& e) {
    std::ostringstream msg;
    msg << "cannot parse --" << name << " '" << text << "': " << e.what() << "\n  " << text << "\n  "
        << std::string(e.position(), ' ') << "^";
    throw UsageError(msg.str());
  }
}

BigRational parse_rational(const std::string& name, const std::string& text) {
  BigRational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw UsageError("--" + name + " must be a rational like 95/4");
  q.canonicalize();
  return q;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

// "[lower (rounded down), upper (rounded up)]"
std::string enclosure(const Interval& x, int digits = 20) {
  return "[" + x.lower().to_decimal(Round::Down, digits) + ", " + x.upper().to_decimal(Round::Up, digits) + "]";
}

nlohmann::ordered_json enclosure_json(const Interval& x, int digits = 30) {
  return {{"lower", x.lower().to_decimal(Round::Down, digits)},
          {"upper", x.upper().to_decimal(Round::Up, digits)},
          {"rounding", "outward"}};
}

void print_breakdown(const Rejection& r) {
  std::cerr << "rejected: " << r.what() << "\n";
  std::cerr << "  lhs  KL log E            " << enclosure(r.lhs()) << "\n";
  for (const auto& [name, value] : r.breakdown().terms) std::cerr << "  rhs  " << std::left << std::setw(48) << name << enclosure(value) << "\n";
  std::cerr << "  rhs  total                " << enclosure(r.breakdown().total) << "\n";
}

struct BoundArgs {
  std::string alpha, beta, out, E, logA, logB;
  unsigned long max_K = 40, max_L = 12, K = 0, L = 0;
  long precision = 0;
  bool serial = false;
};

int cmd_bound(const BoundArgs& a) {
  check_precision(a.precision);
  const Algebraic alpha = parse_arg("alpha", a.alpha);
  const Algebraic beta = parse_arg("beta", a.beta);
  if (a.max_K < 1 || a.max_L < 2) throw UsageError("caps need --max-K >= 1 and --max-L >= 2");
  BoundCertificate cert;
  const bool single = a.K != 0 || a.L != 0 || !a.E.empty();
  if (single) {
    if (a.K == 0 || a.L == 0 || a.E.empty()) throw UsageError("--K, --L and --E must be given together");
    CertifyOptions opts;
    opts.precision = a.precision;
    if (!a.logA.empty()) opts.logA = Interval::from_decimal(a.logA, a.precision);
    if (!a.logB.empty()) opts.logB = Interval::from_decimal(a.logB, a.precision);
    try {
      cert = certify(alpha, beta, a.K, a.L, parse_rational("E", a.E), opts);
    } catch (const Rejection& r) {
      print_breakdown(r);
      return kFailed;
    }
  } else {
    if (!a.logA.empty() || !a.logB.empty()) throw UsageError("--logA/--logB apply to a single cell (--K --L --E)");
    SearchOptions opts;
    opts.max_K = a.max_K;
    opts.max_L = a.max_L;
    opts.precision = a.precision;
    opts.parallel = !a.serial;
    const auto found = search_best(alpha, beta, opts);
    if (!found) {
      std::cerr << "rejected: no (K, L, E) with K <= " << a.max_K << ", L <= " << a.max_L << " satisfies the inequality\n";
      return kFailed;
    }
    cert = found->certificate;
    std::cerr << "feasible cells: " << found->cells_feasible << " of " << found->cells_total << "\n";
  }
  const std::string json = to_json(cert);
  if (a.out.empty()) {
    std::cout << json;
  } else {
    std::ofstream file(a.out);
    if (!file) throw UsageError("cannot write " + a.out);
    file << json;
    std::cout << "wrote " << a.out << "\n";
  }
  std::cerr << "|e^beta - alpha| >= E^{-KL}, K=" << cert.K << " L=" << cert.L << " E=" << cert.E.get_str()
            << "; log of the bound " << cert.log_eps_lower << " (rounded down)\n";
  return kOk;
}

int cmd_verify(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read " + path);
  std::stringstream text;
  text << file.rdbuf();
  BoundCertificate cert;
  try {
    cert = certificate_from_json(text.str());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const VerifyResult r = verify(cert);
  if (r.ok) {
    std::cout << "ok: K=" << cert.K << " L=" << cert.L << " E=" << cert.E.get_str() << ", lhs " << cert.lhs
              << " (down) >= rhs " << cert.rhs << " (up)\n";
    return kOk;
  }
  std::cout << "FAILED\n";
  for (const auto& p : r.problems) std::cout << "  " << p << "\n";
  return kFailed;
}

struct DiagnoseArgs {
  std::string alpha, beta, E;
  unsigned long K = 0, L = 0;
  long precision = 0;
  bool json = false;
};

int cmd_diagnose(const DiagnoseArgs& a) {
  check_precision(a.precision);
  const Algebraic alpha = parse_arg("alpha", a.alpha);
  const Algebraic beta = parse_arg("beta", a.beta);
  const BigRational E = parse_rational("E", a.E);
  DiagnosticReport d;
  try {
    d = diagnose(alpha, beta, a.K, a.L, E, a.precision);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.json) {
    nlohmann::ordered_json j;
    j["mu"] = d.mu;
    j["H"] = enclosure_json(d.H);
    j["log_G"] = enclosure_json(d.log_G);
    j["lower"] = enclosure_json(d.lower);
    j["upper"] = enclosure_json(d.upper);
    j["gap"] = enclosure_json(d.gap);
    j["contradiction"] = d.contradiction;
    j["lower_le_exact"] = d.lower_le_exact;
    j["eps_hypothesis_holds"] = d.eps_hypothesis_holds;
    j["exact_le_upper"] = d.exact_le_upper;
    j["length_G1"] = d.length_G1.get_str();
    j["length_G2"] = d.length_G2.get_str();
    j["length_G1_bound"] = enclosure_json(d.length_G1_bound);
    j["length_G2_bound"] = enclosure_json(d.length_G2_bound);
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "mu                  " << d.mu << "\n"
            << "H(M0)               " << enclosure(d.H) << "\n"
            << "log G (exact)       " << enclosure(d.log_G) << "\n"
            << "lower bound log G   " << enclosure(d.lower) << "\n"
            << "upper bound log G   " << enclosure(d.upper) << "  (eps replaced by E^{-KL})\n"
            << "lower - upper       " << enclosure(d.gap) << "\n"
            << "contradiction       " << (d.contradiction ? "yes" : "no") << "\n"
            << "lower <= exact      " << (d.lower_le_exact ? "yes" : "no") << "\n"
            << "eps < E^{-KL}       " << (d.eps_hypothesis_holds ? "yes" : "no") << "\n";
  if (d.eps_hypothesis_holds) std::cout << "exact <= upper      " << (d.exact_le_upper ? "yes" : "no") << "\n";
  std::cout << "L(G1)               " << d.length_G1.get_str() << " <= " << enclosure(d.length_G1_bound, 12) << "\n"
            << "L(G2)               " << d.length_G2.get_str() << " <= " << enclosure(d.length_G2_bound, 12) << "\n";
  return kOk;
}

int cmd_lemmas(const std::string& suite, unsigned long trials) {
  SuiteOptions opts;
  opts.trials = trials;
  std::vector<LemmaResult> results;
  try {
    results = run_suite(suite, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    std::cout << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(13) << r.suite << r.name << ": "
              << (r.cases - r.failures) << "/" << r.cases << std::fixed << std::setprecision(3) << " (" << r.seconds
              << " s)";
    std::cout.unsetf(std::ios::fixed);
    if (!r.note.empty()) std::cout << "  first failure: " << r.note;
    std::cout << "\n";
  }
  return all ? kOk : kFailed;
}

int cmd_corollary4(bool numeric, long precision, double beta_abs, bool json) {
  check_precision(precision);
  const AsymptoticSolution cf = closed_form_solution(precision);
  nlohmann::ordered_json j;
  const auto add = [&](const std::string& section, const AsymptoticSolution& s) {
    j[section] = {{"E", enclosure_json(s.E)},
                  {"c1", enclosure_json(s.c1)},
                  {"c2", enclosure_json(s.c2)},
                  {"gamma", enclosure_json(s.gamma)},
                  {"objective", enclosure_json(s.objective)}};
    if (json) return;
    std::cout << section << ":\n"
              << "  E          " << enclosure(s.E) << "\n"
              << "  c1         " << enclosure(s.c1) << "\n"
              << "  c2         " << enclosure(s.c2) << "\n"
              << "  gamma      " << enclosure(s.gamma) << "\n"
              << "  constant   " << enclosure(s.objective) << "   (c1 c2 log E)\n";
  };
  add("closed_form", cf);
  if (numeric) {
    const AsymptoticSolution num = numeric_optimize(1e-12, precision);
    add("numeric", num);
    const double dE = std::abs(num.E.mid() - cf.E.mid()) / cf.E.mid();
    const double dC = std::abs(num.objective.mid() - cf.objective.mid()) / cf.objective.mid();
    j["relative_difference"] = {{"E", dE}, {"objective", dC}};
    if (!json) std::cout << "relative difference: E " << dE << ", constant " << dC << "\n";
  }
  if (beta_abs > 0) {
    const FiniteSizePoint p = finite_size_exponent(beta_abs);
    if (p.feasible) {
      j["finite_size"] = {{"beta_abs", beta_abs}, {"K", p.K}, {"L", p.L}, {"E", p.E},
                          {"exponent", enclosure_json(p.exponent)}, {"certified", p.certified}};
      if (!json) {
        std::cout << "finite size |beta| = " << beta_abs << ": K=" << p.K << " L=" << p.L << " E=" << p.E
                  << " exponent " << enclosure(p.exponent, 10) << (p.certified ? " (re-checked)" : " (not re-checked)")
                  << "\n";
      }
    } else if (!json) {
      std::cout << "finite size |beta| = " << beta_abs << ": no admissible cell\n";
    }
  }
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "earlier constants for alpha, beta in Z:";
    for (const auto& h : kHistoricalConstants) std::cout << " " << h.author << " " << h.value << ";";
    std::cout << "\n";
  }
  return kOk;
}

int cmd_hp_table(const std::string& nodes_text, const std::string& params_text) {
  std::vector<BigRational> nodes;
  std::vector<unsigned long> params;
  for (const auto& t : split(nodes_text, ',')) nodes.push_back(parse_rational("nodes", t));
  for (const auto& t : split(params_text, ',')) {
    try {
      const long v = std::stol(t);
      if (v < 0) throw std::invalid_argument("negative");
      params.push_back(static_cast<unsigned long>(v));
    } catch (const std::exception&) {
      throw UsageError("--params must be non-negative integers");
    }
  }
  HPSystem sys;
  try {
    sys = hp_coefficients(nodes, params);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (std::size_t l = 0; l < sys.nodes.size(); ++l) {
    std::cout << "x_" << l << " = " << sys.nodes[l].get_str() << ":";
    for (const auto& c : sys.coeffs[l]) std::cout << " " << c.get_str();
    std::cout << "\n";
  }
  std::cout << "sigma = " << sys.sigma() << ", ord R = ";
  const unsigned long order = remainder_order(sys, sys.sigma());
  if (order > sys.sigma()) {
    std::cout << "> " << sys.sigma() << "\n";
  } else {
    std::cout << order << "\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Certified transcendence-measure bounds for |e^beta - alpha|"};
  app.set_version_flag("--version", std::string(TMEASURE_VERSION));
  app.require_subcommand(1);

  long precision = 0;
  BoundArgs bound;
  auto* b = app.add_subcommand("bound", "search (K, L, E) and emit a certificate");
  b->add_option("--alpha", bound.alpha, "algebraic number, e.g. 3 or 1/2+2*i")->required();
  b->add_option("--beta", bound.beta, "nonzero algebraic number")->required();
  b->add_option("--max-K", bound.max_K, "search cap for K")->capture_default_str();
  b->add_option("--max-L", bound.max_L, "search cap for L")->capture_default_str();
  b->add_option("--K", bound.K, "certify this K only (with --L, --E)");
  b->add_option("--L", bound.L, "certify this L only");
  b->add_option("--E", bound.E, "certify this rational E only");
  b->add_option("--logA", bound.logA, "log A override (single cell)");
  b->add_option("--logB", bound.logB, "log B override (single cell)");
  b->add_option("--precision", precision, "working precision in bits");
  b->add_option("--out", bound.out, "write the certificate here");
  b->add_flag("--serial", bound.serial, "evaluate cells on one thread");

  std::string cert_path;
  auto* v = app.add_subcommand("verify", "recompute a certificate from scratch");
  v->add_option("--cert", cert_path, "certificate JSON")->required();

  DiagnoseArgs diag;
  auto* d = app.add_subcommand("diagnose", "compare the Liouville lower and analytic upper bounds for log G");
  d->add_option("--alpha", diag.alpha)->required();
  d->add_option("--beta", diag.beta)->required();
  d->add_option("--K", diag.K)->required();
  d->add_option("--L", diag.L)->required();
  d->add_option("--E", diag.E, "rational")->required();
  d->add_option("--precision", precision);
  d->add_flag("--json", diag.json);

  std::string suite = "all";
  unsigned long trials = 1000;
  auto* l = app.add_subcommand("lemmas", "run lemma suites");
  l->add_option("--suite", suite, "numtheory, feldman, hermite_pade, interp, zerolemma, analytic, asymptotics or all")
      ->capture_default_str();
  l->add_option("--trials", trials, "randomized zero-lemma configurations")->capture_default_str();

  bool numeric = false, json = false;
  double beta_abs = 0;
  auto* c = app.add_subcommand("corollary4", "asymptotic constant for imaginary quadratic integers");
  c->add_flag("--numeric", numeric, "cross-check with the numeric optimizer");
  c->add_option("--precision", precision);
  c->add_option("--finite", beta_abs, "also report the finite-size exponent at this |beta|");
  c->add_flag("--json", json);

  std::string nodes, params;
  auto* h = app.add_subcommand("hp-table", "dump Hermite-Pade coefficients p_{l,k}");
  h->add_option("--nodes", nodes, "comma-separated rationals")->required();
  h->add_option("--params", params, "comma-separated multiplicities")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (precision == 0) precision = default_precision();
    bound.precision = diag.precision = precision;
    if (b->parsed()) return cmd_bound(bound);
    if (v->parsed()) return cmd_verify(cert_path);
    if (d->parsed()) return cmd_diagnose(diag);
    if (l->parsed()) return cmd_lemmas(suite, trials);
    if (c->parsed()) return cmd_corollary4(numeric, precision, beta_abs, json);
    if (h->parsed()) return cmd_hp_table(nodes, params);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FieldMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace tmeasure::cli
