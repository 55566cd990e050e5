#pragma once

// Certified evaluation of the parameter inequality
//
//   KL log E >= DKL log 2 + D(K-1) log(e sqrt(3L) d_{L-1}) + D log D_{K-1,L-1}
//             + D log((4e)^{L-1} min(d_{L-2}^{K-1}, (L-2)!)) + log((K-1)!)
//             + (K-1) log(B/2) + (L-1) log(A/2) + L E |beta| + L log E
//
// which implies |e^beta - alpha| >= E^{-KL}. Left sides are rounded down,
// right sides up.

#include "tmeasure/algebraic.hpp"
#include "tmeasure/real.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tmeasure {

struct BoundInputs {
  Algebraic alpha;
  Algebraic beta;
  unsigned D = 1;
  Interval logA;
  Interval logB;
  unsigned long K = 1;
  unsigned long L = 2;
  BigRational E;
};

struct RhsBreakdown {
  std::vector<std::pair<std::string, Interval>> terms;
  Interval total;
};

RhsBreakdown theorem1_rhs(const BoundInputs& in, mpfr_prec_t prec = kDefaultPrecision);
/// KL log E
Interval theorem1_lhs(unsigned long K, unsigned long L, const BigRational& E, mpfr_prec_t prec = kDefaultPrecision);

/// max(0, D h(x) - log max(1, |x|)) as an enclosure. For the supported
/// numbers all conjugates share one modulus, so with D = 1 this is
/// log(leading coefficient)/degree, exactly 0 for algebraic integers.
Interval tight_log_bound(const Algebraic& x, unsigned D, mpfr_prec_t prec = kDefaultPrecision);

struct BoundCertificate {
  std::string alpha;
  std::string beta;
  unsigned D = 1;
  std::string logA;  // rounded up
  std::string logB;  // rounded up
  unsigned long K = 0;
  unsigned long L = 0;
  BigRational E;
  std::string lhs;            // rounded down
  std::string rhs;            // rounded up
  std::string log_eps_lower;  // -KL log E, rounded down
  mpfr_prec_t precision_bits = kDefaultPrecision;
  std::string version;
};

/// Raised when the inequality does not hold; carries the term breakdown.
class Rejection : public std::runtime_error {
 public:
  Rejection(const std::string& what, RhsBreakdown breakdown, Interval lhs);
  const RhsBreakdown& breakdown() const { return breakdown_; }
  const Interval& lhs() const { return lhs_; }

 private:
  RhsBreakdown breakdown_;
  Interval lhs_;
};

struct CertifyOptions {
  mpfr_prec_t precision = kDefaultPrecision;
  /// User-supplied log A / log B; must not be below the tight values.
  std::optional<Interval> logA;
  std::optional<Interval> logB;
};

/// Emits a certificate or throws Rejection (inequality fails) or
/// std::invalid_argument (beta = 0, L < 2, E <= 1, K = 0, override too small).
/// Also checks |e^beta - alpha| >= E^{-KL} at 4x precision and throws
/// std::logic_error if that ever fails.
BoundCertificate certify(const Algebraic& alpha, const Algebraic& beta, unsigned long K, unsigned long L,
                         const BigRational& E, const CertifyOptions& options = {});

struct SearchOptions {
  unsigned long max_K = 40;
  unsigned long max_L = 12;
  mpfr_prec_t precision = kDefaultPrecision;
  bool parallel = true;
};

struct SearchResult {
  BoundCertificate certificate;
  unsigned long cells_feasible = 0;
  unsigned long cells_total = 0;
};

/// Certificate with maximal KL log E over K <= max_K, 2 <= L <= max_L. Per
/// cell the feasible E form an interval; its right end is located by
/// bisection and snapped down to denominator 2^20. std::nullopt if nothing
/// is feasible.
std::optional<SearchResult> search_best(const Algebraic& alpha, const Algebraic& beta, const SearchOptions& options = {});

struct VerifyResult {
  bool ok = false;
  std::vector<std::string> problems;
};

/// Recomputes every field from alpha, beta, K, L, E and the stated precision.
VerifyResult verify(const BoundCertificate& cert);

std::string to_json(const BoundCertificate& cert);
/// Throws std::invalid_argument on malformed input.
BoundCertificate certificate_from_json(const std::string& text);

/// -(D-1) log L(f) + sum N_i log max(1, |alpha_i|) - D sum N_i h(alpha_i), rounded down.
Interval liouville_lower(const BigRational& length, const std::vector<Algebraic>& points,
                         const std::vector<unsigned long>& degrees, unsigned D, mpfr_prec_t prec = kDefaultPrecision);

struct DiagnosticReport {
  unsigned long mu = 0;
  Interval H;           // H(M0)
  Interval log_G;       // exact G_{beta,alpha}, enclosed
  Interval lower;       // Liouville-side lower bound for log G
  Interval upper;       // analytic upper bound for log G, eps replaced by E^{-KL}
  Interval gap;         // lower - upper
  bool contradiction = false;     // upper < lower, certainly
  bool lower_le_exact = false;
  bool eps_hypothesis_holds = false;  // eps < E^{-KL} actually true
  bool exact_le_upper = false;        // only meaningful when the hypothesis holds
  BigRational length_G1;
  BigRational length_G2;
  Interval length_G1_bound;
  Interval length_G2_bound;
};

/// alpha != 0, beta != 0, L >= 2, E > 1.
DiagnosticReport diagnose(const Algebraic& alpha, const Algebraic& beta, unsigned long K, unsigned long L,
                          const BigRational& E, mpfr_prec_t prec = kDefaultPrecision);

}  // namespace tmeasure
