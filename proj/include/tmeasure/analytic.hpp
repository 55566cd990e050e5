#pragma once

// Analytic side of the interpolation determinant: derivatives of
// z^k e^{lz}, the weights w_{k,l}, the envelope N, the Schwarz lemma and the
// resulting upper bound for log |D|.

#include "tmeasure/algebraic.hpp"
#include "tmeasure/interp.hpp"
#include "tmeasure/real.hpp"

#include <stdexcept>

namespace tmeasure {

/// A bound whose hypotheses could not be certified.
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalyticParams {
  unsigned long K = 1;
  unsigned long L = 2;
  unsigned long mu = 0;
  Interval E;
  Algebraic alpha;
  Algebraic beta;
  mpfr_prec_t precision = kDefaultPrecision;
};

/// mu-th derivative of z^k e^{lz} at z:
/// e^{lz} sum_j C(mu,j) k!/(k-j)! z^{k-j} l^{mu-j}.
ComplexInterval phi_mu_at(unsigned long k, unsigned long l, unsigned long mu, const ComplexInterval& z);

/// |e^beta - alpha|. Precision is raised (up to 4x) until the enclosure
/// excludes 0 when `require_positive`; throws std::runtime_error otherwise.
Interval epsilon(const Algebraic& alpha, const Algebraic& beta, mpfr_prec_t prec, bool require_positive = false);

/// w_{k,l} = (alpha^l - e^{beta l}) / |e^beta - alpha| * sum_j C(mu,j) k! l^{mu-j}/(k-j)! beta^{k-j}.
ComplexInterval w_weight(unsigned long k, unsigned long l, unsigned long mu, const Algebraic& alpha, const Algebraic& beta,
                         mpfr_prec_t prec = kDefaultPrecision);
/// l (e^{|beta|} + eps)^l k! (l+1)^mu
Interval w_weight_bound(unsigned long k, unsigned long l, unsigned long mu, const Algebraic& beta, const Interval& eps);

/// max{E|beta|L, log(L-1) + (L-1) log(e^{|beta|} + eps)} + log((K-1)!) + (mu+1) log(L+1) + log 2
Interval big_n(const AnalyticParams& p);
/// Same envelope with eps replaced by a given enclosure.
Interval big_n(const AnalyticParams& p, const Interval& eps);

struct EnvelopeCheck {
  Interval N;
  Interval log_sum_w;          // log sum |w_{k,l}|
  Interval log_sum_phi_sampled; // log sum_{k,l} max over sampled |z| = E of |Phi^{(mu)}(z beta)|
  bool holds = false;          // both sums (the sampled one doubled) stay below e^N
};

EnvelopeCheck check_envelope(const AnalyticParams& p, unsigned samples = 64);

/// (R/r)^{-T} sup_R. Requires 0 < r <= R.
Interval schwarz_bound(unsigned long T, const Interval& r, const Interval& R, const Interval& sup_R);

/// -(KL - mu - 1) log E + N + log |M0| + log 2. Throws NotApplicable unless
/// eps < E^{-KL} is certain.
Interval det_upper_bound(const AnalyticParams& p, const InterpolationSystem& sys);

/// D(z) = sum_c cofactor_c (Phi^{(mu)}_{k,l}(beta z) + eps w_{k,l}); the eps
/// part is dropped when include_eps is false.
ComplexInterval numeric_det(const AnalyticParams& p, const InterpolationSystem& sys, const ComplexInterval& z,
                            bool include_eps = true);

}  // namespace tmeasure
