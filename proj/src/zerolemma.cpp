#include "tmeasure/zerolemma.hpp"

#include "tmeasure/matrix.hpp"
#include "tmeasure/numtheory.hpp"

#include <random>
#include <stdexcept>

namespace tmeasure {

namespace {

// delta^sigma (X^i Y^j) at (zeta, eta), from precomputed powers.
BigRational delta_monomial_value(unsigned long sigma, unsigned long i, unsigned long j, const std::vector<BigRational>& zp,
                                 const std::vector<BigRational>& ep) {
  BigRational sum = 0;
  for (unsigned long t = 0; t <= std::min(sigma, i); ++t) {
    BigInt jp;
    mpz_ui_pow_ui(jp.get_mpz_t(), j, sigma - t);
    const BigInt c = binomial(sigma, t) * (factorial(i) / factorial(i - t)) * jp;
    if (c != 0) sum += BigRational(c) * zp[i - t];
  }
  return sum * ep[j];
}

std::vector<BigRational> powers(const BigRational& x, unsigned long n) {
  std::vector<BigRational> out{BigRational(1)};
  for (unsigned long i = 1; i <= n; ++i) out.push_back(out.back() * x);
  return out;
}

}  // namespace

unsigned long vanishing_order(const BiPoly& P, const BigRational& zeta, const BigRational& eta, unsigned long cap) {
  if (P.is_zero()) throw std::invalid_argument("vanishing_order: zero polynomial");
  if (sgn(eta) == 0) throw std::invalid_argument("vanishing_order: eta must be nonzero");
  const auto zp = powers(zeta, P.degree_x());
  const auto ep = powers(eta, P.degree_y());
  for (unsigned long sigma = 0; sigma <= cap; ++sigma) {
    BigRational v = 0;
    for (const auto& [e, c] : P.terms()) v += c * delta_monomial_value(sigma, e.first, e.second, zp, ep);
    if (sgn(v) != 0) return sigma;
  }
  return cap + 1;
}

void ZeroConfig::validate() const {
  if (P.is_zero()) throw std::invalid_argument("zero lemma: P must be nonzero");
  if (P.degree_x() > D0 || P.degree_y() > D1) throw std::invalid_argument("zero lemma: P exceeds the degree bounds");
  if (points.size() != multiplicities.size()) throw std::invalid_argument("zero lemma: one multiplicity per point");
  for (std::size_t a = 0; a < points.size(); ++a) {
    if (sgn(points[a].second) == 0) throw std::invalid_argument("zero lemma: eta must be nonzero");
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a].first == points[b].first) throw std::invalid_argument("zero lemma: zeta values must be distinct");
    }
  }
}

unsigned long zero_lemma_threshold(unsigned long D0, unsigned long D1, unsigned long M) {
  return (D0 + M) * (D1 + 1) - M;
}

ZeroVerdict check_zero_lemma(const ZeroConfig& config) {
  config.validate();
  ZeroVerdict v;
  const unsigned long M = config.points.size();
  v.threshold = zero_lemma_threshold(config.D0, config.D1, M);
  v.conditions_hold = true;
  for (std::size_t k = 0; k < M; ++k) {
    // Past the threshold the answer no longer matters; cap there.
    const unsigned long order = vanishing_order(config.P, config.points[k].first, config.points[k].second, v.threshold);
    v.orders.push_back(order);
    v.order_sum += order;
    v.claimed_sum += config.multiplicities[k];
    if (order < config.multiplicities[k]) v.conditions_hold = false;
  }
  v.lemma_holds = v.order_sum <= v.threshold && (!v.conditions_hold || v.claimed_sum <= v.threshold);
  return v;
}

RatMatrix vanishing_conditions(unsigned long D0, unsigned long D1, const std::vector<RationalPoint>& points,
                               const std::vector<unsigned long>& multiplicities) {
  unsigned long rows = 0;
  for (auto s : multiplicities) rows += s;
  const unsigned long cols = (D0 + 1) * (D1 + 1);
  RatMatrix m(rows, cols);
  unsigned long r = 0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto zp = powers(points[k].first, D0);
    const auto ep = powers(points[k].second, D1);
    for (unsigned long sigma = 0; sigma < multiplicities[k]; ++sigma, ++r) {
      for (unsigned long i = 0; i <= D0; ++i) {
        for (unsigned long j = 0; j <= D1; ++j) m(r, i * (D1 + 1) + j) = delta_monomial_value(sigma, i, j, zp, ep);
      }
    }
  }
  return m;
}

ZeroTrialStats run_zero_lemma_trials(unsigned long trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  ZeroTrialStats stats;
  for (unsigned long t = 0; t < trials; ++t) {
    ++stats.trials;
    const unsigned long D0 = uniform(0, 4), D1 = uniform(0, 4), M = uniform(1, 4);
    std::vector<RationalPoint> points;
    while (points.size() < M) {
      BigRational zeta(uniform(-6, 6), uniform(1, 3));
      zeta.canonicalize();
      bool fresh = true;
      for (const auto& p : points) fresh = fresh && p.first != zeta;
      if (!fresh) continue;
      long en = 0;
      while (en == 0) en = uniform(-4, 4);
      BigRational eta(en, uniform(1, 3));
      eta.canonicalize();
      points.emplace_back(zeta, eta);
    }
    // Aim near the number of unknowns, sometimes past the threshold.
    const unsigned long unknowns = (D0 + 1) * (D1 + 1);
    const unsigned long threshold = zero_lemma_threshold(D0, D1, M);
    const unsigned long target = uniform(1, static_cast<long>(std::max(unknowns, threshold + 1)));
    std::vector<unsigned long> mult(M, 0);
    for (unsigned long s = 0; s < target; ++s) ++mult[uniform(0, static_cast<long>(M) - 1)];
    unsigned long requested = 0;
    for (auto s : mult) requested += s;
    if (requested > threshold) ++stats.over_threshold;

    const auto basis = nullspace(vanishing_conditions(D0, D1, points, mult));
    if (basis.empty()) continue;
    ++stats.with_solution;
    std::vector<BigRational> coeffs(unknowns, BigRational(0));
    for (const auto& b : basis) {
      const long w = uniform(-5, 5);
      for (unsigned long c = 0; c < unknowns; ++c) coeffs[c] += BigRational(w) * b[c];
    }
    bool all_zero = true;
    for (const auto& c : coeffs) all_zero = all_zero && sgn(c) == 0;
    if (all_zero) coeffs = basis.front();

    ZeroConfig config;
    for (unsigned long i = 0; i <= D0; ++i) {
      for (unsigned long j = 0; j <= D1; ++j) config.P.add_term(i, j, coeffs[i * (D1 + 1) + j]);
    }
    config.points = points;
    config.D0 = D0;
    config.D1 = D1;
    config.multiplicities = mult;
    const ZeroVerdict v = check_zero_lemma(config);
    if (!v.conditions_hold || !v.lemma_holds) ++stats.violations;
  }
  return stats;
}

}  // namespace tmeasure
