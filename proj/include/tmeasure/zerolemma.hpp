#pragma once

// Multiplicities of delta-derivatives at points (zeta, eta) and the
// threshold (D0 + M)(D1 + 1) - M of the zero lemma.

#include "tmeasure/bipoly.hpp"
#include "tmeasure/matrix.hpp"
#include "tmeasure/real.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tmeasure {

using RationalPoint = std::pair<BigRational, BigRational>;  // (zeta, eta)

/// Smallest sigma with delta^sigma P(zeta, eta) != 0, scanning sigma <= cap;
/// returns cap + 1 if every scanned derivative vanishes. Throws on P = 0 or
/// eta = 0.
unsigned long vanishing_order(const BiPoly& P, const BigRational& zeta, const BigRational& eta, unsigned long cap);

struct ZeroConfig {
  BiPoly P;
  std::vector<RationalPoint> points;
  unsigned long D0 = 0;  // degree bound in X
  unsigned long D1 = 0;  // degree bound in Y
  /// Claimed multiplicities S_1..S_M (delta^sigma P vanishes for sigma < S_k).
  std::vector<unsigned long> multiplicities;

  /// Throws std::invalid_argument on a malformed configuration.
  void validate() const;
};

struct ZeroVerdict {
  std::vector<unsigned long> orders;  // actual vanishing orders
  unsigned long order_sum = 0;
  unsigned long claimed_sum = 0;
  unsigned long threshold = 0;  // (D0 + M)(D1 + 1) - M
  bool conditions_hold = false; // orders[k] >= multiplicities[k] for all k
  /// Neither the claimed nor the actual multiplicities exceed the threshold
  /// (the claimed ones only count when they hold).
  bool lemma_holds = false;
};

unsigned long zero_lemma_threshold(unsigned long D0, unsigned long D1, unsigned long M);

ZeroVerdict check_zero_lemma(const ZeroConfig& config);

/// Linear conditions "delta^sigma P(zeta, eta) = 0 for sigma < S" on the
/// coefficients of P (column (i, j) at index i*(D1+1) + j).
RatMatrix vanishing_conditions(unsigned long D0, unsigned long D1, const std::vector<RationalPoint>& points,
                               const std::vector<unsigned long>& multiplicities);

struct ZeroTrialStats {
  unsigned long trials = 0;
  unsigned long with_solution = 0;   // configurations admitting a nonzero P
  unsigned long over_threshold = 0;  // requested sum above the threshold
  unsigned long violations = 0;
};

/// Random configurations (D0, D1, M <= 4, small rational points). For each,
/// P is drawn from the solution space of the vanishing conditions; any P
/// whose actual multiplicities sum past the threshold is a violation.
ZeroTrialStats run_zero_lemma_trials(unsigned long trials, std::uint64_t seed);

}  // namespace tmeasure
