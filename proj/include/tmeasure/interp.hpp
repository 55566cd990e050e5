#pragma once

// The interpolation matrix M0, its maximal minors, heights, and the values
// mu, F(beta, alpha), G_{beta,alpha} derived from it.
//
// Columns are indexed by (k, l) in k-major order: c = k*L + l. Row s holds
// the s-th derivative at 0 of z^k e^{lz}, i.e. C(s,k) k! l^{s-k} (0 if k > s,
// with 0^0 = 1).

#include "tmeasure/algebraic.hpp"
#include "tmeasure/bipoly.hpp"
#include "tmeasure/matrix.hpp"
#include "tmeasure/real.hpp"

#include <stdexcept>
#include <vector>

namespace tmeasure {

/// Raised when two independent computations of the same object disagree.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct InterpolationSystem {
  unsigned long K = 0;
  unsigned long L = 0;
  IntMatrix m0;
  /// minors[c]: determinant of M0 with column c deleted.
  std::vector<BigInt> minors;
  /// cofactors[c] = (-1)^{(S-1)+c} minors[c]; coefficients of H(X,Y).
  std::vector<BigInt> cofactors;
  /// gcd of all maximal minors (positive).
  BigInt minor_gcd;
  std::size_t rank = 0;
  /// Set by from_hermite_pade: cofactors hold H/g up to sign, minor_gcd = 1.
  bool primitive = false;

  unsigned long S() const { return K * L; }
  std::size_t column(unsigned long k, unsigned long l) const { return k * L + l; }

  /// Builds M0 and all maximal minors; verifies rank S - 1. K >= 1, L >= 1.
  static InterpolationSystem build(unsigned long K, unsigned long L);

  /// Same M0, but the cofactor vector is the primitive integer multiple of
  /// the Hermite-Pade kernel vector, i.e. (cofactors / g) up to a global sign.
  /// Heights, mu, |F|/g and G agree with build(); no determinant is taken,
  /// so this scales to KL in the hundreds. L >= 2.
  static InterpolationSystem from_hermite_pade(unsigned long K, unsigned long L);

  /// H(X,Y) = sum_c cofactor_c X^k Y^l.
  BiPoly h_polynomial() const;
};

/// Entry of M0 at row s, column (k, l).
BigInt m0_entry(unsigned long s, unsigned long k, unsigned long l);

/// (p_{l,k}/k!) from Hermite-Pade with nodes 0..L-1 and all parameters K,
/// in column order. Throws InternalInconsistency unless M0 v = 0 and v is
/// proportional to the cofactor vector.
std::vector<BigRational> m0_orthogonal(const InterpolationSystem& sys);

struct HeightReport {
  BigInt sum_squares;      // sum of squared maximal minors
  BigInt gcd;              // gcd of the maximal minors
  Interval archimedean;    // sqrt(sum_squares)
  BigRational ultrametric; // 1/gcd
  Interval H;              // archimedean * ultrametric
  // Same height through the primitive integer multiple w of the dual vector.
  BigInt dual_sum_squares;
  BigInt dual_gcd;
  Interval dual_H;
  /// sum_squares / gcd^2 == dual_sum_squares / dual_gcd^2 exactly.
  bool duality_holds = false;
};

HeightReport m0_height(const InterpolationSystem& sys, mpfr_prec_t prec = kDefaultPrecision);

struct Prop310Check {
  Interval H;
  Interval bound;
  bool passed = false;  // H.upper <= bound.lower
};

/// H(M0) <= sqrt(6)/(16L) 2^{KL+L} D_{K-1,L-1} (sqrt(3) e d_{L-1} min(K,L) / (2 sqrt(L)))^{K-1}
Prop310Check check_prop310(unsigned long K, unsigned long L, mpfr_prec_t prec = kDefaultPrecision);
Prop310Check check_prop310(const InterpolationSystem& sys, mpfr_prec_t prec = kDefaultPrecision);

/// delta^mu (X^k Y^l) at (x, y), exactly.
Algebraic delta_monomial_at(unsigned long mu, unsigned long k, unsigned long l, const Algebraic& x, const Algebraic& y);

struct MuReport {
  unsigned long mu = 0;
  /// F(beta, alpha) = delta^mu H(beta, alpha), nonzero.
  Algebraic F;
  /// mu <= L-2. This can fail: for K = 1, H = +-(1 - Y)^{L-1} and alpha = 1
  /// gives mu = L-1; for (K, L) = (2, 2), H = -2 + 2Y - X - XY vanishes at
  /// alpha = (2+beta)/(2-beta).
  bool within_L_minus_2(unsigned long L) const { return mu + 2 <= L; }
};

/// Smallest mu with delta^mu H(beta, alpha) != 0. Requires alpha, beta != 0
/// and L >= 2. The vanishing order at (beta, alpha) is at most L-1 by the zero
/// lemma, so InternalInconsistency is thrown if no mu <= L-1 works.
MuReport find_mu(const InterpolationSystem& sys, const Algebraic& alpha, const Algebraic& beta);

struct GReport {
  unsigned long mu = 0;
  Algebraic F;
  BigInt d_mu_power;   // d_mu^{K-1}
  BiPoly G1;           // d_mu^{K-1} (1/g) F_mu(delta) H
  BiPoly G2;           // (1/g) delta^mu H
  Algebraic G1_value;  // G1(beta, alpha)
  Algebraic G2_value;  // G2(beta, alpha)
  /// min(1, d_mu^{K-1}/mu!) |F| / g, enclosure.
  Interval G;
  Interval log_G;
};

/// Builds G1, G2, checks their integrality and the identity
/// mu! G1(beta,alpha) = d_mu^{K-1} F(beta,alpha)/g, and evaluates G.
GReport g_value(const InterpolationSystem& sys, const MuReport& report, const Algebraic& alpha, const Algebraic& beta,
                mpfr_prec_t prec = kDefaultPrecision);

}  // namespace tmeasure
