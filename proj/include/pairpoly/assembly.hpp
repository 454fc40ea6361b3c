// Assembles per-stratum contributions into the Poincaré polynomial of the
// moduli space of rank-2 stable pairs, together with the independent closed
// forms used to cross-check it: the wall-crossing (flip) difference and the
// Thaddeus-style coefficient-extraction formula.
//
// Every cohomological quantity here depends on the stability parameter only
// through the integer window N with tau in (max{d/2, N-1}, N), so the
// assembly API takes N; exact rational tau values appear only in the
// stratification module.
#pragma once

#include "pairpoly/blocks.hpp"
#include "pairpoly/series.hpp"
#include "pairpoly/strata.hpp"

#include <utility>
#include <vector>

namespace pairpoly {

// Default truncation order for parameters (g, d): the total is a polynomial
// of degree 2(d + 2g - 2); the extra buffer of 8 makes the polynomiality
// certificate non-vacuous.
int default_trunc_order(int g, int d);

// Contribution of the semistable Type-I stratum (the deepest stratum of the
// window).  Takes no stability input at all: the value is the same for every
// window.  For d > 4g - 4 the closed form t^{2d+4-4g} * (semistable series)
// is computed as well and equality is asserted (std::logic_error on
// failure).
TruncSeries contrib_Ia_ss(int g, int d, int D);

// Window Type-I stratum at integer slope d/2 < j <= N - 1 (enforced;
// std::domain_error outside the window):
//   t^{2s}(1+t)^{4g}/(1-t^2)^2
//   - t^{2j} P(S^j M)(1+t)^{2g}/(1-t^2)
//   - t^{2s} P(S^{d-j} M)(1+t)^{2g}/(1-t^2),   s = 2j - d + g - 1.
TruncSeries contrib_Ia(int j, int g, int d, int N, int D);

// Type-Ib stratum at slope j (the infinite family):
//   t^{2s}(1+t)^{4g}/(1-t^2)^2 - t^{2s} P(S^{d-j} M)(1+t)^{2g}/(1-t^2),
// with the convention P(S^n M) = 0 for n < 0, so the second term vanishes
// once j > d.
TruncSeries contrib_Ib(int j, int g, int d, int D);

// Type-II plus stratum at slope j: t^{2j} P(S^j M)(1+t)^{2g}/(1-t^2).
TruncSeries contrib_IIplus(int j, int g, int d, int D);

// Type-II minus stratum, indexed by the degree j = d - j(delta) of the
// destabilized sub-line-bundle:
//   t^{2(d - 2j + g - 1)} P(S^j M)(1+t)^{2g}/(1-t^2).
TruncSeries contrib_IIminus(int j, int g, int d, int D);

// The series removed for one descriptor when passing from the ambient
// classifying-space series to the open stratum: the Morse-theoretic
// relative contribution of the stratum.  For the merged window Ia
// descriptor this is the split-bundle term minus the S^{d-j} correction
// (equivalently contrib_Ia + contrib_IIplus at the same slope; the equality
// is asserted).  Throws std::domain_error for the open stratum.
TruncSeries relative_stratum_poincare(const StratumDescriptor& s, int g, int d, int D);

struct ContributionLedger {
  int g = 0, d = 0, N = 0, D = 0;
  Rational tau;  // representative stability parameter inside the window
  // One entry per non-open descriptor, in stratification order; the total
  // equals bgauge minus the sum of the entries (recomputable from parts).
  std::vector<std::pair<StratumDescriptor, TruncSeries>> entries;
  TruncSeries total;
  bool polynomial_certified = false;
  int first_violation = -1;  // degree of the first excess coefficient, if any
};

// Poincaré polynomial of the moduli space for a generic stability parameter
// in the window (max{d/2, N-1}, N), assembled both directly from the
// closed-form stratum sums and through the enumerated stratification ledger;
// the two assemblies are asserted equal, and the total is certified to be a
// polynomial of degree 2(d + 2g - 2) whenever D exceeds that degree
// (std::logic_error with the offending degree otherwise -- a formula bug).
// Window violations (N <= d/2 or N > d) throw std::invalid_argument.
ContributionLedger total_generic(int g, int d, int N, int D);

// Equivariant series of the semistable set at the wall tau = N itself: the
// same assembly with the II-minus stratum at sub-line-bundle degree d - N
// omitted.  The result is a genuine series, not a polynomial; the ledger
// records the failed certification instead of throwing.
ContributionLedger total_nongeneric(int g, int d, int N, int D);

// Closed-form difference of Poincaré polynomials across the wall at integer
// N (d/2 < N <= d - 1):
//   (t^{4N-2d+2g-2} - t^{2d-2N})/(1-t^2) * P(S^{d-N} M) * (1+t)^{2g},
// with the Jacobian factor (1+t)^{2g} dropped in the fixed-determinant
// variant.
TruncSeries flip_difference(int g, int d, int N, int D, bool fixed_det);

// Independent coefficient-extraction closed form for the same polynomial:
//   (1+t)^{2g}/(1-t^2) * sum_{m=0}^{d-N} (t^{2m} - t^{2d+2g-2-4m}) h_m,
// where h_m is the x^m coefficient of the symmetric-product kernel.  Every
// exponent is nonnegative on this range; a negative exponent is a hard
// internal error (std::logic_error).
TruncSeries thaddeus_closed_form(int g, int d, int N, int D);

struct BettiTable {
  int g = 0, d = 0, N = 0, D = 0;
  int dim = 0;         // complex dimension d + 2g - 2
  std::vector<Int> b;  // b_0 .. b_{2 dim}
  struct Checks {
    bool degree = false;        // top coefficient nonzero (degree exactly 2 dim)
    bool nonneg = false;        // all coefficients >= 0
    bool duality = false;       // palindromic: b_k == b_{2 dim - k}
    bool divisibility = false;  // divisible by (1+t)^{2g}
    bool b0 = false;            // b_0 == 1
    bool b1 = false;            // b_1 == 2g
    bool euler = false;         // alternating sum zero
  } checks;
  bool all_pass() const;
};

// Extracts the Betti table with its invariant checks from a certified
// ledger; throws std::invalid_argument when the ledger's total was not
// certified polynomial (e.g. a nongeneric total).
BettiTable make_betti_table(const ContributionLedger& ledger);

}  // namespace pairpoly
