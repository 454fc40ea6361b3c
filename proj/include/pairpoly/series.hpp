// Exact truncated formal power series in one variable t over
// arbitrary-precision integers, plus a thin bivariate layer in (x, t) for
// coefficient extraction.  Every Poincaré quantity in the engine lives here.
//
// Conventions:
//   * a series carries its truncation order D and exactly D+1 coefficients;
//   * arithmetic between series of different orders truncates to the
//     smaller order (intermediate quantities are genuinely infinite series,
//     only final totals are asserted polynomial);
//   * divisions happen only by units of the series ring ((1 - t^k)^m via
//     their geometric inverses), so coefficients stay integral throughout.
#pragma once

#include "pairpoly/rational.hpp"

#include <string>
#include <vector>

namespace pairpoly {

struct TruncSeries {
  std::vector<Int> c;  // coefficient of t^k at index k, k = 0..trunc
  int trunc = 0;

  static TruncSeries zero(int D);
  static TruncSeries one(int D);
  static TruncSeries monomial(int k, int D);  // t^k (the zero series if k > D)

  const Int& coeff(int k) const;  // requires 0 <= k <= trunc
};

// Structural equality: same truncation order and same coefficients.
bool operator==(const TruncSeries& a, const TruncSeries& b);

TruncSeries ps_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries ps_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries ps_neg(const TruncSeries& a);
TruncSeries ps_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries ps_scale(const TruncSeries& a, const Int& k);

// (1 + base_sign * t^{t_power})^{exponent} truncated at D; base_sign is +1
// or -1, exponent >= 0, t_power >= 1.
TruncSeries ps_binomial_power(int base_sign, int exponent, int t_power, int D);

// 1/(1 - t^k)^{power} to order D.  This is the exact inverse of
// (1 - t^k)^{power} in the truncated ring, because (1 - t^k) times the
// truncated geometric series is 1 modulo t^{D+1}.
TruncSeries ps_geom_factor(int k, int power, int D);

// t^k * a with degrees above the truncation order dropped; k >= 0.
TruncSeries ps_shift(const TruncSeries& a, int k);

bool ps_is_zero(const TruncSeries& a);

// Equality up to the shared (minimum) truncation order.
bool ps_equal(const TruncSeries& a, const TruncSeries& b);

// Largest degree with a nonzero coefficient; -1 for the zero series.
int ps_degree(const TruncSeries& a);

// Human form such as "1 + 4t + 7t^2 - t^5"; "0" for the zero series.
std::string ps_to_string(const TruncSeries& a);

struct PolynomialCheck {
  bool is_polynomial = false;
  int first_violation = -1;  // smallest degree > max_degree with c != 0
  std::vector<Int> coeffs;   // degrees 0..max_degree, filled when certified
};

// Certifies that a is a polynomial of degree <= max_degree by checking that
// every coefficient in (max_degree, trunc] vanishes.  Requires
// trunc > max_degree (otherwise the certificate would be vacuous) and throws
// std::invalid_argument when the buffer is missing.
PolynomialCheck ps_assert_polynomial(const TruncSeries& a, int max_degree);

struct BiTruncSeries {
  std::vector<TruncSeries> x;  // coefficient of x^m at index m, m = 0..x_order
  int x_order = 0;
};

BiTruncSeries bi_add(const BiTruncSeries& f, const BiTruncSeries& g);

// Coefficient of x^n.  Throws std::out_of_range when n exceeds the stated
// x-order: that signals the caller under-provisioned the expansion.
TruncSeries bi_coeff_extract(const BiTruncSeries& f, int n);

}  // namespace pairpoly
