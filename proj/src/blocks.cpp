#include "pairpoly/blocks.hpp"

#include <stdexcept>

namespace pairpoly {

namespace {

void require_genus(int g) {
  if (g < 2) throw std::domain_error("genus must be at least 2");
}

}  // namespace

TruncSeries jacobian_poincare(int g, int D) {
  require_genus(g);
  return ps_binomial_power(1, 2 * g, 1, D);
}

BiTruncSeries sym_product_kernel(int g, int x_order, int D) {
  require_genus(g);
  if (x_order < 0) throw std::invalid_argument("x_order must be >= 0");
  // (1 + xt)^{2g}: the x^m coefficient is C(2g, m) t^m.
  std::vector<TruncSeries> a;
  a.reserve(static_cast<std::size_t>(x_order) + 1);
  for (int m = 0; m <= x_order; ++m) {
    a.push_back(ps_scale(TruncSeries::monomial(m, D), binomial(2 * g, m)));
  }
  // Multiply by 1/(1 - x): prefix sums over the x-degree.
  for (int m = 1; m <= x_order; ++m) a[m] = ps_add(a[m], a[m - 1]);
  // Multiply by 1/(1 - x t^2): h_m = a_m + t^2 h_{m-1}.
  for (int m = 1; m <= x_order; ++m) a[m] = ps_add(a[m], ps_shift(a[m - 1], 2));
  BiTruncSeries f;
  f.x = std::move(a);
  f.x_order = x_order;
  return f;
}

TruncSeries sym_product_poincare(int g, int n, int D) {
  if (n < 0) throw std::invalid_argument("symmetric product order must be >= 0");
  return bi_coeff_extract(sym_product_kernel(g, n, D), n);
}

TruncSeries bu1_poincare(int D) { return ps_geom_factor(2, 1, D); }

TruncSeries bgauge_poincare(int g, int D) {
  require_genus(g);
  TruncSeries r = ps_mul(ps_binomial_power(1, 2 * g, 1, D),
                         ps_binomial_power(1, 2 * g, 3, D));
  r = ps_mul(r, ps_geom_factor(2, 2, D));
  return ps_mul(r, ps_geom_factor(4, 1, D));
}

TruncSeries semistable_stratum_poincare(int g, int d, int D) {
  require_genus(g);
  if (d < 1) throw std::domain_error("degree must be at least 1");
  TruncSeries r = bgauge_poincare(g, D);
  const TruncSeries body =
      ps_mul(ps_binomial_power(1, 4 * g, 1, D), ps_geom_factor(2, 2, D));
  for (int j = d / 2 + 1;; ++j) {
    const int e = 2 * (2 * j - d + g - 1);
    if (e > D) break;  // exponent strictly increasing in j: finite sum
    r = ps_sub(r, ps_shift(body, e));
  }
  return r;
}

TruncSeries semistable_stratum_poincare_reduced(int g, int d, int D) {
  const TruncSeries one_minus_t2 =
      ps_sub(TruncSeries::one(D), TruncSeries::monomial(2, D));
  return ps_mul(one_minus_t2, semistable_stratum_poincare(g, d, D));
}

TruncSeries critical_set_poincare(const StratumDescriptor& s, int g, int d, int D) {
  require_genus(g);
  switch (s.cls) {
    case StratumClass::OPEN:
      throw std::domain_error("the open stratum carries no critical-set series");
    case StratumClass::Ia_SS:
      return semistable_stratum_poincare(g, d, D);
    case StratumClass::Ia:
    case StratumClass::Ib:
      // Two line-bundle factors and two circle factors:
      // (1+t)^{4g} / (1-t^2)^2.
      return ps_mul(ps_binomial_power(1, 4 * g, 1, D), ps_geom_factor(2, 2, D));
    case StratumClass::IIplus:
      return ps_mul(ps_mul(sym_product_poincare(g, s.j.value(), D),
                           jacobian_poincare(g, D)),
                    bu1_poincare(D));
    case StratumClass::IIminus:
      return ps_mul(ps_mul(sym_product_poincare(g, d - s.j.value(), D),
                           jacobian_poincare(g, D)),
                    bu1_poincare(D));
  }
  throw std::logic_error("unhandled stratum class");
}

}  // namespace pairpoly
