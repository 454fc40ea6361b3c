// Poincaré series of the constituent spaces entering the stratification:
// Jacobians, symmetric products of the surface (via Macdonald's bivariate
// generating kernel), BU(1), the classifying space of the rank-2 gauge group
// (the Atiyah-Bott formula), the semistable stratum of the space of pairs'
// ambient connections, and the critical sets attached to stratum
// descriptors.
#pragma once

#include "pairpoly/series.hpp"
#include "pairpoly/strata.hpp"

namespace pairpoly {

// (1 + t)^{2g}; independent of the degree label of the Jacobian.
TruncSeries jacobian_poincare(int g, int D);

// The bivariate kernel (1 + xt)^{2g} / ((1 - x)(1 - xt^2)) expanded to the
// requested x-order; its x^n coefficient is the Poincaré polynomial of the
// n-th symmetric product of the surface.
BiTruncSeries sym_product_kernel(int g, int x_order, int D);

// Poincaré polynomial of S^n M, computed by coefficient extraction from the
// kernel for every n (single code path); n >= 0.
TruncSeries sym_product_poincare(int g, int n, int D);

// 1/(1 - t^2).
TruncSeries bu1_poincare(int D);

// Rank-2 gauge group: (1+t)^{2g} (1+t^3)^{2g} / ((1-t^2)^2 (1-t^4)).
TruncSeries bgauge_poincare(int g, int D);

// Equivariant Poincaré series of the semistable stratum:
// bgauge minus the sum over j > d/2 of t^{2(2j-d+g-1)} (1+t)^{4g}/(1-t^2)^2,
// summed until the leading exponent exceeds D.
TruncSeries semistable_stratum_poincare(int g, int d, int D);

// The reduced-group variant: (1 - t^2) times the series above.
TruncSeries semistable_stratum_poincare_reduced(int g, int d, int D);

// Poincaré series of the critical set attached to a descriptor:
//   Ia_SS             -> semistable_stratum_poincare,
//   other Type I      -> (1+t)^{4g}/(1-t^2)^2   (two Jacobians, two BU(1)),
//   IIplus (slope j)  -> P(S^j M)(1+t)^{2g}/(1-t^2),
//   IIminus (slope j) -> P(S^{d-j} M)(1+t)^{2g}/(1-t^2).
// The open stratum has no critical-set series; passing it throws
// std::domain_error.
TruncSeries critical_set_poincare(const StratumDescriptor& s, int g, int d, int D);

}  // namespace pairpoly
