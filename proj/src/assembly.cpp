#include "pairpoly/assembly.hpp"

#include <stdexcept>
#include <string>

namespace pairpoly {

namespace {

void require_surface(int g, int d) {
  if (g < 2) throw std::domain_error("genus must be at least 2");
  if (d < 1) throw std::domain_error("degree must be at least 1");
}

void require_window(int d, int N) {
  if (2 * N <= d || N > d) {
    throw std::invalid_argument("window N must satisfy d/2 < N <= d, got N = " +
                                std::to_string(N) + " for d = " + std::to_string(d));
  }
}

// P(S^n M)(1+t)^{2g}/(1-t^2): the common factor of every section-type term.
TruncSeries sym_jac_bu1(int n, int g, int D) {
  return ps_mul(ps_mul(sym_product_poincare(g, n, D), jacobian_poincare(g, D)),
                ps_geom_factor(2, 1, D));
}

// (1+t)^{4g}/(1-t^2)^2: the split-bundle critical-set factor.
TruncSeries split_bu1_sq(int g, int D) {
  return ps_mul(ps_binomial_power(1, 4 * g, 1, D), ps_geom_factor(2, 2, D));
}

// Window Type-I contribution without the window precondition; shared by the
// public contrib_Ia and the ledger builder.
TruncSeries contrib_Ia_raw(int j, int g, int d, int D) {
  const int s = 2 * j - d + g - 1;
  TruncSeries r = ps_shift(split_bu1_sq(g, D), 2 * s);
  r = ps_sub(r, ps_shift(sym_jac_bu1(j, g, D), 2 * j));
  return ps_sub(r, ps_shift(sym_jac_bu1(d - j, g, D), 2 * s));
}

}  // namespace

int default_trunc_order(int g, int d) { return 2 * (d + 2 * g - 2) + 8; }

TruncSeries contrib_Ia_ss(int g, int d, int D) {
  require_surface(g, d);
  const TruncSeries ss = semistable_stratum_poincare(g, d, D);
  const TruncSeries geom2 = ps_geom_factor(2, 1, D);
  const TruncSeries jac = jacobian_poincare(g, D);

  TruncSeries r = ss;
  for (int j = 0; 2 * j <= d; ++j) {
    const int e = 2 * (d + g - 1 - 2 * j);  // >= 2(g-1) > 0 on this range
    const TruncSeries window =
        ps_sub(TruncSeries::monomial(2 * j, D), TruncSeries::monomial(e, D));
    const TruncSeries piece =
        ps_mul(ps_mul(window, geom2), ps_mul(sym_product_poincare(g, j, D), jac));
    r = ps_sub(r, piece);
  }
  if (d % 2 == 0) {
    const TruncSeries piece = ps_shift(
        ps_mul(geom2, ps_mul(sym_product_poincare(g, d / 2, D), jac)), 2 * g - 2);
    r = ps_sub(r, piece);
  }
  if (d > 4 * g - 4) {
    // Large-degree closed form: the whole contribution collapses to a
    // degree shift of the semistable series.
    const TruncSeries alt = ps_shift(ss, 2 * d + 4 - 4 * g);
    if (!ps_equal(r, alt)) {
      throw std::logic_error("semistable-stratum contribution: the large-degree "
                             "closed form disagrees with the general expression");
    }
  }
  return r;
}

TruncSeries contrib_Ia(int j, int g, int d, int N, int D) {
  require_surface(g, d);
  if (2 * j <= d || j > N - 1) {
    throw std::domain_error("window Type-I slope must satisfy d/2 < j <= N-1");
  }
  return contrib_Ia_raw(j, g, d, D);
}

TruncSeries contrib_Ib(int j, int g, int d, int D) {
  require_surface(g, d);
  const int s = 2 * j - d + g - 1;
  if (s < 0) throw std::domain_error("Ib slope below the stratification range");
  TruncSeries r = ps_shift(split_bu1_sq(g, D), 2 * s);
  if (d - j >= 0) {
    r = ps_sub(r, ps_shift(sym_jac_bu1(d - j, g, D), 2 * s));
  }
  // For j > d the symmetric product is empty and the correction vanishes.
  return r;
}

TruncSeries contrib_IIplus(int j, int g, int d, int D) {
  require_surface(g, d);
  return ps_shift(sym_jac_bu1(j, g, D), 2 * j);
}

TruncSeries contrib_IIminus(int j, int g, int d, int D) {
  require_surface(g, d);
  const int e = 2 * (d - 2 * j + g - 1);
  if (e < 0) throw std::domain_error("IIminus sub-line-bundle degree out of range");
  return ps_shift(sym_jac_bu1(j, g, D), e);
}

TruncSeries relative_stratum_poincare(const StratumDescriptor& s, int g, int d, int D) {
  require_surface(g, d);
  switch (s.cls) {
    case StratumClass::OPEN:
      throw std::domain_error("the open stratum has no relative contribution");
    case StratumClass::Ia_SS:
      return contrib_Ia_ss(g, d, D);
    case StratumClass::Ia: {
      // Merged window stratum: the relative series of the pair is the
      // split-bundle term minus the S^{d-j} correction; the section-type
      // t^{2j} P(S^j M) piece re-enters through the B-component, so the sum
      // of the two displayed contributions is recovered exactly.
      const int j = s.j.value();
      const int sig = 2 * j - d + g - 1;
      TruncSeries r = ps_shift(split_bu1_sq(g, D), 2 * sig);
      r = ps_sub(r, ps_shift(sym_jac_bu1(d - j, g, D), 2 * sig));
      const TruncSeries both =
          ps_add(contrib_Ia_raw(j, g, d, D), contrib_IIplus(j, g, d, D));
      if (!ps_equal(r, both)) {
        throw std::logic_error("window stratum: relative series does not match "
                               "the sum of its two displayed contributions");
      }
      return r;
    }
    case StratumClass::Ib:
      return contrib_Ib(s.j.value(), g, d, D);
    case StratumClass::IIplus:
      return contrib_IIplus(s.j.value(), g, d, D);
    case StratumClass::IIminus:
      // The descriptor stores the destabilizing slope j(delta); the
      // contribution is indexed by the sub-line-bundle degree d - j(delta).
      return contrib_IIminus(d - s.j.value(), g, d, D);
  }
  throw std::logic_error("unhandled stratum class");
}

namespace {

ContributionLedger build_total(int g, int d, int N, int D, bool drop_wall_IIminus) {
  require_surface(g, d);
  require_window(d, N);
  if (D < 1) throw std::invalid_argument("truncation order must be >= 1");

  ContributionLedger led;
  led.g = g;
  led.d = d;
  led.N = N;
  led.D = D;
  led.tau = Rational(3 * N - 1, 3);  // representative generic tau in the window

  // Direct assembly from the displayed stratum sums.
  TruncSeries direct = bgauge_poincare(g, D);
  direct = ps_sub(direct, contrib_Ia_ss(g, d, D));
  for (int j = d / 2 + 1; j <= N - 1; ++j) {
    direct = ps_sub(direct, contrib_Ia_raw(j, g, d, D));
  }
  for (int j = N; 2 * (2 * j - d + g - 1) <= D; ++j) {
    direct = ps_sub(direct, contrib_Ib(j, g, d, D));
  }
  const int jb_top = drop_wall_IIminus ? d - N - 1 : d - N;
  for (int jb = 0; jb <= jb_top; ++jb) {
    direct = ps_sub(direct, contrib_IIminus(jb, g, d, D));
  }
  for (int j = d - N + 1; j <= N - 1; ++j) {
    direct = ps_sub(direct, contrib_IIplus(j, g, d, D));
  }

  // Ledger assembly through the enumerated stratification.
  const DeltaIndex idx =
      enumerate_delta(ModuliParams{g, d, led.tau}, default_j_max(d, D, g));
  TruncSeries ledger_total = bgauge_poincare(g, D);
  for (const StratumDescriptor& s : idx.strata) {
    if (s.cls == StratumClass::OPEN) continue;
    if (drop_wall_IIminus && s.cls == StratumClass::IIminus && s.j.value() == N) {
      continue;  // at the wall tau = N this stratum joins the semistable set
    }
    TruncSeries piece = relative_stratum_poincare(s, g, d, D);
    ledger_total = ps_sub(ledger_total, piece);
    led.entries.emplace_back(s, std::move(piece));
  }

  if (!ps_equal(direct, ledger_total)) {
    throw std::logic_error("stratification ledger disagrees with the direct "
                           "stratum sums (engine bug)");
  }
  led.total = std::move(ledger_total);

  const int deg = 2 * (d + 2 * g - 2);
  if (D > deg) {
    const PolynomialCheck pc = ps_assert_polynomial(led.total, deg);
    led.polynomial_certified = pc.is_polynomial;
    led.first_violation = pc.first_violation;
  }
  return led;
}

}  // namespace

ContributionLedger total_generic(int g, int d, int N, int D) {
  ContributionLedger led = build_total(g, d, N, D, /*drop_wall_IIminus=*/false);
  if (D > 2 * (d + 2 * g - 2) && !led.polynomial_certified) {
    throw std::logic_error(
        "total is not a polynomial: unexpected coefficient at degree " +
        std::to_string(led.first_violation));
  }
  return led;
}

ContributionLedger total_nongeneric(int g, int d, int N, int D) {
  ContributionLedger led = build_total(g, d, N, D, /*drop_wall_IIminus=*/true);
  led.tau = Rational(N);  // the wall itself
  return led;
}

TruncSeries flip_difference(int g, int d, int N, int D, bool fixed_det) {
  require_surface(g, d);
  if (2 * N <= d || N > d - 1) {
    throw std::invalid_argument("flip wall N must satisfy d/2 < N <= d-1");
  }
  const int a = 4 * N - 2 * d + 2 * g - 2;  // > 0 since 2N > d, g >= 2
  const int b = 2 * d - 2 * N;              // >= 2 since N <= d-1
  TruncSeries window =
      ps_sub(TruncSeries::monomial(a, D), TruncSeries::monomial(b, D));
  window = ps_mul(window, ps_geom_factor(2, 1, D));  // exact: a, b both even
  TruncSeries r = ps_mul(window, sym_product_poincare(g, d - N, D));
  if (!fixed_det) r = ps_mul(r, jacobian_poincare(g, D));
  return r;
}

TruncSeries thaddeus_closed_form(int g, int d, int N, int D) {
  require_surface(g, d);
  require_window(d, N);
  const int q = d - N;
  const BiTruncSeries kernel = sym_product_kernel(g, q, D);
  TruncSeries sum = TruncSeries::zero(D);
  for (int m = 0; m <= q; ++m) {
    const int e = 2 * d + 2 * g - 2 - 4 * m;
    if (e < 0) {
      // Unreachable: m <= d - N < d/2 forces e > 2g - 2 >= 2.  Kept as a
      // hard guard against regime mistakes in the extraction.
      throw std::logic_error("negative exponent leaked into the closed form");
    }
    const TruncSeries window =
        ps_sub(TruncSeries::monomial(2 * m, D), TruncSeries::monomial(e, D));
    sum = ps_add(sum, ps_mul(window, bi_coeff_extract(kernel, m)));
  }
  return ps_mul(ps_mul(jacobian_poincare(g, D), ps_geom_factor(2, 1, D)), sum);
}

bool BettiTable::all_pass() const {
  return checks.degree && checks.nonneg && checks.duality && checks.divisibility &&
         checks.b0 && checks.b1 && checks.euler;
}

BettiTable make_betti_table(const ContributionLedger& ledger) {
  if (!ledger.polynomial_certified) {
    throw std::invalid_argument("Betti table requires a certified polynomial total");
  }
  BettiTable bt;
  bt.g = ledger.g;
  bt.d = ledger.d;
  bt.N = ledger.N;
  bt.D = ledger.D;
  bt.dim = ledger.d + 2 * ledger.g - 2;
  const int deg = 2 * bt.dim;
  bt.b.assign(ledger.total.c.begin(), ledger.total.c.begin() + deg + 1);

  bt.checks.degree = bt.b[static_cast<std::size_t>(deg)] != 0;
  bt.checks.nonneg = true;
  for (const Int& v : bt.b) {
    if (v < 0) bt.checks.nonneg = false;
  }
  bt.checks.duality = true;
  for (int k = 0; k <= deg; ++k) {
    if (bt.b[k] != bt.b[deg - k]) bt.checks.duality = false;
  }
  // Divisibility by (1+t)^{2g}: 2g rounds of exact synthetic division.
  {
    std::vector<Int> cur = bt.b;
    bool ok = true;
    for (int round = 0; round < 2 * ledger.g && ok; ++round) {
      if (cur.size() <= 1) {
        ok = cur.empty() || cur[0] == 0;
        break;
      }
      std::vector<Int> quo(cur.size() - 1);
      quo[0] = cur[0];
      for (std::size_t i = 1; i + 1 < cur.size(); ++i) quo[i] = cur[i] - quo[i - 1];
      if (cur.back() != quo.back()) ok = false;  // nonzero remainder at t = -1
      cur = std::move(quo);
    }
    bt.checks.divisibility = ok;
  }
  bt.checks.b0 = bt.b[0] == 1;
  bt.checks.b1 = bt.b[1] == Int(2 * ledger.g);
  Int alt(0);
  for (int k = 0; k <= deg; ++k) {
    if (k % 2 == 0) {
      alt += bt.b[k];
    } else {
      alt -= bt.b[k];
    }
  }
  bt.checks.euler = alt == 0;
  return bt;
}

}  // namespace pairpoly
