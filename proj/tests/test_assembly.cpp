#include "doctest.h"

#include "pairpoly/assembly.hpp"
#include "pairpoly/blocks.hpp"

#include <stdexcept>
#include <vector>

using namespace pairpoly;

namespace {

TruncSeries from_ints(const std::vector<long long>& v) {
  TruncSeries s = TruncSeries::zero(static_cast<int>(v.size()) - 1);
  for (std::size_t i = 0; i < v.size(); ++i) s.c[i] = v[i];
  return s;
}

TruncSeries pad(std::vector<long long> v, int D, long long fill = 0) {
  while (static_cast<int>(v.size()) < D + 1) v.push_back(fill);
  return from_ints(v);
}

}  // namespace

TEST_CASE("default truncation order") {
  CHECK(default_trunc_order(2, 5) == 22);  // 2(5 + 2) + 8
  CHECK(default_trunc_order(3, 4) == 24);  // 2(4 + 4) + 8
}

TEST_CASE("semistable Type-I contribution") {
  const TruncSeries c = contrib_Ia_ss(2, 5, 22);
  // For d > 4g - 4 this equals the 2d+4-4g shift of the semistable series.
  CHECK(c == ps_shift(semistable_stratum_poincare(2, 5, 22), 6));
  CHECK(c == pad({0, 0, 0, 0, 0, 0, 1, 4, 8, 16, 32, 48, 56, 60, 63}, 22, 64));
  // Below the large-degree regime the general expression still works.
  CHECK(contrib_Ia_ss(3, 3, 20).coeff(0) == 0);
}

TEST_CASE("window Type-I contribution enforces its slope window") {
  CHECK_NOTHROW(contrib_Ia(3, 2, 5, 4, 22));
  CHECK_THROWS_AS(contrib_Ia(2, 2, 5, 4, 22), std::domain_error);  // j <= d/2
  CHECK_THROWS_AS(contrib_Ia(4, 2, 5, 4, 22), std::domain_error);  // j > N-1
}

TEST_CASE("per-class contributions match hand-expanded series") {
  CHECK(contrib_IIplus(1, 2, 5, 12) ==
        from_ints({0, 0, 1, 8, 24, 40, 47, 48, 48, 48, 48, 48, 48}));
  CHECK(contrib_IIminus(1, 2, 5, 14) ==
        from_ints({0, 0, 0, 0, 0, 0, 0, 0, 1, 8, 24, 40, 47, 48, 48}));
  CHECK(contrib_Ib(5, 2, 5, 16) ==
        from_ints({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 23, 64, 121}));
  CHECK(contrib_Ib(6, 2, 5, 20) ==
        pad({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 8, 30, 72, 129}, 20));
  // II- needs a nonnegative leading exponent 2(d - 2j + g - 1)
  CHECK_THROWS_AS(contrib_IIminus(4, 2, 5, 22), std::domain_error);
  // Ib needs a nonnegative leading exponent 2(2j - d + g - 1)
  CHECK_THROWS_AS(contrib_Ib(1, 2, 5, 22), std::domain_error);
  // ... and at slope d the two terms are a point-fiber difference
  const TruncSeries at_d = contrib_Ib(5, 2, 5, 20);
  const TruncSeries split = ps_mul(ps_binomial_power(+1, 8, 1, 20),
                                   ps_geom_factor(2, 2, 20));
  const TruncSeries point = ps_mul(ps_binomial_power(+1, 4, 1, 20),
                                   ps_geom_factor(2, 1, 20));
  CHECK(at_d == ps_shift(ps_sub(split, point), 12));
  // ... while above slope d only the first term survives
  CHECK(contrib_Ib(6, 2, 5, 20) == ps_shift(split, 16));
}

TEST_CASE("relative stratum series for the merged window descriptor") {
  const DeltaIndex index = enumerate_delta({2, 5, Rational(22, 5)}, 13);
  const StratumDescriptor* ia3 = nullptr;
  for (const auto& s : index.strata)
    if (s.cls == StratumClass::Ia && s.j && *s.j == 3) ia3 = &s;
  REQUIRE(ia3 != nullptr);
  const TruncSeries merged = relative_stratum_poincare(*ia3, 2, 5, 16);
  CHECK(merged == from_ints({0, 0, 0, 0, 0, 0, 0, 4, 23, 64, 121, 184, 248,
                             312, 376, 440, 504}));
  // ... and it equals contrib_Ia + contrib_IIplus at the same slope.
  CHECK(ps_equal(merged, ps_add(contrib_Ia(3, 2, 5, 5, 16),
                                contrib_IIplus(3, 2, 5, 16))));
  // the open stratum has no relative series
  CHECK_THROWS_AS(relative_stratum_poincare(index.strata.front(), 2, 5, 16),
                  std::domain_error);
}

TEST_CASE("generic totals against frozen expansions") {
  const ContributionLedger led55 = total_generic(2, 5, 5, 22);
  CHECK(led55.total ==
        pad({1, 4, 7, 8, 8, 8, 8, 8, 8, 8, 8, 8, 7, 4, 1}, 22));
  CHECK(led55.polynomial_certified);
  CHECK(led55.first_violation == -1);
  CHECK(led55.tau == Rational(14, 3));
  CHECK(led55.D == 22);

  const ContributionLedger led54 = total_generic(2, 5, 4, 22);
  CHECK(led54.total ==
        pad({1, 4, 8, 16, 32, 48, 55, 56, 55, 48, 32, 16, 8, 4, 1}, 22));

  const ContributionLedger led34 = total_generic(3, 4, 4, 28);
  CHECK(led34.total ==
        pad({1, 6, 16, 26, 31, 32, 32, 32, 32, 32, 32, 32, 31, 26, 16, 6, 1}, 28));
}

TEST_CASE("ledger recomposition") {
  const ContributionLedger led = total_generic(2, 5, 4, 22);
  CHECK(led.entries.size() == 15);
  // entries are sorted by delta and exclude the open stratum
  for (std::size_t i = 0; i < led.entries.size(); ++i) {
    CHECK(led.entries[i].first.cls != StratumClass::OPEN);
    if (i > 0)
      CHECK(led.entries[i - 1].first.delta <= led.entries[i].first.delta);
  }
  // bgauge minus the entries reproduces the total
  TruncSeries rebuilt = bgauge_poincare(2, 22);
  for (const auto& [desc, series] : led.entries) rebuilt = ps_sub(rebuilt, series);
  CHECK(ps_equal(rebuilt, led.total));
}

TEST_CASE("window validation in the assembly") {
  CHECK_THROWS_AS(total_generic(2, 5, 2, 22), std::invalid_argument);
  CHECK_THROWS_AS(total_generic(2, 5, 6, 22), std::invalid_argument);
  CHECK_THROWS_AS(total_generic(1, 5, 4, 22), std::domain_error);
}

TEST_CASE("nongeneric wall series") {
  const ContributionLedger wall = total_nongeneric(2, 5, 5, 22);
  CHECK(wall.total == pad({1, 4, 7, 8}, 22, 8));
  CHECK_FALSE(wall.polynomial_certified);
  CHECK(wall.first_violation == 15);
  CHECK(wall.tau == Rational(5));
  // it exceeds the generic window total by the omitted IIminus stratum
  const ContributionLedger generic = total_generic(2, 5, 5, 22);
  CHECK(ps_equal(ps_sub(wall.total, generic.total), contrib_IIminus(0, 2, 5, 22)));
}

TEST_CASE("flip difference closed form") {
  CHECK(flip_difference(2, 5, 4, 22, false) ==
        pad({0, 0, -1, -8, -24, -40, -47, -48, -47, -40, -24, -8, -1}, 22));
  CHECK(flip_difference(2, 5, 4, 22, true) ==
        pad({0, 0, -1, -4, -2, -4, -2, -4, -1}, 22));
  CHECK_THROWS_AS(flip_difference(2, 5, 5, 22, false), std::invalid_argument);
  CHECK_THROWS_AS(flip_difference(2, 5, 2, 22, false), std::invalid_argument);
}

TEST_CASE("coefficient-extraction closed form agrees with the assembly") {
  for (int g : {2, 3})
    for (int d = 3; d <= 6; ++d) {
      const int D = default_trunc_order(g, d);
      for (int N = d / 2 + 1; N <= d; ++N)
        CHECK(ps_equal(thaddeus_closed_form(g, d, N, D),
                       total_generic(g, d, N, D).total));
    }
}

TEST_CASE("betti table extraction and invariants") {
  const BettiTable t = make_betti_table(total_generic(2, 5, 4, 22));
  CHECK(t.dim == 7);
  REQUIRE(t.b.size() == 15);
  CHECK(t.b[0] == 1);
  CHECK(t.b[1] == 4);
  CHECK(t.b[7] == 56);
  CHECK(t.all_pass());
  CHECK(t.checks.degree);
  CHECK(t.checks.nonneg);
  CHECK(t.checks.duality);
  CHECK(t.checks.divisibility);
  CHECK(t.checks.b0);
  CHECK(t.checks.b1);
  CHECK(t.checks.euler);

  CHECK_THROWS_AS(make_betti_table(total_nongeneric(2, 5, 5, 22)),
                  std::invalid_argument);
}
