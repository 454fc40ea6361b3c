#include "doctest.h"

#include "pairpoly/series.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace pairpoly;

namespace {

TruncSeries from_ints(const std::vector<long long>& v) {
  TruncSeries s = TruncSeries::zero(static_cast<int>(v.size()) - 1);
  for (std::size_t i = 0; i < v.size(); ++i) s.c[i] = v[i];
  return s;
}

TruncSeries random_series(std::mt19937_64& rng, int D) {
  TruncSeries s = TruncSeries::zero(D);
  for (auto& c : s.c) c = static_cast<long long>(rng() % 19) - 9;
  return s;
}

}  // namespace

TEST_CASE("construction and coefficient access") {
  const TruncSeries z = TruncSeries::zero(4);
  CHECK(z.trunc == 4);
  CHECK(z.c.size() == 5);
  CHECK(ps_is_zero(z));

  const TruncSeries one = TruncSeries::one(3);
  CHECK(one.coeff(0) == 1);
  CHECK(one.coeff(3) == 0);

  const TruncSeries m = TruncSeries::monomial(2, 4);
  CHECK(m.coeff(2) == 1);
  CHECK(m.coeff(1) == 0);
  CHECK(ps_is_zero(TruncSeries::monomial(7, 4)));  // beyond truncation
  CHECK_THROWS_AS(TruncSeries::monomial(-1, 4), std::invalid_argument);
}

TEST_CASE("addition examples") {
  // (1+t) + (1-t) = 2
  const TruncSeries a = from_ints({1, 1});
  const TruncSeries b = from_ints({1, -1});
  CHECK(ps_add(a, b) == from_ints({2, 0}));

  // 0 + s = s
  const TruncSeries s = from_ints({3, -1, 4, 1});
  CHECK(ps_add(TruncSeries::zero(3), s) == s);

  // (1+4t+t^2) + (1+t)^4 at D=4
  const TruncSeries sym1 = from_ints({1, 4, 1, 0, 0});
  const TruncSeries jac = ps_binomial_power(+1, 4, 1, 4);
  CHECK(ps_add(sym1, jac) == from_ints({2, 8, 7, 4, 1}));
}

TEST_CASE("multiplication examples") {
  const TruncSeries onept = from_ints({1, 1, 0, 0, 0});
  const TruncSeries onemt = from_ints({1, -1, 0, 0, 0});
  CHECK(ps_mul(onept, onemt) == from_ints({1, 0, -1, 0, 0}));

  const TruncSeries sq = ps_binomial_power(+1, 2, 1, 4);
  CHECK(ps_mul(sq, sq) == from_ints({1, 4, 6, 4, 1}));

  const TruncSeries even = from_ints({1, 0, 1, 0, 1, 0, 0});
  const TruncSeries unit = from_ints({1, 0, -1, 0, 0, 0, 0});
  CHECK(ps_mul(even, unit) == from_ints({1, 0, 0, 0, 0, 0, -1}));
}

TEST_CASE("binomial powers") {
  CHECK(ps_binomial_power(+1, 4, 1, 4) == from_ints({1, 4, 6, 4, 1}));
  CHECK(ps_binomial_power(+1, 4, 3, 3) == from_ints({1, 0, 0, 4}));
  CHECK(ps_binomial_power(+1, 0, 1, 2) == TruncSeries::one(2));
  // (1 - t^2)^2 = 1 - 2t^2 + t^4
  CHECK(ps_binomial_power(-1, 2, 2, 5) == from_ints({1, 0, -2, 0, 1, 0}));
}

TEST_CASE("geometric factors") {
  CHECK(ps_geom_factor(2, 1, 6) == from_ints({1, 0, 1, 0, 1, 0, 1}));
  CHECK(ps_geom_factor(2, 2, 6) == from_ints({1, 0, 2, 0, 3, 0, 4}));
  CHECK(ps_geom_factor(4, 1, 4) == from_ints({1, 0, 0, 0, 1}));
}

TEST_CASE("geometric factor inverts 1 - t^k exactly") {
  for (int k : {2, 4}) {
    for (int D : {5, 17, 64}) {
      TruncSeries unit = TruncSeries::one(D);
      if (k <= D) unit.c[static_cast<std::size_t>(k)] = -1;
      CHECK(ps_mul(ps_geom_factor(k, 1, D), unit) == TruncSeries::one(D));
    }
  }
}

TEST_CASE("shifts") {
  CHECK(ps_shift(from_ints({1, 1, 0, 0}), 2) == from_ints({0, 0, 1, 1}));
  const TruncSeries s = from_ints({5, -2, 7});
  CHECK(ps_shift(s, 0) == s);
  // t^{2 sigma} with sigma = 2j - d + g - 1 = 6 for (g, d, j) = (2, 5, 5).
  CHECK(ps_shift(TruncSeries::one(22), 12) == TruncSeries::monomial(12, 22));
  CHECK_THROWS_AS(ps_shift(s, -1), std::invalid_argument);
}

TEST_CASE("ring laws on randomized series") {
  std::mt19937_64 rng(0xC0FFEEULL);
  for (int round = 0; round < 40; ++round) {
    const TruncSeries a = random_series(rng, 12);
    const TruncSeries b = random_series(rng, 12);
    const TruncSeries c = random_series(rng, 12);
    CHECK(ps_add(a, b) == ps_add(b, a));
    CHECK(ps_add(ps_add(a, b), c) == ps_add(a, ps_add(b, c)));
    CHECK(ps_mul(a, b) == ps_mul(b, a));
    CHECK(ps_mul(ps_mul(a, b), c) == ps_mul(a, ps_mul(b, c)));
    CHECK(ps_mul(a, ps_add(b, c)) == ps_add(ps_mul(a, b), ps_mul(a, c)));
    CHECK(ps_scale(a, 3) == ps_add(a, ps_add(a, a)));
    CHECK(ps_sub(a, a) == TruncSeries::zero(12));
    CHECK(ps_neg(a) == ps_sub(TruncSeries::zero(12), a));
  }
}

TEST_CASE("mixed truncation orders take the minimum") {
  const TruncSeries a = from_ints({1, 1, 1, 1, 1, 1, 1, 1, 1, 1});  // D = 9
  const TruncSeries b = from_ints({1, 2, 3, 4, 5, 6});              // D = 5
  CHECK(ps_add(a, b).trunc == 5);
  CHECK(ps_mul(a, b).trunc == 5);
  CHECK(ps_sub(a, b).trunc == 5);
}

TEST_CASE("prefix equality across truncation orders") {
  const TruncSeries a = from_ints({1, 2, 3, 0, 0});
  const TruncSeries b = from_ints({1, 2, 3});
  CHECK(ps_equal(a, b));       // agree to the shared order
  CHECK_FALSE(a == b);         // structural equality sees the orders
  CHECK_FALSE(ps_equal(a, from_ints({1, 2, 4})));
}

TEST_CASE("degree and rendering") {
  CHECK(ps_degree(TruncSeries::zero(5)) == -1);
  CHECK(ps_degree(from_ints({0, 0, 3, 0})) == 2);
  CHECK(ps_to_string(TruncSeries::zero(3)) == "0");
  CHECK(ps_to_string(from_ints({5})) == "5");
  CHECK(ps_to_string(from_ints({1, 4, 7, 0, 0, -1})) == "1 + 4t + 7t^2 - t^5");
  CHECK(ps_to_string(TruncSeries::monomial(2, 4)) == "t^2");
  CHECK(ps_to_string(from_ints({0, -1})) == "-t");
}

TEST_CASE("polynomial certification") {
  // (1 - t^12)/(1 - t^2) * (1+t)^4: a degree-14 polynomial.
  const TruncSeries window =
      ps_sub(ps_geom_factor(2, 1, 22), ps_shift(ps_geom_factor(2, 1, 22), 12));
  const TruncSeries poly = ps_mul(window, ps_binomial_power(+1, 4, 1, 22));
  const PolynomialCheck ok = ps_assert_polynomial(poly, 14);
  CHECK(ok.is_polynomial);
  CHECK(ok.first_violation == -1);
  REQUIRE(ok.coeffs.size() == 15);
  CHECK(ok.coeffs[0] == 1);
  CHECK(ok.coeffs[14] != 0);  // degree exactly 14

  // 1/(1 - t^2) never terminates: first violation at degree 6.
  const PolynomialCheck bad = ps_assert_polynomial(ps_geom_factor(2, 1, 10), 4);
  CHECK_FALSE(bad.is_polynomial);
  CHECK(bad.first_violation == 6);

  // The zero series is a polynomial with an all-zero table.
  const PolynomialCheck zero = ps_assert_polynomial(TruncSeries::zero(8), 5);
  CHECK(zero.is_polynomial);
  for (const auto& c : zero.coeffs) CHECK(c == 0);

  // Preconditions: the buffer must be real.
  CHECK_THROWS_AS(ps_assert_polynomial(TruncSeries::zero(4), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(ps_assert_polynomial(TruncSeries::zero(4), -1),
                  std::invalid_argument);
}

TEST_CASE("bivariate series") {
  BiTruncSeries f;
  f.x_order = 2;
  f.x = {from_ints({1, 0, 0}), from_ints({0, 1, 0}), from_ints({0, 0, 1})};
  BiTruncSeries g;
  g.x_order = 2;
  g.x = {from_ints({2, 0, 0}), from_ints({0, 3, 0}), from_ints({1, 0, 0})};

  const BiTruncSeries h = bi_add(f, g);
  CHECK(bi_coeff_extract(h, 0) == from_ints({3, 0, 0}));
  CHECK(bi_coeff_extract(h, 1) ==
        ps_add(bi_coeff_extract(f, 1), bi_coeff_extract(g, 1)));
  CHECK(bi_coeff_extract(h, 2) == from_ints({1, 0, 1}));
  CHECK_THROWS_AS(bi_coeff_extract(f, 3), std::out_of_range);
}
