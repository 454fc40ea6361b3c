#include "pairpoly/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace pairpoly {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

TruncSeries TruncSeries::zero(int D) {
  require(D >= 0, "truncation order must be >= 0");
  TruncSeries s;
  s.trunc = D;
  s.c.assign(static_cast<std::size_t>(D) + 1, Int(0));
  return s;
}

TruncSeries TruncSeries::one(int D) {
  TruncSeries s = zero(D);
  s.c[0] = 1;
  return s;
}

TruncSeries TruncSeries::monomial(int k, int D) {
  require(k >= 0, "monomial degree must be >= 0");
  TruncSeries s = zero(D);
  if (k <= D) s.c[static_cast<std::size_t>(k)] = 1;
  return s;
}

const Int& TruncSeries::coeff(int k) const {
  if (k < 0 || k > trunc) throw std::out_of_range("coefficient index out of range");
  return c[static_cast<std::size_t>(k)];
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.trunc == b.trunc && a.c == b.c;
}

TruncSeries ps_add(const TruncSeries& a, const TruncSeries& b) {
  const int D = std::min(a.trunc, b.trunc);
  TruncSeries r = TruncSeries::zero(D);
  for (int k = 0; k <= D; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

TruncSeries ps_sub(const TruncSeries& a, const TruncSeries& b) {
  const int D = std::min(a.trunc, b.trunc);
  TruncSeries r = TruncSeries::zero(D);
  for (int k = 0; k <= D; ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}

TruncSeries ps_neg(const TruncSeries& a) {
  TruncSeries r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

TruncSeries ps_mul(const TruncSeries& a, const TruncSeries& b) {
  const int D = std::min(a.trunc, b.trunc);
  TruncSeries r = TruncSeries::zero(D);
  for (int i = 0; i <= D; ++i) {
    if (a.c[i] == 0) continue;
    for (int k = i; k <= D; ++k) {
      if (b.c[k - i] == 0) continue;
      r.c[k] += a.c[i] * b.c[k - i];
    }
  }
  return r;
}

TruncSeries ps_scale(const TruncSeries& a, const Int& k) {
  TruncSeries r = a;
  for (auto& v : r.c) v *= k;
  return r;
}

TruncSeries ps_binomial_power(int base_sign, int exponent, int t_power, int D) {
  require(base_sign == 1 || base_sign == -1, "base_sign must be +1 or -1");
  require(exponent >= 0, "exponent must be >= 0");
  require(t_power >= 1, "t_power must be >= 1");
  TruncSeries r = TruncSeries::zero(D);
  for (long long i = 0; i * t_power <= D && i <= exponent; ++i) {
    Int term = binomial(exponent, i);
    if (base_sign == -1 && (i % 2) == 1) term = -term;
    r.c[static_cast<std::size_t>(i * t_power)] = term;
  }
  return r;
}

TruncSeries ps_geom_factor(int k, int power, int D) {
  require(k >= 1, "geometric step must be >= 1");
  require(power >= 1, "geometric power must be >= 1");
  TruncSeries r = TruncSeries::zero(D);
  // Coefficient of t^{k i} in 1/(1 - t^k)^m is C(i + m - 1, m - 1).
  for (long long i = 0; i * k <= D; ++i) {
    r.c[static_cast<std::size_t>(i * k)] = binomial(i + power - 1, power - 1);
  }
  return r;
}

TruncSeries ps_shift(const TruncSeries& a, int k) {
  require(k >= 0, "shift amount must be >= 0");
  TruncSeries r = TruncSeries::zero(a.trunc);
  for (int i = 0; i + k <= a.trunc; ++i) r.c[i + k] = a.c[i];
  return r;
}

bool ps_is_zero(const TruncSeries& a) {
  return std::all_of(a.c.begin(), a.c.end(), [](const Int& v) { return v == 0; });
}

bool ps_equal(const TruncSeries& a, const TruncSeries& b) {
  const int D = std::min(a.trunc, b.trunc);
  for (int i = 0; i <= D; ++i) {
    if (a.c[i] != b.c[i]) return false;
  }
  return true;
}

int ps_degree(const TruncSeries& a) {
  for (int i = a.trunc; i >= 0; --i) {
    if (a.c[i] != 0) return i;
  }
  return -1;
}

std::string ps_to_string(const TruncSeries& a) {
  std::string out;
  for (int k = 0; k <= a.trunc; ++k) {
    if (a.c[k] == 0) continue;
    const bool neg = a.c[k] < 0;
    const Int mag = neg ? Int(-a.c[k]) : a.c[k];
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += "t";
      if (k >= 2) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

PolynomialCheck ps_assert_polynomial(const TruncSeries& a, int max_degree) {
  require(max_degree >= 0, "max_degree must be >= 0");
  if (a.trunc <= max_degree) {
    throw std::invalid_argument(
        "polynomial certification needs a truncation buffer beyond the claimed degree");
  }
  PolynomialCheck res;
  for (int k = max_degree + 1; k <= a.trunc; ++k) {
    if (a.c[k] != 0) {
      res.is_polynomial = false;
      res.first_violation = k;
      return res;
    }
  }
  res.is_polynomial = true;
  res.coeffs.assign(a.c.begin(), a.c.begin() + max_degree + 1);
  return res;
}

BiTruncSeries bi_add(const BiTruncSeries& f, const BiTruncSeries& g) {
  BiTruncSeries r;
  r.x_order = std::min(f.x_order, g.x_order);
  r.x.reserve(static_cast<std::size_t>(r.x_order) + 1);
  for (int m = 0; m <= r.x_order; ++m) r.x.push_back(ps_add(f.x[m], g.x[m]));
  return r;
}

TruncSeries bi_coeff_extract(const BiTruncSeries& f, int n) {
  if (n < 0 || n > f.x_order) {
    throw std::out_of_range("x-coefficient index exceeds the bivariate expansion order");
  }
  return f.x[static_cast<std::size_t>(n)];
}

}  // namespace pairpoly
