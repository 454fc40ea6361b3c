#include "pairpoly/rational.hpp"

#include <limits>
#include <stdexcept>

namespace pairpoly {

Int rational_floor(const Rational& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);  // > 0 by normalization
  Int q = num / den;               // truncates toward zero
  if (num < 0 && q * den != num) {
    --q;
  }
  return q;
}

bool rational_is_integer(const Rational& r) { return denominator(r) == 1; }

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
  const auto bad = [&]() -> Rational {
    throw std::invalid_argument("not a rational 'p' or 'p/q': '" + s + "'");
  };
  if (s.empty()) return bad();
  const auto slash = s.find('/');
  const std::string num_part = s.substr(0, slash);
  const std::string den_part =
      slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
  const auto parse_int = [&](const std::string& part, bool allow_sign) -> Int {
    if (part.empty()) bad();
    std::size_t i = 0;
    if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
    if (i == part.size()) bad();
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') bad();
    }
    return Int(part);
  };
  const Int num = parse_int(num_part, true);
  const Int den = parse_int(den_part, false);
  if (den == 0) bad();
  return Rational(num, den);
}

Int binomial(long long n, long long r) {
  if (r < 0 || r > n) return Int(0);
  if (r > n - r) r = n - r;
  Int acc(1);
  for (long long i = 1; i <= r; ++i) {
    acc *= Int(n - r + i);
    acc /= Int(i);  // exact: prefix products of consecutive integers
  }
  return acc;
}

long long to_int64(const Int& v) {
  static const Int kMax = Int(std::numeric_limits<long long>::max());
  static const Int kMin = Int(std::numeric_limits<long long>::min());
  if (v > kMax || v < kMin) {
    throw std::overflow_error("coefficient does not fit in 64 bits: " + v.str());
  }
  return v.convert_to<long long>();
}

}  // namespace pairpoly
