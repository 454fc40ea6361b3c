#include "pairpoly/strata.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace pairpoly {

namespace {

int to_int(const Int& v) { return static_cast<int>(v.convert_to<long long>()); }

// Deterministic tie rank for sorting equal deltas (only possible at walls,
// plus the standalone IIplus / semistable pair at delta = tau - d/2 for even
// degree): IIminus, IIplus, Ia_SS, Ia, Ib.
int tie_rank(StratumClass cls) {
  switch (cls) {
    case StratumClass::OPEN: return 0;
    case StratumClass::IIminus: return 1;
    case StratumClass::IIplus: return 2;
    case StratumClass::Ia_SS: return 3;
    case StratumClass::Ia: return 4;
    case StratumClass::Ib: return 5;
  }
  return 6;
}

}  // namespace

const char* stratum_class_name(StratumClass cls) {
  switch (cls) {
    case StratumClass::OPEN: return "OPEN";
    case StratumClass::Ia_SS: return "Ia_SS";
    case StratumClass::Ia: return "Ia";
    case StratumClass::Ib: return "Ib";
    case StratumClass::IIplus: return "IIplus";
    case StratumClass::IIminus: return "IIminus";
  }
  return "?";
}

void validate_params(const ModuliParams& p) {
  if (p.g < 2) throw std::domain_error("genus must be at least 2");
  if (p.d < 1) throw std::domain_error("degree must be at least 1");
  if (2 * p.tau <= p.d || p.tau >= p.d) {
    throw std::domain_error("stability parameter must satisfy d/2 < tau < d, got tau = " +
                            rational_to_string(p.tau) + " for d = " + std::to_string(p.d));
  }
}

bool is_generic(const ModuliParams& p) {
  validate_params(p);
  const int mult = (p.d % 2 == 0) ? 2 : 4;
  return !rational_is_integer(Rational(mult) * p.tau);
}

int walls_between(int d, const Rational& lo, const Rational& hi) {
  // Walls are m/2 (d even) or m/4 (d odd); count integers m strictly
  // between mult*lo and mult*hi.
  const int mult = (d % 2 == 0) ? 2 : 4;
  const Rational a = Rational(mult) * lo;
  const Rational b = Rational(mult) * hi;
  const Int lo_lim = rational_floor(a) + 1;
  const Int hi_lim = rational_is_integer(b) ? rational_floor(b) - 1 : rational_floor(b);
  if (hi_lim < lo_lim) return 0;
  return to_int(hi_lim - lo_lim + 1);
}

int default_j_max(int d, int D, int g) { return d + (D + 3) / 4 + g; }

DeltaIndex enumerate_delta(const ModuliParams& p, int j_max) {
  if (!is_generic(p)) {
    throw std::domain_error("tau = " + rational_to_string(p.tau) +
                            " lies on a wall; the stratification is enumerated only for generic tau");
  }
  if (j_max < p.d) throw std::invalid_argument("j_max must be at least d");
  const int g = p.g;
  const int d = p.d;
  const Rational& tau = p.tau;
  // tau and d - tau are non-integral for generic tau, so floor+1 is the
  // smallest integer strictly above either.
  const int fl_tau = to_int(rational_floor(tau));
  const int fl_dmt = to_int(rational_floor(Rational(d) - tau));
  (void)g;

  std::vector<StratumDescriptor> out;

  {
    StratumDescriptor s;
    s.cls = StratumClass::OPEN;
    s.delta = Rational(0);
    s.sign = SignClass::special;
    out.push_back(s);
  }
  {
    StratumDescriptor s;
    s.cls = StratumClass::Ia_SS;
    s.delta = tau - Rational(d, 2);
    s.sign = SignClass::plus;
    s.has_A_component = true;
    out.push_back(s);
  }
  // Standalone IIplus: slopes with d - tau < j <= d/2 (above d/2 the
  // B-component merges into the window Ia descriptor).
  for (int j = fl_dmt + 1; 2 * j <= d; ++j) {
    StratumDescriptor s;
    s.cls = StratumClass::IIplus;
    s.j = j;
    s.delta = Rational(j - d) + tau;
    s.sign = SignClass::plus;
    s.sigma = j;
    s.has_B_component = true;
    out.push_back(s);
  }
  // Window Ia: integer slopes d/2 < j < tau, carrying both the split-bundle
  // component and the section-vanishing component at the same delta.
  for (int j = d / 2 + 1; j <= fl_tau; ++j) {
    StratumDescriptor s;
    s.cls = StratumClass::Ia;
    s.j = j;
    s.delta = Rational(j - d) + tau;
    s.sign = SignClass::plus;
    s.has_A_component = true;
    s.has_B_component = true;
    out.push_back(s);
  }
  // Ib: slopes above tau, an infinite family cut off at j_max.
  for (int j = fl_tau + 1; j <= j_max; ++j) {
    StratumDescriptor s;
    s.cls = StratumClass::Ib;
    s.j = j;
    s.delta = Rational(j - d) + tau;
    s.sign = SignClass::plus;
    s.sigma = 2 * j - d + p.g - 1;
    s.has_A_component = true;
    out.push_back(s);
  }
  // IIminus: slopes tau < j <= d (the destabilized sub-line-bundle of
  // degree d - j needs a nonzero section, so its degree is nonnegative).
  for (int j = fl_tau + 1; j <= d; ++j) {
    StratumDescriptor s;
    s.cls = StratumClass::IIminus;
    s.j = j;
    s.delta = Rational(j) - tau;
    s.sign = SignClass::minus;
    s.sigma = 2 * j - d + p.g - 1;
    s.has_B_component = true;
    out.push_back(s);
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const StratumDescriptor& a, const StratumDescriptor& b) {
                     if (a.delta != b.delta) return a.delta < b.delta;
                     return tie_rank(a.cls) < tie_rank(b.cls);
                   });

  DeltaIndex idx;
  idx.strata = std::move(out);
  idx.j_max = j_max;
  return idx;
}

int sigma_of(const StratumDescriptor& s, int g, int d) {
  switch (s.cls) {
    case StratumClass::Ib:
    case StratumClass::IIminus:
      return 2 * s.j.value() - d + g - 1;
    case StratumClass::IIplus:
      return s.j.value();
    default:
      throw std::domain_error(
          "codimension is constant only on Ib, IIplus and IIminus strata");
  }
}

namespace {

using Key = std::pair<int, int>;

Key descriptor_key(const StratumDescriptor& s) {
  return {static_cast<int>(s.cls), s.j ? *s.j : -1};
}

std::map<Key, int> index_by_key(const DeltaIndex& idx) {
  std::map<Key, int> m;
  for (std::size_t i = 0; i < idx.strata.size(); ++i) {
    m[descriptor_key(idx.strata[i])] = static_cast<int>(i);
  }
  return m;
}

}  // namespace

FlipResult flip_map(const ModuliParams& from_params, const DeltaIndex& from,
                    const Rational& to_tau) {
  if (!is_generic(from_params)) {
    throw std::domain_error("flip requires a generic source parameter");
  }
  if (to_tau < from_params.tau) {
    throw std::invalid_argument("flip expects tau1 <= tau2");
  }
  ModuliParams p2{from_params.g, from_params.d, to_tau};
  if (!is_generic(p2)) {
    throw std::domain_error("flip requires a generic target parameter");
  }

  FlipResult res;
  res.to_params = p2;
  res.to = enumerate_delta(p2, from.j_max);
  const Rational dt = to_tau - from_params.tau;
  const auto to_index = index_by_key(res.to);
  std::vector<char> hit(res.to.strata.size(), 0);

  for (std::size_t i = 0; i < from.strata.size(); ++i) {
    const StratumDescriptor& s = from.strata[i];
    Key target = descriptor_key(s);
    bool retyped = false;
    if (s.cls == StratumClass::IIminus && Rational(*s.j) < to_tau) {
      // delta = j - tau1 drops to j - tau2 <= 0: the stratum is annihilated.
      if (s.delta - dt > 0) {
        throw std::logic_error("flip: annihilation detected with positive image delta");
      }
      res.annihilated.push_back(static_cast<int>(i));
      continue;
    }
    if (s.cls == StratumClass::Ib && Rational(*s.j) < to_tau) {
      // The slope falls inside the new window: the stratum gains a
      // B-component and is re-labeled as a window Ia stratum.
      target.first = static_cast<int>(StratumClass::Ia);
      retyped = true;
    }
    const auto it = to_index.find(target);
    if (it == to_index.end()) {
      throw std::logic_error(std::string("flip: image label missing for class ") +
                             stratum_class_name(s.cls));
    }
    const StratumDescriptor& t = res.to.strata[static_cast<std::size_t>(it->second)];
    const Rational expected = s.sign == SignClass::minus
                                  ? Rational(s.delta - dt)
                                  : Rational(s.delta + dt);
    if (s.cls != StratumClass::OPEN && t.delta != expected) {
      throw std::logic_error("flip: image delta mismatch");
    }
    hit[static_cast<std::size_t>(it->second)] = 1;
    res.matched.push_back({static_cast<int>(i), it->second, retyped});
  }
  for (std::size_t i = 0; i < res.to.strata.size(); ++i) {
    if (!hit[i]) res.created.push_back(static_cast<int>(i));
  }
  return res;
}

TwistResult twist_map(const ModuliParams& p, const DeltaIndex& from, int k) {
  if (k < 1) throw std::invalid_argument("twist order k must be >= 1");
  if (!is_generic(p)) throw std::domain_error("twist requires a generic parameter");
  if (from.j_max < p.d + k) {
    throw std::invalid_argument("enumeration cutoff too small to twist by k");
  }

  TwistResult res;
  res.twisted_params = ModuliParams{p.g, p.d + 2 * k, p.tau + k};
  // Twisting preserves the parity of d and shifts tau by an integer, so the
  // twisted parameter is generic exactly when the original one is.
  res.twisted = enumerate_delta(res.twisted_params, from.j_max + k);

  const auto tw_index = index_by_key(res.twisted);
  std::vector<char> hit(res.twisted.strata.size(), 0);

  for (std::size_t i = 0; i < from.strata.size(); ++i) {
    const StratumDescriptor& s = from.strata[i];
    const Key target{static_cast<int>(s.cls), s.j ? *s.j + k : -1};
    const auto it = tw_index.find(target);
    if (it == tw_index.end()) {
      throw std::logic_error(std::string("twist: image label missing for class ") +
                             stratum_class_name(s.cls));
    }
    const StratumDescriptor& t = res.twisted.strata[static_cast<std::size_t>(it->second)];
    if (t.delta != s.delta) {
      throw std::logic_error("twist: image delta mismatch");
    }
    hit[static_cast<std::size_t>(it->second)] = 1;
    res.matched.emplace_back(static_cast<int>(i), it->second);
  }
  for (std::size_t i = 0; i < res.twisted.strata.size(); ++i) {
    if (hit[i]) continue;
    const StratumDescriptor& t = res.twisted.strata[i];
    if (t.cls == StratumClass::IIminus && *t.j > p.d + k) {
      res.fresh.push_back(static_cast<int>(i));
    } else {
      throw std::logic_error("twist: unexpected unmatched stratum in the twisted index");
    }
  }
  if (static_cast<int>(res.fresh.size()) != k) {
    throw std::logic_error("twist: expected exactly k new IIminus strata");
  }
  return res;
}

}  // namespace pairpoly
