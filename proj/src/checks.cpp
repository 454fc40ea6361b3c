#include "pairpoly/checks.hpp"

#include "pairpoly/assembly.hpp"
#include "pairpoly/blocks.hpp"
#include "pairpoly/series.hpp"
#include "pairpoly/strata.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace pairpoly {

namespace {

void set_detail(std::string* detail, const std::string& msg) {
  if (detail) *detail = msg;
}

// (1+t)^{2g} (1 - t^{2m}) / (1-t^2) for m >= 0.
TruncSeries proj_bundle_series(int g, int m, int D) {
  TruncSeries window = ps_geom_factor(2, 1, D);
  window = ps_sub(window, ps_shift(ps_geom_factor(2, 1, D), 2 * m));
  return ps_mul(jacobian_poincare(g, D), window);
}

std::string series_mismatch(const TruncSeries& got, const TruncSeries& want) {
  std::ostringstream os;
  os << "got " << ps_to_string(got) << " but expected " << ps_to_string(want);
  return os.str();
}

}  // namespace

bool check_proj_bundle(int g, int d, std::string* detail) {
  const int D = default_trunc_order(g, d);
  const TruncSeries total = total_generic(g, d, d, D).total;
  const TruncSeries expected = proj_bundle_series(g, d + g - 1, D);
  if (!ps_equal(total, expected)) {
    set_detail(detail, series_mismatch(total, expected));
    return false;
  }
  return true;
}

bool check_flip_wall(int g, int d, int N, std::string* detail) {
  const int D = default_trunc_order(g, d);
  const TruncSeries below = total_generic(g, d, N, D).total;
  const TruncSeries above = total_generic(g, d, N + 1, D).total;
  const TruncSeries diff = ps_sub(above, below);
  const TruncSeries expected = flip_difference(g, d, N, D, false);
  if (!ps_equal(diff, expected)) {
    set_detail(detail, series_mismatch(diff, expected));
    return false;
  }
  return true;
}

bool check_dual_path(int g, int d, int N, std::string* detail) {
  const int D = default_trunc_order(g, d);
  const TruncSeries total = total_generic(g, d, N, D).total;
  const TruncSeries closed = thaddeus_closed_form(g, d, N, D);
  if (!ps_equal(total, closed)) {
    set_detail(detail, series_mismatch(total, closed));
    return false;
  }
  return true;
}

bool check_iass_large(int g, int d, std::string* detail) {
  if (d <= 4 * g - 4) {
    set_detail(detail, "not applicable: requires d > 4g - 4");
    return false;
  }
  const int D = default_trunc_order(g, d);
  // contrib_Ia_ss re-derives and asserts the same identity internally; a
  // logic_error here is a genuine failure of the identity.
  TruncSeries general;
  try {
    general = contrib_Ia_ss(g, d, D);
  } catch (const std::logic_error& e) {
    set_detail(detail, std::string("internal identity assertion failed: ") + e.what());
    return false;
  }
  const TruncSeries shifted =
      ps_shift(semistable_stratum_poincare(g, d, D), 2 * d + 4 - 4 * g);
  if (!ps_equal(general, shifted)) {
    set_detail(detail, series_mismatch(general, shifted));
    return false;
  }
  return true;
}

bool check_poly_invariants(int g, int d, int N, std::string* detail) {
  const int D = default_trunc_order(g, d);
  BettiTable table;
  try {
    table = make_betti_table(total_generic(g, d, N, D));
  } catch (const std::exception& e) {
    set_detail(detail, std::string("no certified polynomial: ") + e.what());
    return false;
  }
  if (!table.all_pass()) {
    std::ostringstream os;
    os << "failed:";
    if (!table.checks.degree) os << " degree";
    if (!table.checks.nonneg) os << " nonneg";
    if (!table.checks.duality) os << " duality";
    if (!table.checks.divisibility) os << " divisibility";
    if (!table.checks.b0) os << " b0";
    if (!table.checks.b1) os << " b1";
    if (!table.checks.euler) os << " euler";
    set_detail(detail, os.str());
    return false;
  }
  return true;
}

bool check_nongeneric_wall(int g, int d, int N, std::string* detail) {
  const int D = default_trunc_order(g, d);
  const ContributionLedger wall = total_nongeneric(g, d, N, D);
  const ContributionLedger generic = total_generic(g, d, N, D);
  const TruncSeries diff = ps_sub(wall.total, generic.total);
  const TruncSeries expected = contrib_IIminus(d - N, g, d, D);
  if (!ps_equal(diff, expected)) {
    set_detail(detail, "wall total minus window total is not the omitted "
                       "IIminus contribution: " +
                           series_mismatch(diff, expected));
    return false;
  }
  if (wall.polynomial_certified) {
    set_detail(detail, "wall total unexpectedly certified as a polynomial");
    return false;
  }
  return true;
}

bool check_cancellation(int g, int d, int N, std::string* detail) {
  const int D = default_trunc_order(g, d);
  // Crossing the wall at N retypes the Ib stratum at slope N into the
  // window-Ia stratum and admits the standalone IIplus stratum at the same
  // slope; their contributions must cancel exactly.
  const TruncSeries retype = ps_sub(
      ps_sub(contrib_Ib(N, g, d, D), contrib_Ia(N, g, d, N + 1, D)),
      contrib_IIplus(N, g, d, D));
  if (!ps_is_zero(retype)) {
    set_detail(detail, "Ib - Ia - IIplus at slope " + std::to_string(N) +
                           " is " + ps_to_string(retype) + ", not 0");
    return false;
  }
  // The annihilated IIminus stratum minus the created IIplus stratum at
  // sub-line-bundle degree d - N accounts for the whole flip difference.
  const TruncSeries swap = ps_sub(contrib_IIminus(d - N, g, d, D),
                                  contrib_IIplus(d - N, g, d, D));
  const TruncSeries expected = flip_difference(g, d, N, D, false);
  if (!ps_equal(swap, expected)) {
    set_detail(detail, "IIminus - IIplus at slope " + std::to_string(d - N) +
                           ": " + series_mismatch(swap, expected));
    return false;
  }
  return true;
}

namespace {

// Label key for multiset comparisons: (class, slope or -1, delta).
using Label = std::tuple<int, int, Rational>;

Label label_of(const StratumDescriptor& s, int slope_shift) {
  const int j = s.j ? *s.j - slope_shift : -1;
  return {static_cast<int>(s.cls), j, s.delta};
}

bool strata_sample_ok(int g, int d, const Rational& tau, int j_max, int k,
                      std::string& why) {
  const ModuliParams params{g, d, tau};
  const DeltaIndex index = enumerate_delta(params, j_max);
  const Rational d_half(d, 2);

  // Ordering: delta ascending.
  for (std::size_t i = 1; i < index.strata.size(); ++i) {
    if (index.strata[i].delta < index.strata[i - 1].delta) {
      why = "descriptors not sorted by delta";
      return false;
    }
  }

  // The open stratum: exactly one, delta 0, first.
  int open_count = 0;
  for (const auto& s : index.strata)
    if (s.cls == StratumClass::OPEN) ++open_count;
  if (open_count != 1 || index.strata.empty() ||
      index.strata.front().cls != StratumClass::OPEN ||
      index.strata.front().delta != 0) {
    why = "open stratum missing, duplicated, or not the unique minimum";
    return false;
  }

  // The semistable Type-I stratum: exactly one, at delta = tau - d/2.
  int ss_count = 0;
  for (const auto& s : index.strata) {
    if (s.cls != StratumClass::Ia_SS) continue;
    ++ss_count;
    if (s.delta != tau - d_half || s.sign != SignClass::plus) {
      why = "semistable Type-I descriptor has wrong delta or sign";
      return false;
    }
  }
  if (ss_count != 1) {
    why = "expected exactly one semistable Type-I descriptor";
    return false;
  }

  for (const auto& s : index.strata) {
    if (s.cls == StratumClass::OPEN) continue;
    if (s.delta <= 0) {
      why = "non-open descriptor with nonpositive delta";
      return false;
    }
    // Minus side lives in (0, d - tau].
    if (s.sign == SignClass::minus && s.delta > Rational(d) - tau) {
      why = "minus-side delta exceeds d - tau";
      return false;
    }
    // Odd degree: any plus-side descriptor below the semistable one keeps a
    // gap of at least 1/2.
    if (d % 2 == 1 && s.sign == SignClass::plus && s.delta < tau - d_half &&
        tau - d_half - s.delta < Rational(1, 2)) {
      why = "plus-side descriptor within 1/2 of the semistable delta";
      return false;
    }
  }

  // No two descriptors share a delta with different signs (generic tau).
  for (std::size_t i = 1; i < index.strata.size(); ++i) {
    const auto& a = index.strata[i - 1];
    const auto& b = index.strata[i];
    if (a.delta == b.delta && a.sign != b.sign) {
      why = "equal deltas with opposite signs at generic tau";
      return false;
    }
  }

  // Slope multiplicity: exactly two descriptors (Ib and IIminus) for each
  // integer slope in (tau, d], at most one elsewhere.
  std::map<int, std::vector<StratumClass>> by_slope;
  for (const auto& s : index.strata)
    if (s.j) by_slope[*s.j].push_back(s.cls);
  for (const auto& [j, classes] : by_slope) {
    const bool two_sided = Rational(j) > tau && j <= d;
    if (two_sided) {
      if (classes.size() != 2 ||
          std::count(classes.begin(), classes.end(), StratumClass::Ib) != 1 ||
          std::count(classes.begin(), classes.end(), StratumClass::IIminus) != 1) {
        why = "slope " + std::to_string(j) + " in (tau, d] is not exactly {Ib, IIminus}";
        return false;
      }
    } else if (classes.size() != 1) {
      why = "slope " + std::to_string(j) + " outside (tau, d] appears more than once";
      return false;
    }
  }

  // Degree-twist embedding.
  const TwistResult tw = twist_map(params, index, k);
  if (static_cast<int>(tw.fresh.size()) != k) {
    why = "twist by " + std::to_string(k) + " produced " +
          std::to_string(tw.fresh.size()) + " unmatched strata";
    return false;
  }
  std::set<int> fresh_slopes;
  std::set<int> fresh_set(tw.fresh.begin(), tw.fresh.end());
  for (int idx : tw.fresh) {
    const auto& s = tw.twisted.strata[static_cast<std::size_t>(idx)];
    if (s.cls != StratumClass::IIminus || !s.j) {
      why = "unmatched twisted stratum is not a IIminus slope";
      return false;
    }
    fresh_slopes.insert(*s.j);
  }
  for (int j = d + k + 1; j <= d + 2 * k; ++j) {
    if (!fresh_slopes.count(j)) {
      why = "twist did not create the IIminus stratum at slope " + std::to_string(j);
      return false;
    }
  }
  // Independent label/delta multiset comparison on the matched core.
  std::multiset<Label> from_labels, core_labels;
  for (const auto& s : index.strata) from_labels.insert(label_of(s, 0));
  for (std::size_t i = 0; i < tw.twisted.strata.size(); ++i) {
    if (fresh_set.count(static_cast<int>(i))) continue;
    core_labels.insert(label_of(tw.twisted.strata[i], k));
  }
  if (from_labels != core_labels) {
    why = "twisted index minus fresh strata is not a label-preserving copy";
    return false;
  }
  return true;
}

}  // namespace

bool check_strata_properties(int g, int d, int samples, std::uint64_t seed,
                             std::string* detail) {
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(g) * 1000003ULL) ^
                      (static_cast<std::uint64_t>(d) * 7919ULL));
  const int D = default_trunc_order(g, d);
  const int j_max = default_j_max(d, D, g);
  static const int denominators[] = {3, 5, 7, 9, 11, 13, 15};

  for (int s = 0; s < samples; ++s) {
    Rational tau;
    bool found = false;
    for (int attempt = 0; attempt < 128 && !found; ++attempt) {
      const int q = denominators[rng() % 7];
      const long long lo = static_cast<long long>(d) * q / 2 + 1;
      const long long hi = static_cast<long long>(d) * q - 1;
      if (lo > hi) break;
      const long long p =
          lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
      tau = Rational(p, q);
      found = is_generic({g, d, tau});
    }
    if (!found) {
      set_detail(detail, "failed to sample a generic stability parameter");
      return false;
    }
    const int k = 1 + static_cast<int>(rng() % 3);
    std::string why;
    bool ok = false;
    try {
      ok = strata_sample_ok(g, d, tau, j_max, k, why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!ok) {
      set_detail(detail, "sample " + std::to_string(s) + " (tau = " +
                             rational_to_string(tau) + ", twist " +
                             std::to_string(k) + "): " + why);
      return false;
    }
  }
  return true;
}

bool check_sym_oracle(int g, std::string* detail) {
  const int D = 4 * g + 16;
  // n = 1: the surface itself.
  TruncSeries surface = TruncSeries::one(D);
  surface.c[1] = 2 * g;
  surface.c[2] = 1;
  const TruncSeries p1 = sym_product_poincare(g, 1, D);
  if (!ps_equal(p1, surface)) {
    set_detail(detail, "n = 1: " + series_mismatch(p1, surface));
    return false;
  }
  // Stable range: projective bundle over the Jacobian.
  for (int n = 2 * g - 1; n <= 2 * g + 4; ++n) {
    const TruncSeries got = sym_product_poincare(g, n, D);
    const TruncSeries want = proj_bundle_series(g, n - g + 1, D);
    if (!ps_equal(got, want)) {
      set_detail(detail, "n = " + std::to_string(n) + ": " + series_mismatch(got, want));
      return false;
    }
  }
  return true;
}

const std::vector<std::string>& known_check_names() {
  static const std::vector<std::string> names = {
      "proj-bundle", "flip",        "dual-path",    "iass-large",
      "poly-invariants", "nongeneric", "cancellation", "strata-props",
      "sym-oracle"};
  return names;
}

std::vector<CheckResult> run_verify(const VerifyOptions& opt) {
  if (opt.g_min < 2 || opt.g_min > opt.g_max)
    throw std::invalid_argument("genus range must satisfy 2 <= g_min <= g_max");
  if (opt.d_min < 1 || opt.d_min > opt.d_max)
    throw std::invalid_argument("degree range must satisfy 1 <= d_min <= d_max");
  if (opt.samples < 1)
    throw std::invalid_argument("sample count must be positive");
  for (const auto& name : opt.only) {
    const auto& known = known_check_names();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw std::invalid_argument("unknown check name: " + name);
  }

  const auto want = [&](const char* name) {
    return opt.only.empty() ||
           std::find(opt.only.begin(), opt.only.end(), name) != opt.only.end();
  };
  std::vector<CheckResult> out;
  const auto record = [&](const char* name, int g, int d, int N, auto&& fn) {
    CheckResult r;
    r.check = name;
    r.g = g;
    r.d = d;
    r.N = N;
    try {
      r.pass = fn(&r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  };

  for (int g = opt.g_min; g <= opt.g_max; ++g) {
    if (want("sym-oracle"))
      record("sym-oracle", g, -1, -1,
             [&](std::string* w) { return check_sym_oracle(g, w); });
    for (int d = opt.d_min; d <= opt.d_max; ++d) {
      if (want("proj-bundle"))
        record("proj-bundle", g, d, d,
               [&](std::string* w) { return check_proj_bundle(g, d, w); });
      if (want("iass-large") && d > 4 * g - 4)
        record("iass-large", g, d, -1,
               [&](std::string* w) { return check_iass_large(g, d, w); });
      if (want("strata-props"))
        record("strata-props", g, d, -1, [&](std::string* w) {
          return check_strata_properties(g, d, opt.samples, opt.seed, w);
        });
      for (int N = d / 2 + 1; N <= d; ++N) {
        if (want("dual-path"))
          record("dual-path", g, d, N,
                 [&](std::string* w) { return check_dual_path(g, d, N, w); });
        if (want("poly-invariants"))
          record("poly-invariants", g, d, N, [&](std::string* w) {
            return check_poly_invariants(g, d, N, w);
          });
        if (want("nongeneric"))
          record("nongeneric", g, d, N, [&](std::string* w) {
            return check_nongeneric_wall(g, d, N, w);
          });
        if (N <= d - 1) {
          if (want("flip"))
            record("flip", g, d, N,
                   [&](std::string* w) { return check_flip_wall(g, d, N, w); });
          if (want("cancellation"))
            record("cancellation", g, d, N, [&](std::string* w) {
              return check_cancellation(g, d, N, w);
            });
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return std::tie(a.g, a.d, a.N, a.check) <
                            std::tie(b.g, b.d, b.N, b.check);
                   });
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace pairpoly
