// Enumeration and bookkeeping of the Harder-Narasimhan index set of the
// tau-stratification of rank-2 pairs of degree d on a genus-g surface:
// stratum descriptors, genericity of the stability parameter, the flip
// correspondence across a wall, and the degree-twist embedding.
//
// Descriptors are keyed by (class, slope j); the destabilization amount
// delta is derived from (j, tau) and used for ordering and display.
#pragma once

#include "pairpoly/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pairpoly {

enum class StratumClass { OPEN, Ia_SS, Ia, Ib, IIplus, IIminus };
enum class SignClass { plus, minus, special };

const char* stratum_class_name(StratumClass cls);

struct StratumDescriptor {
  StratumClass cls = StratumClass::OPEN;
  std::optional<int> j;      // destabilizing slope; absent for OPEN and Ia_SS
  Rational delta;            // destabilization amount (0 for the open stratum)
  SignClass sign = SignClass::special;
  std::optional<int> sigma;  // complex codimension where it is constant
  bool has_A_component = false;  // split-bundle (connection-type) component
  bool has_B_component = false;  // section-vanishing (pair-type) component
};

struct ModuliParams {
  int g = 2;
  int d = 1;
  Rational tau;
};

struct DeltaIndex {
  // Sorted by delta ascending; equal deltas (possible only at walls) are
  // ordered IIminus, IIplus, Ia_SS, Ia, Ib.
  std::vector<StratumDescriptor> strata;
  int j_max = 0;  // enumeration cutoff for the infinite Ib family
};

// g >= 2, d >= 1, d/2 < tau < d; throws std::domain_error otherwise.
void validate_params(const ModuliParams& p);

// True iff tau avoids the wall set: 2*tau not integral when d is even,
// 4*tau not integral when d is odd.  Calls validate_params first.
bool is_generic(const ModuliParams& p);

// Number of wall values strictly between lo and hi for degree d.
int walls_between(int d, const Rational& lo, const Rational& hi);

// Default Ib enumeration cutoff, chosen so that every stratum whose minimal
// t-degree 2(2j - d + g - 1) is at most D appears: d + ceil(D/4) + g.
int default_j_max(int d, int D, int g);

// The full index set for generic tau, with exactly one descriptor per
// (class, slope): the open stratum; the semistable Type-I stratum at
// delta = tau - d/2; merged Type-I window strata (A- and B-components) for
// integer d/2 < j < tau; Type-Ib for tau < j <= j_max; standalone IIplus for
// d - tau < j <= d/2; and IIminus for tau < j <= d.  Throws
// std::domain_error for nongeneric tau and std::invalid_argument when
// j_max < d.
DeltaIndex enumerate_delta(const ModuliParams& p, int j_max);

// Complex codimension: 2j - d + g - 1 for Ib and IIminus, j for IIplus.
// Throws std::domain_error for classes without a constant codimension.
int sigma_of(const StratumDescriptor& s, int g, int d);

struct FlipResult {
  ModuliParams to_params;
  DeltaIndex to;
  struct Pair {
    int from_index = -1;
    int to_index = -1;
    bool retyped = false;  // Ib below the new tau becomes a window Ia stratum
  };
  std::vector<Pair> matched;
  std::vector<int> annihilated;  // from-side indices whose delta is sent to 0
  std::vector<int> created;      // to-side indices with no source label
};

// Moves the index set from tau1 to tau2 >= tau1 (both generic):
// delta maps to max{delta + (tau2 - tau1), 0} on the plus side and
// max{delta - (tau2 - tau1), 0} on the minus side.  Labels are matched by
// (class, slope); IIminus strata whose delta reaches 0 are annihilated and
// newly admissible standalone IIplus strata are created.  When no wall lies
// between the two parameters the correspondence is a label bijection.
FlipResult flip_map(const ModuliParams& from_params, const DeltaIndex& from,
                    const Rational& to_tau);

struct TwistResult {
  ModuliParams twisted_params;  // (g, d + 2k, tau + k)
  DeltaIndex twisted;
  std::vector<std::pair<int, int>> matched;  // (from index, twisted index)
  std::vector<int> fresh;  // twisted-side IIminus with slope > d + k
};

// The degree-2k twist embedding: every label (class, j) maps to
// (class, j + k) with identical delta.  The twisted index set contains in
// addition exactly k IIminus strata with no preimage -- those whose
// destabilized sub-line-bundle has degree below k, so the twisted section
// cannot come from an untwisted one.  Their indices are returned in `fresh`.
TwistResult twist_map(const ModuliParams& p, const DeltaIndex& from, int k);

}  // namespace pairpoly
