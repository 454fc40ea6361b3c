// Identity and property checks tying the engine together: every total is
// validated against independent closed forms (projective-bundle base case,
// wall-crossing telescoping, coefficient extraction) and the stratification
// is validated against its structural invariants.  The CLI `verify` command
// and the acceptance suite are both built from these.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pairpoly {

inline constexpr std::uint64_t kDefaultSeed = 0x70616972706f6cULL;
inline constexpr int kDefaultSamples = 200;

// For window N = d: the moduli space is a projective bundle over the
// Jacobian, so the total must equal (1+t)^{2g}(1 - t^{2(d+g-1)})/(1-t^2).
bool check_proj_bundle(int g, int d, std::string* detail);

// total(N+1) - total(N) equals the closed-form flip difference at wall N.
bool check_flip_wall(int g, int d, int N, std::string* detail);

// total(N) equals the coefficient-extraction closed form.
bool check_dual_path(int g, int d, int N, std::string* detail);

// For d > 4g - 4: the general expression for the semistable Type-I
// contribution equals its large-degree shift form.
bool check_iass_large(int g, int d, std::string* detail);

// Betti-table invariants of the generic total at window N: degree,
// nonnegativity, duality, divisibility by (1+t)^{2g}, b0, b1, Euler number.
bool check_poly_invariants(int g, int d, int N, std::string* detail);

// At the wall tau = N: the nongeneric total minus the generic window-N total
// equals the omitted IIminus contribution, and the nongeneric total is not a
// polynomial.
bool check_nongeneric_wall(int g, int d, int N, std::string* detail);

// contrib_Ib(N) - contrib_Ia(N) - contrib_IIplus(N) vanishes identically,
// and contrib_IIminus(d-N) - contrib_IIplus(d-N) equals the flip difference.
bool check_cancellation(int g, int d, int N, std::string* detail);

// Structural properties of the enumerated index set over `samples` random
// generic stability parameters: minus-side bounds, the odd-degree gap bound,
// plus/minus disjointness, slope multiplicities, ordering, and the
// degree-twist embedding (label bijection onto the twisted index minus its
// k new minimal-degree IIminus strata, with identical delta multisets).
bool check_strata_properties(int g, int d, int samples, std::uint64_t seed,
                             std::string* detail);

// Symmetric-product closed forms: P(S^1 M) = 1 + 2g t + t^2 and, for
// 2g - 1 <= n <= 2g + 4, the projective-bundle form
// (1+t)^{2g}(1 - t^{2(n-g+1)})/(1-t^2).
bool check_sym_oracle(int g, std::string* detail);

struct CheckResult {
  std::string check;
  int g = 0;
  int d = -1;  // -1 when the check does not depend on d
  int N = -1;  // -1 when the check does not depend on a window
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int g_min = 2, g_max = 3;
  int d_min = 3, d_max = 8;
  std::vector<std::string> only;  // empty = all checks
  int samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
};

// All known check names, in canonical order.
const std::vector<std::string>& known_check_names();

// Runs the full grid; results are sorted by (g, d, N, check).  Unknown
// names in `only` raise std::invalid_argument.
std::vector<CheckResult> run_verify(const VerifyOptions& opt);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace pairpoly
