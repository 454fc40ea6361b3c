// Acceptance suite: one line per criterion, every tolerance and runtime
// limit pinned in code.  Exit status equals the number of failed criteria.
//
// All equalities are exact integer-coefficient comparisons to the stated
// truncation order; there are no statistical tolerances anywhere.
#include "pairpoly/assembly.hpp"
#include "pairpoly/blocks.hpp"
#include "pairpoly/checks.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

// A criterion must report, never abort: engine exceptions become failures.
bool guarded(const std::function<bool(std::string*)>& check, std::string* detail) {
  try {
    return check(detail);
  } catch (const std::exception& e) {
    *detail = std::string("exception: ") + e.what();
    return false;
  }
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  Criterion(int n, std::string text)
      : number(n), description(std::move(text)) {}

  int number;
  std::string description;
  bool pass = true;
  double elapsed = 0.0;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    failures.push_back(what);
  }
};

void report(const Criterion& c) {
  std::printf("[%s] criterion %d: %s (%.3f s)\n", c.pass ? "PASS" : "FAIL",
              c.number, c.description.c_str(), c.elapsed);
  for (const auto& f : c.failures) std::fprintf(stderr, "    %s\n", f.c_str());
}

std::string grid_tag(int g, int d, int N = -1) {
  std::string tag = "g=" + std::to_string(g) + " d=" + std::to_string(d);
  if (N >= 0) tag += " N=" + std::to_string(N);
  return tag;
}

constexpr int kGenusMin = 2, kGenusMax = 3;
constexpr int kDegreeMin = 3, kDegreeMax = 8;

}  // namespace

int main() {
  using namespace pairpoly;
  std::vector<Criterion> criteria;

  {  // 1. Projective-bundle base case at N = d; exact; < 1 s per case.
    Criterion c{1,
                "projective-bundle base case, g in {2,3}, d in {3..8}, N = d, "
                "exact, < 1 s per case"};
    const auto start = Clock::now();
    for (int g = kGenusMin; g <= kGenusMax; ++g)
      for (int d = kDegreeMin; d <= kDegreeMax; ++d) {
        const auto case_start = Clock::now();
        std::string detail;
        if (!guarded([&](std::string* w) { return check_proj_bundle(g, d, w); }, &detail))
          c.fail(grid_tag(g, d, d) + ": " + detail);
        const double case_time = seconds_since(case_start);
        if (case_time >= 1.0)
          c.fail(grid_tag(g, d, d) + ": took " + std::to_string(case_time) +
                 " s (limit 1 s)");
      }
    c.elapsed = seconds_since(start);
    criteria.push_back(c);
  }

  {  // 2. Flip identity across every wall; exact; < 5 s per (g,d).
    Criterion c{2,
                "flip identity total(N+1) - total(N) = closed form, all walls "
                "d/2 < N <= d-1, exact, < 5 s per (g,d)"};
    const auto start = Clock::now();
    for (int g = kGenusMin; g <= kGenusMax; ++g)
      for (int d = kDegreeMin; d <= kDegreeMax; ++d) {
        const auto pair_start = Clock::now();
        for (int N = d / 2 + 1; N <= d - 1; ++N) {
          std::string detail;
          if (!guarded([&](std::string* w) { return check_flip_wall(g, d, N, w); }, &detail))
            c.fail(grid_tag(g, d, N) + ": " + detail);
        }
        const double pair_time = seconds_since(pair_start);
        if (pair_time >= 5.0)
          c.fail(grid_tag(g, d) + ": took " + std::to_string(pair_time) +
                 " s (limit 5 s)");
      }
    c.elapsed = seconds_since(start);
    criteria.push_back(c);
  }

  {  // 3. Dual-path identity for every window; exact; < 5 s per case.
    Criterion c{3,
                "dual-path identity total = coefficient-extraction closed "
                "form, all windows d/2 < N <= d, exact, < 5 s per case"};
    const auto start = Clock::now();
    for (int g = kGenusMin; g <= kGenusMax; ++g)
      for (int d = kDegreeMin; d <= kDegreeMax; ++d)
        for (int N = d / 2 + 1; N <= d; ++N) {
          const auto case_start = Clock::now();
          std::string detail;
          if (!guarded([&](std::string* w) { return check_dual_path(g, d, N, w); }, &detail))
            c.fail(grid_tag(g, d, N) + ": " + detail);
          const double case_time = seconds_since(case_start);
          if (case_time >= 5.0)
            c.fail(grid_tag(g, d, N) + ": took " + std::to_string(case_time) +
                   " s (limit 5 s)");
        }
    c.elapsed = seconds_since(start);
    criteria.push_back(c);
  }

  {  // 4. Large-degree form of the semistable Type-I contribution.
    Criterion c{4,
                "semistable Type-I contribution: general expression equals "
                "the large-degree shift form, g = 2, d in {5..10}, exact"};
    const auto start = Clock::now();
    for (int d = 5; d <= 10; ++d) {
      std::string detail;
      if (!guarded([&](std::string* w) { return check_iass_large(2, d, w); }, &detail)) c.fail(grid_tag(2, d) + ": " + detail);
    }
    c.elapsed = seconds_since(start);
    criteria.push_back(c);
  }

  {  // 5. Polynomial invariants of every grid total.
    Criterion c{5,
                "polynomial invariants (nonneg, degree 2(d+2g-2), palindromic, "
                "(1+t)^{2g}-divisible, b0 = 1, b1 = 2g) for every grid window"};
    const auto start = Clock::now();
    for (int g = kGenusMin; g <= kGenusMax; ++g)
      for (int d = kDegreeMin; d <= kDegreeMax; ++d)
        for (int N = d / 2 + 1; N <= d; ++N) {
          std::string detail;
          if (!guarded([&](std::string* w) { return check_poly_invariants(g, d, N, w); }, &detail))
            c.fail(grid_tag(g, d, N) + ": " + detail);
        }
    c.elapsed = seconds_since(start);
    criteria.push_back(c);
  }

  {  // 6. Nongeneric wall totals.
    Criterion c{6,
                "nongeneric wall: total(tau = N) - total(window N) equals the "
                "omitted IIminus stratum and is certifiably non-polynomial"};
    const auto start = Clock::now();
    for (int g = kGenusMin; g <= kGenusMax; ++g)
      for (int d = kDegreeMin; d <= kDegreeMax; ++d)
        for (int N = d / 2 + 1; N <= d; ++N) {
          std::string detail;
          if (!guarded([&](std::string* w) { return check_nongeneric_wall(g, d, N, w); }, &detail))
            c.fail(grid_tag(g, d, N) + ": " + detail);
        }
    c.elapsed = seconds_since(start);
    criteria.push_back(c);
  }

  {  // 7. Cancellation identities at every wall.
    Criterion c{7,
                "cancellation: Ib - Ia - IIplus = 0 at every wall slope, and "
                "IIminus - IIplus at slope d-N equals the flip difference"};
    const auto start = Clock::now();
    for (int g = kGenusMin; g <= kGenusMax; ++g)
      for (int d = kDegreeMin; d <= kDegreeMax; ++d)
        for (int N = d / 2 + 1; N <= d - 1; ++N) {
          std::string detail;
          if (!guarded([&](std::string* w) { return check_cancellation(g, d, N, w); }, &detail))
            c.fail(grid_tag(g, d, N) + ": " + detail);
        }
    c.elapsed = seconds_since(start);
    criteria.push_back(c);
  }

  {  // 8. Stratification structure over random generic stability parameters.
    Criterion c{8,
                "stratification structure (minus-side bound, odd-degree gap, "
                "sign disjointness, slope multiplicity, twist embedding) over "
                "200 random generic tau per (g,d), fixed seed"};
    const auto start = Clock::now();
    for (int g = kGenusMin; g <= kGenusMax; ++g)
      for (int d = kDegreeMin; d <= kDegreeMax; ++d) {
        std::string detail;
        if (!guarded([&](std::string* w) { return check_strata_properties(g, d, 200, kDefaultSeed, w); }, &detail))
          c.fail(grid_tag(g, d) + ": " + detail);
      }
    c.elapsed = seconds_since(start);
    criteria.push_back(c);
  }

  {  // 9. Symmetric-product closed forms.
    Criterion c{9,
                "symmetric-product oracle: P(S^1) = 1 + 2g t + t^2 and the "
                "projective-bundle form for 2g-1 <= n <= 2g+4, g in {2,3}"};
    const auto start = Clock::now();
    for (int g = kGenusMin; g <= kGenusMax; ++g) {
      std::string detail;
      if (!guarded([&](std::string* w) { return check_sym_oracle(g, w); }, &detail))
        c.fail("g=" + std::to_string(g) + ": " + detail);
    }
    c.elapsed = seconds_since(start);
    criteria.push_back(c);
  }

  int failed = 0;
  for (const auto& c : criteria) {
    report(c);
    failed += c.pass ? 0 : 1;
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed;
}
