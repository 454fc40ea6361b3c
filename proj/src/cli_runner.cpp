#include "pairpoly/cli_runner.hpp"

#include "pairpoly/assembly.hpp"
#include "pairpoly/blocks.hpp"
#include "pairpoly/checks.hpp"
#include "pairpoly/strata.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pairpoly {

namespace {

using njson = nlohmann::ordered_json;

struct CommonOpts {
  int g = 2;
  int d = 0;
  int trunc = -1;  // -1: resolve from PAIRPOLY_TRUNC, then the default
  std::string format = "text";
  std::string out_path;
};

int parse_positive_int(const std::string& s, const std::string& what) {
  int value = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || value <= 0)
    throw std::invalid_argument(what + " must be a positive integer, got '" + s + "'");
  return value;
}

// Flag > environment (PAIRPOLY_TRUNC) > per-(g,d) default.
int resolve_trunc(int flag_value, int g, int d) {
  if (flag_value >= 0) {
    if (flag_value < 1)
      throw std::invalid_argument("truncation order must be positive");
    return flag_value;
  }
  if (const char* env = std::getenv("PAIRPOLY_TRUNC"); env && *env)
    return parse_positive_int(env, "PAIRPOLY_TRUNC");
  return default_trunc_order(g, d);
}

std::pair<int, int> parse_range(const std::string& s, const std::string& what) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) {
    const int v = parse_positive_int(s, what);
    return {v, v};
  }
  const int lo = parse_positive_int(s.substr(0, pos), what);
  const int hi = parse_positive_int(s.substr(pos + 2), what);
  if (lo > hi)
    throw std::invalid_argument(what + " range '" + s + "' is empty");
  return {lo, hi};
}

njson series_json(const TruncSeries& s) {
  njson arr = njson::array();
  for (const auto& coeff : s.c) arr.push_back(to_int64(coeff));
  return arr;
}

std::string series_csv(const TruncSeries& s) {
  std::string joined;
  for (std::size_t k = 0; k < s.c.size(); ++k) {
    if (k) joined += ';';
    joined += std::to_string(to_int64(s.c[k]));
  }
  return joined;
}

// Series rendered for humans: the truncation order is stated explicitly
// unless the tail is certifiably absent.
std::string series_text(const TruncSeries& s, bool polynomial) {
  std::string text = ps_to_string(s);
  if (!polynomial) text += " + O(t^" + std::to_string(s.trunc + 1) + ")";
  return text;
}

void write_payload(const std::string& payload, const std::string& out_path,
                   std::ostream& out) {
  if (out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(out_path);
  if (!file)
    throw std::invalid_argument("cannot open output file: " + out_path);
  file << payload;
}

std::string json_dump(const njson& j) { return j.dump(2) + "\n"; }

njson betti_json_body(const BettiTable& t, const ContributionLedger& led) {
  njson j;
  j["g"] = t.g;
  j["d"] = t.d;
  j["N"] = t.N;
  j["dim"] = t.dim;
  njson betti = njson::array();
  for (const auto& b : t.b) betti.push_back(to_int64(b));
  j["betti"] = betti;
  j["poincare_string"] = ps_to_string(led.total);
  njson checks;
  checks["degree"] = t.checks.degree;
  checks["nonneg"] = t.checks.nonneg;
  checks["duality"] = t.checks.duality;
  checks["divisibility"] = t.checks.divisibility;
  checks["b0"] = t.checks.b0;
  checks["b1"] = t.checks.b1;
  checks["euler"] = t.checks.euler;
  j["checks"] = checks;
  return j;
}

std::string betti_text_body(const BettiTable& t, const ContributionLedger& led) {
  std::ostringstream os;
  os << "rank-2 pair moduli: g = " << t.g << ", d = " << t.d << ", window N = "
     << t.N << "  (tau in (" << rational_to_string(Rational(std::max(t.d, 2 * t.N - 2), 2))
     << ", " << rational_to_string(Rational(t.N)) << "))\n";
  os << "complex dimension " << t.dim << ", truncation order " << t.D << "\n";
  os << "P(t) = " << ps_to_string(led.total) << "\n";
  os << "betti:";
  for (const auto& b : t.b) os << " " << b;
  os << "\n";
  const auto flag = [](bool ok) { return ok ? "pass" : "FAIL"; };
  os << "checks: degree=" << flag(t.checks.degree)
     << " nonneg=" << flag(t.checks.nonneg)
     << " duality=" << flag(t.checks.duality)
     << " divisibility=" << flag(t.checks.divisibility)
     << " b0=" << flag(t.checks.b0) << " b1=" << flag(t.checks.b1)
     << " euler=" << flag(t.checks.euler) << "\n";
  return os.str();
}

const char* first_failing_check(const BettiTable& t) {
  if (!t.checks.degree) return "degree";
  if (!t.checks.nonneg) return "nonneg";
  if (!t.checks.duality) return "duality";
  if (!t.checks.divisibility) return "divisibility";
  if (!t.checks.b0) return "b0";
  if (!t.checks.b1) return "b1";
  if (!t.checks.euler) return "euler";
  return nullptr;
}

int cmd_betti(const CommonOpts& opt, int N, bool with_ledger, std::ostream& out,
              std::ostream& err) {
  const int D = resolve_trunc(opt.trunc, opt.g, opt.d);
  const int top = 2 * (opt.d + 2 * opt.g - 2);
  if (D <= top)
    throw std::invalid_argument(
        "truncation order " + std::to_string(D) + " cannot certify a degree-" +
        std::to_string(top) + " polynomial; need at least " + std::to_string(top + 1));
  const ContributionLedger led = total_generic(opt.g, opt.d, N, D);
  const BettiTable table = make_betti_table(led);

  if (opt.format == "json") {
    njson j = betti_json_body(table, led);
    if (with_ledger) {
      njson entries = njson::array();
      for (const auto& [desc, series] : led.entries) {
        njson e;
        e["class"] = stratum_class_name(desc.cls);
        if (desc.j) e["j"] = *desc.j; else e["j"] = nullptr;
        e["delta"] = rational_to_string(desc.delta);
        e["series"] = series_json(series);
        entries.push_back(std::move(e));
      }
      j["ledger"] = entries;
    }
    write_payload(json_dump(j), opt.out_path, out);
  } else if (opt.format == "csv") {
    std::ostringstream os;
    if (with_ledger) {
      os << "class,j,delta,series\n";
      for (const auto& [desc, series] : led.entries) {
        os << stratum_class_name(desc.cls) << ",";
        if (desc.j) os << *desc.j;
        os << "," << rational_to_string(desc.delta) << "," << series_csv(series)
           << "\n";
      }
    } else {
      os << "k,b_k\n";
      for (std::size_t k = 0; k < table.b.size(); ++k)
        os << k << "," << table.b[k] << "\n";
    }
    write_payload(os.str(), opt.out_path, out);
  } else {
    std::ostringstream os;
    os << betti_text_body(table, led);
    if (with_ledger) {
      os << "ledger (" << led.entries.size() << " strata removed from the "
         << "classifying-space series):\n";
      for (const auto& [desc, series] : led.entries) {
        os << "  " << std::setw(8) << std::left << stratum_class_name(desc.cls)
           << " j=" << std::setw(4) << std::left
           << (desc.j ? std::to_string(*desc.j) : "-")
           << " delta=" << std::setw(8) << std::left
           << rational_to_string(desc.delta) << " " << series_text(series, false)
           << "\n";
      }
    }
    write_payload(os.str(), opt.out_path, out);
  }

  if (const char* failing = first_failing_check(table)) {
    err << "invariant check failed: " << failing << "\n";
    return 1;
  }
  return 0;
}

int cmd_strata(const CommonOpts& opt, const std::string& tau_str, int j_max_flag,
               std::ostream& out, std::ostream& err) {
  const Rational tau = parse_rational(tau_str);
  const ModuliParams params{opt.g, opt.d, tau};
  validate_params(params);
  if (!is_generic(params)) {
    const char* rule = (opt.d % 2 == 0)
                           ? "2*tau is integral and d is even"
                           : "4*tau is integral and d is odd";
    throw std::domain_error("tau = " + rational_to_string(tau) +
                            " lies in the wall set C_d (" + rule +
                            "); pick a generic stability parameter");
  }
  const int D = resolve_trunc(opt.trunc, opt.g, opt.d);
  const int j_max = (j_max_flag >= 0) ? j_max_flag : default_j_max(opt.d, D, opt.g);
  const DeltaIndex index = enumerate_delta(params, j_max);

  if (opt.format == "json") {
    njson j;
    j["g"] = opt.g;
    j["d"] = opt.d;
    j["tau"] = rational_to_string(tau);
    j["dim"] = opt.d + 2 * opt.g - 2;
    j["j_max"] = index.j_max;
    njson strata = njson::array();
    for (const auto& s : index.strata) {
      njson e;
      e["class"] = stratum_class_name(s.cls);
      if (s.j) e["j"] = *s.j; else e["j"] = nullptr;
      e["delta"] = rational_to_string(s.delta);
      if (s.sigma) e["sigma"] = *s.sigma; else e["sigma"] = nullptr;
      if (s.cls == StratumClass::OPEN)
        e["series"] = nullptr;
      else
        e["series"] = series_json(critical_set_poincare(s, opt.g, opt.d, D));
      strata.push_back(std::move(e));
    }
    j["strata"] = strata;
    write_payload(json_dump(j), opt.out_path, out);
  } else if (opt.format == "csv") {
    std::ostringstream os;
    os << "class,j,delta,sigma\n";
    for (const auto& s : index.strata) {
      os << stratum_class_name(s.cls) << ",";
      if (s.j) os << *s.j;
      os << "," << rational_to_string(s.delta) << ",";
      if (s.sigma) os << *s.sigma;
      os << "\n";
    }
    write_payload(os.str(), opt.out_path, out);
  } else {
    std::ostringstream os;
    os << "stratification: g = " << opt.g << ", d = " << opt.d
       << ", tau = " << rational_to_string(tau) << " (generic), j_max = "
       << index.j_max << ", " << index.strata.size() << " strata\n";
    for (const auto& s : index.strata) {
      os << "  " << std::setw(8) << std::left << stratum_class_name(s.cls)
         << " j=" << std::setw(4) << std::left
         << (s.j ? std::to_string(*s.j) : "-") << " delta=" << std::setw(8)
         << std::left << rational_to_string(s.delta) << " sigma="
         << std::setw(4) << std::left
         << (s.sigma ? std::to_string(*s.sigma) : "-");
      if (s.cls == StratumClass::OPEN)
        os << " (open stratum)";
      else
        os << " " << series_text(critical_set_poincare(s, opt.g, opt.d, D), false);
      os << "\n";
    }
    write_payload(os.str(), opt.out_path, out);
  }
  (void)err;
  return 0;
}

int cmd_flip(const CommonOpts& opt, int N, bool fixed_det, std::ostream& out,
             std::ostream& err) {
  const int D = resolve_trunc(opt.trunc, opt.g, opt.d);
  // flip_difference validates d/2 < N <= d - 1.
  const TruncSeries closed = flip_difference(opt.g, opt.d, N, D, false);
  const TruncSeries below = total_generic(opt.g, opt.d, N, D).total;
  const TruncSeries above = total_generic(opt.g, opt.d, N + 1, D).total;
  const TruncSeries diff = ps_sub(above, below);
  const bool equal = ps_equal(diff, closed);

  const Rational tau_below = Rational(3 * N - 1, 3);
  const Rational tau_above = Rational(3 * N + 1, 3);
  const int j_max = default_j_max(opt.d, D, opt.g);
  const DeltaIndex from = enumerate_delta({opt.g, opt.d, tau_below}, j_max);
  const FlipResult flip = flip_map({opt.g, opt.d, tau_below}, from, tau_above);
  int retyped_count = 0;
  for (const auto& m : flip.matched) retyped_count += m.retyped ? 1 : 0;
  const int preserved = static_cast<int>(flip.matched.size()) - retyped_count;

  if (opt.format == "json") {
    njson j;
    j["g"] = opt.g;
    j["d"] = opt.d;
    j["N"] = N;
    j["dim"] = opt.d + 2 * opt.g - 2;
    j["tau_below"] = rational_to_string(tau_below);
    j["tau_above"] = rational_to_string(tau_above);
    j["fixed_det"] = fixed_det;
    j["closed_form"] = series_json(closed);
    j["closed_form_string"] = ps_to_string(closed);
    if (fixed_det) {
      const TruncSeries fd = flip_difference(opt.g, opt.d, N, D, true);
      j["fixed_det_closed_form"] = series_json(fd);
      j["fixed_det_closed_form_string"] = ps_to_string(fd);
    }
    j["total_difference"] = series_json(diff);
    j["equal"] = equal;
    njson corr;
    njson created = njson::array();
    for (int idx : flip.created) {
      const auto& s = flip.to.strata[static_cast<std::size_t>(idx)];
      njson e;
      e["class"] = stratum_class_name(s.cls);
      if (s.j) e["j"] = *s.j; else e["j"] = nullptr;
      e["delta"] = rational_to_string(s.delta);
      created.push_back(std::move(e));
    }
    corr["created"] = created;
    njson annihilated = njson::array();
    for (int idx : flip.annihilated) {
      const auto& s = from.strata[static_cast<std::size_t>(idx)];
      njson e;
      e["class"] = stratum_class_name(s.cls);
      if (s.j) e["j"] = *s.j; else e["j"] = nullptr;
      e["delta"] = rational_to_string(s.delta);
      annihilated.push_back(std::move(e));
    }
    corr["annihilated"] = annihilated;
    njson retyped = njson::array();
    for (const auto& m : flip.matched) {
      if (!m.retyped) continue;
      const auto& a = from.strata[static_cast<std::size_t>(m.from_index)];
      const auto& b = flip.to.strata[static_cast<std::size_t>(m.to_index)];
      njson e;
      e["from_class"] = stratum_class_name(a.cls);
      e["to_class"] = stratum_class_name(b.cls);
      e["j"] = a.j ? njson(*a.j) : njson(nullptr);
      e["delta_from"] = rational_to_string(a.delta);
      e["delta_to"] = rational_to_string(b.delta);
      retyped.push_back(std::move(e));
    }
    corr["retyped"] = retyped;
    corr["preserved"] = preserved;
    j["correspondence"] = corr;
    write_payload(json_dump(j), opt.out_path, out);
  } else if (opt.format == "csv") {
    std::ostringstream os;
    os << (fixed_det ? "k,closed_form,total_difference,fixed_det_closed_form\n"
                     : "k,closed_form,total_difference\n");
    const TruncSeries fd =
        fixed_det ? flip_difference(opt.g, opt.d, N, D, true) : TruncSeries::zero(D);
    for (int k = 0; k <= D; ++k) {
      os << k << "," << closed.coeff(k) << "," << diff.coeff(k);
      if (fixed_det) os << "," << fd.coeff(k);
      os << "\n";
    }
    write_payload(os.str(), opt.out_path, out);
  } else {
    std::ostringstream os;
    os << "flip across the wall N = " << N << " (tau: "
       << rational_to_string(tau_below) << " -> " << rational_to_string(tau_above)
       << "), g = " << opt.g << ", d = " << opt.d << "\n";
    os << "closed-form difference:      " << ps_to_string(closed) << "\n";
    os << "total(N+1) - total(N):       " << ps_to_string(diff) << "\n";
    if (fixed_det)
      os << "fixed-determinant variant:   "
         << ps_to_string(flip_difference(opt.g, opt.d, N, D, true)) << "\n";
    os << "verdict: " << (equal ? "EQUAL" : "MISMATCH") << "\n";
    os << "correspondence: " << flip.created.size() << " created, "
       << flip.annihilated.size() << " annihilated, " << retyped_count
       << " retyped (Ib -> Ia), " << preserved << " preserved\n";
    for (int idx : flip.created) {
      const auto& s = flip.to.strata[static_cast<std::size_t>(idx)];
      os << "  created:     " << stratum_class_name(s.cls) << " j="
         << (s.j ? std::to_string(*s.j) : "-") << " delta="
         << rational_to_string(s.delta) << "\n";
    }
    for (int idx : flip.annihilated) {
      const auto& s = from.strata[static_cast<std::size_t>(idx)];
      os << "  annihilated: " << stratum_class_name(s.cls) << " j="
         << (s.j ? std::to_string(*s.j) : "-") << " delta="
         << rational_to_string(s.delta) << "\n";
    }
    write_payload(os.str(), opt.out_path, out);
  }

  if (!equal) {
    err << "flip closed form disagrees with the subtraction of totals "
           "(engine bug)\n";
    return 1;
  }
  return 0;
}

int cmd_verify(const std::string& g_range, const std::string& d_range,
               const std::vector<std::string>& only, int samples,
               std::uint64_t seed, const std::string& format,
               const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  VerifyOptions opt;
  std::tie(opt.g_min, opt.g_max) = parse_range(g_range, "--g");
  std::tie(opt.d_min, opt.d_max) = parse_range(d_range, "--d");
  opt.only = only;
  opt.samples = samples;
  opt.seed = seed;
  const std::vector<CheckResult> results = run_verify(opt);
  const long failed =
      std::count_if(results.begin(), results.end(),
                    [](const CheckResult& r) { return !r.pass; });

  if (format == "json") {
    njson j;
    j["g_min"] = opt.g_min;
    j["g_max"] = opt.g_max;
    j["d_min"] = opt.d_min;
    j["d_max"] = opt.d_max;
    j["samples"] = opt.samples;
    j["seed"] = opt.seed;
    njson arr = njson::array();
    for (const auto& r : results) {
      njson e;
      e["check"] = r.check;
      e["g"] = r.g;
      e["d"] = r.d >= 0 ? njson(r.d) : njson(nullptr);
      e["N"] = r.N >= 0 ? njson(r.N) : njson(nullptr);
      e["pass"] = r.pass;
      e["detail"] = r.detail;
      arr.push_back(std::move(e));
    }
    j["results"] = arr;
    j["passed"] = static_cast<long>(results.size()) - failed;
    j["failed"] = failed;
    j["all_pass"] = (failed == 0);
    write_payload(json_dump(j), out_path, out);
  } else if (format == "csv") {
    std::ostringstream os;
    os << "check,g,d,N,pass\n";
    for (const auto& r : results) {
      os << r.check << "," << r.g << ",";
      if (r.d >= 0) os << r.d;
      os << ",";
      if (r.N >= 0) os << r.N;
      os << "," << (r.pass ? "true" : "false") << "\n";
    }
    write_payload(os.str(), out_path, out);
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      os << (r.pass ? "[PASS]" : "[FAIL]") << " check=" << r.check
         << " g=" << r.g;
      os << " d=";
      if (r.d >= 0) os << r.d; else os << "-";
      os << " N=";
      if (r.N >= 0) os << r.N; else os << "-";
      if (!r.pass && !r.detail.empty()) os << "  -- " << r.detail;
      os << "\n";
    }
    os << "summary: " << (results.size() - static_cast<std::size_t>(failed))
       << "/" << results.size() << " checks passed\n";
    write_payload(os.str(), out_path, out);
  }

  if (failed > 0) {
    err << failed << " verification check(s) failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact Poincaré-series engine for moduli of rank-2 stable pairs"};
  app.require_subcommand(1);

  const auto add_common = [](CLI::App* sub, CommonOpts& opt, bool with_trunc = true) {
    sub->add_option("--g", opt.g, "genus of the surface (>= 2)")
        ->capture_default_str();
    sub->add_option("--d", opt.d, "degree of the rank-2 pair")->required();
    if (with_trunc)
      sub->add_option("--trunc", opt.trunc,
                      "series truncation order (default: PAIRPOLY_TRUNC "
                      "or 2(d+2g-2)+8)");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out_path, "write output to a file");
  };

  CommonOpts betti_opt;
  int betti_N = 0;
  CLI::App* betti = app.add_subcommand(
      "betti", "Betti table of the moduli space for a window N");
  add_common(betti, betti_opt);
  betti->add_option("--N", betti_N, "stability window (d/2 < N <= d)")->required();

  CommonOpts ledger_opt;
  int ledger_N = 0;
  CLI::App* ledger = app.add_subcommand(
      "ledger", "Betti table plus the per-stratum contribution ledger");
  add_common(ledger, ledger_opt);
  ledger->add_option("--N", ledger_N, "stability window (d/2 < N <= d)")->required();

  CommonOpts strata_opt;
  std::string strata_tau;
  int strata_jmax = -1;
  CLI::App* strata = app.add_subcommand(
      "strata", "enumerate the stratification index for a generic tau");
  add_common(strata, strata_opt);
  strata->add_option("--tau", strata_tau, "stability parameter as p/q")->required();
  strata->add_option("--jmax", strata_jmax,
                     "slope cutoff for the infinite family (default: engine cutoff)");

  CommonOpts flip_opt;
  int flip_N = 0;
  bool flip_fixed_det = false;
  CLI::App* flip = app.add_subcommand(
      "flip", "wall-crossing report at an integer wall N");
  add_common(flip, flip_opt);
  flip->add_option("--N", flip_N, "flip wall (d/2 < N <= d-1)")->required();
  flip->add_flag("--fixed-det", flip_fixed_det,
                 "also report the fixed-determinant difference");

  std::string verify_g = "2..3";
  std::string verify_d = "3..8";
  std::vector<std::string> verify_only;
  int verify_samples = kDefaultSamples;
  std::uint64_t verify_seed = kDefaultSeed;
  std::string verify_format = "text";
  std::string verify_out;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the identity/property battery over a (g, d) grid");
  verify->add_option("--g", verify_g, "genus or genus range a..b")
      ->capture_default_str();
  verify->add_option("--d", verify_d, "degree or degree range a..b")
      ->capture_default_str();
  verify->add_option("--only", verify_only,
                     "restrict to the named checks (repeatable)")
      ->delimiter(',');
  verify->add_option("--samples", verify_samples,
                     "random stability parameters per (g, d)")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "base RNG seed")
      ->capture_default_str();
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  verify->add_option("--out", verify_out, "write output to a file");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("pairpoly");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (betti->parsed())
      return cmd_betti(betti_opt, betti_N, /*with_ledger=*/false, out, err);
    if (ledger->parsed())
      return cmd_betti(ledger_opt, ledger_N, /*with_ledger=*/true, out, err);
    if (strata->parsed())
      return cmd_strata(strata_opt, strata_tau, strata_jmax, out, err);
    if (flip->parsed())
      return cmd_flip(flip_opt, flip_N, flip_fixed_det, out, err);
    if (verify->parsed())
      return cmd_verify(verify_g, verify_d, verify_only, verify_samples,
                        verify_seed, verify_format, verify_out, out, err);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace pairpoly
