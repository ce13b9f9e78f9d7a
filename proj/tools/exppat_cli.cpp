#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "exppat/coloring.hpp"
#include "exppat/density.hpp"
#include "exppat/dimacs.hpp"
#include "exppat/error.hpp"
#include "exppat/extract.hpp"
#include "exppat/integer_set.hpp"
#include "exppat/pattern.hpp"
#include "exppat/search.hpp"

using namespace exppat;

namespace {

constexpr int kExitWitness = 0;
constexpr int kExitNone = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitRecheck = 4;

SearchBudget env_budget() {
  SearchBudget b;
  if (const char* s = std::getenv("EXPPAT_MAX_NODES")) b.max_nodes = std::stoull(s);
  if (const char* s = std::getenv("EXPPAT_MAX_VALUE")) b.max_value = parse_nat(s);
  return b;
}

struct BudgetFlags {
  uint64_t max_nodes;
  std::string max_value;
  double time_hint = 60.0;

  BudgetFlags() {
    SearchBudget e = env_budget();
    max_nodes = e.max_nodes;
    max_value = e.max_value.get_str();
  }

  SearchBudget to_budget() const {
    SearchBudget b;
    b.max_nodes = max_nodes;
    b.max_value = parse_nat(max_value);
    b.time_hint = time_hint;
    return b;
  }
};

void add_budget_flags(CLI::App* sub, BudgetFlags& f) {
  sub->add_option("--max-nodes", f.max_nodes, "search node budget");
  sub->add_option("--max-value", f.max_value, "cap on pattern member values");
  sub->add_option("--time-hint", f.time_hint, "advisory time budget in seconds");
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) fail(Errc::BadArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) fail(Errc::BadArgument, "cannot open " + path + " for writing");
  f << text;
}

std::string braces(const std::vector<uint64_t>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

int recheck_failed() {
  std::cerr << "RECHECK FAILED\n";
  return kExitRecheck;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::NotThickEnough:
    case Errc::NoWitnessInWindow:
    case Errc::NoRichColor:
    case Errc::NoWitnessInBudget:
      return kExitNone;
    default:
      return kExitUsage;
  }
}

bool witness_consistent(const Coloring& c, const Witness& w) {
  if (!w.recompute_ok() || !w.color) return false;
  for (const Nat& v : w.values) {
    if (v < c.lo || v > c.hi) return false;
    if (c.color_of(v.get_ui()) != *w.color) return false;
  }
  return true;
}

}  // anonymous namespace

int main(int argc, char** argv) {
  CLI::App app{"search and certification for monochromatic exponential patterns"};
  app.require_subcommand(1);
  int rc = 0;

  // verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "find a monochromatic instance in a coloring file");
  std::string verify_path, verify_pattern = "schur";
  bool verify_recheck = false;
  verify->add_option("file", verify_path, "coloring file (`-` = stdin)")->required();
  verify->add_option("--pattern", verify_pattern, "pattern, e.g. schur, ap(3), brauer(2), exp2");
  verify->add_flag("--recheck", verify_recheck, "re-validate the printed witness");
  verify->callback([&] {
    Coloring c = parse_coloring(read_input(verify_path));
    PatternSpec p = PatternSpec::parse(verify_pattern);
    auto w = find_monochromatic(c, p);
    if (!w) {
      std::cout << "NONE\n";
      rc = kExitNone;
      return;
    }
    std::cout << w->line() << "\n";
    if (verify_recheck && !witness_consistent(c, *w)) {
      rc = recheck_failed();
      return;
    }
    rc = kExitWitness;
  });

  // search ----------------------------------------------------------------
  auto* search = app.add_subcommand("search", "search for a pattern-avoiding coloring");
  uint64_t search_n = 1;
  int search_r = 2, search_jobs = 1;
  std::string search_pattern = "schur", search_dimacs;
  bool search_nosym = false, search_recheck = false;
  BudgetFlags search_budget;
  search->add_option("N", search_n, "window size [1, N]")->required();
  search->add_option("r", search_r, "number of colors")->required();
  search->add_option("--pattern", search_pattern, "pattern to avoid");
  search->add_option("--jobs", search_jobs, "worker threads for the subtree split");
  search->add_flag("--no-symmetry", search_nosym, "disable symmetry breaking");
  search->add_option("--dimacs", search_dimacs, "also write the CNF encoding to this file");
  search->add_flag("--recheck", search_recheck, "re-validate a Found coloring");
  add_budget_flags(search, search_budget);
  search->callback([&] {
    PatternSpec p = PatternSpec::parse(search_pattern);
    if (!search_dimacs.empty()) write_output(search_dimacs, export_dimacs(search_n, search_r, p).text());
    SearchOptions opts;
    opts.symmetry_breaking = !search_nosym;
    opts.jobs = search_jobs;
    SearchResult res = search_avoiding(search_n, search_r, p, search_budget.to_budget(), opts);
    if (res.outcome == SearchOutcome::Found) {
      std::cout << format_coloring(*res.coloring);
      if (search_recheck && find_monochromatic(*res.coloring, p)) {
        rc = recheck_failed();
        return;
      }
      rc = kExitWitness;
    } else if (res.outcome == SearchOutcome::Exhausted) {
      std::cout << "EXHAUSTED\n";
      rc = kExitNone;
    } else {
      std::cout << "BUDGET\n";
      rc = kExitBudget;
    }
  });

  // pattern-number --------------------------------------------------------
  auto* pnum = app.add_subcommand("pattern-number", "least N with no avoiding coloring");
  int pnum_r = 2;
  uint64_t pnum_nmax = 32;
  int pnum_jobs = 1;
  std::string pnum_pattern = "schur";
  bool pnum_recheck = false;
  BudgetFlags pnum_budget;
  pnum->add_option("r", pnum_r, "number of colors")->required();
  pnum->add_option("--pattern", pnum_pattern, "pattern");
  pnum->add_option("--n-max", pnum_nmax, "scan bound");
  pnum->add_option("--jobs", pnum_jobs, "worker threads");
  pnum->add_flag("--recheck", pnum_recheck, "re-run the search at the reported value");
  add_budget_flags(pnum, pnum_budget);
  pnum->callback([&] {
    PatternSpec p = PatternSpec::parse(pnum_pattern);
    SearchOptions opts;
    opts.jobs = pnum_jobs;
    auto res = pattern_number(pnum_r, p, pnum_nmax, pnum_budget.to_budget(), opts);
    if (!res.value) {
      std::cout << "UNKNOWN\n";
      rc = kExitBudget;
      return;
    }
    std::cout << *res.value << "\n";
    if (pnum_recheck) {
      SearchBudget b = pnum_budget.to_budget();
      bool ok = search_avoiding(*res.value, pnum_r, p, b, opts).outcome == SearchOutcome::Exhausted;
      if (ok && *res.value > 1)
        ok = search_avoiding(*res.value - 1, pnum_r, p, b, opts).outcome == SearchOutcome::Found;
      if (!ok) {
        rc = recheck_failed();
        return;
      }
    }
    rc = kExitWitness;
  });

  // extract ---------------------------------------------------------------
  auto* extract = app.add_subcommand("extract", "run a proof extraction with a full audit report");
  std::string ex_set, ex_mode = "triple";
  uint64_t ex_n = 2, ex_w = 1000, ex_tau = 250, ex_scan = 64;
  bool ex_recheck = false;
  BudgetFlags ex_budget;
  extract->add_option("--set", ex_set, "target set expression, e.g. \"mod 0 3\"")->required();
  extract->add_option("--mode", ex_mode, "triple | sequence")
      ->check(CLI::IsMember({"triple", "sequence"}));
  extract->add_option("--n", ex_n, "stages for sequence mode (yields a_1..a_{2n+1})");
  extract->add_option("--oracle-w", ex_w, "largeness window W");
  extract->add_option("--oracle-tau", ex_tau, "largeness threshold tau");
  extract->add_option("--scan-max", ex_scan, "bound for the least-element scans over A-hat");
  extract->add_flag("--recheck", ex_recheck, "re-verify the reported memberships");
  add_budget_flags(extract, ex_budget);
  extract->callback([&] {
    IntegerSet a = IntegerSet::parse(ex_set);
    LargenessOracle oracle{ex_w, ex_tau};
    if (ex_mode == "triple") {
      auto res = extract_exp2_triple(a, oracle, ex_budget.to_budget(), ex_scan);
      std::cout << res.report.to_text();
      if (!res.report.success()) {
        rc = kExitNone;
        return;
      }
      if (ex_recheck) {
        ExpValue big = ExpValue::prod({ExpValue::pow2(*res.x), ExpValue::num(*res.y)});
        if (!a.contains(*res.x) || !a.contains(*res.y) || !a.contains(big)) {
          rc = recheck_failed();
          return;
        }
      }
      rc = kExitWitness;
    } else {
      auto res = extract_exp_sequence(a, oracle, ex_n, ex_budget.to_budget(), ex_scan);
      std::cout << res.report.to_text();
      if (!res.report.success()) {
        rc = kExitNone;
        return;
      }
      if (ex_recheck && !verify_infinite_pattern(res.seq, a, VerifyMode::Exp2).success()) {
        rc = recheck_failed();
        return;
      }
      rc = kExitWitness;
    }
  });

  // density ---------------------------------------------------------------
  auto* density = app.add_subcommand("density", "exact window counts and density ratios");
  std::string den_set;
  uint64_t den_min = 1, den_max = 1000;
  density->add_option("--set", den_set, "set expression")->required();
  density->add_option("--n-min", den_min, "ratio window start");
  density->add_option("--n-max", den_max, "ratio window end");
  density->callback([&] {
    IntegerSet a = IntegerSet::parse(den_set);
    DensityProfile prof = density_profile(a, den_min, den_max);
    std::cout << "count " << prof.counts.back() << "/" << den_max << "\n";
    std::cout << "min " << prof.min_ratio.get_str() << "\n";
    std::cout << "max " << prof.max_ratio.get_str() << "\n";
    rc = kExitWitness;
  });

  // delta -----------------------------------------------------------------
  auto* delta = app.add_subcommand("delta", "difference-set witness from a thick set");
  std::string del_set;
  uint64_t del_m = 3, del_lo = 1, del_hi = 1000, del_ell = 0;
  bool del_recheck = false;
  delta->add_option("--set", del_set, "set expression")->required();
  delta->add_option("--m", del_m, "witness size");
  delta->add_option("--lo", del_lo, "window start");
  delta->add_option("--hi", del_hi, "window end");
  delta->add_option("--ell", del_ell, "also produce b, c with b, c, b+ell*c in the set");
  delta->add_flag("--recheck", del_recheck, "re-validate the witness memberships");
  delta->callback([&] {
    IntegerSet a = IntegerSet::parse(del_set);
    Window win{del_lo, del_hi};
    std::vector<uint64_t> x = thick_to_delta(a, del_m, win);
    std::cout << "X = " << braces(x) << "\n";
    std::cout << "delta(X) = " << braces(difference_list(x)) << "\n";
    bool ok = true;
    for (uint64_t d : difference_list(x)) ok = ok && a.contains(d);
    if (del_ell > 0) {
      auto [b, c] = gen_schur_from_delta(a, x, del_ell, win);
      uint64_t third = b + del_ell * c;
      std::cout << "b=" << b << " c=" << c << " triple {" << b << ", " << c << ", " << third
                << "}\n";
      ok = ok && a.contains(b) && a.contains(c) && a.contains(third);
    }
    if (del_recheck && !ok) {
      rc = recheck_failed();
      return;
    }
    rc = kExitWitness;
  });

  // gamma -----------------------------------------------------------------
  auto* gamma = app.add_subcommand("gamma", "joint all-in-or-all-out witness for several sets");
  std::vector<std::string> gam_sets;
  std::vector<uint64_t> gam_ells;
  bool gam_recheck = false;
  BudgetFlags gam_budget;
  gamma->add_option("--set", gam_sets, "set expression (repeat per pair)")->required();
  gamma->add_option("--ell", gam_ells, "coefficient (repeat per pair)")->required();
  gamma->add_flag("--recheck", gam_recheck, "re-validate the verdicts");
  add_budget_flags(gamma, gam_budget);
  gamma->callback([&] {
    if (gam_sets.size() != gam_ells.size())
      fail(Errc::BadArgument, "need one --ell per --set");
    std::vector<std::pair<IntegerSet, uint64_t>> pairs;
    for (size_t j = 0; j < gam_sets.size(); ++j)
      pairs.emplace_back(IntegerSet::parse(gam_sets[j]), gam_ells[j]);
    auto [b, c] = gamma_witness(pairs, gam_budget.to_budget());
    std::cout << "b=" << b << " c=" << c << "\n";
    bool ok = true;
    for (size_t j = 0; j < pairs.size(); ++j) {
      const auto& [s, ell] = pairs[j];
      bool in_b = s.contains(b), in_c = s.contains(c), in_t = s.contains(b + ell * c);
      bool all_in = in_b && in_c && in_t;
      bool all_out = !in_b && !in_c && !in_t;
      ok = ok && (all_in || all_out);
      std::cout << "j=" << j + 1 << ": " << (all_in ? "in" : all_out ? "out" : "mixed") << "\n";
    }
    if (gam_recheck && !ok) {
      rc = recheck_failed();
      return;
    }
    rc = kExitWitness;
  });

  // export-dimacs ---------------------------------------------------------
  auto* exd = app.add_subcommand("export-dimacs", "emit the avoidance CNF");
  uint64_t exd_n = 1;
  int exd_r = 2;
  std::string exd_pattern = "schur", exd_out;
  exd->add_option("N", exd_n, "window size")->required();
  exd->add_option("r", exd_r, "number of colors")->required();
  exd->add_option("--pattern", exd_pattern, "pattern");
  exd->add_option("--out", exd_out, "output file (default: stdout)");
  exd->callback([&] {
    std::string text = export_dimacs(exd_n, exd_r, PatternSpec::parse(exd_pattern)).text();
    if (exd_out.empty())
      std::cout << text;
    else
      write_output(exd_out, text);
    rc = kExitWitness;
  });

  // check-model -----------------------------------------------------------
  auto* chk = app.add_subcommand("check-model", "decode a solver model and verify it avoids");
  uint64_t chk_n = 1;
  int chk_r = 2;
  std::string chk_pattern = "schur", chk_model;
  chk->add_option("N", chk_n, "window size")->required();
  chk->add_option("r", chk_r, "number of colors")->required();
  chk->add_option("--pattern", chk_pattern, "pattern");
  chk->add_option("--model", chk_model, "solver output file (`-` = stdin)")->required();
  chk->callback([&] {
    PatternSpec p = PatternSpec::parse(chk_pattern);
    Coloring c = decode_dimacs_model(read_input(chk_model), chk_n, chk_r);
    std::cout << format_coloring(c);
    auto w = find_monochromatic(c, p);
    if (w) {
      std::cout << "BAD " << w->line() << "\n";
      rc = kExitNone;
    } else {
      std::cout << "OK\n";
      rc = kExitWitness;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "ERROR " << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "ERROR: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
