#include "exppat/search.hpp"

#include <algorithm>
#include <thread>

#include "exppat/error.hpp"

namespace exppat {

void for_each_instance(const PatternSpec& p, uint64_t n,
                       const std::function<bool(const Instance&)>& f) {
  p.validate();
  if (n < 1) fail(Errc::BadArgument, "window bound must be positive");
  uint64_t start = std::max<uint64_t>(p.min_element, 1);
  PatternSpec raw = p;  // distinctness-filtered slots still occupy the window
  raw.require_distinct = false;
  for (uint64_t s0 = start; s0 <= n; ++s0) {
    uint64_t s1_start = (p.kind == PatternKind::Schur) ? s0
                        : (p.kind == PatternKind::Ap)  ? 1
                                                       : start;
    bool any = false;
    for (uint64_t s1 = s1_start; s1 <= n; ++s1) {
      auto vals = p.members_within(s0, s1, n);
      if (!vals) {
        if (p.require_distinct && raw.members_within(s0, s1, n)) {
          any = true;  // repeated members, but the window still fits
          continue;
        }
        break;  // the largest member grows with s1
      }
      any = true;
      Instance ins;
      ins.s0 = s0;
      ins.s1 = s1;
      ins.values = std::move(*vals);
      if (!f(ins)) return;
    }
    if (!any && s1_start <= n) break;  // it grows with s0 as well
  }
}

std::vector<Instance> enumerate_instances(const PatternSpec& p, uint64_t n) {
  std::vector<Instance> out;
  for_each_instance(p, n, [&](const Instance& ins) {
    out.push_back(ins);
    return true;
  });
  return out;
}

std::optional<Witness> find_monochromatic(const Coloring& c, const PatternSpec& p) {
  validate_coloring(c);
  std::optional<Witness> found;
  if (c.lo != 1) return found;  // colorings are windows [1, N]
  for_each_instance(p, c.hi, [&](const Instance& ins) {
    int col = c.color_of(ins.values[0]);
    for (uint64_t v : ins.values)
      if (c.color_of(v) != col) return true;
    Witness w;
    w.pattern = p;
    w.slots = {Nat(ins.s0), Nat(ins.s1)};
    for (uint64_t v : ins.values) w.values.emplace_back(v);
    w.color = col;
    found = std::move(w);
    return false;
  });
  return found;
}

namespace {

struct Problem {
  uint64_t n;
  int r;
  bool sym;
  std::vector<Instance> instances;
  std::vector<std::vector<uint32_t>> by_max;  // instance indices keyed by largest member
};

Problem build_problem(uint64_t n, int r, const PatternSpec& p, bool sym) {
  Problem pr;
  pr.n = n;
  pr.r = r;
  pr.sym = sym;
  pr.instances = enumerate_instances(p, n);
  pr.by_max.assign(n + 1, {});
  for (uint32_t i = 0; i < pr.instances.size(); ++i)
    pr.by_max[pr.instances[i].max_value()].push_back(i);
  return pr;
}

struct Searcher {
  const Problem& pr;
  uint64_t max_nodes;
  uint64_t nodes = 0;
  std::vector<int> color;

  explicit Searcher(const Problem& p, uint64_t budget)
      : pr(p), max_nodes(budget), color(p.n, -1) {}

  bool mono_conflict(uint64_t v) const {
    for (uint32_t idx : pr.by_max[v]) {
      const Instance& ins = pr.instances[idx];
      int col = color[ins.values[0] - 1];
      bool mono = true;
      for (uint64_t val : ins.values)
        if (color[val - 1] != col) {
          mono = false;
          break;
        }
      if (mono) return true;
    }
    return false;
  }

  // 0 = found (color[] complete), 1 = exhausted, 2 = budget
  int dfs(uint64_t v, int used) {
    if (v > pr.n) return 0;
    int cmax = pr.sym ? std::min(used, pr.r - 1) : pr.r - 1;
    for (int col = 0; col <= cmax; ++col) {
      if (++nodes > max_nodes) return 2;
      color[v - 1] = col;
      if (!mono_conflict(v)) {
        int res = dfs(v + 1, pr.sym ? std::max(used, col + 1) : used);
        if (res != 1) return res;
      }
    }
    color[v - 1] = -1;
    return 1;
  }

  // Assign a fixed prefix (colors for 1..d), then search below it.
  int run_prefix(const std::vector<int>& prefix) {
    int used = 0;
    for (uint64_t v = 1; v <= prefix.size(); ++v) {
      if (++nodes > max_nodes) return 2;
      color[v - 1] = prefix[v - 1];
      used = std::max(used, prefix[v - 1] + 1);
      if (mono_conflict(v)) {
        std::fill(color.begin(), color.begin() + v, -1);
        return 1;
      }
    }
    int res = dfs(prefix.size() + 1, used);
    if (res == 1) std::fill(color.begin(), color.begin() + prefix.size(), -1);
    return res;
  }
};

void gen_prefixes(const Problem& pr, uint64_t depth, std::vector<int>& cur, int used,
                  std::vector<std::vector<int>>& out) {
  if (cur.size() == depth) {
    out.push_back(cur);
    return;
  }
  int cmax = pr.sym ? std::min(used, pr.r - 1) : pr.r - 1;
  for (int col = 0; col <= cmax; ++col) {
    cur.push_back(col);
    gen_prefixes(pr, depth, cur, std::max(used, col + 1), out);
    cur.pop_back();
  }
}

Coloring make_coloring(uint64_t n, int r, const std::vector<int>& color) {
  Coloring c;
  c.lo = 1;
  c.hi = n;
  c.r = r;
  c.assign = color;
  return c;
}

}  // namespace

SearchResult search_avoiding(uint64_t n, int r, const PatternSpec& p, const SearchBudget& budget,
                             const SearchOptions& opts) {
  p.validate();
  if (n < 1 || r < 1) fail(Errc::BadArgument, "window and color count must be positive");
  if (budget.max_nodes == 0) fail(Errc::BadArgument, "node budget must be positive");
  Problem pr = build_problem(n, r, p, opts.symmetry_breaking);
  SearchResult result;

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    Searcher s(pr, budget.max_nodes);
    int res = s.dfs(1, 0);
    result.nodes = s.nodes;
    result.outcome = res == 0   ? SearchOutcome::Found
                     : res == 1 ? SearchOutcome::Exhausted
                                : SearchOutcome::BudgetExceeded;
    if (res == 0) result.coloring = make_coloring(n, r, s.color);
    return result;
  }

  // Split the tree at a fixed depth into color prefixes, in lexicographic
  // order; worker w owns prefixes w, w+jobs, ... . Merging by prefix order
  // keeps the reported coloring independent of thread timing.
  uint64_t depth = 0;
  uint64_t count = 1;
  while (depth < n && count < uint64_t(4) * jobs && count <= 2048) {
    ++depth;
    count *= (depth == 1 && opts.symmetry_breaking) ? 1 : r;
  }
  std::vector<std::vector<int>> prefixes;
  {
    std::vector<int> cur;
    gen_prefixes(pr, depth, cur, 0, prefixes);
  }
  struct Slot {
    int res = 1;
    std::vector<int> color;
    uint64_t nodes = 0;
  };
  std::vector<Slot> slots(prefixes.size());
  auto worker = [&](int w) {
    uint64_t spent = 0;
    for (size_t i = w; i < prefixes.size(); i += jobs) {
      if (spent >= budget.max_nodes) {
        slots[i].res = 2;  // unexplored under this worker's budget
        continue;
      }
      Searcher s(pr, budget.max_nodes - spent);
      int res = s.run_prefix(prefixes[i]);
      spent += s.nodes;
      slots[i].res = res;
      slots[i].nodes = s.nodes;
      if (res == 0) slots[i].color = s.color;
    }
  };
  std::vector<std::thread> threads;
  for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
  for (auto& t : threads) t.join();

  bool any_budget = false;
  for (size_t i = 0; i < slots.size(); ++i) {
    result.nodes += slots[i].nodes;
    if (slots[i].res == 2) any_budget = true;
    if (slots[i].res == 0 && !result.coloring) {
      result.outcome = SearchOutcome::Found;
      result.coloring = make_coloring(n, r, slots[i].color);
    }
  }
  if (!result.coloring)
    result.outcome = any_budget ? SearchOutcome::BudgetExceeded : SearchOutcome::Exhausted;
  return result;
}

PatternNumberResult pattern_number(int r, const PatternSpec& p, uint64_t n_max,
                                   const SearchBudget& budget, const SearchOptions& opts) {
  if (r < 1) fail(Errc::BadArgument, "color count must be positive");
  if (n_max < 1) fail(Errc::BadArgument, "scan bound must be positive");
  PatternNumberResult out;
  for (uint64_t n = 1; n <= n_max; ++n) {
    SearchResult res = search_avoiding(n, r, p, budget, opts);
    out.nodes += res.nodes;
    out.last_n = n;
    out.last_outcome = res.outcome;
    if (res.outcome == SearchOutcome::Exhausted) {
      out.value = n;
      return out;
    }
    if (res.outcome == SearchOutcome::BudgetExceeded) return out;  // Unknown
  }
  return out;  // Unknown: avoiders all the way to n_max
}

namespace {

struct NodeMeter {
  uint64_t left;
  bool test(const IntegerSet& a, const Nat& v) {
    if (left == 0) fail(Errc::NoWitnessInBudget, "node budget exhausted");
    --left;
    return a.contains(v);
  }
};

uint64_t value_cap(const SearchBudget& budget) {
  if (budget.max_value < 1) fail(Errc::BadArgument, "value cap must be positive");
  Nat cap = budget.max_value;
  Nat lim(uint64_t(1) << 62);
  if (cap > lim) cap = lim;
  return nat_to_u64(cap);
}

}  // namespace

std::pair<uint64_t, uint64_t> star_witness(const IntegerSet& a, uint64_t ell,
                                           const SearchBudget& budget) {
  if (ell < 1) fail(Errc::BadArgument, "coefficient must be positive");
  uint64_t cap = value_cap(budget);
  NodeMeter meter{budget.max_nodes};
  for (uint64_t b = 1; b + ell <= cap; ++b) {
    if (!meter.test(a, Nat(b))) continue;
    for (uint64_t c = 1; c <= (cap - b) / ell; ++c) {
      if (!meter.test(a, Nat(c))) continue;
      if (meter.test(a, Nat(b + ell * c))) return {b, c};
    }
  }
  fail(Errc::NoWitnessInBudget, "no triple b, c, b+" + std::to_string(ell) +
                                    "c inside the set with members <= " + std::to_string(cap));
}

std::pair<uint64_t, uint64_t> dagger_witness(const IntegerSet& a, uint64_t big_l,
                                             const SearchBudget& budget) {
  if (big_l < 1) fail(Errc::BadArgument, "ladder bound must be positive");
  uint64_t cap = value_cap(budget);
  NodeMeter meter{budget.max_nodes};
  for (uint64_t b = 1; b + big_l <= cap; ++b) {
    if (!meter.test(a, Nat(b))) continue;
    for (uint64_t c = 1; c <= (cap - b) / big_l; ++c) {
      if (!meter.test(a, Nat(c))) continue;
      bool ok = true;
      for (uint64_t ell = 1; ell <= big_l; ++ell)
        if (!meter.test(a, Nat(b + ell * c))) {
          ok = false;
          break;
        }
      if (ok) return {b, c};
    }
  }
  fail(Errc::NoWitnessInBudget, "no ladder b, c, b+c, ..., b+" + std::to_string(big_l) +
                                    "c inside the set with members <= " + std::to_string(cap));
}

std::pair<uint64_t, uint64_t> gamma_witness(const std::vector<std::pair<IntegerSet, uint64_t>>& sets,
                                            const SearchBudget& budget) {
  if (sets.empty()) fail(Errc::BadArgument, "need at least one (set, coefficient) pair");
  if (sets.size() > 16) fail(Errc::BadArgument, "too many sets for the atom coloring");
  uint64_t ell = 0;
  for (auto& [s, lj] : sets) {
    if (lj < 1) fail(Errc::BadArgument, "coefficient must be positive");
    ell = std::max(ell, lj);
  }
  uint64_t cap = value_cap(budget);
  uint64_t left = budget.max_nodes;
  auto atom = [&](uint64_t v) {
    uint32_t bits = 0;
    for (size_t j = 0; j < sets.size(); ++j) {
      if (left == 0) fail(Errc::NoWitnessInBudget, "node budget exhausted");
      --left;
      if (sets[j].first.contains(Nat(v))) bits |= uint32_t(1) << j;
    }
    return bits;
  };
  // Brauer pattern {b, c, b+c, ..., b+ell*c} inside one atom of the coloring
  // induced by the sets; any such pattern settles every pair at once.  Scan
  // diagonals of increasing b+c so a failing small b cannot eat the budget,
  // and visit only pairs with b+ell*c <= cap.
  if (ell >= cap) fail(Errc::NoWitnessInBudget, "coefficient exceeds the value cap");
  for (uint64_t s = 2; s <= cap - ell + 1; ++s) {
    uint64_t b_lo = 1;
    if (ell > 1 && s > cap / ell) {
      unsigned __int128 need = (unsigned __int128)ell * s - cap;  // ell*s - cap > 0
      b_lo = uint64_t((need + ell - 2) / (ell - 1));              // b >= ceil(need/(ell-1))
    }
    for (uint64_t b = b_lo; b < s; ++b) {
      uint64_t c = s - b;
      uint32_t ab = atom(b);
      if (atom(c) != ab) continue;
      bool ok = true;
      for (uint64_t j = 1; j <= ell; ++j)
        if (atom(b + j * c) != ab) {
          ok = false;
          break;
        }
      if (ok) return {b, c};
    }
  }
  fail(Errc::NoWitnessInBudget, "no Brauer pattern inside a single atom with members <= " +
                                    std::to_string(cap));
}

}  // namespace exppat
