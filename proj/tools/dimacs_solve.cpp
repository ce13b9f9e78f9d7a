// Minimal standalone DIMACS CNF solver (DPLL with unit propagation).
// Usage: dimacs_solve FILE  (or `-` for stdin)
// Prints `s SATISFIABLE` plus `v` lines with a model, or `s UNSATISFIABLE`.
// Exit codes follow SAT-solver convention: 10 = SAT, 20 = UNSAT, 1 = error.
//
// Deliberately self-contained: no project headers, so it can serve as an
// independent cross-check for the search engine's Exhausted claims.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

bool parse_cnf(std::istream& in, Cnf& cnf, std::string& err) {
  std::string line;
  bool have_header = false;
  std::vector<int> cur;
  size_t declared_clauses = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream hs(line);
      std::string p, fmt;
      if (!(hs >> p >> fmt >> cnf.num_vars >> declared_clauses) || fmt != "cnf" ||
          cnf.num_vars < 0) {
        err = "bad problem line: " + line;
        return false;
      }
      have_header = true;
      continue;
    }
    std::istringstream ls(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(cur);
        cur.clear();
      } else {
        if (std::abs(lit) > cnf.num_vars) {
          err = "literal " + std::to_string(lit) + " out of range";
          return false;
        }
        cur.push_back(lit);
      }
    }
    if (!ls.eof()) {
      err = "bad token on line: " + line;
      return false;
    }
  }
  if (!have_header) {
    err = "missing p-line";
    return false;
  }
  if (!cur.empty()) {
    err = "unterminated clause";
    return false;
  }
  if (declared_clauses != cnf.clauses.size()) {
    err = "clause count mismatch: declared " + std::to_string(declared_clauses) + ", read " +
          std::to_string(cnf.clauses.size());
    return false;
  }
  return true;
}

// assign: 0 = unset, +1 = true, -1 = false
bool clause_state(const std::vector<int>& cl, const std::vector<int>& assign, int& unit) {
  // returns false if the clause is falsified; unit = sole unassigned literal
  // if exactly one remains (else 0)
  int unassigned = 0;
  unit = 0;
  for (int lit : cl) {
    int v = std::abs(lit);
    int val = assign[v];
    if (val == 0) {
      ++unassigned;
      unit = unassigned == 1 ? lit : 0;
    } else if ((val > 0) == (lit > 0)) {
      unit = 0;
      return true;  // satisfied
    }
  }
  if (unassigned == 0) return false;
  if (unassigned > 1) unit = 0;
  return true;
}

bool propagate(const Cnf& cnf, std::vector<int>& assign, std::vector<int>& trail) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& cl : cnf.clauses) {
      int unit;
      if (!clause_state(cl, assign, unit)) return false;
      if (unit != 0) {
        assign[std::abs(unit)] = unit > 0 ? 1 : -1;
        trail.push_back(std::abs(unit));
        changed = true;
      }
    }
  }
  return true;
}

bool dpll(const Cnf& cnf, std::vector<int>& assign) {
  std::vector<int> trail;
  if (!propagate(cnf, assign, trail)) {
    for (int v : trail) assign[v] = 0;
    return false;
  }
  int var = 0;
  for (int v = 1; v <= cnf.num_vars; ++v)
    if (assign[v] == 0) {
      var = v;
      break;
    }
  if (var == 0) return true;
  for (int phase : {1, -1}) {
    assign[var] = phase;
    if (dpll(cnf, assign)) return true;
    assign[var] = 0;
  }
  for (int v : trail) assign[v] = 0;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " FILE|-\n";
    return 1;
  }
  Cnf cnf;
  std::string err;
  bool ok;
  if (std::string(argv[1]) == "-") {
    ok = parse_cnf(std::cin, cnf, err);
  } else {
    std::ifstream f(argv[1]);
    if (!f) {
      std::cerr << "cannot open " << argv[1] << "\n";
      return 1;
    }
    ok = parse_cnf(f, cnf, err);
  }
  if (!ok) {
    std::cerr << "parse error: " << err << "\n";
    return 1;
  }
  std::vector<int> assign(cnf.num_vars + 1, 0);
  if (!dpll(cnf, assign)) {
    std::cout << "s UNSATISFIABLE\n";
    return 20;
  }
  std::cout << "s SATISFIABLE\n";
  std::cout << "v";
  int on_line = 0;
  for (int v = 1; v <= cnf.num_vars; ++v) {
    // unassigned vars (unconstrained) default to false
    std::cout << " " << (assign[v] > 0 ? v : -v);
    if (++on_line == 20 && v != cnf.num_vars) {
      std::cout << "\nv";
      on_line = 0;
    }
  }
  std::cout << " 0\n";
  return 10;
}
