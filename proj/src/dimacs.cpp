#include "exppat/dimacs.hpp"

#include <algorithm>
#include <sstream>

#include "exppat/error.hpp"
#include "exppat/search.hpp"

namespace exppat {

std::string DimacsCnf::text() const {
  std::ostringstream out;
  out << "c avoid " << pattern.name() << " N=" << n << " r=" << r << "\n";
  out << "p cnf " << num_vars << " " << clauses.size() << "\n";
  for (const auto& cl : clauses) {
    for (int64_t lit : cl) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

DimacsCnf export_dimacs(uint64_t n, int r, const PatternSpec& p) {
  p.validate();
  if (n < 1 || r < 1) fail(Errc::BadArgument, "window and color count must be positive");
  DimacsCnf cnf;
  cnf.n = n;
  cnf.r = r;
  cnf.pattern = p;
  cnf.num_vars = n * uint64_t(r);
  auto var = [r](uint64_t v, int i) { return int64_t((v - 1) * r + i + 1); };
  for (uint64_t v = 1; v <= n; ++v) {
    std::vector<int64_t> alo;
    for (int i = 0; i < r; ++i) alo.push_back(var(v, i));
    cnf.clauses.push_back(std::move(alo));
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) cnf.clauses.push_back({-var(v, i), -var(v, j)});
  }
  for_each_instance(p, n, [&](const Instance& ins) {
    std::vector<uint64_t> members = ins.values;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int i = 0; i < r; ++i) {
      std::vector<int64_t> cl;
      for (uint64_t m : members) cl.push_back(-var(m, i));
      cnf.clauses.push_back(std::move(cl));
    }
    return true;
  });
  return cnf;
}

Coloring decode_dimacs_model(const std::string& model_text, uint64_t n, int r) {
  if (n < 1 || r < 1) fail(Errc::BadArgument, "window and color count must be positive");
  std::vector<int64_t> lits;
  std::istringstream in(model_text);
  std::string line;
  bool saw_vline = false;
  while (std::getline(in, line)) {
    if (line.rfind("s UNSATISFIABLE", 0) == 0)
      fail(Errc::ParseError, "model text reports UNSATISFIABLE");
    if (line.empty() || line[0] != 'v') continue;
    saw_vline = true;
    std::istringstream ls(line.substr(1));
    int64_t lit;
    while (ls >> lit) lits.push_back(lit);
    if (!ls.eof()) fail(Errc::ParseError, "bad literal on v-line: " + line);
  }
  if (!saw_vline) fail(Errc::ParseError, "no v-lines in model text");
  Coloring c;
  c.lo = 1;
  c.hi = n;
  c.r = r;
  c.assign.assign(n, kUnassigned);
  int64_t max_var = int64_t(n) * r;
  for (int64_t lit : lits) {
    if (lit == 0) continue;
    int64_t v = lit < 0 ? -lit : lit;
    if (v > max_var) fail(Errc::ParseError, "literal " + std::to_string(lit) + " out of range");
    if (lit < 0) continue;
    uint64_t value = uint64_t(v - 1) / r + 1;
    int color = int(uint64_t(v - 1) % r);
    if (c.assign[value - 1] != kUnassigned && c.assign[value - 1] != color)
      fail(Errc::ParseError, "conflicting colors for value " + std::to_string(value));
    c.assign[value - 1] = color;
  }
  validate_coloring(c);  // flags values the model left uncolored
  return c;
}

}  // namespace exppat
