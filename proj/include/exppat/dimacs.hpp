#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exppat/coloring.hpp"
#include "exppat/pattern.hpp"

namespace exppat {

// CNF whose models are exactly the avoiding r-colorings of [1, n]:
// var(v, i) = (v-1)*r + i + 1 means "value v has color i".
struct DimacsCnf {
  uint64_t n = 1;
  int r = 1;
  PatternSpec pattern;
  uint64_t num_vars = 0;
  std::vector<std::vector<int64_t>> clauses;

  std::string text() const;
};

DimacsCnf export_dimacs(uint64_t n, int r, const PatternSpec& p);

// Reads solver output ("v"-lines of signed literals, 0-terminated) back into
// the coloring it encodes. Rejects out-of-range or conflicting literals.
Coloring decode_dimacs_model(const std::string& model_text, uint64_t n, int r);

}  // namespace exppat
