#pragma once

// Deliberately naive reference implementations. These stay independent of
// the library's incremental sweep so the two can certify each other.

#include <vector>

#include "mcolour/template.hpp"

namespace oracle {

using mcolour::ColourTemplate;
using mcolour::PatternMask;

// gamma by walking every submask of S and recounting from scratch
inline int naive_gamma(const ColourTemplate& t, PatternMask S) {
  std::vector<char> seen(static_cast<std::size_t>(t.k()) + 1, 0);
  int distinct = 0;
  PatternMask sub = S;
  while (true) {
    if (mcolour::popcount(sub) <= t.r()) {
      const int c = t.colour_of(sub);
      if (!seen[c]) {
        seen[c] = 1;
        ++distinct;
      }
    }
    if (sub == 0) break;
    sub = (sub - 1) & S;
  }
  return distinct;
}

// spectrum values by recounting every subset independently
inline std::vector<int> naive_spectrum_values(const ColourTemplate& t) {
  std::vector<char> seen(static_cast<std::size_t>(t.k()) + 1, 0);
  const PatternMask full = t.vertex_mask();
  for (PatternMask S = 0;; ++S) {
    seen[naive_gamma(t, S)] = 1;
    if (S == full) break;
  }
  std::vector<int> values;
  for (int v = 1; v <= t.k(); ++v)
    if (seen[v]) values.push_back(v);
  return values;
}

}  // namespace oracle
