#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcolour/report.hpp"

namespace mcolour {

// A 1-factorization of the complete h-uniform hypergraph on [l]:
// C(l-1,h-1) perfect matchings that together cover every h-subset once.
// Edges are bitmasks (vertex v on bit v-1), sorted lex within a factor.
struct Factorization {
  int l = 0;
  int h = 0;
  std::vector<std::vector<std::uint32_t>> factors;
};

// State after the first `stage` vertices have been distributed: each
// factor holds exactly l/h pairwise-disjoint parts (subsets of [stage],
// empty parts with multiplicity) that union to [stage]. Across all
// factors a part S occurs exactly C(l-stage, h-|S|) times.
struct PartialFactorization {
  int l = 0;
  int h = 0;
  int stage = 0;
  std::vector<std::vector<std::uint32_t>> factors;  // parts, sorted lex
};

PartialFactorization initial_partial(int l, int h);

// One extension step: vertex stage+1 joins exactly one part of every
// factor. Which part is decided by an integral max flow on the network
//   source -> factor (cap 1) -> part S (cap = multiplicity of S in the
//   factor) -> sink (cap C(l-n-1, h-|S|-1)),
// which always saturates: routing (h-|S|)/(l-n) per part copy is a
// feasible fractional flow of value C(l-1,h-1), and integral capacities
// admit an integral maximum. The shadow counts at stage n+1 then follow
// from Pascal's rule.
PartialFactorization extend_stage(const PartialFactorization& p);

// Full factorization by running all l stages. Requires h | l; capped at
// l <= 16 to keep the stage networks desk-sized.
Factorization factorize(int l, int h);

// Checks the per-stage shadow-count and disjointness invariants.
bool shadow_counts_hold(const PartialFactorization& p);

// Certifies the three factorization invariants (perfect matchings, every
// edge exactly once, factor count); never throws.
CheckReport verify_factorization(const Factorization& f);

// One factor per line, edges as {v1,v2,...} separated by spaces.
std::string factorization_to_text(const Factorization& f);

}  // namespace mcolour
