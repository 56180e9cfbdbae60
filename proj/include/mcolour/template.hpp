#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mcolour/combinatorics.hpp"
#include "mcolour/errors.hpp"

namespace mcolour {

// A pattern is a subset of the determining set [a], encoded as a bitmask
// with vertex v on bit v-1. Only subsets of size <= r occur as patterns.
using PatternMask = std::uint32_t;

inline int popcount(PatternMask m) { return __builtin_popcount(m); }

// true iff x precedes y when both are read as ascending vertex lists.
// The lowest differing vertex decides, so this is NOT numeric mask order.
inline bool lex_less(PatternMask x, PatternMask y) {
  if (x == y) return false;
  if (x == 0) return true;   // the empty list precedes everything
  if (y == 0) return false;
  const PatternMask d = x ^ y;
  return (x >> __builtin_ctz(d)) & 1u;
}

// "1 2 3" for {1,2,3}; empty string for the empty set.
std::string vertex_list_string(PatternMask m);

// All subsets of [a] of size <= r, sorted by (size, then lex on the
// ascending vertex list). Index 0 is the empty set. This enumeration
// order is the one fixed by the template file format.
std::vector<PatternMask> pattern_order(int a, int r);

// A finitely-determined edge colouring of the complete r-uniform
// hypergraph on the naturals: the colour of an edge e depends only on
// e /\ [a], so the whole colouring is the map pattern -> colour held here.
// Colour ids are 1..k, compacted by first occurrence in pattern order.
// Immutable after construction.
class ColourTemplate {
 public:
  // `colours` lists the (1-based) colour of each pattern in pattern order.
  // Ids are compacted to [k] preserving first-occurrence order.
  static ColourTemplate make(int r, int a, const std::vector<int>& colours);

  int r() const { return r_; }
  int a() const { return a_; }
  int k() const { return k_; }
  PatternMask vertex_mask() const { return a_ == 0 ? 0u : ((1u << a_) - 1u); }

  std::size_t pattern_count() const { return patterns_.size(); }
  const std::vector<PatternMask>& patterns() const { return patterns_; }
  const std::vector<int>& assignment() const { return assignment_; }

  // Position of a pattern in pattern order; -1 for subsets of size > r.
  std::int32_t pattern_index(PatternMask m) const { return index_by_mask_[m]; }
  int colour_of(PatternMask m) const { return assignment_[index_by_mask_[m]]; }

  friend bool operator==(const ColourTemplate& x, const ColourTemplate& y) {
    return x.r_ == y.r_ && x.a_ == y.a_ && x.assignment_ == y.assignment_;
  }

 private:
  ColourTemplate() = default;

  int r_ = 0;
  int a_ = 0;
  int k_ = 0;
  std::vector<int> assignment_;          // colour per pattern, pattern order
  std::vector<PatternMask> patterns_;    // pattern order
  std::vector<std::int32_t> index_by_mask_;  // 2^a entries, -1 off-pattern
};

// Template file format (bit-exact, LF line endings):
//   mcolour-template v1
//   r=<int> a=<int> k=<int>
//   assignment=<c_0>,<c_1>,...,<c_{P-1}>
ColourTemplate parse_template(std::string_view text);
std::string serialize_template(const ColourTemplate& t);

// Least assignment vector over all vertex permutations, colours relabelled
// by first occurrence. Constant on orbits, idempotent. Brute force over
// a! permutations; capped at a <= 8.
ColourTemplate canonical_form(const ColourTemplate& t);

// Coarsen the palette: `classes` partitions [k]; pattern colours become
// class indices (then compacted, so labels stay first-occurrence).
ColourTemplate merge_colours(const ColourTemplate& t,
                             const std::vector<std::vector<int>>& classes);

// Relabel vertices; perm[v-1] is the image of v. perm must be a
// permutation of [a].
ColourTemplate permute_vertices(const ColourTemplate& t, const std::vector<int>& perm);

}  // namespace mcolour
