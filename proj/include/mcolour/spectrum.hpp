#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mcolour/template.hpp"

namespace mcolour {

// The exact set of achievable colour counts of a template, with one
// witness subset per value. Witnesses are the first subset attaining the
// value in the sweep order (size ascending, then lex), so they are stable
// across runs.
struct Spectrum {
  int k = 0;
  std::vector<int> values;              // strictly increasing; 1 and k present
  std::vector<PatternMask> witnesses;   // parallel to values

  bool contains(int v) const;
  // index of the largest value < m, or -1
  int index_below(int m) const;
};

// Number of distinct colours over the patterns inside S (the empty
// pattern always counts): the colour count of S plus any infinite tail.
int gamma(const ColourTemplate& t, PatternMask S);

// Visits every subset of [a] with its colour count, by an incremental
// sweep of the subset lattice: size layers ascending, lex order within a
// layer, colour sets carried as k-bit sets from the previous layer.
void for_each_subset_gamma(const ColourTemplate& t,
                           const std::function<void(PatternMask, int)>& visit);

// Exact spectrum via the same sweep.
Spectrum spectrum(const ColourTemplate& t);

struct NearestResult {
  int value = 0;  // element of the spectrum closest to m
  int dist = 0;
};

// Closest spectrum element to m, ties toward the smaller value.
// Requires 1 <= m <= k.
NearestResult nearest(const Spectrum& sp, int m);

struct ColourLoss {
  int vertex = 0;
  std::vector<int> lost;  // ascending colour ids
};

// Colours present in the patterns of S that vanish once v is deleted.
// |lost| = gamma(S) - gamma(S \ {v}).
ColourLoss colour_loss(const ColourTemplate& t, PatternMask S, int v);

// A subset S with gamma(S) = m from which no vertex can be dropped
// without losing colours: start at the recorded witness and delete
// vertices in increasing label order until a fixpoint. Requires
// m in the spectrum and m >= 2.
PatternMask minimal_witness(const ColourTemplate& t, int m);
PatternMask minimal_witness(const ColourTemplate& t, int m, const Spectrum& sp);

// CSV export: header `value,witness`, one row per value, witness quoted.
std::string spectrum_to_csv(const Spectrum& sp);

}  // namespace mcolour
