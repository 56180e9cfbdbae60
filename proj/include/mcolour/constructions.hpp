#pragma once

#include <cstdint>

#include "mcolour/template.hpp"

namespace mcolour {

// Every size-r pattern of [a] gets its own colour, everything smaller
// shares the tail colour. k = C(a,r)+1 (monochromatic when a < r);
// spectrum {C(n,r)+1 : n <= a}.
ColourTemplate small_rainbow(int r, int a);

// Every pattern is its own colour, i.e. the colour of an edge is
// literally its intersection with [a]. k = sum_{i<=r} C(a,i);
// spectrum {sum_{i<=r} C(n,i) : n <= a}.
ColourTemplate small_set(int r, int a);

// The colouring on A = [n+1] whose spectrum avoids the whole interval
// (sum_{i<=r} C(n-1,i), sum_{i<=r} C(n,i)]: all r-patterns plus the first
// s = sum_{i<=r} C(n,i) - C(n+1,r) many (r-1)-patterns, taken in the
// factorization order of factorize(n+1, r-1), get distinct colours; every
// other pattern shares the tail colour. Requires r >= 3, (r-1) | (n+1)
// and 0 <= s <= C(n+1,r-1).
ColourTemplate theorem4(int r, int n);

// Deterministic in seed: the first k patterns take colours 1..k (so every
// colour is used), the rest draw uniformly from [k] via splitmix64.
ColourTemplate random_template(int r, int a, int k, std::uint64_t seed);

}  // namespace mcolour
