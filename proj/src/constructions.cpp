#include "mcolour/constructions.hpp"

#include <cassert>

#include "mcolour/baranyai.hpp"
#include "mcolour/combinatorics.hpp"
#include "mcolour/errors.hpp"

namespace mcolour {

ColourTemplate small_rainbow(int r, int a) {
  if (r < 2 || a < 0) throw PreconditionFailed("need r >= 2 and a >= 0");
  const auto patterns = pattern_order(a, r);
  std::vector<int> colours(patterns.size());
  int next = 2;
  for (std::size_t i = 0; i < patterns.size(); ++i)
    colours[i] = popcount(patterns[i]) == r ? next++ : 1;
  return ColourTemplate::make(r, a, colours);
}

ColourTemplate small_set(int r, int a) {
  if (r < 2 || a < 0) throw PreconditionFailed("need r >= 2 and a >= 0");
  std::vector<int> colours(static_cast<std::size_t>(binom_sum(a, r)));
  for (std::size_t i = 0; i < colours.size(); ++i) colours[i] = static_cast<int>(i) + 1;
  return ColourTemplate::make(r, a, colours);
}

ColourTemplate theorem4(int r, int n) {
  if (r < 3) throw PreconditionFailed("construction needs r >= 3");
  const int a = n + 1;
  if (a % (r - 1) != 0)
    throw PreconditionFailed("(r-1) must divide (n+1): r = " + std::to_string(r) +
                             ", n = " + std::to_string(n));
  if (a > 24) throw PreconditionFailed("n+1 exceeds the template cap of 24");
  const std::int64_t s = binom_sum(n, r) - binom(a, r);
  if (s < 0 || s > binom(a, r - 1))
    throw PreconditionFailed("s = " + std::to_string(s) + " outside [0, C(n+1,r-1)]");

  // the first s many (r-1)-subsets in factorization order become
  // distinguished; whole matchings come first, so each full matching
  // covers every vertex exactly once
  const Factorization fz = factorize(a, r - 1);
  std::vector<std::uint32_t> designated;
  designated.reserve(static_cast<std::size_t>(s));
  for (const auto& factor : fz.factors) {
    for (std::uint32_t edge : factor) {
      if (static_cast<std::int64_t>(designated.size()) == s) break;
      designated.push_back(edge);
    }
    if (static_cast<std::int64_t>(designated.size()) == s) break;
  }

  const auto patterns = pattern_order(a, r);
  std::vector<int> colours(patterns.size(), 1);
  std::vector<char> is_designated(std::size_t{1} << a, 0);
  for (std::uint32_t m : designated) is_designated[m] = 1;
  int next = 2;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const int size = popcount(patterns[i]);
    if (size == r || (size == r - 1 && is_designated[patterns[i]])) colours[i] = next++;
  }

  ColourTemplate t = ColourTemplate::make(r, a, colours);
  assert(t.k() == binom(a, r) + s + 1);
  assert(t.k() == binom_sum(n, r) + 1);
  return t;
}

ColourTemplate random_template(int r, int a, int k, std::uint64_t seed) {
  if (r < 2 || a < 0) throw PreconditionFailed("need r >= 2 and a >= 0");
  const std::int64_t n_patterns = binom_sum(a, r);
  if (k < 1 || k > n_patterns)
    throw PreconditionFailed("k = " + std::to_string(k) + " outside [1, " +
                             std::to_string(n_patterns) + "]");
  SplitMix64 rng(seed);
  std::vector<int> colours(static_cast<std::size_t>(n_patterns));
  for (std::size_t i = 0; i < colours.size(); ++i) {
    colours[i] = i < static_cast<std::size_t>(k)
                     ? static_cast<int>(i) + 1
                     : static_cast<int>(rng.below(static_cast<std::uint64_t>(k))) + 1;
  }
  return ColourTemplate::make(r, a, colours);
}

}  // namespace mcolour
