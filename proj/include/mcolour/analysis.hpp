#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mcolour/combinatorics.hpp"
#include "mcolour/report.hpp"
#include "mcolour/spectrum.hpp"
#include "mcolour/template.hpp"

namespace mcolour {

// ---- closed-form bounds ----------------------------------------------

// r / (2 (r!)^{1/r})
double c_r(int r);

// Distance within which some spectrum element is guaranteed near m.
// For r = 2 with no slack given this is exactly sqrt(m/2) + 1/2; for
// r >= 3 it is c_r m^{1-1/r} + slack * m^{1-2/r} with a caller-chosen
// slack (no constant is specified for the second-order term).
double theorem1_bound(int r, std::int64_t m, std::optional<double> slack = std::nullopt);

// dist <= sqrt(m/2) + 1/2, evaluated in exact integer arithmetic
bool theorem1_r2_ok(std::int64_t m, std::int64_t dist);

struct LemmaWindow {
  std::int64_t pattern_bound = 0;  // sum_{i<=r-1} C(a-1,i)
  Rat64 ratio_bound;               // r(m-1)/a
  std::int64_t width = 0;          // min(pattern_bound, floor(ratio_bound))
};

// Width of the back-window [m - width, m) that the spectrum must meet.
// The exact window uses the rational bound; width is its integer floor.
LemmaWindow lemma_bounds(int r, int a, std::int64_t m);

// m = sum_{i=t+1}^{r} C(a,i) + s + 1 with s >= 0 and t minimal
// (t = r means the empty sum). Requires sum_{i<=r} C(a,i) >= m.
struct Decomposition {
  int a = 0;
  int t = 0;
  std::int64_t s = 0;
};
Decomposition decompose_m(int r, int a, std::int64_t m);

// sum_{i=t+1}^{r} C(a-1,i) + (1 - t/a) s + 1, exact
Rat64 claimC_bound(int r, int a, const Decomposition& dec);

// Half-open-below integer interval (lo, hi].
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool contains(std::int64_t v) const { return lo < v && v <= hi; }
};

Interval interval_I(int r, int n);  // (C(n,r)+1,    C(n+1,r)+1]
Interval interval_J(int r, int n);  // (sum C(n-1,i), sum C(n,i)]

// The midpoint instance m = (C(l,r)+C(l+1,r)+2)/2 on which the
// small-rainbow spectrum keeps every element at distance >= C(l,r-1)/2.
// Empty when C(l,r)+C(l+1,r) is odd.
struct Tightness {
  std::int64_t m = 0;
  Rat64 gap;  // C(l,r-1)/2
};
std::optional<Tightness> tightness_instance(int r, int l);

// Guaranteed minimum size of a spectrum for a k-colouring. Exact shape
// for r = 2 (largest n with C(n,2)+1 <= k); for r >= 3 a report-only
// count 2 + #{n >= n_floor : C(n+1,r)+1 <= k}, with n_floor defaulting
// to ceil(5r/2).
std::int64_t psi_lower(int r, std::int64_t k, std::optional<int> n_floor = std::nullopt);

// {1, k} are always achieved, and for r = 2 so is 2: a trivial lower
// bound on the spectrum size that beats psi_lower only at tiny k.
std::int64_t psi_lower_trivial(int r, std::int64_t k);

// ---- checkers ----------------------------------------------------------

// For every m in [1,k], the nearest spectrum element is within the bound.
// Hard verdict for r = 2 (exact arithmetic); report with the worst
// dist / m^{1-1/r} ratio for r >= 3.
CheckReport check_theorem1(const ColourTemplate& t);
CheckReport check_theorem1(const ColourTemplate& t, const Spectrum& sp);

// Every interval (C(n,2)+1, C(n+1,2)+1] with k > C(n,2)+1 meets the
// spectrum. r = 2 only; hard verdict.
CheckReport check_conjecture_r2(const ColourTemplate& t);
CheckReport check_conjecture_r2(const ColourTemplate& t, const Spectrum& sp);

// Interval hits for general r from n_min upward; hard verdict only in
// the proven case r = 2, n_min = 1.
CheckReport check_interval_I(const ColourTemplate& t, int n_min);
CheckReport check_interval_I(const ColourTemplate& t, int n_min, const Spectrum& sp);

// Builds theorem4(r,n) and certifies: spectrum max = sum C(n,i)+1,
// second-largest <= sum C(n-1,i), empty meet with interval_J, and the
// colour-loss sum identity sum|C_i| = r C(n+1,r) + (r-1)s. Hard verdict
// for r = 3, n >= 7; report otherwise (small n / r >= 4 are only claimed
// asymptotically).
CheckReport check_theorem4(int r, int n);

// For every m >= 2 in the spectrum, with S a minimal witness and
// a0 = |S|: sum_{i<=r} C(a0,i) >= m, and the spectrum meets both back
// windows [m - min(sum C(a0-1,i), r(m-1)/a0), m) and [claimC_bound, m).
// Hard verdict; comparisons are exact.
CheckReport check_lemma(const ColourTemplate& t);
CheckReport check_lemma(const ColourTemplate& t, const Spectrum& sp);

// ---- searches ----------------------------------------------------------

enum class SearchMode { exhaustive, randomized };

struct MissingSearchResult {
  std::optional<ColourTemplate> certificate;  // template with m not in F
  std::int64_t candidates = 0;                // templates evaluated
};

// Randomized hunt for a surjective k-colouring whose spectrum omits m:
// seeded random templates of increasing a plus single-pattern recolour
// hill-climbing (objective: number of subsets attaining m), restarting
// every budget/10 proposals. Deterministic in seed. Requires k > m > 2.
MissingSearchResult search_missing_m(int r, std::int64_t k, std::int64_t m,
                                     std::int64_t budget, std::uint64_t seed, int a_max = 12);

struct PsiSearchResult {
  int best_size = 0;                    // smallest |spectrum| found
  std::optional<ColourTemplate> best;   // a template attaining it
  bool truncated = false;               // randomized budget ran out
  std::int64_t evaluated = 0;           // spectra computed
  std::int64_t enumerated = 0;          // assignments visited (exhaustive)
};

// Upper bound on the least spectrum size among k-colourings. Exhaustive
// mode enumerates the surjective assignments with exactly k colours for
// each a in [a_min, a_max], deduplicated to canonical representatives;
// it requires sum_{i<=r} C(a,i) <= 12 for the scanned a. Randomized mode
// mirrors the missing-m proposal scheme. Pass a_min/a_max = -1 for
// the feasible defaults.
PsiSearchResult psi_upper_search(int r, std::int64_t k, SearchMode mode, std::int64_t budget,
                                 std::uint64_t seed, int a_min = -1, int a_max = -1);

}  // namespace mcolour
