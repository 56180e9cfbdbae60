#include "mcolour/spectrum.hpp"

#include <algorithm>
#include <cassert>

#include "mcolour/errors.hpp"

namespace mcolour {

bool Spectrum::contains(int v) const {
  return std::binary_search(values.begin(), values.end(), v);
}

int Spectrum::index_below(int m) const {
  auto it = std::lower_bound(values.begin(), values.end(), m);
  return static_cast<int>(it - values.begin()) - 1;
}

namespace {

constexpr int kSpectrumCap = 24;

// lex rank of the ascending combination c[0..s-1] among all s-subsets of [a]
std::int64_t lex_rank(const int* c, int s, int a) {
  std::int64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < s; ++i) {
    for (int x = prev + 1; x < c[i]; ++x) rank += binom(a - x, s - 1 - i);
    prev = c[i];
  }
  return rank;
}

// distinct-colour bitset over the patterns inside S, written into `words`
void fill_colour_set(const ColourTemplate& t, PatternMask S, std::uint64_t* words,
                     std::size_t n_words) {
  std::fill(words, words + n_words, 0);
  int verts[32];
  int nv = 0;
  for (PatternMask m = S; m != 0; m &= m - 1) verts[nv++] = __builtin_ctz(m) + 1;

  const int max_size = std::min(nv, t.r());
  int idx[32];
  for (int s = 0; s <= max_size; ++s) {
    if (s == 0) {
      const int c = t.colour_of(0);
      words[(c - 1) >> 6] |= 1ull << ((c - 1) & 63);
      continue;
    }
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      PatternMask b = 0;
      for (int i = 0; i < s; ++i) b |= 1u << (verts[idx[i]] - 1);
      const int c = t.colour_of(b);
      words[(c - 1) >> 6] |= 1ull << ((c - 1) & 63);
      int i = s - 1;
      while (i >= 0 && idx[i] == nv - (s - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

int count_bits(const std::uint64_t* words, std::size_t n_words) {
  int total = 0;
  for (std::size_t i = 0; i < n_words; ++i) total += __builtin_popcountll(words[i]);
  return total;
}

}  // namespace

int gamma(const ColourTemplate& t, PatternMask S) {
  assert((S & ~t.vertex_mask()) == 0);
  const std::size_t n_words = (static_cast<std::size_t>(t.k()) + 63) / 64;
  std::vector<std::uint64_t> words(n_words);
  fill_colour_set(t, S, words.data(), n_words);
  return count_bits(words.data(), n_words);
}

void for_each_subset_gamma(const ColourTemplate& t,
                           const std::function<void(PatternMask, int)>& visit) {
  const int a = t.a();
  if (a > kSpectrumCap)
    throw CapExceeded("spectrum enumeration capped at a <= " + std::to_string(kSpectrumCap));
  const int k = t.k();
  const std::size_t W = (static_cast<std::size_t>(k) + 63) / 64;

  // popcount layer 0
  std::vector<std::uint64_t> prev(W, 0);
  {
    const int c = t.colour_of(0);
    prev[(c - 1) >> 6] |= 1ull << ((c - 1) & 63);
    visit(0, 1);
  }

  // sweep layers in increasing popcount, keeping only the previous layer;
  // within a layer, combinations run in lex order and the running counter
  // is the combination's rank
  std::vector<std::uint64_t> cur;
  std::vector<int> comb(std::max(a, 1));
  for (int n = 1; n <= a; ++n) {
    cur.assign(static_cast<std::size_t>(binom(a, n)) * W, 0);
    for (int i = 0; i < n; ++i) comb[i] = i + 1;
    std::int64_t rank = 0;
    while (true) {
      PatternMask S = 0;
      for (int i = 0; i < n; ++i) S |= 1u << (comb[i] - 1);
      const int v = comb[0];  // smallest vertex of S
      const std::int64_t below = lex_rank(comb.data() + 1, n - 1, a);
      std::uint64_t* dst = cur.data() + static_cast<std::size_t>(rank) * W;
      const std::uint64_t* src = prev.data() + static_cast<std::size_t>(below) * W;
      std::copy(src, src + W, dst);

      // add the colours of the patterns through v: {v} plus <= r-1
      // vertices from the rest of S
      const int rest = n - 1;
      const int max_extra = std::min(t.r() - 1, rest);
      int idx[32];
      for (int extra = 0; extra <= max_extra; ++extra) {
        if (extra == 0) {
          const int c = t.colour_of(1u << (v - 1));
          dst[(c - 1) >> 6] |= 1ull << ((c - 1) & 63);
          continue;
        }
        for (int i = 0; i < extra; ++i) idx[i] = 1 + i;
        while (true) {
          PatternMask b = 1u << (v - 1);
          for (int i = 0; i < extra; ++i) b |= 1u << (comb[idx[i]] - 1);
          const int c = t.colour_of(b);
          dst[(c - 1) >> 6] |= 1ull << ((c - 1) & 63);
          int i = extra - 1;
          while (i >= 0 && idx[i] == rest - (extra - 1 - i)) --i;
          if (i < 0) break;
          ++idx[i];
          for (int j = i + 1; j < extra; ++j) idx[j] = idx[j - 1] + 1;
        }
      }

      visit(S, count_bits(dst, W));

      int i = n - 1;
      while (i >= 0 && comb[i] == a - (n - 1 - i)) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
      ++rank;
    }
    prev.swap(cur);
  }
}

Spectrum spectrum(const ColourTemplate& t) {
  const int k = t.k();
  std::vector<int> seen(k + 1, 0);
  std::vector<PatternMask> witness_of(k + 1, 0);
  for_each_subset_gamma(t, [&](PatternMask S, int value) {
    if (!seen[value]) {
      seen[value] = 1;
      witness_of[value] = S;
    }
  });

  Spectrum sp;
  sp.k = k;
  for (int v = 1; v <= k; ++v) {
    if (seen[v]) {
      sp.values.push_back(v);
      sp.witnesses.push_back(witness_of[v]);
    }
  }
  assert(!sp.values.empty() && sp.values.front() == 1 && sp.values.back() == k);
  return sp;
}

NearestResult nearest(const Spectrum& sp, int m) {
  if (m < 1 || m > sp.k)
    throw OutOfRange("m = " + std::to_string(m) + " outside [1, k = " + std::to_string(sp.k) + "]");
  auto it = std::lower_bound(sp.values.begin(), sp.values.end(), m);
  // candidates: first value >= m and its predecessor; tie toward smaller
  NearestResult best{0, 0};
  bool have = false;
  if (it != sp.values.begin()) {
    const int v = *(it - 1);
    best = {v, m - v};
    have = true;
  }
  if (it != sp.values.end()) {
    const int v = *it;
    if (!have || v - m < best.dist) best = {v, v - m};
  }
  return best;
}

ColourLoss colour_loss(const ColourTemplate& t, PatternMask S, int v) {
  if (v < 1 || v > t.a() || (S & (1u << (v - 1))) == 0)
    throw InvalidVertex("vertex " + std::to_string(v) + " not in S");
  const std::size_t W = (static_cast<std::size_t>(t.k()) + 63) / 64;
  std::vector<std::uint64_t> kept(W);
  fill_colour_set(t, S & ~(1u << (v - 1)), kept.data(), W);

  std::vector<std::uint64_t> lost_bits(W, 0);
  // patterns through v inside S
  int verts[32];
  int nv = 0;
  for (PatternMask m = S & ~(1u << (v - 1)); m != 0; m &= m - 1)
    verts[nv++] = __builtin_ctz(m) + 1;
  const int max_extra = std::min(t.r() - 1, nv);
  int idx[32];
  for (int extra = 0; extra <= max_extra; ++extra) {
    if (extra == 0) {
      const int c = t.colour_of(1u << (v - 1));
      if (!((kept[(c - 1) >> 6] >> ((c - 1) & 63)) & 1ull))
        lost_bits[(c - 1) >> 6] |= 1ull << ((c - 1) & 63);
      continue;
    }
    for (int i = 0; i < extra; ++i) idx[i] = i;
    while (true) {
      PatternMask b = 1u << (v - 1);
      for (int i = 0; i < extra; ++i) b |= 1u << (verts[idx[i]] - 1);
      const int c = t.colour_of(b);
      if (!((kept[(c - 1) >> 6] >> ((c - 1) & 63)) & 1ull))
        lost_bits[(c - 1) >> 6] |= 1ull << ((c - 1) & 63);
      int i = extra - 1;
      while (i >= 0 && idx[i] == nv - (extra - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < extra; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  ColourLoss out;
  out.vertex = v;
  for (int c = 1; c <= t.k(); ++c)
    if ((lost_bits[(c - 1) >> 6] >> ((c - 1) & 63)) & 1ull) out.lost.push_back(c);
  return out;
}

PatternMask minimal_witness(const ColourTemplate& t, int m) {
  return minimal_witness(t, m, spectrum(t));
}

PatternMask minimal_witness(const ColourTemplate& t, int m, const Spectrum& sp) {
  if (m < 2) throw NoWitness("minimal witness requires m >= 2");
  auto it = std::lower_bound(sp.values.begin(), sp.values.end(), m);
  if (it == sp.values.end() || *it != m)
    throw NoWitness("m = " + std::to_string(m) + " not in the spectrum");
  PatternMask S = sp.witnesses[it - sp.values.begin()];

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 1; v <= t.a(); ++v) {
      const PatternMask bit = 1u << (v - 1);
      if ((S & bit) == 0) continue;
      if (gamma(t, S & ~bit) == m) {
        S &= ~bit;
        changed = true;
      }
    }
  }
  return S;
}

std::string spectrum_to_csv(const Spectrum& sp) {
  std::string out = "value,witness\n";
  for (std::size_t i = 0; i < sp.values.size(); ++i) {
    out += std::to_string(sp.values[i]);
    out += ",\"";
    out += vertex_list_string(sp.witnesses[i]);
    out += "\"\n";
  }
  return out;
}

}  // namespace mcolour
