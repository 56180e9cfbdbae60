#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>

namespace mcolour {

namespace detail {

// Pascal's triangle in uint64; C(62,31) still fits, which is far beyond
// the a <= 24 desk-scale cap used everywhere in this library.
inline constexpr int kBinomMax = 62;

constexpr auto make_binom_table() {
  std::array<std::array<std::uint64_t, kBinomMax + 1>, kBinomMax + 1> c{};
  for (int n = 0; n <= kBinomMax; ++n) {
    c[n][0] = 1;
    for (int k = 1; k <= n; ++k)
      c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
  }
  return c;
}

inline constexpr auto kBinom = make_binom_table();

}  // namespace detail

// C(n,k), exact; zero outside the triangle.
inline std::int64_t binom(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  assert(n <= detail::kBinomMax);
  return static_cast<std::int64_t>(detail::kBinom[n][k]);
}

// sum_{i=0}^{r} C(n,i)
inline std::int64_t binom_sum(int n, int r) {
  std::int64_t s = 0;
  for (int i = 0; i <= r; ++i) s += binom(n, i);
  return s;
}

// n!, exact for n <= 20.
inline std::int64_t factorial(int n) {
  assert(n >= 0 && n <= 20);
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Small exact rational on int64. Enough for the bound windows computed
// here (numerators stay well below 2^40); always kept normalized with a
// positive denominator.
struct Rat64 {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat64() = default;
  Rat64(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rat64(std::int64_t n, std::int64_t d) : num(n), den(d) {
    assert(den != 0);
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rat64 operator+(Rat64 x, Rat64 y) { return {x.num * y.den + y.num * x.den, x.den * y.den}; }
  friend Rat64 operator-(Rat64 x, Rat64 y) { return {x.num * y.den - y.num * x.den, x.den * y.den}; }
  friend Rat64 operator*(Rat64 x, Rat64 y) { return {x.num * y.num, x.den * y.den}; }

  friend bool operator==(Rat64 x, Rat64 y) { return x.num == y.num && x.den == y.den; }
  friend bool operator<(Rat64 x, Rat64 y) {
    return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
  }
  friend bool operator<=(Rat64 x, Rat64 y) { return x == y || x < y; }
  friend bool operator>(Rat64 x, Rat64 y) { return y < x; }
  friend bool operator>=(Rat64 x, Rat64 y) { return y <= x; }

  std::int64_t floor() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }
  std::int64_t ceil() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
  }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

// splitmix64; the single PRNG used anywhere in the library. Bounded draws
// use multiply-shift range reduction, so every draw consumes exactly one
// 64-bit output and replays identically across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) {
    assert(bound > 0);
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace mcolour
