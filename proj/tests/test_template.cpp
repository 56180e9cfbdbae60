#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mcolour/combinatorics.hpp"
#include "mcolour/constructions.hpp"
#include "mcolour/spectrum.hpp"
#include "mcolour/template.hpp"

using namespace mcolour;

TEST_CASE("binomials and sums") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(11, 3) == 165);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(binom_sum(4, 2) == 11);
  CHECK(binom_sum(3, 3) == 8);
  CHECK(binom_sum(0, 2) == 1);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}

TEST_CASE("rationals") {
  CHECK(Rat64(6, 4) == Rat64(3, 2));
  CHECK(Rat64(1, -2) == Rat64(-1, 2));
  CHECK(Rat64(7, 2).floor() == 3);
  CHECK(Rat64(7, 2).ceil() == 4);
  CHECK(Rat64(-7, 2).floor() == -4);
  CHECK(Rat64(3, 2) + Rat64(1, 2) == Rat64(2));
  CHECK(Rat64(3, 2) * Rat64(2, 3) == Rat64(1));
  CHECK(Rat64(5, 3) < Rat64(7, 4));
  CHECK(Rat64(5).str() == "5");
  CHECK(Rat64(5, 2).str() == "5/2");
}

TEST_CASE("splitmix64 is stable") {
  SplitMix64 rng(0);
  // reference values of the standard splitmix64 stream from seed 0
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.below(17) == b.below(17));
}

TEST_CASE("pattern order is size-then-lex") {
  const auto order = pattern_order(4, 2);
  const std::vector<PatternMask> expected = {0, 1, 2, 4, 8, 3, 5, 9, 6, 10, 12};
  CHECK(order == expected);
  CHECK(pattern_order(3, 3) == std::vector<PatternMask>{0, 1, 2, 4, 3, 5, 6, 7});
  CHECK(pattern_order(0, 2) == std::vector<PatternMask>{0});
  for (int a = 0; a <= 6; ++a)
    for (int r = 2; r <= 4; ++r)
      CHECK(pattern_order(a, r).size() == static_cast<std::size_t>(binom_sum(a, r)));
}

TEST_CASE("lex_less orders by lowest differing vertex") {
  CHECK(lex_less(0b1001, 0b0110));   // {1,4} < {2,3}
  CHECK(!lex_less(0b0110, 0b1001));
  CHECK(lex_less(0, 1));
  CHECK(!lex_less(1, 1));
}

TEST_CASE("vertex list strings") {
  CHECK(vertex_list_string(0) == "");
  CHECK(vertex_list_string(0b1011) == "1 2 4");
}

TEST_CASE("make_template compacts and validates") {
  const auto t = ColourTemplate::make(2, 1, {5, 9});
  CHECK(t.k() == 2);
  CHECK(t.assignment() == std::vector<int>{1, 2});

  const auto mono = ColourTemplate::make(2, 0, {7});
  CHECK(mono.k() == 1);
  CHECK(mono.pattern_count() == 1);

  const auto t4 = ColourTemplate::make(2, 2, {1, 2, 3, 4});
  CHECK(t4.k() == 4);
  CHECK(t4.colour_of(0b11) == 4);

  CHECK_THROWS_AS(ColourTemplate::make(2, 2, {1, 2, 3}), InvalidAssignment);
  CHECK_THROWS_AS(ColourTemplate::make(2, 1, {1, 0}), InvalidAssignment);
  CHECK_THROWS_AS(ColourTemplate::make(2, 1, {1, -3}), InvalidAssignment);
  CHECK_THROWS_AS(ColourTemplate::make(1, 2, {1, 2, 3, 4}), PreconditionFailed);
  CHECK_THROWS_AS(ColourTemplate::make(2, 25, std::vector<int>(326, 1)), CapExceeded);
}

TEST_CASE("serialize golden record") {
  CHECK(serialize_template(ColourTemplate::make(2, 1, {1, 2})) ==
        "mcolour-template v1\nr=2 a=1 k=2\nassignment=1,2\n");
}

TEST_CASE("parse round trip") {
  const auto t = small_set(3, 3);
  CHECK(parse_template(serialize_template(t)) == t);
  const auto u = small_rainbow(2, 5);
  CHECK(parse_template(serialize_template(u)) == u);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_template(""), ParseError);
  CHECK_THROWS_AS(parse_template("mcolour-template v1\nr=2 a=1 k=2\n"), ParseError);
  CHECK_THROWS_AS(parse_template("mcolour-template v2\nr=2 a=1 k=2\nassignment=1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_template("mcolour-template v1\nr=2 a=1\nassignment=1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_template("mcolour-template v1\nr=2 a=1 k=x\nassignment=1,2\n"), ParseError);
  // missing pattern entry
  CHECK_THROWS_AS(parse_template("mcolour-template v1\nr=2 a=2 k=2\nassignment=1,2,1\n"), ParseError);
  // CRLF endings
  CHECK_THROWS_AS(parse_template("mcolour-template v1\r\nr=2 a=1 k=2\r\nassignment=1,2\r\n"),
                  ParseError);
  // missing trailing newline
  CHECK_THROWS_AS(parse_template("mcolour-template v1\nr=2 a=1 k=2\nassignment=1,2"), ParseError);
  // declared k disagrees with the assignment
  CHECK_THROWS_AS(parse_template("mcolour-template v1\nr=2 a=1 k=3\nassignment=1,2\n"),
                  InvalidAssignment);
  // bad colour id
  CHECK_THROWS_AS(parse_template("mcolour-template v1\nr=2 a=1 k=2\nassignment=1,\n"), ParseError);
}

namespace {

std::vector<int> random_permutation(int a, SplitMix64& rng) {
  std::vector<int> perm(a);
  for (int v = 1; v <= a; ++v) perm[v - 1] = v;
  for (int i = a - 1; i > 0; --i)
    std::swap(perm[i], perm[static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
  return perm;
}

}  // namespace

TEST_CASE("canonical form is constant on symmetry orbits") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = trial % 2 == 0 ? 2 : 3;
    const int a = 1 + static_cast<int>(rng.below(6));
    const std::int64_t n_patterns = binom_sum(a, r);
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_patterns)));
    const auto t = random_template(r, a, k, rng.next());
    const auto canon = canonical_form(t);
    for (int p = 0; p < 10; ++p) {
      const auto perm = random_permutation(a, rng);
      CHECK(canonical_form(permute_vertices(t, perm)) == canon);
    }
    CHECK(canonical_form(canon) == canon);  // idempotent
  }
}

TEST_CASE("canonical form of small-rainbow is itself") {
  const auto t = small_rainbow(2, 3);
  CHECK(canonical_form(t) == t);
  CHECK_THROWS_AS(canonical_form(small_rainbow(2, 9)), CapExceeded);
}

TEST_CASE("canonical form equates swapped vertices") {
  // same template up to swapping vertices 1,2
  const auto t1 = ColourTemplate::make(2, 2, {1, 2, 1, 3});
  const auto t2 = ColourTemplate::make(2, 2, {1, 1, 2, 3});
  CHECK(canonical_form(t1) == canonical_form(t2));
}

TEST_CASE("merge_colours") {
  const auto t = small_set(2, 2);  // colours: {} -> 1, {1} -> 2, {2} -> 3, {1,2} -> 4

  SUBCASE("identity partition leaves the template unchanged") {
    CHECK(merge_colours(t, {{1}, {2}, {3}, {4}}) == t);
  }
  SUBCASE("merging everything is monochromatic") {
    const auto merged = merge_colours(t, {{1, 2, 3, 4}});
    CHECK(merged.k() == 1);
    CHECK(spectrum(merged).values == std::vector<int>{1});
  }
  SUBCASE("merging the tail colour with a singleton colour") {
    const auto merged = merge_colours(t, {{1, 2}, {3}, {4}});
    CHECK(merged.k() == 3);
    CHECK(spectrum(merged).values == std::vector<int>{1, 2, 3});
  }
  SUBCASE("invalid partitions") {
    CHECK_THROWS_AS(merge_colours(t, {{1, 2}, {3}}), InvalidPartition);             // misses 4
    CHECK_THROWS_AS(merge_colours(t, {{1, 2}, {2, 3}, {4}}), InvalidPartition);     // repeats 2
    CHECK_THROWS_AS(merge_colours(t, {{1, 2, 3, 4}, {}}), InvalidPartition);        // empty class
    CHECK_THROWS_AS(merge_colours(t, {{1, 2, 3, 4, 5}}), InvalidPartition);         // out of [k]
  }
}

TEST_CASE("permute_vertices validates") {
  const auto t = small_set(2, 3);
  CHECK_THROWS_AS(permute_vertices(t, {1, 2}), PreconditionFailed);
  CHECK_THROWS_AS(permute_vertices(t, {1, 1, 2}), PreconditionFailed);
  CHECK(permute_vertices(t, {1, 2, 3}) == t);
}
