#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mcolour/report.hpp"
#include "mcolour/template.hpp"

namespace mcolour {

// A reproducible template corpus: `random_count` seeded random templates
// with a cycling through 1..a_max, optionally followed by the
// small-rainbow and small-set families for a = 0..a_max. Template i is a
// pure function of (options, i), so corpus runs parallelize freely.
struct CorpusOptions {
  std::int64_t random_count = 10000;
  int a_max = 12;
  int r = 2;
  std::uint64_t seed = 0;
  bool include_families = true;
};

std::int64_t corpus_size(const CorpusOptions& options);
std::string corpus_template_id(const CorpusOptions& options, std::int64_t index);
ColourTemplate corpus_template(const CorpusOptions& options, std::int64_t index);

struct CorpusResult {
  std::int64_t templates = 0;
  // verdict tallies per check name: {pass, fail, report}
  std::map<std::string, std::array<std::int64_t, 3>> tallies;
  std::vector<CheckReport> failures;        // full reports of every fail
  std::vector<std::string> failure_ids;     // template ids, parallel
  std::string csv;                          // header + one row per (template, check)
  bool all_pass = true;                     // no fail verdicts anywhere
};

// Runs the named checks ("theorem1", "conjecture-r2", "interval-i",
// "lemma") over the whole corpus on `threads` workers. Reports are merged
// in template order, so the result is identical for any thread count.
CorpusResult run_corpus(const CorpusOptions& options, const std::vector<std::string>& checks,
                        int threads);

}  // namespace mcolour
