#include "mcolour/corpus.hpp"

#include <atomic>
#include <thread>

#include "mcolour/analysis.hpp"
#include "mcolour/constructions.hpp"
#include "mcolour/errors.hpp"
#include "mcolour/spectrum.hpp"

namespace mcolour {

std::int64_t corpus_size(const CorpusOptions& options) {
  return options.random_count + (options.include_families ? 2ll * (options.a_max + 1) : 0);
}

namespace {

std::string zero_pad(std::int64_t v, int width) {
  std::string s = std::to_string(v);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

}  // namespace

std::string corpus_template_id(const CorpusOptions& options, std::int64_t index) {
  if (index < options.random_count) return "random-" + zero_pad(index, 6);
  const std::int64_t family = index - options.random_count;
  const std::int64_t per_family = options.a_max + 1;
  if (family < per_family) return "small-rainbow-a" + zero_pad(family, 2);
  return "small-set-a" + zero_pad(family - per_family, 2);
}

ColourTemplate corpus_template(const CorpusOptions& options, std::int64_t index) {
  if (index < options.random_count) {
    const int a = 1 + static_cast<int>(index % options.a_max);
    SplitMix64 mix(options.seed + static_cast<std::uint64_t>(index));
    const std::int64_t n_patterns = binom_sum(a, options.r);
    const int k = 1 + static_cast<int>(mix.below(static_cast<std::uint64_t>(n_patterns)));
    return random_template(options.r, a, k, mix.next());
  }
  const std::int64_t family = index - options.random_count;
  const std::int64_t per_family = options.a_max + 1;
  if (family < per_family) return small_rainbow(options.r, static_cast<int>(family));
  return small_set(options.r, static_cast<int>(family - per_family));
}

namespace {

CheckReport run_named_check(const std::string& name, const ColourTemplate& t, const Spectrum& sp) {
  if (name == "theorem1") return check_theorem1(t, sp);
  if (name == "conjecture-r2") return check_conjecture_r2(t, sp);
  if (name == "interval-i") return check_interval_I(t, 1, sp);
  if (name == "lemma") return check_lemma(t, sp);
  throw PreconditionFailed("unknown corpus check '" + name + "'");
}

}  // namespace

CorpusResult run_corpus(const CorpusOptions& options, const std::vector<std::string>& checks,
                        int threads) {
  const std::int64_t total = corpus_size(options);
  std::vector<std::vector<CheckReport>> slots(static_cast<std::size_t>(total));

  std::atomic<std::int64_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      const std::int64_t i = cursor.fetch_add(1);
      if (i >= total) break;
      const ColourTemplate t = corpus_template(options, i);
      const Spectrum sp = spectrum(t);
      auto& out = slots[static_cast<std::size_t>(i)];
      out.reserve(checks.size());
      for (const std::string& name : checks) out.push_back(run_named_check(name, t, sp));
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  CorpusResult result;
  result.templates = total;
  result.csv = "template,check,verdict\n";
  for (std::int64_t i = 0; i < total; ++i) {
    const std::string id = corpus_template_id(options, i);
    for (const CheckReport& report : slots[static_cast<std::size_t>(i)]) {
      result.csv += check_csv_row(id, report);
      auto& tally = result.tallies[report.check];
      tally[static_cast<int>(report.verdict)] += 1;
      if (report.verdict == Verdict::fail) {
        result.failures.push_back(report);
        result.failure_ids.push_back(id);
        result.all_pass = false;
      }
    }
  }
  return result;
}

}  // namespace mcolour
