// mcolour: exact colour spectra of finitely-determined hypergraph edge
// colourings, extremal constructions, Baranyai factorizations, and the
// bound checkers that tie them together. All randomness flows from
// --seed; outputs are byte-identical across reruns and thread counts.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcolour/analysis.hpp"
#include "mcolour/baranyai.hpp"
#include "mcolour/constructions.hpp"
#include "mcolour/corpus.hpp"
#include "mcolour/errors.hpp"
#include "mcolour/spectrum.hpp"
#include "mcolour/template.hpp"
#include "mcolour/version.hpp"

using nlohmann::json;

namespace {

struct GlobalOptions {
  std::uint64_t seed = 0;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  std::string json_path;
  std::string csv_path;
  std::string out_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mcolour::Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mcolour::Error("cannot write " + path);
  out << content;
}

// threads and wall-clock are runtime configuration, not semantics: they
// stay out of the manifest so reruns compare byte-identical
json make_manifest(const std::string& subcommand, const json& params, std::uint64_t seed,
                   const std::vector<std::string>& inputs,
                   const std::vector<std::string>& outputs) {
  return {{"tool", mcolour::kToolName}, {"version", mcolour::kVersion},
          {"subcommand", subcommand},  {"params", params},
          {"seed", seed},              {"inputs", inputs},
          {"outputs", outputs}};
}

// non-JSON artifacts get a sidecar <path>.manifest.json
void write_text_artifact(const std::string& path, const std::string& content,
                         const json& manifest) {
  write_file(path, content);
  write_file(path + ".manifest.json", manifest.dump(2) + "\n");
}

void write_json_artifact(const std::string& path, json payload, const json& manifest) {
  payload["manifest"] = manifest;
  write_file(path, payload.dump(2) + "\n");
}

json spectrum_json(const mcolour::Spectrum& sp) {
  json values = json::array();
  json witnesses = json::array();
  for (std::size_t i = 0; i < sp.values.size(); ++i) {
    values.push_back(sp.values[i]);
    witnesses.push_back(mcolour::vertex_list_string(sp.witnesses[i]));
  }
  return {{"k", sp.k}, {"values", values}, {"witnesses", witnesses}};
}

std::string joined_values(const mcolour::Spectrum& sp) {
  std::string out;
  for (std::size_t i = 0; i < sp.values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sp.values[i]);
  }
  return out;
}

int emit_template(const GlobalOptions& g, const mcolour::ColourTemplate& t,
                  const std::string& subcommand, const json& params) {
  const std::string text = mcolour::serialize_template(t);
  if (g.out_path.empty()) {
    std::cout << text;
  } else {
    write_text_artifact(g.out_path, text,
                        make_manifest(subcommand, params, g.seed, {}, {g.out_path}));
  }
  return 0;
}

// single-template check subcommand body
int run_single_check(const GlobalOptions& g, const std::string& name,
                     const std::string& template_path, const mcolour::CheckReport& report,
                     const json& params) {
  std::cout << name << ": " << mcolour::to_string(report.verdict) << "\n"
            << report.narrative << "\n";
  const json manifest =
      make_manifest("check " + name, params, g.seed, {template_path},
                    {});
  if (!g.json_path.empty())
    write_json_artifact(g.json_path, {{"report", mcolour::to_json(report)}}, manifest);
  if (!g.csv_path.empty())
    write_text_artifact(g.csv_path,
                        "template,check,verdict\n" +
                            mcolour::check_csv_row(template_path, report),
                        manifest);
  return report.verdict == mcolour::Verdict::fail ? 1 : 0;
}

int run_corpus_check(const GlobalOptions& g, const std::string& name, std::int64_t count,
                     int r, int a_max) {
  mcolour::CorpusOptions options;
  options.random_count = count;
  options.a_max = a_max;
  options.r = r;
  options.seed = g.seed;
  const mcolour::CorpusResult result =
      mcolour::run_corpus(options, {name}, std::max(g.threads, 1));

  std::cout << "templates: " << result.templates << "\n";
  json tallies = json::object();
  for (const auto& [check, tally] : result.tallies) {
    std::cout << check << ": pass=" << tally[0] << " fail=" << tally[1]
              << " report=" << tally[2] << "\n";
    tallies[check] = {{"pass", tally[0]}, {"fail", tally[1]}, {"report", tally[2]}};
  }
  std::cout << "result: " << (result.all_pass ? "PASS" : "FAIL") << "\n";

  const json params = {{"corpus", count}, {"r", r}, {"a_max", a_max}};
  const json manifest = make_manifest("check " + name, params, g.seed, {},
                                      {});
  if (!g.json_path.empty()) {
    json failures = json::array();
    for (std::size_t i = 0; i < result.failures.size(); ++i)
      failures.push_back({{"template", result.failure_ids[i]},
                          {"report", mcolour::to_json(result.failures[i])}});
    write_json_artifact(g.json_path,
                        {{"templates", result.templates},
                         {"checks", tallies},
                         {"failures", failures},
                         {"all_pass", result.all_pass}},
                        manifest);
  }
  if (!g.csv_path.empty()) write_text_artifact(g.csv_path, result.csv, manifest);
  return result.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra of finitely-determined hypergraph edge colourings"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "seed for all randomized operations")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads for corpus runs");
  app.add_option("--json", g.json_path, "write a JSON artifact here");
  app.add_option("--csv", g.csv_path, "write a CSV artifact here");
  app.add_option("-o,--output", g.out_path, "primary output file");

  std::function<int()> action;

  // ---- construct -------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "build a named colouring template");
  construct->require_subcommand(1);
  {
    auto* sub = construct->add_subcommand("small-rainbow", "rainbow inside [a], one colour outside");
    auto r = std::make_shared<int>(2);
    auto a = std::make_shared<int>(0);
    sub->add_option("--r", *r, "uniformity")->required();
    sub->add_option("--a", *a, "template size")->required();
    sub->callback([&, r, a] {
      action = [&, r, a] {
        return emit_template(g, mcolour::small_rainbow(*r, *a), "construct small-rainbow",
                             {{"r", *r}, {"a", *a}});
      };
    });
  }
  {
    auto* sub = construct->add_subcommand("small-set", "every pattern its own colour");
    auto r = std::make_shared<int>(2);
    auto a = std::make_shared<int>(0);
    sub->add_option("--r", *r, "uniformity")->required();
    sub->add_option("--a", *a, "template size")->required();
    sub->callback([&, r, a] {
      action = [&, r, a] {
        return emit_template(g, mcolour::small_set(*r, *a), "construct small-set",
                             {{"r", *r}, {"a", *a}});
      };
    });
  }
  {
    auto* sub = construct->add_subcommand(
        "theorem4", "colouring whose spectrum avoids (sum C(n-1,i), sum C(n,i)]");
    auto r = std::make_shared<int>(3);
    auto n = std::make_shared<int>(0);
    sub->add_option("--r", *r, "uniformity (>= 3)")->required();
    sub->add_option("--n", *n, "parameter n; A = [n+1]")->required();
    sub->callback([&, r, n] {
      action = [&, r, n] {
        return emit_template(g, mcolour::theorem4(*r, *n), "construct theorem4",
                             {{"r", *r}, {"n", *n}});
      };
    });
  }
  {
    auto* sub = construct->add_subcommand("random", "seeded random surjective template");
    auto r = std::make_shared<int>(2);
    auto a = std::make_shared<int>(0);
    auto k = std::make_shared<int>(1);
    sub->add_option("--r", *r, "uniformity")->required();
    sub->add_option("--a", *a, "template size")->required();
    sub->add_option("--k", *k, "number of colours")->required();
    sub->callback([&, r, a, k] {
      action = [&, r, a, k] {
        return emit_template(g, mcolour::random_template(*r, *a, *k, g.seed), "construct random",
                             {{"r", *r}, {"a", *a}, {"k", *k}});
      };
    });
  }

  // ---- spectrum ----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("spectrum", "exact achievable colour counts of a template");
    auto path = std::make_shared<std::string>();
    sub->add_option("template", *path, "template file")->required()->check(CLI::ExistingFile);
    sub->callback([&, path] {
      action = [&, path] {
        const mcolour::ColourTemplate t = mcolour::parse_template(read_file(*path));
        const mcolour::Spectrum sp = mcolour::spectrum(t);
        std::cout << joined_values(sp) << "\n";
        const json manifest = make_manifest("spectrum", {{"template", *path}}, g.seed, {*path}, {});
        if (!g.csv_path.empty())
          write_text_artifact(g.csv_path, mcolour::spectrum_to_csv(sp), manifest);
        if (!g.json_path.empty())
          write_json_artifact(g.json_path, {{"spectrum", spectrum_json(sp)}}, manifest);
        return 0;
      };
    });
  }

  // ---- nearest -----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("nearest", "spectrum element closest to m");
    auto path = std::make_shared<std::string>();
    auto m = std::make_shared<int>(1);
    sub->add_option("template", *path, "template file")->required()->check(CLI::ExistingFile);
    sub->add_option("--m", *m, "target colour count")->required();
    sub->callback([&, path, m] {
      action = [&, path, m] {
        const mcolour::ColourTemplate t = mcolour::parse_template(read_file(*path));
        const mcolour::NearestResult nr = mcolour::nearest(mcolour::spectrum(t), *m);
        std::cout << "m_prime=" << nr.value << " dist=" << nr.dist << "\n";
        if (!g.json_path.empty())
          write_json_artifact(
              g.json_path, {{"m", *m}, {"m_prime", nr.value}, {"dist", nr.dist}},
              make_manifest("nearest", {{"template", *path}, {"m", *m}}, g.seed, {*path}, {}));
        return 0;
      };
    });
  }

  // ---- baranyai ----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("baranyai", "1-factorization of the h-subsets of [l]");
    auto l = std::make_shared<int>(0);
    auto h = std::make_shared<int>(0);
    auto verify = std::make_shared<bool>(false);
    sub->add_option("--l", *l, "vertex count")->required();
    sub->add_option("--h", *h, "uniformity; h | l")->required();
    sub->add_flag("--verify", *verify, "re-check the factorization invariants");
    sub->callback([&, l, h, verify] {
      action = [&, l, h, verify] {
        const mcolour::Factorization f = mcolour::factorize(*l, *h);
        const std::string text = mcolour::factorization_to_text(f);
        const json params = {{"l", *l}, {"h", *h}, {"verify", *verify}};
        const json manifest = make_manifest("baranyai", params, g.seed, {},
                                            g.out_path.empty()
                                                ? std::vector<std::string>{}
                                                : std::vector<std::string>{g.out_path});
        if (g.out_path.empty())
          std::cout << text;
        else
          write_text_artifact(g.out_path, text, manifest);
        int rc = 0;
        if (*verify) {
          const mcolour::CheckReport report = mcolour::verify_factorization(f);
          std::cout << "verify: " << mcolour::to_string(report.verdict) << " ("
                    << report.narrative << ")\n";
          if (!g.json_path.empty())
            write_json_artifact(g.json_path, {{"report", mcolour::to_json(report)}}, manifest);
          rc = report.verdict == mcolour::Verdict::fail ? 1 : 0;
        }
        return rc;
      };
    });
  }

  // ---- check -------------------------------------------------------------
  auto* check = app.add_subcommand("check", "run a certified checker");
  check->require_subcommand(1);
  struct CheckArgs {
    std::string template_path;
    std::int64_t corpus = -1;
    int r = 2;
    int a_max = 12;
    int n_min = 1;
    int n = 0;
  };
  auto add_template_or_corpus = [&](CLI::App* sub, const std::shared_ptr<CheckArgs>& args) {
    auto* tpl = sub->add_option("--template", args->template_path, "template file")
                    ->check(CLI::ExistingFile);
    auto* corpus = sub->add_option("--corpus", args->corpus, "run over a seeded corpus of this size");
    sub->add_option("--r", args->r, "corpus uniformity")->capture_default_str();
    sub->add_option("--a-max", args->a_max, "corpus max template size")->capture_default_str();
    tpl->excludes(corpus);
    corpus->excludes(tpl);
  };
  auto make_check_action = [&](const std::string& name, const std::shared_ptr<CheckArgs>& args,
                               auto runner) {
    return [&, name, args, runner] {
      if (args->corpus >= 0) return run_corpus_check(g, name, args->corpus, args->r, args->a_max);
      if (args->template_path.empty())
        throw CLI::RequiredError("check " + name + ": --template or --corpus");
      const mcolour::ColourTemplate t = mcolour::parse_template(read_file(args->template_path));
      const json params = {{"template", args->template_path}};
      return run_single_check(g, name, args->template_path, runner(t), params);
    };
  };
  {
    auto* sub = check->add_subcommand("theorem1", "nearest-distance bound for every m <= k");
    auto args = std::make_shared<CheckArgs>();
    add_template_or_corpus(sub, args);
    sub->callback([&, args] {
      action = make_check_action("theorem1", args,
                                 [](const mcolour::ColourTemplate& t) { return mcolour::check_theorem1(t); });
    });
  }
  {
    auto* sub = check->add_subcommand("conjecture-r2", "every interval (C(n,2)+1, C(n+1,2)+1] is hit");
    auto args = std::make_shared<CheckArgs>();
    add_template_or_corpus(sub, args);
    sub->callback([&, args] {
      action = make_check_action("conjecture-r2", args, [](const mcolour::ColourTemplate& t) {
        return mcolour::check_conjecture_r2(t);
      });
    });
  }
  {
    auto* sub = check->add_subcommand("interval-i", "interval hits I_{r,n} from n-min upward");
    auto args = std::make_shared<CheckArgs>();
    add_template_or_corpus(sub, args);
    sub->add_option("--n-min", args->n_min, "first n to probe")->capture_default_str();
    sub->callback([&, args] {
      action = make_check_action("interval-i", args, [args](const mcolour::ColourTemplate& t) {
        return mcolour::check_interval_I(t, args->n_min);
      });
    });
  }
  {
    auto* sub = check->add_subcommand("lemma", "back-window guarantees for every m in F");
    auto args = std::make_shared<CheckArgs>();
    add_template_or_corpus(sub, args);
    sub->callback([&, args] {
      action = make_check_action("lemma", args,
                                 [](const mcolour::ColourTemplate& t) { return mcolour::check_lemma(t); });
    });
  }
  {
    auto* sub = check->add_subcommand("theorem4", "spectrum gap of the theorem4 construction");
    auto r = std::make_shared<int>(3);
    auto n = std::make_shared<int>(0);
    sub->add_option("--r", *r, "uniformity (>= 3)")->required();
    sub->add_option("--n", *n, "parameter n")->required();
    sub->callback([&, r, n] {
      action = [&, r, n] {
        const mcolour::CheckReport report = mcolour::check_theorem4(*r, *n);
        std::cout << "theorem4: " << mcolour::to_string(report.verdict) << "\n"
                  << report.narrative << "\n";
        const json params = {{"r", *r}, {"n", *n}};
        if (!g.json_path.empty())
          write_json_artifact(g.json_path, {{"report", mcolour::to_json(report)}},
                              make_manifest("check theorem4", params, g.seed, {}, {}));
        return report.verdict == mcolour::Verdict::fail ? 1 : 0;
      };
    });
  }

  // ---- search ------------------------------------------------------------
  auto* search = app.add_subcommand("search", "randomized / exhaustive template searches");
  search->require_subcommand(1);
  {
    auto* sub = search->add_subcommand("missing-m", "find a k-colouring whose spectrum omits m");
    auto r = std::make_shared<int>(2);
    auto k = std::make_shared<std::int64_t>(0);
    auto m = std::make_shared<std::int64_t>(0);
    auto budget = std::make_shared<std::int64_t>(10000);
    auto a_max = std::make_shared<int>(12);
    sub->add_option("--r", *r, "uniformity")->capture_default_str();
    sub->add_option("--k", *k, "number of colours")->required();
    sub->add_option("--m", *m, "value to avoid (k > m > 2)")->required();
    sub->add_option("--budget", *budget, "candidate limit")->capture_default_str();
    sub->add_option("--a-max", *a_max, "largest template size to try")->capture_default_str();
    sub->callback([&, r, k, m, budget, a_max] {
      action = [&, r, k, m, budget, a_max] {
        const mcolour::MissingSearchResult res =
            mcolour::search_missing_m(*r, *k, *m, *budget, g.seed, *a_max);
        const json params = {{"r", *r}, {"k", *k}, {"m", *m}, {"budget", *budget}, {"a_max", *a_max}};
        json payload = {{"found", res.certificate.has_value()}, {"candidates", res.candidates}};
        if (res.certificate) {
          std::cout << "certificate found after " << res.candidates << " candidates\n";
          const std::string text = mcolour::serialize_template(*res.certificate);
          payload["template"] = text;
          payload["spectrum"] = spectrum_json(mcolour::spectrum(*res.certificate));
          if (g.out_path.empty())
            std::cout << text;
          else
            write_text_artifact(g.out_path, text,
                                make_manifest("search missing-m", params, g.seed, {}, {g.out_path}));
        } else {
          std::cout << "not found after " << res.candidates << " candidates\n";
        }
        if (!g.json_path.empty())
          write_json_artifact(g.json_path, payload,
                              make_manifest("search missing-m", params, g.seed, {}, {}));
        return 0;
      };
    });
  }
  {
    auto* sub = search->add_subcommand("psi", "smallest spectrum size among k-colourings");
    auto r = std::make_shared<int>(2);
    auto k = std::make_shared<std::int64_t>(0);
    auto mode = std::make_shared<std::string>("exhaustive");
    auto budget = std::make_shared<std::int64_t>(10000);
    auto a_min = std::make_shared<int>(-1);
    auto a_max = std::make_shared<int>(-1);
    sub->add_option("--r", *r, "uniformity")->capture_default_str();
    sub->add_option("--k", *k, "number of colours")->required();
    sub->add_option("--mode", *mode, "exhaustive | randomized")
        ->check(CLI::IsMember({"exhaustive", "randomized"}))
        ->capture_default_str();
    sub->add_option("--budget", *budget, "candidate limit (randomized)")->capture_default_str();
    sub->add_option("--a-min", *a_min, "smallest template size (-1 = auto)");
    sub->add_option("--a-max", *a_max, "largest template size (-1 = auto)");
    sub->callback([&, r, k, mode, budget, a_min, a_max] {
      action = [&, r, k, mode, budget, a_min, a_max] {
        const mcolour::SearchMode sm = *mode == "exhaustive" ? mcolour::SearchMode::exhaustive
                                                             : mcolour::SearchMode::randomized;
        const mcolour::PsiSearchResult res =
            mcolour::psi_upper_search(*r, *k, sm, *budget, g.seed, *a_min, *a_max);
        const std::int64_t lower =
            *r == 2 ? std::max(mcolour::psi_lower(*r, *k), mcolour::psi_lower_trivial(*r, *k))
                    : mcolour::psi_lower(*r, *k);
        const bool exact = *r == 2 && res.best_size == lower;
        std::cout << "upper bound " << res.best_size << " from " << res.evaluated
                  << " spectra";
        if (sm == mcolour::SearchMode::exhaustive)
          std::cout << " (" << res.enumerated << " assignments enumerated)";
        std::cout << "\nlower bound " << lower << (*r >= 3 ? " (report-only)" : "") << "\n"
                  << "status: " << (exact ? "exact" : "open") << "\n";
        const json params = {{"r", *r},           {"k", *k},         {"mode", *mode},
                             {"budget", *budget}, {"a_min", *a_min}, {"a_max", *a_max}};
        json payload = {{"upper", res.best_size}, {"lower", lower},
                        {"exact", exact},         {"truncated", res.truncated},
                        {"evaluated", res.evaluated}, {"enumerated", res.enumerated}};
        if (res.best) {
          payload["template"] = mcolour::serialize_template(*res.best);
          if (!g.out_path.empty())
            write_text_artifact(g.out_path, mcolour::serialize_template(*res.best),
                                make_manifest("search psi", params, g.seed, {}, {g.out_path}));
        }
        if (!g.json_path.empty())
          write_json_artifact(g.json_path, payload,
                              make_manifest("search psi", params, g.seed, {}, {}));
        return 0;
      };
    });
  }

  // ---- bounds ------------------------------------------------------------
  {
    auto* sub = app.add_subcommand("bounds", "closed-form bound values for given parameters");
    auto r = std::make_shared<int>(2);
    auto m = std::make_shared<std::int64_t>(-1);
    auto n = std::make_shared<int>(-1);
    auto a = std::make_shared<int>(-1);
    auto l = std::make_shared<int>(-1);
    auto k = std::make_shared<std::int64_t>(-1);
    auto slack = std::make_shared<double>(-1.0);
    sub->add_option("--r", *r, "uniformity")->required();
    sub->add_option("--m", *m, "target colour count");
    sub->add_option("--n", *n, "interval index");
    sub->add_option("--a", *a, "determining-set size");
    sub->add_option("--l", *l, "tightness parameter");
    sub->add_option("--k", *k, "palette size");
    sub->add_option("--slack", *slack, "second-order coefficient for r >= 3");
    sub->callback([&, r, m, n, a, l, k, slack] {
      action = [&, r, m, n, a, l, k, slack] {
        json payload;
        std::cout << "c_r = " << mcolour::c_r(*r) << "\n";
        payload["c_r"] = mcolour::c_r(*r);
        if (*m >= 1) {
          const std::optional<double> sl =
              *slack >= 0 ? std::optional<double>(*slack) : std::nullopt;
          const double bound = mcolour::theorem1_bound(*r, *m, sl);
          std::cout << "theorem1_bound(" << *m << ") = " << bound << "\n";
          payload["theorem1_bound"] = bound;
        }
        if (*n >= 1) {
          const auto I = mcolour::interval_I(*r, *n);
          const auto J = mcolour::interval_J(*r, *n);
          std::cout << "interval_I = (" << I.lo << "," << I.hi << "]\n";
          std::cout << "interval_J = (" << J.lo << "," << J.hi << "]\n";
          payload["interval_I"] = {I.lo, I.hi};
          payload["interval_J"] = {J.lo, J.hi};
        }
        if (*a >= 1 && *m >= 2) {
          const auto w = mcolour::lemma_bounds(*r, *a, *m);
          const auto dec = mcolour::decompose_m(*r, *a, *m);
          const auto c_lo = mcolour::claimC_bound(*r, *a, dec);
          std::cout << "lemma window width = " << w.width << " (patterns "
                    << w.pattern_bound << ", ratio " << w.ratio_bound.str() << ")\n";
          std::cout << "decomposition: t=" << dec.t << " s=" << dec.s << "\n";
          std::cout << "claimC bound = " << c_lo.str() << "\n";
          payload["lemma_window"] = w.width;
          payload["decomposition"] = {{"t", dec.t}, {"s", dec.s}};
          payload["claimC_bound"] = c_lo.str();
        }
        if (*l >= 1) {
          const auto tight = mcolour::tightness_instance(*r, *l);
          if (tight) {
            std::cout << "tightness: m = " << tight->m << ", gap = " << tight->gap.str() << "\n";
            payload["tightness"] = {{"m", tight->m}, {"gap", tight->gap.str()}};
          } else {
            std::cout << "tightness: none (parity)\n";
            payload["tightness"] = nullptr;
          }
        }
        if (*k >= 1) {
          const std::int64_t lower = mcolour::psi_lower(*r, *k);
          std::cout << "psi_lower = " << lower << (*r >= 3 ? " (report-only)" : "") << "\n";
          payload["psi_lower"] = lower;
        }
        if (!g.json_path.empty()) {
          const json params = {{"r", *r}, {"m", *m}, {"n", *n},
                               {"a", *a}, {"l", *l}, {"k", *k}};
          write_json_artifact(g.json_path, payload,
                              make_manifest("bounds", params, g.seed, {}, {}));
        }
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    rc = action ? action() : 2;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const mcolour::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const mcolour::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
  return rc;
}
