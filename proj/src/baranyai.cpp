#include "mcolour/baranyai.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "mcolour/combinatorics.hpp"
#include "mcolour/errors.hpp"
#include "mcolour/maxflow.hpp"
#include "mcolour/template.hpp"

namespace mcolour {

namespace {

constexpr int kFactorizeCap = 16;

void check_parameters(int l, int h) {
  if (h < 1 || h > l) throw PreconditionFailed("need 1 <= h <= l");
  if (l % h != 0)
    throw PreconditionFailed("h = " + std::to_string(h) + " does not divide l = " + std::to_string(l));
  if (l > kFactorizeCap)
    throw CapExceeded("factorization capped at l <= " + std::to_string(kFactorizeCap));
}

std::string set_string(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int v = 1; mask != 0; ++v, mask >>= 1) {
    if (mask & 1u) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
  }
  out += '}';
  return out;
}

}  // namespace

PartialFactorization initial_partial(int l, int h) {
  check_parameters(l, h);
  PartialFactorization p;
  p.l = l;
  p.h = h;
  p.stage = 0;
  const std::int64_t n_factors = binom(l - 1, h - 1);
  p.factors.assign(static_cast<std::size_t>(n_factors),
                   std::vector<std::uint32_t>(static_cast<std::size_t>(l / h), 0u));
  return p;
}

PartialFactorization extend_stage(const PartialFactorization& p) {
  const int l = p.l;
  const int h = p.h;
  const int n = p.stage;
  if (n >= l) throw PreconditionFailed("factorization already complete");
  const std::int64_t n_factors = static_cast<std::int64_t>(p.factors.size());

  FlowNetwork net;
  const int source = net.add_node();
  const int sink = net.add_node();

  // distinct incomplete parts, keyed by the subset itself; discovered in
  // factor order, parts in sorted order, so node ids are reproducible
  std::unordered_map<std::uint32_t, int> set_node;
  struct FactorArc {
    int arc;
    std::uint32_t part;
  };
  std::vector<std::vector<FactorArc>> factor_arcs(p.factors.size());

  for (std::size_t f = 0; f < p.factors.size(); ++f) {
    const int f_node = net.add_node();
    net.add_arc(source, f_node, 1);
    const auto& parts = p.factors[f];
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      const std::uint32_t part = parts[i];
      const int size = popcount(part);
      if (size < h) {
        auto it = set_node.find(part);
        if (it == set_node.end()) {
          const int node = net.add_node();
          it = set_node.emplace(part, node).first;
          net.add_arc(node, sink, binom(l - n - 1, h - size - 1));
        }
        const int arc = net.add_arc(f_node, it->second, static_cast<std::int64_t>(j - i));
        factor_arcs[f].push_back({arc, part});
      }
      i = j;
    }
  }

  const std::int64_t flow = net.max_flow(source, sink);
  if (flow != n_factors)
    throw InternalInvariantViolation("stage flow " + std::to_string(flow) + " != " +
                                     std::to_string(n_factors));

  PartialFactorization next;
  next.l = l;
  next.h = h;
  next.stage = n + 1;
  next.factors.resize(p.factors.size());
  const std::uint32_t new_bit = 1u << n;
  for (std::size_t f = 0; f < p.factors.size(); ++f) {
    std::uint32_t chosen = 0;
    bool found = false;
    for (const FactorArc& fa : factor_arcs[f]) {
      if (net.flow_on(fa.arc) == 1) {
        assert(!found);
        chosen = fa.part;
        found = true;
      }
    }
    if (!found) throw InternalInvariantViolation("factor received no flow");
    std::vector<std::uint32_t> parts = p.factors[f];
    auto it = std::find(parts.begin(), parts.end(), chosen);
    *it = chosen | new_bit;
    std::sort(parts.begin(), parts.end(), lex_less);
    next.factors[f] = std::move(parts);
  }
  return next;
}

Factorization factorize(int l, int h) {
  PartialFactorization p = initial_partial(l, h);
  for (int stage = 0; stage < l; ++stage) {
    p = extend_stage(p);
#ifndef NDEBUG
    if (l <= 10) assert(shadow_counts_hold(p));
#endif
  }
  Factorization f;
  f.l = l;
  f.h = h;
  f.factors = std::move(p.factors);
  return f;
}

bool shadow_counts_hold(const PartialFactorization& p) {
  const int l = p.l;
  const int h = p.h;
  const int n = p.stage;
  const std::uint32_t stage_mask = n == 0 ? 0u : ((1u << n) - 1u);

  if (p.factors.size() != static_cast<std::size_t>(binom(l - 1, h - 1))) return false;

  std::unordered_map<std::uint32_t, std::int64_t> count;
  for (const auto& parts : p.factors) {
    if (parts.size() != static_cast<std::size_t>(l / h)) return false;
    std::uint32_t seen = 0;
    int total_size = 0;
    for (std::uint32_t part : parts) {
      if ((part & ~stage_mask) != 0) return false;
      if ((part & seen) != 0) return false;  // parts must be disjoint
      seen |= part;
      total_size += popcount(part);
      ++count[part];
    }
    if (seen != stage_mask || total_size != n) return false;
  }

  // every S subset of [n] of size <= h occurs C(l-n, h-|S|) times in total
  for (std::uint32_t S = 0;; ++S) {
    const int size = popcount(S);
    if (size <= h) {
      const std::int64_t expected = binom(l - n, h - size);
      auto it = count.find(S);
      const std::int64_t actual = it == count.end() ? 0 : it->second;
      if (actual != expected) return false;
    }
    if (S == stage_mask) break;
  }
  return true;
}

CheckReport verify_factorization(const Factorization& f) {
  CheckReport report;
  report.check = "baranyai";
  report.params = {{"l", f.l}, {"h", f.h}, {"factors", f.factors.size()}};

  const auto fail = [&](const std::string& reason, std::int64_t factor_idx,
                        std::uint32_t subset) {
    report.verdict = Verdict::fail;
    report.narrative = reason;
    report.witnesses.push_back({factor_idx, 0, vertex_list_string(subset)});
    return report;
  };

  if (f.l < 1 || f.h < 1 || f.h > f.l || f.l % f.h != 0)
    return fail("parameters do not admit a factorization", -1, 0);

  const std::int64_t expected_factors = binom(f.l - 1, f.h - 1);
  if (static_cast<std::int64_t>(f.factors.size()) != expected_factors)
    return fail("factor count != C(l-1,h-1) = " + std::to_string(expected_factors), -1, 0);

  const std::uint32_t full = f.l == 32 ? ~0u : ((1u << f.l) - 1u);
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const auto& factor = f.factors[i];
    if (factor.size() != static_cast<std::size_t>(f.l / f.h))
      return fail("factor not a perfect matching: wrong edge count",
                  static_cast<std::int64_t>(i), 0);
    std::uint32_t seen = 0;
    for (std::uint32_t edge : factor) {
      if (popcount(edge) != f.h)
        return fail("factor not a perfect matching: edge of wrong size",
                    static_cast<std::int64_t>(i), edge);
      if ((edge & seen) != 0)
        return fail("factor not a perfect matching: overlapping edges",
                    static_cast<std::int64_t>(i), edge);
      seen |= edge;
    }
    if (seen != full)
      return fail("factor not a perfect matching: does not cover [l]",
                  static_cast<std::int64_t>(i), seen ^ full);
  }

  std::unordered_map<std::uint32_t, std::int64_t> first_seen;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    for (std::uint32_t edge : f.factors[i]) {
      auto [it, inserted] = first_seen.emplace(edge, static_cast<std::int64_t>(i));
      if (!inserted) return fail("edge repeated across factors", static_cast<std::int64_t>(i), edge);
    }
  }
  if (first_seen.size() != static_cast<std::size_t>(binom(f.l, f.h))) {
    // some edge is missing; find the first one in lex order
    const auto all = pattern_order(f.l, f.h);
    for (std::uint32_t edge : all)
      if (popcount(edge) == f.h && !first_seen.count(edge))
        return fail("edge missing from every factor", -1, edge);
  }

  report.verdict = Verdict::pass;
  report.narrative = std::to_string(f.factors.size()) + " factors of " +
                     std::to_string(f.l / f.h) + " disjoint " + std::to_string(f.h) +
                     "-sets; every edge covered exactly once";
  return report;
}

std::string factorization_to_text(const Factorization& f) {
  std::string out;
  for (const auto& factor : f.factors) {
    for (std::size_t i = 0; i < factor.size(); ++i) {
      if (i) out += ' ';
      out += set_string(factor[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace mcolour
