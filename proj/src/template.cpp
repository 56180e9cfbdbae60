#include "mcolour/template.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

namespace mcolour {

namespace {

constexpr int kTemplateCap = 24;       // 2^a subset sweeps must stay desk scale
constexpr int kCanonicalCap = 8;       // a! brute force

// Visits all s-element subsets of {1..a} as ascending index arrays,
// in lex order.
template <typename Fn>
void for_each_combination(int a, int s, Fn&& visit) {
  if (s == 0) {
    visit(static_cast<const int*>(nullptr));
    return;
  }
  if (s > a) return;
  std::vector<int> c(s);
  for (int i = 0; i < s; ++i) c[i] = i + 1;
  while (true) {
    visit(c.data());
    int i = s - 1;
    while (i >= 0 && c[i] == a - (s - 1 - i)) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

std::string vertex_list_string(PatternMask m) {
  std::string out;
  for (int v = 1; m != 0; ++v, m >>= 1) {
    if (m & 1u) {
      if (!out.empty()) out += ' ';
      out += std::to_string(v);
    }
  }
  return out;
}

std::vector<PatternMask> pattern_order(int a, int r) {
  std::vector<PatternMask> out;
  out.reserve(static_cast<std::size_t>(binom_sum(a, r)));
  for (int s = 0; s <= std::min(a, r); ++s) {
    for_each_combination(a, s, [&](const int* verts) {
      PatternMask m = 0;
      for (int i = 0; i < s; ++i) m |= 1u << (verts[i] - 1);
      out.push_back(m);
    });
  }
  return out;
}

ColourTemplate ColourTemplate::make(int r, int a, const std::vector<int>& colours) {
  if (r < 2) throw PreconditionFailed("uniformity r must be at least 2");
  if (a < 0) throw PreconditionFailed("template size a must be non-negative");
  if (a > kTemplateCap)
    throw CapExceeded("template size a = " + std::to_string(a) + " exceeds cap " +
                      std::to_string(kTemplateCap));

  ColourTemplate t;
  t.r_ = r;
  t.a_ = a;
  t.patterns_ = pattern_order(a, r);
  if (colours.size() != t.patterns_.size())
    throw InvalidAssignment("assignment has " + std::to_string(colours.size()) +
                            " entries, expected " + std::to_string(t.patterns_.size()));

  // compact colour ids to 1..k by first occurrence
  std::unordered_map<int, int> relabel;
  t.assignment_.reserve(colours.size());
  for (int c : colours) {
    if (c <= 0) throw InvalidAssignment("colour ids must be positive, got " + std::to_string(c));
    auto [it, inserted] = relabel.emplace(c, static_cast<int>(relabel.size() + 1));
    t.assignment_.push_back(it->second);
  }
  t.k_ = static_cast<int>(relabel.size());

  t.index_by_mask_.assign(std::size_t{1} << a, -1);
  for (std::size_t i = 0; i < t.patterns_.size(); ++i)
    t.index_by_mask_[t.patterns_[i]] = static_cast<std::int32_t>(i);
  return t;
}

namespace {

std::int64_t parse_int_field(std::string_view s, std::string_view key, int line_no) {
  if (s.size() <= key.size() + 1 || s.substr(0, key.size()) != key || s[key.size()] != '=')
    throw ParseError("expected " + std::string(key) + "=<int>", line_no);
  std::string_view digits = s.substr(key.size() + 1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("malformed integer in " + std::string(key) + " field", line_no);
  return value;
}

}  // namespace

ColourTemplate parse_template(std::string_view text) {
  // exactly three LF-terminated lines, no CR allowed
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      throw ParseError("missing trailing newline", static_cast<int>(lines.size() + 1));
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.size() != 3)
    throw ParseError("expected 3 lines, got " + std::to_string(lines.size()),
                     static_cast<int>(lines.size()));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find('\r') != std::string_view::npos)
      throw ParseError("CR line ending not allowed", static_cast<int>(i + 1));
    if (!lines[i].empty() && (lines[i].back() == ' ' || lines[i].back() == '\t'))
      throw ParseError("trailing whitespace", static_cast<int>(i + 1));
  }

  if (lines[0] != "mcolour-template v1")
    throw ParseError("bad magic, expected 'mcolour-template v1'", 1);

  // line 2: r=<int> a=<int> k=<int>
  std::vector<std::string_view> fields;
  {
    std::string_view s = lines[1];
    std::size_t p = 0;
    while (p <= s.size()) {
      std::size_t sp = s.find(' ', p);
      if (sp == std::string_view::npos) {
        fields.push_back(s.substr(p));
        break;
      }
      fields.push_back(s.substr(p, sp - p));
      p = sp + 1;
    }
  }
  if (fields.size() != 3) throw ParseError("expected 'r=<int> a=<int> k=<int>'", 2);
  const std::int64_t r = parse_int_field(fields[0], "r", 2);
  const std::int64_t a = parse_int_field(fields[1], "a", 2);
  const std::int64_t k = parse_int_field(fields[2], "k", 2);

  // line 3: assignment=<c_0>,...,<c_{P-1}>
  constexpr std::string_view kAssign = "assignment=";
  if (lines[2].substr(0, kAssign.size()) != kAssign)
    throw ParseError("expected 'assignment=...'", 3);
  std::string_view body = lines[2].substr(kAssign.size());
  std::vector<int> colours;
  {
    std::size_t p = 0;
    if (body.empty()) throw ParseError("empty assignment", 3);
    while (p <= body.size()) {
      std::size_t comma = body.find(',', p);
      std::string_view item =
          comma == std::string_view::npos ? body.substr(p) : body.substr(p, comma - p);
      int value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
        throw ParseError("malformed colour id '" + std::string(item) + "'", 3);
      colours.push_back(value);
      if (comma == std::string_view::npos) break;
      p = comma + 1;
    }
  }

  if (r < 2 || a < 0) throw ParseError("r must be >= 2 and a >= 0", 2);
  if (a <= kTemplateCap) {
    const std::int64_t expected = binom_sum(static_cast<int>(a), static_cast<int>(r));
    if (static_cast<std::int64_t>(colours.size()) != expected)
      throw ParseError("assignment has " + std::to_string(colours.size()) + " entries, expected " +
                           std::to_string(expected),
                       3);
  }
  ColourTemplate t = ColourTemplate::make(static_cast<int>(r), static_cast<int>(a), colours);
  if (t.k() != k)
    throw InvalidAssignment("declared k=" + std::to_string(k) + " but assignment uses " +
                            std::to_string(t.k()) + " colours");
  return t;
}

std::string serialize_template(const ColourTemplate& t) {
  std::string out = "mcolour-template v1\n";
  out += "r=" + std::to_string(t.r()) + " a=" + std::to_string(t.a()) +
         " k=" + std::to_string(t.k()) + "\n";
  out += "assignment=";
  const auto& assign = t.assignment();
  for (std::size_t i = 0; i < assign.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(assign[i]);
  }
  out += '\n';
  return out;
}

namespace {

// colour vector of t with vertices renamed by perm, in pattern order,
// relabelled by first occurrence
std::vector<int> permuted_compacted(const ColourTemplate& t, const std::vector<int>& perm) {
  const auto& patterns = t.patterns();
  std::vector<int> raw(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    PatternMask m = patterns[i];
    PatternMask image = 0;
    for (int v = 1; m != 0; ++v, m >>= 1)
      if (m & 1u) image |= 1u << (perm[v - 1] - 1);
    raw[t.pattern_index(image)] = t.assignment()[i];
  }
  std::vector<int> relabel(static_cast<std::size_t>(t.k()) + 1, 0);
  int next = 0;
  for (int& c : raw) {
    if (relabel[c] == 0) relabel[c] = ++next;
    c = relabel[c];
  }
  return raw;
}

}  // namespace

ColourTemplate canonical_form(const ColourTemplate& t) {
  if (t.a() > kCanonicalCap)
    throw CapExceeded("canonical_form capped at a <= " + std::to_string(kCanonicalCap));
  std::vector<int> perm(t.a());
  for (int v = 1; v <= t.a(); ++v) perm[v - 1] = v;
  std::vector<int> best;
  do {
    std::vector<int> candidate = permuted_compacted(t, perm);
    if (best.empty() || candidate < best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ColourTemplate::make(t.r(), t.a(), best);
}

ColourTemplate merge_colours(const ColourTemplate& t,
                             const std::vector<std::vector<int>>& classes) {
  std::vector<int> class_of(static_cast<std::size_t>(t.k()) + 1, 0);
  std::size_t covered = 0;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    if (classes[ci].empty()) throw InvalidPartition("empty class");
    for (int c : classes[ci]) {
      if (c < 1 || c > t.k()) throw InvalidPartition("colour id " + std::to_string(c) + " out of [k]");
      if (class_of[c] != 0) throw InvalidPartition("colour id " + std::to_string(c) + " repeated");
      class_of[c] = static_cast<int>(ci) + 1;
      ++covered;
    }
  }
  if (covered != static_cast<std::size_t>(t.k()))
    throw InvalidPartition("classes do not cover all of [k]");

  std::vector<int> merged(t.pattern_count());
  for (std::size_t i = 0; i < merged.size(); ++i) merged[i] = class_of[t.assignment()[i]];
  return ColourTemplate::make(t.r(), t.a(), merged);
}

ColourTemplate permute_vertices(const ColourTemplate& t, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(t.a()))
    throw PreconditionFailed("permutation length must equal a");
  std::vector<bool> seen(t.a(), false);
  for (int v : perm) {
    if (v < 1 || v > t.a() || seen[v - 1])
      throw PreconditionFailed("not a permutation of [a]");
    seen[v - 1] = true;
  }
  return ColourTemplate::make(t.r(), t.a(), permuted_compacted(t, perm));
}

}  // namespace mcolour
