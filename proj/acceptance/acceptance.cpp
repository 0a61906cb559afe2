// Acceptance run: prints one PASS/FAIL line per criterion, exits non-zero
// if any fails. `acceptance --quick` shrinks the randomized counts.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "edsm/edsm.hpp"
#include "edsm/oracle.hpp"

using namespace edsm;

namespace {

bool quick = false;

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::set<std::size_t> ends_of(const std::vector<OccurrenceReport>& r) {
  std::set<std::size_t> s;
  for (const auto& x : r) s.insert(x.end_segment);
  return s;
}

SymbolString rand_string(std::mt19937_64& rng, std::size_t len, Symbol sigma) {
  std::uniform_int_distribution<Symbol> c(1, sigma);
  SymbolString s(len);
  for (auto& x : s) x = c(rng);
  return s;
}

std::size_t light_bound(std::size_t leaves) {
  return static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(leaves)))) + 1;
}

std::size_t leaf_count(const ErrataTree& t) {
  std::size_t n = 0;
  for (const auto& nd : t.trie.nodes()) n += nd.children.empty();
  return n;
}

// ---------------------------------------------------------------------------

Outcome figure1() {
  const auto t0 = Clock::now();
  const EDString t = parse_eds("{TTC}{TA,G}{TT}{GT}{TT}{,AC,ACAC}{A}");
  const Pattern p = Pattern::from_string("TTA");
  Outcome o;
  std::ostringstream d;
  for (MatchKind mode : {MatchKind::Exact, MatchKind::Hamming1, MatchKind::Edit1}) {
    const auto got = run_reporting(p, t, {mode});
    if (got != oracle::reports(p, t, mode)) o.ok = false;
    const auto e = ends_of(got);
    d << to_string(mode) << "={";
    for (auto x : e) d << x << (x == *e.rbegin() ? "" : ",");
    d << "} ";
    auto has = [&](std::initializer_list<std::size_t> xs) {
      for (auto x : xs)
        if (!e.count(x)) o.ok = false;
    };
    if (mode == MatchKind::Exact && e != std::set<std::size_t>{6, 7}) o.ok = false;
    if (mode == MatchKind::Hamming1) has({1, 2, 5, 6, 7});
    if (mode == MatchKind::Edit1) has({1, 2, 3, 5, 6, 7});
  }
  const double s = seconds_since(t0);
  if (s >= 1.0) o.ok = false;
  d << "n=" << t.length() << " N=" << t.size() << " time=" << s << "s";
  o.detail = d.str();
  return o;
}

Outcome figure4() {
  const PatternIndex pi(Pattern::from_string("bbaaaabababb"));
  PrefixSet rho(12);
  for (std::size_t q : {5, 6, 9, 11, 12}) rho.set(12 - q + 1);
  Outcome o;
  const MuGroup* g3 = nullptr;
  const auto groups = build_mu_groups(pi, PrefixSet::of(12, {1, 2, 4, 7, 8, 9}), rho);
  for (const auto& g : groups)
    if (g.mu == 3) g3 = &g;
  if (!g3) return {false, "no mu=3 group"};
  std::set<std::string> frags;
  for (std::size_t r = 1; r <= g3->h(); ++r) frags.insert(to_bytes(g3->fragment(r)));
  std::vector<std::pair<std::string, std::string>> rects;
  for (const char* s : {"aaa", "bba"}) {
    const auto str = to_symbols(s);
    const auto rev = reversed(str);
    for (const auto& ar : anchor_rectangles(*g3, str, 2))
      rects.emplace_back(to_bytes(SymbolString(str.begin(), str.begin() + static_cast<std::ptrdiff_t>(ar.h))),
                         to_bytes(SymbolString(rev.begin(), rev.begin() + static_cast<std::ptrdiff_t>(ar.k))));
  }
  const std::set<std::string> want_frags{"baa", "aaa", "aba", "bab"};
  const std::set<std::pair<std::string, std::string>> want{{"", "aa"}, {"a", "a"}, {"aa", ""}, {"", "ab"}, {"b", "a"}};
  const std::set<std::pair<std::string, std::string>> got(rects.begin(), rects.end());
  o.ok = frags == want_frags && rects.size() == 5 && got == want && !got.count({"bb", ""});
  std::ostringstream d;
  d << "fragments=";
  for (const auto& f : frags) d << f << ' ';
  d << "rectangles=";
  for (const auto& [a, b] : rects) d << '(' << (a.empty() ? "e" : a) << ',' << (b.empty() ? "e" : b) << ')';
  o.detail = d.str();
  return o;
}

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240611);
  const std::size_t count = quick ? 500 : 10000;
  std::size_t runs = 0, bad = 0;
  std::string first;
  const std::string letters = "ACGT";
  std::uniform_int_distribution<std::size_t> nd(1, 6), md(1, 10), sd(1, 4);
  for (std::size_t it = 0; it < count; ++it) {
    GenParams g;
    g.n = nd(rng);
    g.max_alts = 3;
    g.max_len = 4;
    g.alphabet = letters.substr(0, sd(rng));
    g.eps_prob = 0.15;
    g.seed = rng();
    const EDString t = generate(g);
    const Pattern p = random_pattern(rng, g.alphabet, md(rng));
    for (MatchKind mode : {MatchKind::Exact, MatchKind::Hamming1, MatchKind::Edit1}) {
      const auto want = oracle::reports(p, t, mode);
      for (AnchorAlgo algo : {AnchorAlgo::Geometric, AnchorAlgo::Grid, AnchorAlgo::Errata}) {
        if (algo == AnchorAlgo::Errata && mode != MatchKind::Hamming1) continue;
        ++runs;
        const auto got = run_reporting(p, t, {mode, Task::Report, algo});
        const bool dec = run_decision(p, t, {mode, Task::Decide, algo});
        if (ends_of(got) != ends_of(want) || got != want || dec != !want.empty()) {
          if (!bad++) first = to_bytes(p.letters()) + " in " + to_eds(t) + " " + std::string(to_string(mode));
        }
      }
    }
  }
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << count << " instances, " << runs << " engine runs, mismatches=" << bad << " time=" << s << "s";
  if (bad) d << " first: " << first;
  return {bad == 0 && s < 300.0, d.str()};
}

// Y within one mismatch of X[1..|Y|]
bool hamming_prefix(const SymbolString& x, const SymbolString& y) {
  if (y.size() > x.size()) return false;
  std::size_t d = 0;
  for (std::size_t i = 0; i < y.size(); ++i) d += x[i] != y[i];
  return d <= 1;
}

SymbolString source_string(const ErrataTree& t, std::size_t src) {
  const auto& s = t.source(src);
  SymbolString out;
  for (std::size_t k = 0; k < s.len; ++k) out.push_back(t.base->lce.at(s.part, s.pos + k));
  return out;
}

struct HlStats {
  std::size_t trees = 0, violations = 0;
};
HlStats hl_stats;

void check_hl(const ErrataTree& t0) {
  ++hl_stats.trees;
  if (max_light_edges(t0.trie, t0.hld) > light_bound(leaf_count(t0))) ++hl_stats.violations;
}

Outcome pair_condition_exhaustive() {
  const auto t0 = Clock::now();
  std::vector<SymbolString> strs;
  for (std::size_t len = 1; len <= 4; ++len)
    for (std::uint32_t b = 0; b < (1u << len); ++b) {
      SymbolString s(len);
      for (std::size_t i = 0; i < len; ++i) s[i] = 1 + ((b >> i) & 1);
      strs.push_back(s);
    }
  std::vector<std::vector<SymbolString>> segs;
  for (std::size_t a = 0; a < strs.size(); ++a) {
    segs.push_back({strs[a]});
    for (std::size_t b = a + 1; b < strs.size(); ++b) segs.push_back({strs[a], strs[b]});
  }
  const std::size_t max_m = quick ? 4 : 6;
  std::size_t builds = 0, checks = 0, positive = 0, bad = 0;
  std::string first;
  for (std::size_t m = 1; m <= max_m; ++m)
    for (std::uint32_t pb = 0; pb < (1u << m); ++pb) {
      SymbolString p(m);
      for (std::size_t i = 0; i < m; ++i) p[i] = 1 + ((pb >> i) & 1);
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        PrefixSet ap(m);
        for (std::size_t l = 1; l <= m; ++l)
          if ((mask >> (l - 1)) & 1) ap.set(l);
        for (const auto& seg : segs) {
          const ErrataTree t0 = build_t0(p, ap, seg);
          check_hl(t0);
          const ErrataTree t1 = build_t1(t0);
          ++builds;
          for (std::size_t x = 0; x < t1.base->sources.size(); ++x) {
            if (!t1.source(x).pattern) continue;
            const auto xs = source_string(t1, x);
            for (std::size_t y = 0; y < t1.base->sources.size(); ++y) {
              if (t1.source(y).pattern) continue;
              ++checks;
              const bool want = hamming_prefix(xs, source_string(t1, y));
              positive += want;
              if (errata_pair_condition(t1, x, y) != want && !bad++)
                first = to_bytes(p) + " / " + std::to_string(y);
            }
          }
        }
      }
    }
  std::ostringstream d;
  d << "m<=" << max_m << " builds=" << builds << " pairs=" << checks << " (within one mismatch: " << positive << ") counterexamples=" << bad
    << " time=" << seconds_since(t0) << "s";
  if (bad) d << " first: " << first;
  return {bad == 0, d.str()};
}

Outcome size_bound() {
  std::mt19937_64 rng(7);
  std::size_t bad = 0;
  double worst = 0;
  for (int it = 0; it < 1000; ++it) {
    const std::size_t m = 1 + rng() % 32;
    const Symbol sigma = 1 + rng() % 4;
    const auto p = rand_string(rng, m, sigma);
    std::vector<SymbolString> seg;
    const std::size_t k = 1 + rng() % 24;
    std::size_t n_i = 0;
    for (std::size_t i = 0; i < k; ++i) {
      seg.push_back(rand_string(rng, 1 + rng() % 12, sigma));
      n_i += seg.back().size();
    }
    PrefixSet ap(m);
    std::bernoulli_distribution b(0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0);
    for (std::size_t l = 1; l <= m; ++l)
      if (b(rng)) ap.set(l);
    const ErrataTree t0 = build_t0(p, ap, seg);
    check_hl(t0);
    const ErrataTree t1 = build_t1(t0);
    const double bound = errata_label_bound(m, n_i);
    const double ratio = static_cast<double>(t1.label_count()) / bound;
    worst = std::max(worst, ratio);
    if (static_cast<double>(t1.label_count()) > bound) ++bad;
  }
  std::ostringstream d;
  d << "1000 builds, violations=" << bad << " max labels/bound=" << worst;
  return {bad == 0, d.str()};
}

Outcome heavy_light_bound() {
  std::ostringstream d;
  d << "T0 trees checked=" << hl_stats.trees << " violations=" << hl_stats.violations;
  return {hl_stats.violations == 0 && hl_stats.trees > 0, d.str()};
}

Rect rand_rect(std::mt19937_64& rng, std::size_t h) {
  std::uniform_int_distribution<std::size_t> c(1, h);
  std::size_t a = c(rng), b = c(rng), x = c(rng), y = c(rng);
  return Rect{std::min(a, b), std::max(a, b), std::min(x, y), std::max(x, y)};
}

std::size_t naive_count(const std::vector<Rect>& rects, const Point2& p) {
  std::size_t c = 0;
  for (const auto& r : rects) c += r.contains(p);
  return c;
}

Outcome geometry() {
  std::mt19937_64 rng(11);
  const int count = quick ? 1000 : 10000;
  std::size_t bad[5] = {0, 0, 0, 0, 0};
  for (int it = 0; it < count; ++it) {
    const std::size_t h = 1 + rng() % 64;
    // emptiness
    std::vector<Point2> pts;
    for (std::size_t i = 0, k = rng() % 40; i < k; ++i) pts.push_back({1 + rng() % h, 1 + rng() % h});
    const RangeEmptiness re(pts);
    const Rect q = rand_rect(rng, h);
    bool naive_empty = true;
    for (const auto& p : pts) naive_empty = naive_empty && !q.contains(p);
    bad[0] += re.empty(q) != naive_empty;
    // general and grid stabbing
    std::vector<Rect> rects;
    for (std::size_t i = 0, k = rng() % 30; i < k; ++i) rects.push_back(rand_rect(rng, h));
    const RectStabbing st(rects);
    const GridStabber grid(rects, h);
    for (int probe = 0; probe < 4; ++probe) {
      const Point2 p{1 + rng() % h, 1 + rng() % h};
      const bool want = naive_count(rects, p) > 0;
      bad[1] += st.stabbed(p) != want;
      bad[2] += grid.stabbed(p) != want;
    }
    // nested
    std::vector<std::size_t> ys(h);
    for (std::size_t i = 0; i < h; ++i) ys[i] = i + 1;
    std::shuffle(ys.begin(), ys.end(), rng);
    std::vector<Point2> perm;
    for (std::size_t i = 0; i < h; ++i) perm.push_back({i + 1, ys[i]});
    std::vector<Rect> nested;
    std::size_t x1 = 1 + rng() % h, x2 = x1 + rng() % (h - x1 + 1), y1 = 1 + rng() % h, y2 = y1;
    for (std::size_t k = 0, r = rng() % 20; k < r; ++k) {
      nested.push_back({x1, x2, y1, y2});
      switch (rng() % 4) {
        case 0: if (x1 < x2) ++x1; break;
        case 1: if (x2 > x1) --x2; break;
        case 2: if (y1 > 1) --y1; break;
        default: if (y2 < h) ++y2; break;
      }
    }
    const auto hit = nested_stab_offline(h, perm, nested);
    for (std::size_t i = 0; i < h; ++i) bad[3] += hit[i] != (naive_count(nested, perm[i]) > 0);
  }
  // grid cell counts, every cell
  std::size_t cells = 0;
  for (std::size_t h = 1; h <= 16; ++h)
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<Rect> rects;
      for (std::size_t i = 0, k = rng() % 16; i < k; ++i) rects.push_back(rand_rect(rng, h));
      const GridStabber g(rects, h);
      for (std::size_t x = 1; x <= h; ++x)
        for (std::size_t y = 1; y <= h; ++y) {
          ++cells;
          bad[4] += static_cast<std::size_t>(g.count(x, y)) != naive_count(rects, {x, y});
        }
    }
  std::ostringstream d;
  d << count << " instances per engine; mismatches emptiness=" << bad[0] << " stabbing=" << bad[1]
    << " grid=" << bad[2] << " nested=" << bad[3] << "; grid cells=" << cells << " count mismatches=" << bad[4];
  return {bad[0] + bad[1] + bad[2] + bad[3] + bad[4] == 0, d.str()};
}

Outcome scaling() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(5);
  const Pattern p = random_pattern(rng, "ACGT", 32);
  std::vector<std::size_t> sizes{1u << 15, 1u << 16, 1u << 17, 1u << 18};
  if (quick) sizes = {1u << 12, 1u << 13, 1u << 14};
  std::vector<EDString> texts;
  for (std::size_t s : sizes) texts.push_back(generate_sized(s, 64, 8, "ACGT", 1000 + s));
  std::ostringstream d;
  bool ok = true;
  // errata only exists for hamming1, so its series runs in that mode
  const std::vector<std::pair<AnchorAlgo, MatchKind>> series{{AnchorAlgo::Auto, MatchKind::Edit1},
                                                             {AnchorAlgo::Geometric, MatchKind::Edit1},
                                                             {AnchorAlgo::Grid, MatchKind::Edit1},
                                                             {AnchorAlgo::Errata, MatchKind::Hamming1}};
  for (const auto& [algo, mode] : series) {
    d << to_string(algo) << '/' << to_string(mode) << ":";
    double prev = 0;
    for (std::size_t k = 0; k < texts.size(); ++k) {
      double best = 1e100;
      for (int rep = 0; rep < 2; ++rep) {
        const auto s0 = Clock::now();
        const auto r = run_reporting(p, texts[k], {mode, Task::Report, algo});
        best = std::min(best, seconds_since(s0));
        (void)r;
      }
      d << ' ' << texts[k].size() << "->" << best << "s";
      if (k > 0) {
        const double ratio = best / prev;
        d << "(x" << ratio << ")";
        if (ratio > 2.5) ok = false;
      }
      prev = best;
    }
    d << "; ";
  }
  const double total = seconds_since(t0);
  d << "total=" << total << "s";
  return {ok && total < 600.0, d.str()};
}

Outcome online_property() {
  std::mt19937_64 rng(13);
  std::size_t bad = 0, checks = 0;
  const std::string letters = "ACGT";
  for (int it = 0; it < 1000; ++it) {
    GenParams g;
    g.n = 1 + rng() % 8;
    g.max_alts = 3;
    g.max_len = 4;
    g.alphabet = letters.substr(0, 1 + rng() % 4);
    g.eps_prob = 0.15;
    g.seed = rng();
    const EDString t = generate(g);
    const Pattern p = random_pattern(rng, g.alphabet, 1 + rng() % 10);
    for (MatchKind mode : {MatchKind::Exact, MatchKind::Hamming1, MatchKind::Edit1}) {
      const auto full = run_reporting(p, t, {mode});
      for (std::size_t i = 1; i <= t.length(); ++i) {
        ++checks;
        const auto part = run_reporting(p, t.prefix(i), {mode});
        if (part.size() > full.size() || !std::equal(part.begin(), part.end(), full.begin())) ++bad;
      }
    }
  }
  std::ostringstream d;
  d << "1000 instances, " << checks << " prefixes, violations=" << bad;
  return {bad == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"figure-1 reproduction", figure1},
      {"figure-4 reproduction", figure4},
      {"oracle equivalence", oracle_equivalence},
      {"errata node-pair condition (exhaustive)", pair_condition_exhaustive},
      {"errata label-count bound", size_bound},
      {"heavy-light light-edge bound", heavy_light_bound},
      {"geometry engines vs naive scan", geometry},
      {"scaling smoke test", scaling},
      {"on-line prefix property", online_property},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << name << "  " << o.detail << std::endl;
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
