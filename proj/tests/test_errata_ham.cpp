#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "edsm/edsm.hpp"
#include "test_support.hpp"

using namespace edsm;
namespace ts = testing_support;

namespace {
const char* kP = "bbaaaabababb";

SymbolString source_string(const ErrataTree& t, std::size_t src) {
  const auto& s = t.source(src);
  SymbolString out;
  for (std::size_t k = 0; k < s.len; ++k) out.push_back(t.base->lce.at(s.part, s.pos + k));
  return out;
}

// "p5" style names: pattern suffix starting at 1-based k, "t1" segment string 1
std::string name_of(const ErrataTree& t, std::size_t src) {
  const auto& s = t.source(src);
  return s.pattern ? "p" + std::to_string(s.id + 1) : "t" + std::to_string(s.id + 1);
}

std::set<std::pair<std::string, std::size_t>> label_set(const ErrataTree& t) {
  std::set<std::pair<std::string, std::size_t>> out;
  for (const auto& labs : t.labels)
    for (const auto& l : labs) out.emplace(name_of(t, l.src), l.p);
  return out;
}

ErrataTree figure5_t0() {
  const auto p = to_symbols(kP);
  return build_t0(p, PrefixSet::of(12, {1, 2, 4, 7, 8, 9}), {to_symbols("aaa"), to_symbols("bba")});
}

bool hamming_prefix(const SymbolString& x, const SymbolString& y) {
  if (y.size() > x.size()) return false;
  std::size_t d = 0;
  for (std::size_t i = 0; i < y.size(); ++i) d += x[i] != y[i];
  return d <= 1;
}
}  // namespace

TEST(T0, FigureFiveLabels) {
  // the test keeps the sources alive via the tree's shared base
  const ErrataTree t0 = figure5_t0();
  const std::set<std::pair<std::string, std::size_t>> want{{"t1", 0}, {"t2", 0}, {"p2", 0},  {"p3", 0},
                                                           {"p5", 0}, {"p8", 0}, {"p9", 0}, {"p10", 0}};
  EXPECT_EQ(label_set(t0), want);
  for (std::size_t v = 0; v < t0.labels.size(); ++v)
    for (const auto& l : t0.labels[v]) EXPECT_EQ(t0.node_string(v), source_string(t0, l.src));
}

TEST(T0, SmallCases) {
  const auto p = to_symbols("ab");
  const auto t0 = build_t0(p, PrefixSet(2), {to_symbols("a")});
  EXPECT_EQ(t0.trie.nodes().size(), 2u);
  EXPECT_EQ(t0.label_count(), 1u);
  // "b" is both the suffix P[2..2] and a segment string
  const auto t1 = build_t0(p, PrefixSet::of(2, {1}), {to_symbols("b")});
  std::size_t shared = 0;
  for (const auto& labs : t1.labels) shared = std::max(shared, labs.size());
  EXPECT_EQ(shared, 2u);
}

TEST(T1, FigureFiveLabels) {
  const ErrataTree t1 = build_t1(figure5_t0());
  const auto labels = label_set(t1);
  for (std::pair<std::string, std::size_t> want :
       {std::pair<std::string, std::size_t>{"p10", 2}, {"t2", 1}, {"p2", 1}, {"t2", 2}, {"p9", 3}})
    EXPECT_TRUE(labels.count(want)) << want.first << "," << want.second;
}

TEST(T1, PathShapedAddsNothing) {
  const auto p = to_symbols("aaaa");
  const auto t0 = build_t0(p, PrefixSet::of(4, {1, 2, 3}), {to_symbols("a")});
  EXPECT_EQ(build_t1(t0).label_count(), t0.label_count());
}

TEST(T1, VariantsDifferInOnePosition) {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 500; ++it) {
    const std::size_t m = 1 + rng() % 10;
    const auto p = ts::rand_string(rng, m, 2);
    const auto seg = ts::rand_segment(rng, 4, 6, 2);
    const auto ap = ts::rand_prefix_set(rng, m, 0.5);
    const auto t1 = build_t1(build_t0(p, ap, seg.strings()));
    for (std::size_t v = 0; v < t1.labels.size(); ++v)
      for (const auto& l : t1.labels[v]) {
        const auto src = source_string(t1, l.src);
        const auto here = t1.node_string(v);
        ASSERT_EQ(here.size(), src.size());
        std::size_t diff = 0, at = 0;
        for (std::size_t k = 0; k < src.size(); ++k)
          if (src[k] != here[k]) {
            ++diff;
            at = k + 1;
          }
        if (l.p == 0) {
          ASSERT_EQ(diff, 0u);
        } else {
          ASSERT_EQ(diff, 1u);
          ASSERT_EQ(at, l.p);
        }
      }
  }
}

TEST(Search, HandTrace) {
  // X = P[2..3] = "ab" sits below Y = "a": bit (3 - 2) + 1 = 2
  const auto p = to_symbols("aab");
  const auto t1 = build_t1(build_t0(p, PrefixSet::of(3, {1}), {to_symbols("a")}));
  EXPECT_TRUE(search_t1(t1).test(2));
  const auto none = build_t1(build_t0(p, PrefixSet::of(3, {1}), {to_symbols("aaaaa")}));
  EXPECT_TRUE(search_t1(none).none());
}

TEST(Search, EqualsMismatchAnchorAndVectorsClean) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 3000; ++it) {
    const std::size_t m = 1 + rng() % 10;
    const Symbol sigma = 1 + rng() % 3;
    const Pattern p(ts::rand_string(rng, m, sigma));
    const Segment seg = ts::rand_segment(rng, 4, 6, sigma);
    const auto ap = ts::rand_prefix_set(rng, m, 0.4);
    const auto t1 = build_t1(build_t0(p.str(), ap, seg.strings()));
    ErrataSearchStats st;
    const auto got = search_t1(t1, &st);
    ASSERT_TRUE(st.vectors_clean);
    const PatternIndex pi(p);
    const SegmentIndex fwd(seg, m);
    ASSERT_EQ(got, anchor_reporting(pi, ap, fwd, MatchKind::Hamming1));
  }
}

TEST(PairCondition, SmallExhaustive) {
  // m <= 4 here; the acceptance binary runs the full range
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::uint32_t pb = 0; pb < (1u << m); ++pb) {
      SymbolString p(m);
      for (std::size_t i = 0; i < m; ++i) p[i] = 1 + ((pb >> i) & 1);
      for (std::uint32_t sb = 0; sb < 64; ++sb) {
        const std::size_t len = 1 + sb % 3;
        SymbolString y(len);
        for (std::size_t i = 0; i < len; ++i) y[i] = 1 + ((sb >> (i + 2)) & 1);
        PrefixSet ap(m);
        for (std::size_t l = 1; l < m; ++l) ap.set(l);
        const auto t1 = build_t1(build_t0(p, ap, {y}));
        for (std::size_t x = 0; x < t1.base->sources.size(); ++x) {
          if (!t1.source(x).pattern) continue;
          for (std::size_t ys = 0; ys < t1.base->sources.size(); ++ys) {
            if (t1.source(ys).pattern) continue;
            ASSERT_EQ(errata_pair_condition(t1, x, ys),
                      hamming_prefix(source_string(t1, x), source_string(t1, ys)));
          }
        }
      }
    }
}

TEST(SizeBound, RandomBuilds) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 1000; ++it) {
    const std::size_t m = 1 + rng() % 16;
    const auto p = ts::rand_string(rng, m, 1 + rng() % 3);
    const auto seg = ts::rand_segment(rng, 8, 10, 1 + rng() % 3);
    const auto ap = ts::rand_prefix_set(rng, m, 0.6);
    const auto t1 = build_t1(build_t0(p, ap, seg.strings()));
    ASSERT_LE(static_cast<double>(t1.label_count()), errata_label_bound(m, seg.size_contribution()));
  }
}

TEST(HeavyLight, T0Bound) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 500; ++it) {
    const std::size_t m = 1 + rng() % 16;
    const auto p = ts::rand_string(rng, m, 2);
    const auto seg = ts::rand_segment(rng, 8, 10, 2);
    const auto t0 = build_t0(p, ts::rand_prefix_set(rng, m, 0.6), seg.strings());
    std::size_t leaves = 0;
    for (const auto& nd : t0.trie.nodes()) leaves += nd.children.empty();
    ASSERT_LE(max_light_edges(t0.trie, t0.hld), static_cast<std::size_t>(std::floor(std::log2(leaves))) + 1);
  }
}
