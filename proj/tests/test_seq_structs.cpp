#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "edsm/edsm.hpp"
#include "test_support.hpp"

using namespace edsm;
namespace ts = testing_support;

namespace {
SymbolString S(const char* s) { return to_symbols(s); }

std::size_t naive_lcp(const SymbolString& a, std::size_t i, const SymbolString& b, std::size_t j) {
  std::size_t l = 0;
  while (i + l < a.size() && j + l < b.size() && a[i + l] == b[j + l]) ++l;
  return l;
}
}  // namespace

TEST(Lce, Examples) {
  const auto a = S("abab"), b = S("abaa");
  const auto idx = build_lce(a, b);
  EXPECT_EQ(idx.lcp(0, 0, 1, 0), 3u);
  EXPECT_EQ(idx.lcp(0, 1, 0, 1), 3u);
  EXPECT_EQ(idx.lcp(1, 2, 1, 2), 2u);
  const auto x = S("x"), y = S("y");
  EXPECT_EQ(build_lce(x, y).lcp(0, 0, 1, 0), 0u);
}

TEST(Lce, RandomAgainstScan) {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 300; ++it) {
    const auto a = ts::rand_string(rng, 1 + rng() % 30, 1 + rng() % 3);
    const auto b = ts::rand_string(rng, 1 + rng() % 30, 1 + rng() % 3);
    const auto idx = build_lce(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        ASSERT_EQ(idx.lcp(0, i, 1, j), naive_lcp(a, i, b, j));
        ASSERT_EQ(idx.lcp(1, j, 0, i), naive_lcp(a, i, b, j));
      }
    for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(idx.lcp(0, i, 0, i), a.size() - i);
  }
}

TEST(OneSm, Examples) {
  const auto abc = S("abc");
  // ends of substrings within one edit, from the DP check in test_support
  EXPECT_EQ(one_sm(abc, S("abcabc")), ts::naive_one_sm(abc, S("abcabc"), MatchKind::Edit1));
  const auto all = one_sm(abc, S("abcabc"));
  EXPECT_TRUE(std::find(all.begin(), all.end(), 3u) != all.end());
  EXPECT_TRUE(std::find(all.begin(), all.end(), 6u) != all.end());
  EXPECT_EQ(one_sm(S("a"), S("b")), std::vector<std::size_t>{1});
  EXPECT_EQ(one_sm(abc, abc), (std::vector<std::size_t>{2, 3}));
}

TEST(OneSm, KindIsSmallest) {
  const auto r = one_sm_kinds(S("abc"), S("xabcxabx"), MatchKind::Edit1);
  ASSERT_FALSE(r.empty());
  for (const auto& em : r)
    if (em.end == 4) {
      EXPECT_EQ(em.kind, MatchKind::Exact);
    }
  for (const auto& em : one_sm_kinds(S("abc"), S("axc"), MatchKind::Edit1))
    if (em.end == 3) {
      EXPECT_EQ(em.kind, MatchKind::Hamming1);
    }
}

TEST(OneSm, ExhaustiveBinary) {
  // every pattern of length <= 4 against every text of length <= 12
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::uint32_t pb = 0; pb < (1u << m); ++pb) {
      SymbolString p(m);
      for (std::size_t i = 0; i < m; ++i) p[i] = 1 + ((pb >> i) & 1);
      for (std::size_t n = 1; n <= 12; ++n)
        for (std::uint32_t tb = 0; tb < (1u << n); ++tb) {
          SymbolString t(n);
          for (std::size_t i = 0; i < n; ++i) t[i] = 1 + ((tb >> i) & 1);
          for (MatchKind mode : {MatchKind::Hamming1, MatchKind::Edit1})
            ASSERT_EQ(one_sm(p, t, mode), ts::naive_one_sm(p, t, mode));
        }
    }
}

TEST(OneSm, RandomLonger) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 10000; ++it) {
    const Symbol sigma = 1 + rng() % 4;
    const auto p = ts::rand_string(rng, 1 + rng() % 8, sigma);
    const auto t = ts::rand_string(rng, 1 + rng() % 40, sigma);
    for (MatchKind mode : {MatchKind::Exact, MatchKind::Hamming1, MatchKind::Edit1})
      ASSERT_EQ(one_sm(p, t, mode), ts::naive_one_sm(p, t, mode));
  }
}

TEST(SortedSubstrings, Examples) {
  const auto banana = S("banana");
  const auto r = sorted_substrings(banana, {{1, 3}, {3, 3}});
  EXPECT_EQ(r[0], r[1]);
  EXPECT_EQ(sorted_substrings(S("abab"), {{0, 2}, {1, 2}, {2, 2}}), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(sorted_substrings(S("abab"), {{1, 3}}), std::vector<std::size_t>{1});
  EXPECT_THROW(sorted_substrings(S("abab"), {{3, 2}}), std::out_of_range);
}

TEST(SortedSubstrings, RandomAgainstComparisonSort) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    const auto x = ts::rand_string(rng, 1 + rng() % 25, 1 + rng() % 3);
    std::vector<Fragment> fr;
    for (int k = 0; k < 12; ++k) {
      const std::size_t a = rng() % x.size();
      fr.push_back({a, rng() % (x.size() - a + 1)});
    }
    const auto ranks = sorted_substrings(x, fr);
    for (std::size_t a = 0; a < fr.size(); ++a)
      for (std::size_t b = 0; b < fr.size(); ++b) {
        const auto sa = ts::sub(x, fr[a].pos, fr[a].pos + fr[a].len);
        const auto sb = ts::sub(x, fr[b].pos, fr[b].pos + fr[b].len);
        ASSERT_EQ(ranks[a] < ranks[b], sa < sb);
        ASSERT_EQ(ranks[a] == ranks[b], sa == sb);
      }
  }
}

TEST(Trie, FigureFourT3) {
  const auto t = build_trie({S("baa"), S("aaa"), S("aba"), S("bab")});
  EXPECT_EQ(t.distinct_keys(), 4u);
  std::size_t leaves = 0;
  for (const auto& nd : t.nodes()) leaves += nd.children.empty();
  EXPECT_EQ(leaves, 4u);
  const auto aa = t.spell(S("aa"));
  ASSERT_EQ(aa.size(), 3u);
  EXPECT_EQ(aa[2], (RankInterval{1, 1}));  // aaa is the smallest key
  EXPECT_EQ(t.spell(S("bb")).size(), 2u);  // fails after "b"
  EXPECT_FALSE(t.find(S("bb")).has_value());
  EXPECT_EQ(t.spell(SymbolString{}).front(), (RankInterval{1, 4}));
}

TEST(Trie, RandomSpellAndNesting) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 300; ++it) {
    std::vector<SymbolString> keys;
    const std::size_t k = 1 + rng() % 12;
    for (std::size_t i = 0; i < k; ++i) keys.push_back(ts::rand_string(rng, rng() % 7, 1 + rng() % 3));
    const auto t = build_trie(keys);
    for (std::size_t i = 0; i < k; ++i) {
      const auto at = t.find(keys[i]);
      ASSERT_TRUE(at.has_value());
      ASSERT_TRUE(t.at_node(*at));
      ASSERT_EQ(at->node, t.key_node(i));
      const auto& nd = t.node(at->node);
      ASSERT_TRUE(std::find(nd.payloads.begin(), nd.payloads.end(), i) != nd.payloads.end());
    }
    for (std::size_t v = 0; v < t.nodes().size(); ++v) {
      const auto& nd = t.node(v);
      if (v != t.root()) {
        const auto& par = t.node(nd.parent);
        ASSERT_LE(par.lo, nd.lo);
        ASSERT_LE(nd.hi, par.hi);
      }
      // no unary node unless it carries a payload or is the root
      if (v != t.root() && nd.children.size() == 1) {
        ASSERT_FALSE(nd.payloads.empty());
      }
    }
  }
}

TEST(HeavyLight, PathShaped) {
  const auto t = build_trie({S("a"), S("ab"), S("abc")});
  const auto h = heavy_light(t);
  EXPECT_EQ(max_light_edges(t, h), 0u);
}

TEST(HeavyLight, CompleteBinary) {
  std::vector<SymbolString> keys;
  for (int b = 0; b < 8; ++b) keys.push_back({Symbol(1 + (b & 1)), Symbol(1 + ((b >> 1) & 1)), Symbol(1 + (b >> 2))});
  const auto t = build_trie(keys);
  const auto h = heavy_light(t);
  EXPECT_LE(max_light_edges(t, h), 3u);
  // ties go to the smallest edge letter
  EXPECT_EQ(t.edge_letter(h.heavy[t.root()]), 1u);
}

TEST(HeavyLight, RandomBound) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 1000; ++it) {
    std::vector<SymbolString> keys;
    const std::size_t k = 1 + rng() % 20;
    for (std::size_t i = 0; i < k; ++i) keys.push_back(ts::rand_string(rng, 1 + rng() % 8, 1 + rng() % 3));
    const auto t = build_trie(keys);
    const auto h = heavy_light(t);
    std::size_t leaves = 0;
    for (const auto& nd : t.nodes()) leaves += nd.children.empty();
    ASSERT_LE(max_light_edges(t, h), static_cast<std::size_t>(std::floor(std::log2(leaves))) + 1);
    for (std::size_t v = 0; v < t.nodes().size(); ++v) {
      const auto& nd = t.node(v);
      if (nd.children.empty()) continue;
      const auto hv = h.heavy[v];
      for (std::size_t u : nd.children) ASSERT_GE(t.node(hv).leaves, t.node(u).leaves);
    }
  }
}
