#include <gtest/gtest.h>

#include <random>

#include "edsm/edsm.hpp"
#include "test_support.hpp"

using namespace edsm;
namespace ts = testing_support;

namespace {
bool naive_prefix_case(const SymbolString& p, const PrefixSet& ap, const Segment& seg, MatchKind mode) {
  bool hit = false;
  ap.for_each([&](std::size_t lambda) {
    if (lambda == 0) return;
    for (const auto& s : seg.strings())
      for (std::size_t t = 1; t <= s.size(); ++t)
        if (ts::close(ts::sub(p, lambda, p.size()), ts::sub(s, 0, t), mode)) hit = true;
  });
  return hit;
}

PrefixSet naive_suffix_case(const SymbolString& p, const Segment& seg, MatchKind mode) {
  PrefixSet out(p.size());
  for (std::size_t j = 1; j <= p.size(); ++j)
    for (const auto& s : seg.strings())
      for (std::size_t t = 0; t < s.size(); ++t)
        if (ts::close(ts::sub(p, 0, j), ts::sub(s, t, s.size()), mode)) out.set(j);
  return out;
}
}  // namespace

TEST(PrefixGroups, Enumeration) {
  const SegmentIndex idx(Segment::from_strings({"abc", "ab"}), 5);
  ASSERT_NE(idx.group(1), nullptr);
  EXPECT_EQ(idx.group(1)->h(), 1u);
  EXPECT_EQ(idx.group(2)->h(), 1u);
  EXPECT_EQ(idx.group(3)->h(), 1u);
  EXPECT_EQ(idx.group(4), nullptr);
  const SegmentIndex eps(Segment::from_strings({""}), 5);
  for (std::size_t mu = 1; mu <= 6; ++mu) EXPECT_EQ(eps.group(mu), nullptr);
}

TEST(PrefixGroups, MembersArePrefixes) {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 300; ++it) {
    const std::size_t m = 1 + rng() % 8;
    const Segment seg = ts::rand_segment(rng, 5, 10, 3, 0.2);
    const SegmentIndex idx(seg, m);
    for (std::size_t mu = 1; mu <= m + 1; ++mu) {
      const PrefixGroup* g = idx.group(mu);
      std::set<SymbolString> want;
      for (const auto& s : seg.strings())
        if (s.size() >= mu) want.insert(ts::sub(s, 0, mu));
      if (want.empty()) {
        ASSERT_EQ(g, nullptr);
        continue;
      }
      ASSERT_NE(g, nullptr);
      ASSERT_EQ(g->h(), want.size());
      std::set<std::size_t> ys;
      for (const auto& p : g->points) ys.insert(p.y);
      ASSERT_EQ(ys.size(), g->h());
    }
  }
}

TEST(PrefixCase, Examples) {
  const Pattern p = Pattern::from_string("abc");
  EXPECT_TRUE(prefix_case_report(PrefixSet::of(3, {1}), p, Segment::from_strings({"bxc"}), MatchKind::Hamming1));
  EXPECT_FALSE(prefix_case_report(PrefixSet(3), p, Segment::from_strings({"bxc"}), MatchKind::Edit1));
  // remainder "bc" against "c": deletion of b
  EXPECT_TRUE(prefix_case_report(PrefixSet::of(3, {1}), p, Segment::from_strings({"cz"}), MatchKind::Edit1));
  EXPECT_FALSE(prefix_case_report(PrefixSet::of(3, {1}), p, Segment::from_strings({"cz"}), MatchKind::Hamming1));
}

TEST(PrefixCase, RandomAgainstDefinition) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 4000; ++it) {
    const std::size_t m = 1 + rng() % 10;
    const Symbol sigma = 1 + rng() % 3;
    const Pattern p(ts::rand_string(rng, m, sigma));
    const Segment seg = ts::rand_segment(rng, 3, 8, sigma, 0.2);
    const auto ap = ts::rand_prefix_set(rng, m, 0.4);
    for (MatchKind mode : {MatchKind::Hamming1, MatchKind::Edit1})
      ASSERT_EQ(prefix_case_report(ap, p, seg, mode), naive_prefix_case(p.str(), ap, seg, mode))
          << to_bytes(p.letters()) << " " << ap;
  }
}

TEST(SuffixCase, Examples) {
  EXPECT_TRUE(suffix_case_contribution(Segment::from_strings({""}), Pattern::from_string("ab"), MatchKind::Edit1).none());
  const auto r = suffix_case_contribution(Segment::from_strings({"x"}), Pattern::from_string("yz"), MatchKind::Hamming1);
  EXPECT_TRUE(r.test(1));
}

TEST(SuffixCase, RandomAgainstDefinitionAndMirror) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 4000; ++it) {
    const std::size_t m = 1 + rng() % 10;
    const Symbol sigma = 1 + rng() % 3;
    const Pattern p(ts::rand_string(rng, m, sigma));
    const Segment seg = ts::rand_segment(rng, 3, 8, sigma, 0.2);
    for (MatchKind mode : {MatchKind::Hamming1, MatchKind::Edit1}) {
      const auto got = suffix_case_contribution(seg, p, mode);
      ASSERT_EQ(got, naive_suffix_case(p.str(), seg, mode));
      // mirror: prefix-case matcher on the reversed pattern and segment
      const SymbolString pr = reversed(p.letters());
      const SegmentIndex ridx(reverse(seg), m);
      const AffixMatcher am(pr, ridx, mode);
      for (std::size_t j = 1; j <= m; ++j) ASSERT_EQ(got.test(j), am.matches_at(m - j));
    }
  }
}

TEST(PrefixCase, RectanglesAreNested) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 1000; ++it) {
    const std::size_t m = 2 + rng() % 9;
    const Pattern p(ts::rand_string(rng, m, 2));
    const SegmentIndex idx(ts::rand_segment(rng, 4, 10, 2), m);
    const AffixMatcher am(p.str(), idx, MatchKind::Edit1);
    for (std::size_t lambda = 1; lambda < m; ++lambda)
      for (const auto& sc : affix_subcases(m - lambda, MatchKind::Edit1)) {
        const PrefixGroup* g = idx.group(sc.mu);
        if (!g) continue;
        const auto rects = am.rectangles(*g, lambda, sc.total);
        for (std::size_t k = 1; k < rects.size(); ++k) {
          ASSERT_LE(rects[k - 1].x1, rects[k].x1);
          ASSERT_GE(rects[k - 1].x2, rects[k].x2);
          ASSERT_GE(rects[k - 1].y1, rects[k].y1);
          ASSERT_LE(rects[k - 1].y2, rects[k].y2);
        }
      }
  }
}
