#include <gtest/gtest.h>

#include <random>
#include <set>
#include <tuple>

#include "edsm/edsm.hpp"
#include "test_support.hpp"

using namespace edsm;
namespace ts = testing_support;

namespace {
const char* kP = "bbaaaabababb";

// AS given as 1-based start positions, turned into suffix lengths
PrefixSet figure4_rho() {
  PrefixSet r(12);
  for (std::size_t q : {5, 6, 9, 11, 12}) r.set(12 - q + 1);
  return r;
}

const MuGroup& group_of(const std::vector<MuGroup>& gs, std::size_t mu) {
  for (const auto& g : gs)
    if (g.mu == mu) return g;
  throw std::runtime_error("no group");
}

// Anchor contribution straight from the definition.
PrefixSet naive_anchor(const SymbolString& p, const PrefixSet& ap, const Segment& seg, MatchKind mode) {
  const std::size_t m = p.size();
  PrefixSet out(m);
  ap.for_each([&](std::size_t lambda) {
    if (lambda == 0) return;
    for (std::size_t j = lambda; j <= m; ++j)
      for (const auto& s : seg.strings())
        if (!s.empty() && ts::close(ts::sub(p, lambda, j), s, mode) && (j > lambda || mode == MatchKind::Edit1))
          out.set(j);
  });
  return out;
}

bool naive_decision(const SymbolString& p, const PrefixSet& ap, const PrefixSet& rho, const Segment& seg,
                    MatchKind mode) {
  const std::size_t m = p.size();
  bool hit = false;
  ap.for_each([&](std::size_t lambda) {
    if (lambda == 0) return;
    rho.for_each([&](std::size_t r) {
      if (r == 0 || lambda + r > m) return;
      for (const auto& s : seg.strings())
        if (!s.empty() && ts::close(ts::sub(p, lambda, m - r), s, mode)) hit = true;
    });
  });
  return hit;
}
}  // namespace

TEST(MuGroups, FigureFourFragments) {
  const PatternIndex pi(Pattern::from_string(kP));
  const auto groups = build_mu_groups(pi, PrefixSet::of(12, {1, 2, 4, 7, 8, 9}), figure4_rho());
  const auto& g = group_of(groups, 3);
  std::set<std::string> frags;
  for (std::size_t r = 1; r <= g.h(); ++r) frags.insert(to_bytes(g.fragment(r)));
  EXPECT_EQ(frags, (std::set<std::string>{"baa", "aaa", "aba", "bab"}));
  EXPECT_EQ(g.pairs.size(), 4u);
}

TEST(MuGroups, EmptyAndSingle) {
  const PatternIndex pi(Pattern::from_string("ab"));
  EXPECT_TRUE(build_mu_groups(pi, PrefixSet(2)).empty());
  const PatternIndex pj(Pattern::from_string(kP));
  for (const auto& g : build_mu_groups(pj, PrefixSet::of(12, {1, 2, 4, 7, 8, 9}))) {
    EXPECT_GE(g.mu, 1u);
    for (auto [l, r] : g.pairs) EXPECT_EQ(l + g.mu + r, 12u);
    std::set<std::size_t> xs, ys;
    for (const auto& p : g.points) {
      xs.insert(p.x);
      ys.insert(p.y);
    }
    EXPECT_EQ(xs.size(), g.h());
    EXPECT_EQ(ys.size(), g.h());
  }
}

TEST(MuGroups, FigureFourRectangles) {
  const PatternIndex pi(Pattern::from_string(kP));
  const auto groups = build_mu_groups(pi, PrefixSet::of(12, {1, 2, 4, 7, 8, 9}), figure4_rho());
  const auto& g = group_of(groups, 3);
  std::set<std::tuple<std::string, std::string>> got;
  for (const char* s : {"aaa", "bba"}) {
    const auto str = to_symbols(s);
    for (const auto& ar : anchor_rectangles(g, str, 2)) {
      const auto rev = reversed(str);
      got.emplace(to_bytes(ts::sub(str, 0, ar.h)), to_bytes(ts::sub(rev, 0, ar.k)));
    }
  }
  const std::set<std::tuple<std::string, std::string>> want{{"", "aa"}, {"a", "a"}, {"aa", ""}, {"", "ab"}, {"b", "a"}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(got.count({"bb", ""}), 0u);
}

TEST(Decision, FigureFourTrue) {
  const Pattern p = Pattern::from_string(kP);
  const PatternIndex pi(p);
  const SegmentIndex fwd(Segment::from_strings({"aaa", "bba"}), 12);
  EXPECT_TRUE(anchor_decision(pi, PrefixSet::of(12, {1, 2, 4, 7, 8, 9}), figure4_rho(), fwd, MatchKind::Hamming1));
}

TEST(Decision, NoStringOfRequiredLength) {
  const PatternIndex pi(Pattern::from_string("abcd"));
  const SegmentIndex fwd(Segment::from_strings({"xxxxxxxx"}), 4);
  EXPECT_FALSE(anchor_decision(pi, PrefixSet::of(4, {1}), PrefixSet::of(4, {1}), fwd, MatchKind::Edit1));
}

TEST(Decision, RandomAgainstDefinition) {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 3000; ++it) {
    const std::size_t m = 2 + rng() % 9;
    const Symbol sigma = 1 + rng() % 3;
    const Pattern p(ts::rand_string(rng, m, sigma));
    const Segment seg = ts::rand_segment(rng, 3, 5, sigma, 0.2);
    const auto ap = ts::rand_prefix_set(rng, m, 0.4), rho = ts::rand_prefix_set(rng, m, 0.4);
    const PatternIndex pi(p);
    const SegmentIndex fwd(seg, m);
    for (MatchKind mode : {MatchKind::Hamming1, MatchKind::Edit1})
      ASSERT_EQ(anchor_decision(pi, ap, rho, fwd, mode), naive_decision(p.str(), ap, rho, seg, mode));
  }
}

TEST(Reporting, FigureFourContribution) {
  const Pattern p = Pattern::from_string(kP);
  const PatternIndex pi(p);
  const Segment seg = Segment::from_strings({"aaa", "bba"});
  const SegmentIndex fwd(seg, 12);
  const auto ap = PrefixSet::of(12, {1, 2, 4, 7, 8, 9});
  const auto got = anchor_reporting(pi, ap, fwd, MatchKind::Hamming1);
  EXPECT_EQ(got, naive_anchor(p.str(), ap, seg, MatchKind::Hamming1));
  EXPECT_EQ(got, anchor_reporting(pi, ap, fwd, MatchKind::Hamming1, StabEngine::Grid));
}

TEST(Reporting, TrivialCases) {
  const PatternIndex pi(Pattern::from_string("abc"));
  const SegmentIndex longer(Segment::from_strings({"abcabc"}), 3), eps(Segment::from_strings({""}), 3);
  for (MatchKind mode : {MatchKind::Hamming1, MatchKind::Edit1}) {
    EXPECT_TRUE(anchor_reporting(pi, PrefixSet::of(3, {1, 2}), longer, mode).none());
    EXPECT_TRUE(anchor_reporting(pi, PrefixSet::of(3, {1, 2}), eps, mode).none());
    EXPECT_TRUE(anchor_reporting(pi, PrefixSet(3), SegmentIndex(Segment::from_strings({"b"}), 3), mode).none());
  }
}

TEST(Reporting, GeometricEqualsGridAndDefinition) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 3000; ++it) {
    const std::size_t m = 1 + rng() % 10;
    const Symbol sigma = 1 + rng() % 3;
    const Pattern p(ts::rand_string(rng, m, sigma));
    const Segment seg = ts::rand_segment(rng, 3, 6, sigma, 0.2);
    const auto ap = ts::rand_prefix_set(rng, m, 0.4);
    const PatternIndex pi(p);
    const SegmentIndex fwd(seg, m);
    for (MatchKind mode : {MatchKind::Hamming1, MatchKind::Edit1}) {
      const auto geo = anchor_reporting(pi, ap, fwd, mode, StabEngine::Geometric);
      ASSERT_EQ(geo, anchor_reporting(pi, ap, fwd, mode, StabEngine::Grid));
      ASSERT_EQ(geo, naive_anchor(p.str(), ap, seg, mode));
    }
  }
}

TEST(Subcases, Arithmetic) {
  const auto s = anchor_subcases(4, MatchKind::Edit1);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].len, 4u);
  EXPECT_EQ(s[0].total, 3u);
  EXPECT_EQ(s[1].len, 3u);
  EXPECT_EQ(s[1].total, 3u);
  EXPECT_EQ(s[2].len, 5u);
  EXPECT_EQ(s[2].total, 4u);
  EXPECT_EQ(anchor_subcases(1, MatchKind::Edit1).size(), 2u);
  EXPECT_EQ(anchor_subcases(4, MatchKind::Hamming1).size(), 1u);
}
