#include <gtest/gtest.h>

#include <random>

#include "edsm/edsm.hpp"
#include "edsm/oracle.hpp"
#include "test_support.hpp"

using namespace edsm;
namespace ts = testing_support;

namespace {
Pattern P(const char* s) { return Pattern::from_string(s); }
Segment seg(std::initializer_list<std::string_view> s) { return Segment::from_strings(s); }
}  // namespace

TEST(Ape, Examples) {
  EXPECT_EQ(ape(P("abab"), PrefixSet::of(4, {2}), seg({"ab"})), PrefixSet::of(4, {4}));
  EXPECT_EQ(ape(P("abab"), PrefixSet(4), seg({"ab"})), PrefixSet(4));
  EXPECT_EQ(ape(P("aaaa"), PrefixSet::of(4, {1, 3}), seg({"a", "aa"})), PrefixSet::of(4, {2, 3, 4}));
  // the empty string keeps u
  EXPECT_EQ(ape(P("abab"), PrefixSet::of(4, {1, 3}), seg({"", "x"})), PrefixSet::of(4, {1, 3}));
}

TEST(Ape, AgreesWithReferenceMonotoneDistributive) {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 2000; ++it) {
    const std::size_t m = 1 + rng() % 12;
    const Symbol sigma = 1 + rng() % 3;
    const Pattern p(ts::rand_string(rng, m, sigma));
    const Segment a = ts::rand_segment(rng, 4, 6, sigma, 0.2), b = ts::rand_segment(rng, 4, 6, sigma, 0.2);
    const auto u = ts::rand_prefix_set(rng, m, 0.4, true);
    auto u2 = u | ts::rand_prefix_set(rng, m, 0.3, true);
    ASSERT_EQ(ape(p, u, a), ape_reference(p, u, a));
    const auto va = ape(p, u, a), va2 = ape(p, u2, a);
    ASSERT_EQ(va & va2, va);
    std::vector<SymbolString> both = a.strings();
    both.insert(both.end(), b.strings().begin(), b.strings().end());
    ASSERT_EQ(ape(p, u, Segment(both)), ape(p, u, a) | ape(p, u, b));
  }
}

TEST(StartPrefixes, Examples) {
  EXPECT_EQ(start_new_prefixes(P("abc"), seg({"zab"})), PrefixSet::of(3, {2}));
  EXPECT_EQ(start_new_prefixes(P("aa"), seg({"aaa"})), PrefixSet::of(2, {1, 2}));
  EXPECT_EQ(start_new_prefixes(P("aa"), seg({""})), PrefixSet(2));
}

TEST(StartPrefixes, RandomAgainstScan) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 2000; ++it) {
    const std::size_t m = 1 + rng() % 10;
    const Pattern p(ts::rand_string(rng, m, 2));
    const Segment s = ts::rand_segment(rng, 4, 12, 2, 0.2);
    PrefixSet want(m);
    for (const auto& str : s.strings())
      for (std::size_t j = 1; j <= std::min(m, str.size()); ++j)
        if (std::equal(p.str().begin(), p.str().begin() + static_cast<std::ptrdiff_t>(j),
                       str.end() - static_cast<std::ptrdiff_t>(j)))
          want.set(j);
    ASSERT_EQ(start_new_prefixes(p, s), want);
  }
}

TEST(Propagate, FigureOneExactEnds) {
  const auto in = remap_alphabet(P("TTA"), parse_eds("{TTC}{TA,G}{TT}{GT}{TT}{,AC,ACAC}{A}"));
  PrefixSet ap(3);
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < in.text.length(); ++i) {
    const auto st = propagate_exact(ap, in.pattern, in.text[i]);
    if (st.end_here) ends.push_back(i + 1);
    ap = st.ap;
  }
  EXPECT_EQ(ends, (std::vector<std::size_t>{6, 7}));
}

TEST(Propagate, SmallCases) {
  EXPECT_TRUE(propagate_exact(PrefixSet(1), P("a"), seg({"a"})).end_here);
  EXPECT_TRUE(propagate_exact(PrefixSet::of(2, {2}), P("ab"), seg({""})).end_here);
  EXPECT_FALSE(propagate_exact(PrefixSet::of(2, {2}), P("ab"), seg({"x"})).end_here);
  // AP only ever holds [1, m]
  EXPECT_FALSE(propagate_exact(PrefixSet::of(2, {0}), P("ab"), seg({""})).ap.test(0));
}

TEST(Propagate, WholeTextAgainstOracle) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 2000; ++it) {
    const auto inst = ts::random_instance(rng);
    PrefixSet ap(inst.p.size());
    std::set<std::size_t> ends;
    for (std::size_t i = 0; i < inst.t.length(); ++i) {
      const auto st = propagate_exact(ap, inst.p, inst.t[i]);
      if (st.end_here) ends.insert(i + 1);
      ap = st.ap;
    }
    ASSERT_EQ(ends, oracle::occurrence_ends(inst.p, inst.t, MatchKind::Exact)) << to_eds(inst.t);
  }
}
