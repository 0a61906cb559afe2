#pragma once

// Anchor case: the single error lies inside a segment that is fully used by
// the occurrence, with exact parts on both sides. Fragments P[l+1..l+mu] are
// grouped by mu; a split (h,k) of a segment string S gives the rectangle
// (fragments starting with S[1..h]) x (fragments ending with the last k
// letters of S).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "edsm/affix.hpp"
#include "edsm/eds.hpp"
#include "edsm/geometry.hpp"
#include "edsm/pattern.hpp"
#include "edsm/prefix_set.hpp"
#include "edsm/segment_index.hpp"

namespace edsm {

/// String length and agreeing-letter count for fragments of length mu.
struct AnchorSubcase {
  EditOp op;
  std::size_t len;    // |S|
  std::size_t total;  // h + k
};

inline std::vector<AnchorSubcase> anchor_subcases(std::size_t mu, MatchKind mode) {
  std::vector<AnchorSubcase> out;
  if (mode == MatchKind::Exact || mu == 0) return out;
  out.push_back({EditOp::Mismatch, mu, mu - 1});
  if (mode == MatchKind::Edit1) {
    if (mu >= 2) out.push_back({EditOp::DeletionInP, mu - 1, mu - 1});
    out.push_back({EditOp::InsertionInP, mu + 1, mu});
  }
  return out;
}

struct MuGroup {
  std::size_t mu = 0;
  FragmentTrie fwd, rev;
  std::vector<Point2> points;                     // one per distinct fragment, index = rank-1
  std::vector<std::vector<std::size_t>> lambdas;  // start offsets sharing that fragment
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (lambda, rho)

  std::size_t h() const { return points.size(); }

  SymbolString fragment(std::size_t rank) const {
    SymbolString s;
    const auto& k = fwd.keys();
    std::size_t key = 0;
    while (fwd.key_rank(key) != rank) ++key;
    for (std::size_t t = 0; t < k.length(key); ++t) s.push_back(k.at(key, t));
    return s;
  }
};

/// Group for one mu over the given (lambda, rho) pairs (lambda + mu + rho = m).
inline MuGroup build_mu_group(const PatternIndex& pi, std::size_t mu,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  MuGroup g;
  g.mu = mu;
  g.pairs = pairs;
  std::vector<FragmentRef> fw;
  for (auto [lambda, rho] : pairs) fw.push_back(pi.fragment(lambda, mu));
  g.fwd = FragmentTrie(FragmentKeys{&pi.lce(), fw});
  const std::size_t h = g.fwd.distinct_keys();
  std::vector<std::size_t> rep(h + 1, static_cast<std::size_t>(-1));
  g.lambdas.assign(h, {});
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    const std::size_t r = g.fwd.key_rank(t);
    if (rep[r] == static_cast<std::size_t>(-1)) rep[r] = t;
    g.lambdas[r - 1].push_back(pairs[t].first);
  }
  std::vector<FragmentRef> rv;
  for (std::size_t r = 1; r <= h; ++r) rv.push_back(pi.reversed_fragment(pairs[rep[r]].first, mu));
  g.rev = FragmentTrie(FragmentKeys{&pi.lce(), std::move(rv)});
  for (std::size_t r = 1; r <= h; ++r) g.points.push_back({r, g.rev.key_rank(r - 1)});
  return g;
}

/// All groups for lambda in `lambda_set` (lambda >= 1) and, when given,
/// rho in `rho_set` (suffix lengths, rho >= 1); otherwise rho ranges over [0,m].
inline std::vector<MuGroup> build_mu_groups(const PatternIndex& pi, const PrefixSet& lambda_set,
                                            const std::optional<PrefixSet>& rho_set = std::nullopt) {
  const std::size_t m = pi.m();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_mu(m + 1);
  lambda_set.for_each([&](std::size_t lambda) {
    if (lambda == 0) return;
    for (std::size_t mu = 1; lambda + mu <= m; ++mu) {
      const std::size_t rho = m - lambda - mu;
      if (rho_set && (rho == 0 || !rho_set->test(rho))) continue;
      by_mu[mu].emplace_back(lambda, rho);
    }
  });
  std::vector<MuGroup> out;
  for (std::size_t mu = 1; mu <= m; ++mu)
    if (!by_mu[mu].empty()) out.push_back(build_mu_group(pi, mu, by_mu[mu]));
  return out;
}

struct AnchorRect {
  std::size_t h = 0, k = 0;
  Rect rect;
};

/// Rectangles of string S for one split total (h + k = total); splits whose
/// spelling fails on either side do not produce a rectangle.
inline std::vector<AnchorRect> anchor_rectangles(const MuGroup& g, std::span<const Symbol> s, std::size_t total) {
  std::vector<AnchorRect> out;
  if (total > s.size()) return out;
  const SymbolString sr = reversed(s);
  const auto ys = g.rev.spell(sr);
  Locus at = g.fwd.root_locus();
  for (std::size_t h = 0; h <= total; ++h) {
    if (h > 0) {
      auto nx = g.fwd.step(at, s[h - 1]);
      if (!nx) break;
      at = *nx;
    }
    const std::size_t k = total - h;
    if (k >= ys.size()) continue;
    const auto xi = g.fwd.interval(at);
    out.push_back({h, k, Rect{xi.lo, xi.hi, ys[k].lo, ys[k].hi}});
  }
  return out;
}

inline std::vector<Rect> group_rectangles(const MuGroup& g, const SegmentIndex& fwd, MatchKind mode) {
  std::vector<Rect> rects;
  for (const auto& sc : anchor_subcases(g.mu, mode))
    for (std::size_t k : fwd.of_length(sc.len))
      for (const auto& ar : anchor_rectangles(g, fwd.strings()[k], sc.total)) rects.push_back(ar.rect);
  return rects;
}

enum class StabEngine { Geometric, Grid };

/// 1-AP contribution of this segment from the exact active prefixes of the
/// previous one: j = lambda + mu whenever P[lambda+1..lambda+mu] is one
/// error away from a whole segment string.
inline PrefixSet anchor_reporting(const PatternIndex& pi, const PrefixSet& ap_prev, const SegmentIndex& fwd,
                                  MatchKind mode, StabEngine engine = StabEngine::Geometric) {
  const std::size_t m = pi.m();
  PrefixSet out(m);
  if (mode == MatchKind::Exact) return out;
  // a one-letter string inserted right after an active prefix
  if (mode == MatchKind::Edit1 && !fwd.of_length(1).empty()) {
    out |= ap_prev;
    out.reset(0);
  }
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_mu(m + 1);
  ap_prev.for_each([&](std::size_t lambda) {
    if (lambda == 0) return;
    for (std::size_t mu = 1; lambda + mu <= m; ++mu) by_mu[mu].emplace_back(lambda, m - lambda - mu);
  });
  for (std::size_t mu = 1; mu <= m; ++mu) {
    if (by_mu[mu].empty()) continue;
    bool any_string = false;
    for (const auto& sc : anchor_subcases(mu, mode)) any_string = any_string || !fwd.of_length(sc.len).empty();
    if (!any_string) continue;
    const MuGroup g = build_mu_group(pi, mu, by_mu[mu]);
    const auto rects = group_rectangles(g, fwd, mode);
    if (rects.empty()) continue;
    auto emit = [&](std::size_t rank) {
      for (std::size_t lambda : g.lambdas[rank - 1]) out.set(lambda + mu);
    };
    if (engine == StabEngine::Grid) {
      const GridStabber grid(rects, g.h());
      for (const auto& p : g.points)
        if (grid.stabbed(p)) emit(p.x);
    } else {
      const RectStabbing st(rects);
      for (const auto& p : g.points)
        if (st.stabbed(p)) emit(p.x);
    }
  }
  return out;
}

/// Off-line decision: some lambda in ap_prev and rho in rho_set (suffix
/// lengths active from the next segment on) are joined by one segment string
/// with exactly one error.
inline bool anchor_decision(const PatternIndex& pi, const PrefixSet& ap_prev, const PrefixSet& rho_set,
                            const SegmentIndex& fwd, MatchKind mode) {
  const std::size_t m = pi.m();
  if (mode == MatchKind::Exact) return false;
  if (mode == MatchKind::Edit1 && !fwd.of_length(1).empty()) {
    bool hit = false;
    ap_prev.for_each([&](std::size_t lambda) {
      if (lambda >= 1 && lambda < m && rho_set.test(m - lambda)) hit = true;
    });
    if (hit) return true;
  }
  for (const auto& g : build_mu_groups(pi, ap_prev, rho_set)) {
    bool any_string = false;
    for (const auto& sc : anchor_subcases(g.mu, mode)) any_string = any_string || !fwd.of_length(sc.len).empty();
    if (!any_string) continue;
    const RangeEmptiness re(g.points);
    for (const auto& sc : anchor_subcases(g.mu, mode))
      for (std::size_t k : fwd.of_length(sc.len))
        for (const auto& ar : anchor_rectangles(g, fwd.strings()[k], sc.total))
          if (!re.empty(ar.rect)) return true;
  }
  return false;
}

}  // namespace edsm
