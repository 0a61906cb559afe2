#pragma once

// Prefix case (the single error sits in the last segment of an occurrence)
// and its mirror, the suffix case (the error sits in the first segment and
// yields new prefixes with one error).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "edsm/eds.hpp"
#include "edsm/geometry.hpp"
#include "edsm/pattern.hpp"
#include "edsm/prefix_set.hpp"
#include "edsm/segment_index.hpp"

namespace edsm {

enum class EditOp : std::uint8_t { Mismatch, DeletionInP, InsertionInP };

/// For a remainder of r pattern letters: the prefix length compared against
/// it and the number of letters that must agree on the two sides combined.
struct AffixSubcase {
  EditOp op;
  std::size_t mu;     // length of the segment-string prefix
  std::size_t total;  // h + k
};

inline std::vector<AffixSubcase> affix_subcases(std::size_t r, MatchKind mode) {
  std::vector<AffixSubcase> out;
  if (mode == MatchKind::Exact) return out;
  if (r >= 1) out.push_back({EditOp::Mismatch, r, r - 1});
  if (mode == MatchKind::Edit1) {
    if (r >= 2) out.push_back({EditOp::DeletionInP, r - 1, r - 1});
    out.push_back({EditOp::InsertionInP, r + 1, r});
  }
  return out;
}

/// Prefix-case matcher for one orientation: X is the pattern (P, or P^R for
/// the suffix case) and `idx` indexes the segment strings in the same
/// orientation. Spellings of X^R in the reverse tries do not depend on the
/// starting offset and are cached per group.
class AffixMatcher {
 public:
  AffixMatcher(const SymbolString& x, const SegmentIndex& idx, MatchKind mode)
      : x_(x), xr_(x.rbegin(), x.rend()), idx_(idx), mode_(mode), yspell_(x.size() + 2) {}

  /// True iff X[lambda..m) is within one error (per the mode, error
  /// required to be located here) of some nonempty prefix of a segment string.
  bool matches_at(std::size_t lambda) const {
    const std::size_t m = x_.size();
    if (lambda > m) return false;
    const std::size_t r = m - lambda;
    for (const auto& sc : affix_subcases(r, mode_)) {
      const PrefixGroup* g = idx_.group(sc.mu);
      if (!g) continue;
      if (stab_group(*g, lambda, sc.total)) return true;
    }
    return false;
  }

  /// Rectangles for one (lambda, subcase), in nesting order.
  std::vector<Rect> rectangles(const PrefixGroup& g, std::size_t lambda, std::size_t total) const {
    const auto& ys = y_intervals(g);
    std::vector<Rect> rects;
    Locus at = g.fwd.root_locus();
    for (std::size_t h = 0; h <= total; ++h) {
      if (h > 0) {
        auto nx = g.fwd.step(at, x_[lambda + h - 1]);
        if (!nx) break;
        at = *nx;
      }
      const std::size_t k = total - h;
      if (k >= ys.size()) continue;
      const auto xi = g.fwd.interval(at);
      const auto yi = ys[k];
      rects.push_back(Rect{xi.lo, xi.hi, yi.lo, yi.hi});
    }
    return rects;
  }

 private:
  bool stab_group(const PrefixGroup& g, std::size_t lambda, std::size_t total) const {
    const auto rects = rectangles(g, lambda, total);
    if (rects.empty()) return false;
    const auto hit = nested_stab_offline(g.h(), g.points, rects);
    return std::find(hit.begin(), hit.end(), true) != hit.end();
  }

  const std::vector<RankInterval>& y_intervals(const PrefixGroup& g) const {
    auto& ys = yspell_[g.mu];
    if (!ys.computed) {
      ys.iv = g.rev.spell(xr_);
      ys.computed = true;
    }
    return ys.iv;
  }

  struct Spell {
    bool computed = false;
    std::vector<RankInterval> iv;
  };

  const SymbolString& x_;
  SymbolString xr_;
  const SegmentIndex& idx_;
  MatchKind mode_;
  mutable std::vector<Spell> yspell_;
};

/// Whether some occurrence with its error in this segment ends here, given
/// the exact active prefixes of the previous segment.
inline bool prefix_case_report(const PrefixSet& ap_prev, const PatternIndex& pi, const SegmentIndex& fwd,
                               MatchKind mode) {
  AffixMatcher am(pi.forward(), fwd, mode);
  bool found = false;
  ap_prev.for_each([&](std::size_t lambda) {
    if (!found && lambda >= 1 && am.matches_at(lambda)) found = true;
  });
  return found;
}

/// Prefixes P[1..j] matched with one error against a suffix of a single
/// segment string (occurrences starting here with the error here).
inline PrefixSet suffix_case_contribution(const PatternIndex& pi, const SegmentIndex& rev, MatchKind mode) {
  const std::size_t m = pi.m();
  PrefixSet out(m);
  AffixMatcher am(pi.backward(), rev, mode);
  for (std::size_t lr = 0; lr < m; ++lr)
    if (am.matches_at(lr)) out.set(m - lr);
  return out;
}

inline bool prefix_case_report(const PrefixSet& ap_prev, const Pattern& p, const Segment& seg, MatchKind mode) {
  PatternIndex pi(p);
  SegmentIndex fwd(seg, p.size());
  return prefix_case_report(ap_prev, pi, fwd, mode);
}

inline PrefixSet suffix_case_contribution(const Segment& seg, const Pattern& p, MatchKind mode) {
  PatternIndex pi(p);
  SegmentIndex rev(seg, p.size(), true);
  return suffix_case_contribution(pi, rev, mode);
}

}  // namespace edsm
