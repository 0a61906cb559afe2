#pragma once

// Exact machinery: active prefix extension, new active prefixes, and the
// per-segment exact propagation step with its end-of-occurrence flag.

#include <cstddef>

#include "edsm/approx_search.hpp"
#include "edsm/eds.hpp"
#include "edsm/prefix_set.hpp"
#include "edsm/segment_index.hpp"

namespace edsm {

/// v[j] iff P[1..i] S = P[1..j] for some i in u and S in the segment.
inline PrefixSet ape(const Pattern& p, const PrefixSet& u, const Segment& seg) {
  SegmentIndex idx(seg, p.size());
  return idx.extend(p.str(), u);
}

/// Reference version: every string against every start, no index.
inline PrefixSet ape_reference(const Pattern& p, const PrefixSet& u, const Segment& seg) {
  const std::size_t m = p.size();
  PrefixSet v(m);
  for (const auto& s : seg.strings()) {
    u.for_each([&](std::size_t a) {
      if (a + s.size() > m) return;
      for (std::size_t t = 0; t < s.size(); ++t)
        if (p[a + t] != s[t]) return;
      v.set(a + s.size());
    });
  }
  return v;
}

/// j in [1,m] such that P[1..j] is a suffix of some nonempty segment string.
inline PrefixSet start_prefixes(const PatternIndex& pi, const SegmentIndex& rev) {
  const std::size_t m = pi.m();
  PrefixSet out(m);
  rev.prefix_mask(pi.backward()).for_each([&](std::size_t a) { out.set(m - a); });
  return out;
}

inline PrefixSet start_new_prefixes(const Pattern& p, const Segment& seg) {
  PatternIndex pi(p);
  SegmentIndex rev(seg, p.size(), true);
  return start_prefixes(pi, rev);
}

/// Whether P occurs inside a single segment string.
inline bool occurs_inside(const PatternIndex& pi, const SegmentIndex& fwd) {
  for (const auto& s : fwd.strings())
    if (s.size() >= pi.m() && one_sm_any(pi.forward(), s, MatchKind::Exact)) return true;
  return false;
}

struct ExactStep {
  PrefixSet ap;
  bool end_here = false;
};

/// One on-line exact step given indexes for both orientations of the segment.
inline ExactStep propagate_exact(const PatternIndex& pi, const PrefixSet& ap_prev, const SegmentIndex& fwd,
                                 const SegmentIndex& rev) {
  const std::size_t m = pi.m();
  ExactStep st;
  st.ap = fwd.extend(pi.forward(), ap_prev) | start_prefixes(pi, rev);
  st.ap.reset(0);
  bool end = occurs_inside(pi, fwd);
  if (!end) {
    PrefixSet open = ap_prev;
    open.reset(m);
    end = (open & fwd.prefix_mask(pi.forward())).any();
  }
  if (!end) end = ap_prev.test(m) && fwd.has_empty();
  st.end_here = end;
  return st;
}

inline ExactStep propagate_exact(const PrefixSet& ap_prev, const Pattern& p, const Segment& seg) {
  PatternIndex pi(p);
  SegmentIndex fwd(seg, p.size()), rev(seg, p.size(), true);
  return propagate_exact(pi, ap_prev, fwd, rev);
}

}  // namespace edsm
