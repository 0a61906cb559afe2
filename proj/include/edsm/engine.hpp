#pragma once

// Segment-at-a-time pipelines. Reporting is on-line: one step per segment,
// carrying AP_{i-1} and 1-AP_{i-1}. Decision is off-line and also uses the
// active suffixes obtained from the reversed inputs.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "edsm/affix.hpp"
#include "edsm/anchor.hpp"
#include "edsm/approx_search.hpp"
#include "edsm/eds.hpp"
#include "edsm/errata.hpp"
#include "edsm/exact.hpp"
#include "edsm/pattern.hpp"
#include "edsm/prefix_set.hpp"
#include "edsm/segment_index.hpp"

namespace edsm {

enum class Task { Report, Decide };
enum class AnchorAlgo { Auto, Geometric, Grid, Errata };

inline std::string_view to_string(AnchorAlgo a) {
  switch (a) {
    case AnchorAlgo::Auto: return "auto";
    case AnchorAlgo::Geometric: return "geom";
    case AnchorAlgo::Grid: return "grid";
    case AnchorAlgo::Errata: return "errata";
  }
  return "?";
}

struct EngineConfig {
  MatchKind mode = MatchKind::Edit1;
  Task task = Task::Report;
  AnchorAlgo algo = AnchorAlgo::Auto;
};

inline void validate(const EngineConfig& cfg) {
  if (cfg.algo == AnchorAlgo::Errata && cfg.mode == MatchKind::Edit1)
    throw std::invalid_argument("errata anchor algorithm needs hamming1 or exact mode");
}

/// Algorithm actually used for a segment of size n_i.
inline AnchorAlgo resolve_algo(AnchorAlgo algo, MatchKind mode, std::size_t m, std::size_t n_i) {
  if (algo != AnchorAlgo::Auto) return algo;
  if (n_i >= m * m * m) return AnchorAlgo::Grid;
  return mode == MatchKind::Hamming1 ? AnchorAlgo::Errata : AnchorAlgo::Geometric;
}

/// Per-segment state for one error budget (one MatchKind).
class BudgetMatcher {
 public:
  BudgetMatcher(const PatternIndex& pi, MatchKind kind, AnchorAlgo algo)
      : pi_(&pi), kind_(kind), algo_(algo), ap_(pi.m()), ap1_(pi.m()) {
    if (algo == AnchorAlgo::Errata && kind == MatchKind::Edit1)
      throw std::invalid_argument("errata anchor algorithm needs hamming1 or exact mode");
  }

  MatchKind kind() const { return kind_; }
  const PrefixSet& ap() const { return ap_; }
  /// 1-AP of the last segment (equal to AP in exact mode).
  const PrefixSet& ap1() const { return kind_ == MatchKind::Exact ? ap_ : ap1_; }

  /// Consume one (remapped) segment; true if an occurrence ends in it.
  bool step(const Segment& seg) {
    const std::size_t m = pi_->m();
    const SegmentIndex fwd(seg, m), rev(seg, m, true);
    const ExactStep ex = propagate_exact(*pi_, ap_, fwd, rev);
    if (kind_ == MatchKind::Exact) {
      ap_ = ex.ap;
      return ex.end_here;
    }
    bool end = ex.end_here;
    // inside one string
    for (const auto& s : fwd.strings())
      if (!end && s.size() + 1 >= m && one_sm_any(pi_->forward(), s, kind_)) end = true;
    // 1-AP_{i-1} completed without error by a nonempty prefix
    if (!end) {
      PrefixSet open = ap1_;
      open.reset(m);
      end = (open & fwd.prefix_mask(pi_->forward())).any();
    }
    // the error lies in this, the last, segment
    if (!end) end = prefix_case_report(ap_, *pi_, fwd, kind_);

    PrefixSet next = ex.ap;
    next |= fwd.extend(pi_->forward(), ap1_);
    next |= suffix_case_contribution(*pi_, rev, kind_);
    next |= anchor(seg, fwd);
    next.reset(0);
    if (next.test(m)) end = true;
    ap_ = ex.ap;
    ap1_ = std::move(next);
    return end;
  }

 private:
  PrefixSet anchor(const Segment& seg, const SegmentIndex& fwd) const {
    switch (resolve_algo(algo_, kind_, pi_->m(), seg.size_contribution())) {
      case AnchorAlgo::Errata: return errata_anchor(pi_->forward(), ap_, fwd.strings());
      case AnchorAlgo::Grid: return anchor_reporting(*pi_, ap_, fwd, kind_, StabEngine::Grid);
      default: return anchor_reporting(*pi_, ap_, fwd, kind_, StabEngine::Geometric);
    }
  }

  const PatternIndex* pi_;
  MatchKind kind_;
  AnchorAlgo algo_;
  PrefixSet ap_, ap1_;
};

/// On-line reporter over raw (not remapped) segments. The alphabet map only
/// depends on the pattern, so segments can be remapped as they arrive.
class OnlineReporter {
 public:
  OnlineReporter(const Pattern& pattern, const EngineConfig& cfg = {})
      : remap_(remap_alphabet(pattern, EDString(std::vector<Segment>{Segment(std::vector<SymbolString>{{}})}))),
        pi_(remap_.pattern) {
    validate(cfg);
    for (MatchKind k : {MatchKind::Exact, MatchKind::Hamming1, MatchKind::Edit1})
      if (k <= cfg.mode) matchers_.emplace_back(pi_, k, k == MatchKind::Edit1 ? edit_algo(cfg.algo) : cfg.algo);
  }

  OnlineReporter(const OnlineReporter&) = delete;
  OnlineReporter& operator=(const OnlineReporter&) = delete;

  /// Report for the next segment, if any.
  std::optional<OccurrenceReport> feed(const Segment& raw) {
    ++consumed_;
    const Segment seg = remap(raw);
    std::optional<OccurrenceReport> out;
    for (auto& bm : matchers_)
      if (bm.step(seg) && !out) out = OccurrenceReport{consumed_, bm.kind()};
    return out;
  }

  std::size_t consumed() const { return consumed_; }
  const BudgetMatcher& matcher(MatchKind k) const { return matchers_.at(static_cast<std::size_t>(k)); }

 private:
  static AnchorAlgo edit_algo(AnchorAlgo a) { return a == AnchorAlgo::Errata ? AnchorAlgo::Geometric : a; }

  Segment remap(const Segment& raw) const {
    std::vector<SymbolString> alts;
    alts.reserve(raw.count());
    for (const auto& s : raw.strings()) {
      SymbolString t;
      t.reserve(s.size());
      for (Symbol c : s) {
        auto it = remap_.ranks.find(c);
        t.push_back(it == remap_.ranks.end() ? remap_.sentinel : it->second);
      }
      alts.push_back(std::move(t));
    }
    return Segment(std::move(alts));
  }

  RemappedInput remap_;
  PatternIndex pi_;
  std::vector<BudgetMatcher> matchers_;
  std::size_t consumed_ = 0;
};

/// Every end position with the smallest kind reaching it, in segment order.
inline std::vector<OccurrenceReport> run_reporting(const Pattern& pattern, const EDString& text,
                                                   const EngineConfig& cfg = {}) {
  OnlineReporter rep(pattern, cfg);
  std::vector<OccurrenceReport> out;
  for (const auto& seg : text.segments())
    if (auto r = rep.feed(seg)) out.push_back(*r);
  return out;
}

inline std::vector<std::size_t> report_ends(const std::vector<OccurrenceReport>& reps) {
  std::vector<std::size_t> out;
  for (const auto& r : reps) out.push_back(r.end_segment);
  return out;
}

/// Exact active prefixes AP_1..AP_n of a (remapped) text; index 0 is AP_0.
inline std::vector<PrefixSet> exact_ap_sweep(const PatternIndex& pi, const EDString& text) {
  std::vector<PrefixSet> aps{PrefixSet(pi.m())};
  for (const auto& seg : text.segments()) {
    const SegmentIndex fwd(seg, pi.m()), rev(seg, pi.m(), true);
    aps.push_back(propagate_exact(pi, aps.back(), fwd, rev).ap);
  }
  return aps;
}

namespace detail {

inline bool decide_mode(const Pattern& p, const EDString& t, MatchKind mode) {
  const std::size_t m = p.size(), n = t.length();
  const PatternIndex pi(p);
  const Pattern pr = reverse(p);
  const EDString tr = reverse(t);
  const PatternIndex pir(pr);
  const auto ap = exact_ap_sweep(pi, t);
  const auto apr = exact_ap_sweep(pir, tr);  // apr[k] over the first k reversed segments
  for (std::size_t i = 1; i <= n; ++i) {
    const Segment& seg = t[i - 1];
    const SegmentIndex fwd(seg, m), rev(seg, m, true);
    if (propagate_exact(pi, ap[i - 1], fwd, rev).end_here) return true;
    if (mode == MatchKind::Exact) continue;
    for (const auto& s : fwd.strings())
      if (s.size() + 1 >= m && one_sm_any(pi.forward(), s, mode)) return true;
    // error in the last segment of the occurrence
    if (prefix_case_report(ap[i - 1], pi, fwd, mode)) return true;
    // error in the first segment: the same case on the reversed inputs
    const std::size_t ir = n - i + 1;
    if (prefix_case_report(apr[ir - 1], pir, rev, mode)) return true;
    // error strictly inside
    if (i >= 2 && i + 1 <= n && anchor_decision(pi, ap[i - 1], apr[n - i], fwd, mode)) return true;
  }
  return false;
}

}  // namespace detail

/// Off-line: whether any occurrence within the mode's budget exists.
inline bool run_decision(const Pattern& pattern, const EDString& text, const EngineConfig& cfg = {}) {
  validate(cfg);
  const RemappedInput in = remap_alphabet(pattern, text);
  return detail::decide_mode(in.pattern, in.text, cfg.mode);
}

}  // namespace edsm
