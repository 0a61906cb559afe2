#pragma once

// Brute-force reference. Shares only the data types with the engine.
//
// Occurrence convention (the same one the engine implements): a string Q
// (nonempty, within the mode's budget from P) occurs from segment j to j'
// when Q = Q_j ... Q_j' with Q_j a nonempty suffix of a string of T[j],
// whole strings (possibly empty) in between, and Q_j' a nonempty prefix of a
// string of T[j'] or the empty string itself when it belongs to T[j']. For
// j = j', Q is a substring of one string.

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "edsm/eds.hpp"
#include "edsm/prefix_set.hpp"

namespace edsm::oracle {

struct DeskBounds {
  std::size_t max_n = 8, max_strings = 4, max_len = 5, max_m = 12;
};

inline void check_bounds(const Pattern& p, const EDString& t, const DeskBounds& b = {}) {
  if (p.size() > b.max_m || t.length() > b.max_n) throw std::invalid_argument("instance above desk-scale bounds");
  for (const auto& seg : t.segments()) {
    if (seg.count() > b.max_strings) throw std::invalid_argument("instance above desk-scale bounds");
    for (const auto& s : seg.strings())
      if (s.size() > b.max_len) throw std::invalid_argument("instance above desk-scale bounds");
  }
}

/// Levenshtein distance by the textbook table.
inline std::size_t edit_distance(const SymbolString& a, const SymbolString& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
  return d[a.size()][b.size()];
}

inline std::size_t hamming_distance(const SymbolString& a, const SymbolString& b) {
  if (a.size() != b.size()) return static_cast<std::size_t>(-1);
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline std::size_t budget_of(MatchKind mode) { return mode == MatchKind::Exact ? 0 : 1; }

/// Distance of P to Q under the mode's metric, capped at 2.
inline std::size_t distance(const SymbolString& p, const SymbolString& q, MatchKind mode) {
  if (mode == MatchKind::Edit1) return std::min<std::size_t>(edit_distance(p, q), 2);
  return std::min<std::size_t>(hamming_distance(p, q), 2);
}

namespace detail {

/// Incremental comparison of a growing text Q against the fixed P: one DP
/// row for edit distance, or the mismatch count for Hamming/exact.
struct Row {
  std::vector<std::size_t> d;  // d[k] = distance(P[0..k), Q)
  std::size_t len = 0;
};

class Aligner {
 public:
  Aligner(const SymbolString& p, MatchKind mode) : p_(p), mode_(mode), budget_(budget_of(mode)) {}

  Row start() const {
    Row r;
    r.d.resize(p_.size() + 1);
    for (std::size_t k = 0; k <= p_.size(); ++k) r.d[k] = k;
    return r;
  }

  /// Append letter c to Q; false when no extension can come back in budget.
  bool push(Row& r, Symbol c) const {
    const std::size_t m = p_.size();
    r.len += 1;
    if (mode_ == MatchKind::Edit1) {
      std::vector<std::size_t> nd(m + 1);
      nd[0] = r.len;
      for (std::size_t k = 1; k <= m; ++k)
        nd[k] = std::min({r.d[k] + 1, nd[k - 1] + 1, r.d[k - 1] + (p_[k - 1] == c ? 0 : 1)});
      r.d.swap(nd);
      return *std::min_element(r.d.begin(), r.d.end()) <= budget_;
    }
    // Hamming or exact: only d[len] matters, aligned letter by letter
    if (r.len > m) return false;
    const std::size_t prev = r.len == 1 ? 0 : r.d[r.len - 1];
    r.d[r.len] = prev + (p_[r.len - 1] == c ? 0 : 1);
    return r.d[r.len] <= budget_;
  }

  bool accepts(const Row& r) const {
    if (r.len == 0) return false;
    if (mode_ == MatchKind::Edit1) return r.d[p_.size()] <= budget_;
    return r.len == p_.size() && r.d[r.len] <= budget_;
  }

 private:
  const SymbolString& p_;
  MatchKind mode_;
  std::size_t budget_;
};

}  // namespace detail

/// All (j, j') pairs (1-based) such that some Q within budget occurs from j to j'.
inline std::set<std::pair<std::size_t, std::size_t>> enumerate_occurrences(const Pattern& pattern, const EDString& text,
                                                                          MatchKind mode,
                                                                          const DeskBounds& bounds = {}) {
  check_bounds(pattern, text, bounds);
  const SymbolString& p = pattern.str();
  const detail::Aligner al(p, mode);
  const std::size_t n = text.length();
  std::set<std::pair<std::size_t, std::size_t>> out;

  // Q already holds a nonempty first piece and some whole strings; continue at segment t.
  auto extend = [&](auto&& self, std::size_t j, std::size_t t, const detail::Row& row) -> void {
    if (t >= n) return;
    for (const auto& s : text[t].strings()) {
      if (s.empty()) {
        if (al.accepts(row)) out.emplace(j + 1, t + 1);
        self(self, j, t + 1, row);
        continue;
      }
      detail::Row r = row;
      bool alive = true;
      for (Symbol c : s) {
        if (!al.push(r, c)) {
          alive = false;
          break;
        }
        if (al.accepts(r)) out.emplace(j + 1, t + 1);
      }
      if (alive) self(self, j, t + 1, r);
    }
  };

  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& s : text[j].strings()) {
      for (std::size_t from = 0; from < s.size(); ++from) {
        detail::Row r = al.start();
        bool alive = true;
        for (std::size_t t = from; t < s.size(); ++t) {
          if (!al.push(r, s[t])) {
            alive = false;
            break;
          }
          if (al.accepts(r)) out.emplace(j + 1, j + 1);
        }
        if (alive) extend(extend, j, j + 1, r);
      }
    }
  }
  return out;
}

inline std::set<std::size_t> occurrence_ends(const Pattern& pattern, const EDString& text, MatchKind mode,
                                             const DeskBounds& bounds = {}) {
  std::set<std::size_t> ends;
  for (auto [j, jp] : enumerate_occurrences(pattern, text, mode, bounds)) ends.insert(jp);
  return ends;
}

/// Reports as (end, smallest kind) in increasing end order, for `mode`.
inline std::vector<OccurrenceReport> reports(const Pattern& pattern, const EDString& text, MatchKind mode,
                                             const DeskBounds& bounds = {}) {
  std::vector<OccurrenceReport> out;
  std::vector<int> best(text.length() + 1, -1);
  for (MatchKind k : {MatchKind::Edit1, MatchKind::Hamming1, MatchKind::Exact}) {
    if (k > mode) continue;
    for (std::size_t e : occurrence_ends(pattern, text, k, bounds)) best[e] = static_cast<int>(k);
  }
  for (std::size_t e = 1; e <= text.length(); ++e)
    if (best[e] >= 0) out.push_back({e, static_cast<MatchKind>(best[e])});
  return out;
}

// ---------------------------------------------------------------------------
// Per-segment active-prefix ground truth

struct ApSets {
  PrefixSet ap;   // exact
  PrefixSet ap1;  // within the budget
};

namespace detail {

/// Every nonempty Q with distance(P[0..j), Q) <= budget, over `letters`.
inline std::set<SymbolString> neighbourhood(const SymbolString& x, MatchKind mode, const std::set<Symbol>& letters) {
  std::set<SymbolString> out;
  if (!x.empty()) out.insert(x);
  if (mode == MatchKind::Exact) return out;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (Symbol c : letters) {
      SymbolString y = x;
      y[i] = c;
      out.insert(y);
    }
  if (mode == MatchKind::Edit1) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      SymbolString y = x;
      y.erase(y.begin() + static_cast<std::ptrdiff_t>(i));
      if (!y.empty()) out.insert(y);
    }
    for (std::size_t i = 0; i <= x.size(); ++i)
      for (Symbol c : letters) {
        SymbolString y = x;
        y.insert(y.begin() + static_cast<std::ptrdiff_t>(i), c);
        out.insert(y);
      }
  }
  return out;
}

/// suffix_of[i] = whether q is a suffix of some string of L(T[1..i+1]).
/// Forward state: lengths k of q-prefixes that are such suffixes.
inline std::vector<bool> suffix_of_language(const SymbolString& q, const EDString& text) {
  const std::size_t n = text.length(), L = q.size();
  std::vector<bool> out(n, false);
  std::vector<bool> cur(L + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> nxt(L + 1, false);
    for (const auto& s : text[i].strings()) {
      // carried states extended by the whole string s
      for (std::size_t k = 1; k <= L; ++k) {
        if (!cur[k] || k + s.size() > L) continue;
        if (std::equal(s.begin(), s.end(), q.begin() + static_cast<std::ptrdiff_t>(k))) nxt[k + s.size()] = true;
      }
      // fresh start: q[0..k) is a suffix of s
      for (std::size_t k = 1; k <= std::min(L, s.size()); ++k)
        if (std::equal(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(k), s.end() - static_cast<std::ptrdiff_t>(k)))
          nxt[k] = true;
    }
    cur.swap(nxt);
    out[i] = cur[L];
  }
  return out;
}

inline std::set<Symbol> letters_of(const Pattern& p, const EDString& t) {
  std::set<Symbol> out(p.str().begin(), p.str().end());
  for (const auto& seg : t.segments())
    for (const auto& s : seg.strings()) out.insert(s.begin(), s.end());
  return out;
}

}  // namespace detail

/// For each i in [0, n]: AP_i and the budgeted 1-AP_i (index 0 holds the empty sets).
inline std::vector<ApSets> oracle_ap_sets(const Pattern& pattern, const EDString& text, MatchKind mode,
                                          const DeskBounds& bounds = {}) {
  check_bounds(pattern, text, bounds);
  const std::size_t m = pattern.size(), n = text.length();
  std::vector<ApSets> out(n + 1, ApSets{PrefixSet(m), PrefixSet(m)});
  const auto letters = detail::letters_of(pattern, text);
  for (std::size_t j = 1; j <= m; ++j) {
    const SymbolString x(pattern.str().begin(), pattern.str().begin() + static_cast<std::ptrdiff_t>(j));
    const auto exact = detail::suffix_of_language(x, text);
    for (std::size_t i = 0; i < n; ++i)
      if (exact[i]) out[i + 1].ap.set(j);
    for (const auto& q : detail::neighbourhood(x, mode, letters)) {
      const auto hit = detail::suffix_of_language(q, text);
      for (std::size_t i = 0; i < n; ++i)
        if (hit[i]) out[i + 1].ap1.set(j);
    }
  }
  return out;
}

/// End positions derived from the per-segment sets (a second route to the
/// same answer as enumerate_occurrences, used to cross-check the oracle).
inline std::set<std::size_t> ends_from_language(const Pattern& pattern, const EDString& text, MatchKind mode) {
  const std::size_t n = text.length();
  std::set<std::size_t> ends;
  const auto letters = detail::letters_of(pattern, text);
  for (const auto& q : detail::neighbourhood(pattern.str(), mode, letters)) {
    if (mode == MatchKind::Hamming1 && q.size() != pattern.size()) continue;
    const std::size_t L = q.size();
    // ap[k] over lengths for the previous segment
    std::vector<bool> prev(L + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
      bool end = false;
      std::vector<bool> nxt(L + 1, false);
      for (const auto& s : text[i].strings()) {
        // inside one string
        if (s.size() >= L && std::search(s.begin(), s.end(), q.begin(), q.end()) != s.end()) end = true;
        // completes an earlier start with a nonempty prefix of s
        for (std::size_t k = 1; k < L; ++k)
          if (prev[k] && L - k <= s.size() &&
              std::equal(q.begin() + static_cast<std::ptrdiff_t>(k), q.end(), s.begin()))
            end = true;
        if (s.empty() && prev[L]) end = true;
        for (std::size_t k = 1; k <= L; ++k)
          if (prev[k] && k + s.size() <= L &&
              std::equal(s.begin(), s.end(), q.begin() + static_cast<std::ptrdiff_t>(k)))
            nxt[k + s.size()] = true;
        for (std::size_t k = 1; k <= std::min(L, s.size()); ++k)
          if (std::equal(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(k), s.end() - static_cast<std::ptrdiff_t>(k)))
            nxt[k] = true;
      }
      if (end) ends.insert(i + 1);
      prev.swap(nxt);
    }
  }
  return ends;
}

}  // namespace edsm::oracle
