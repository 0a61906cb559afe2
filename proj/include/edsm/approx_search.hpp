#pragma once

// 1-error search of a pattern inside a single string: forward and backward
// extensions from Z arrays, then one check per candidate window.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "edsm/eds.hpp"

namespace edsm {

inline std::vector<std::size_t> z_array(std::span<const Symbol> s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> z(n, 0);
  if (n) z[0] = n;
  for (std::size_t i = 1, l = 0, r = 0; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

/// fwd[s] = LCP(P, T[s..]) and bwd[e] = longest common suffix of P and T[0..e).
struct Extensions {
  std::vector<std::size_t> fwd, bwd;
};

inline Extensions extensions(std::span<const Symbol> p, std::span<const Symbol> t) {
  const std::size_t m = p.size(), n = t.size();
  Extensions ex;
  SymbolString buf(p.begin(), p.end());
  buf.push_back(kSeparatorBase);
  buf.insert(buf.end(), t.begin(), t.end());
  auto z = z_array(buf);
  ex.fwd.assign(n + 1, 0);
  for (std::size_t s = 0; s < n; ++s) ex.fwd[s] = z[m + 1 + s];

  buf.assign(p.rbegin(), p.rend());
  buf.push_back(kSeparatorBase);
  buf.insert(buf.end(), t.rbegin(), t.rend());
  z = z_array(buf);
  ex.bwd.assign(n + 1, 0);
  for (std::size_t e = 1; e <= n; ++e) ex.bwd[e] = z[m + 1 + (n - e)];
  return ex;
}

/// Smallest distance class of T[s..s+len) against P; false when above the
/// budget of `mode`. Only len in {m-1, m, m+1} can be within one edit.
inline bool window_within(const Extensions& ex, std::size_t m, std::size_t s, std::size_t len, MatchKind mode,
                          MatchKind& kind) {
  const std::size_t f = std::min(ex.fwd[s], len), b = std::min(ex.bwd[s + len], len);
  if (len == m) {
    if (f >= m) {
      kind = MatchKind::Exact;
      return true;
    }
    if (mode != MatchKind::Exact && f + b + 1 >= m) {
      kind = MatchKind::Hamming1;  // a substitution is also a 1-mismatch
      return true;
    }
    return false;
  }
  if (mode != MatchKind::Edit1 || len == 0) return false;
  if (len + 1 == m && f + b >= len) {
    kind = MatchKind::Edit1;
    return true;
  }
  if (len == m + 1 && f + b >= m) {
    kind = MatchKind::Edit1;
    return true;
  }
  return false;
}

struct EndMatch {
  std::size_t end = 0;  // 1-based end position in the text
  MatchKind kind = MatchKind::Exact;
  friend bool operator==(const EndMatch&, const EndMatch&) = default;
};

/// Every end position j of a nonempty substring of `text` within the mode's
/// budget from P, with the smallest kind found at that end.
inline std::vector<EndMatch> one_sm_kinds(std::span<const Symbol> pattern, std::span<const Symbol> text,
                                          MatchKind mode) {
  const std::size_t m = pattern.size(), n = text.size();
  std::vector<EndMatch> out;
  if (m == 0 || n + 1 < m) return out;
  const Extensions ex = extensions(pattern, text);
  for (std::size_t e = 1; e <= n; ++e) {
    bool found = false;
    MatchKind best = MatchKind::Edit1;
    for (std::size_t len : {m, m - 1, m + 1}) {
      if (len > e) continue;
      MatchKind k;
      if (window_within(ex, m, e - len, len, mode, k)) {
        if (!found || k < best) best = k;
        found = true;
      }
    }
    if (found) out.push_back({e, best});
  }
  return out;
}

inline std::vector<std::size_t> one_sm(std::span<const Symbol> pattern, std::span<const Symbol> text,
                                       MatchKind mode = MatchKind::Edit1) {
  std::vector<std::size_t> ends;
  for (const auto& em : one_sm_kinds(pattern, text, mode)) ends.push_back(em.end);
  return ends;
}

/// True when some substring of text is within the budget.
inline bool one_sm_any(std::span<const Symbol> pattern, std::span<const Symbol> text, MatchKind mode) {
  return !one_sm_kinds(pattern, text, mode).empty();
}

}  // namespace edsm
