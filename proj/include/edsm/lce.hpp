#pragma once

// Longest common extension over a concatenation of strings, via suffix
// array + Kasai LCP + sparse-table minimum. Also the substring sorter.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "edsm/eds.hpp"

namespace edsm {

/// Suffix array by prefix doubling. Symbols are compared as unsigned values.
inline std::vector<std::size_t> suffix_array(std::span<const Symbol> s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> sa(n), rank(n), tmp(n);
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  if (n == 0) return sa;
  std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
  rank[sa[0]] = 0;
  for (std::size_t i = 1; i < n; ++i) rank[sa[i]] = rank[sa[i - 1]] + (s[sa[i]] != s[sa[i - 1]] ? 1 : 0);
  for (std::size_t k = 1; rank[sa[n - 1]] + 1 < n; k <<= 1) {
    auto key = [&](std::size_t i) { return i + k < n ? rank[i + k] + 1 : 0; };
    auto cmp = [&](std::size_t a, std::size_t b) {
      if (rank[a] != rank[b]) return rank[a] < rank[b];
      return key(a) < key(b);
    };
    std::sort(sa.begin(), sa.end(), cmp);
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) tmp[sa[i]] = tmp[sa[i - 1]] + (cmp(sa[i - 1], sa[i]) ? 1 : 0);
    rank.swap(tmp);
  }
  return sa;
}

/// lcp[r] = LCP(suffix sa[r-1], suffix sa[r]); lcp[0] = 0.
inline std::vector<std::size_t> kasai_lcp(std::span<const Symbol> s, const std::vector<std::size_t>& sa) {
  const std::size_t n = s.size();
  std::vector<std::size_t> rank(n), lcp(n, 0);
  for (std::size_t r = 0; r < n; ++r) rank[sa[r]] = r;
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h) --h;
  }
  return lcp;
}

class SparseMin {
 public:
  SparseMin() = default;
  explicit SparseMin(const std::vector<std::size_t>& v) {
    const std::size_t n = v.size();
    table_.push_back(v);
    for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
      const std::size_t half = std::size_t{1} << (k - 1);
      std::vector<std::size_t> row(n - (std::size_t{1} << k) + 1);
      for (std::size_t i = 0; i < row.size(); ++i) row[i] = std::min(table_[k - 1][i], table_[k - 1][i + half]);
      table_.push_back(std::move(row));
    }
  }
  /// Minimum over [lo, hi], lo <= hi.
  std::size_t query(std::size_t lo, std::size_t hi) const {
    const std::size_t k = static_cast<std::size_t>(std::bit_width(hi - lo + 1)) - 1;
    return std::min(table_[k][lo], table_[k][hi + 1 - (std::size_t{1} << k)]);
  }

 private:
  std::vector<std::vector<std::size_t>> table_;
};

/// Constant-time LCP between any two suffixes of a set of strings, each
/// string addressed by its index in the constructor argument.
class LceIndex {
 public:
  LceIndex() = default;
  explicit LceIndex(const std::vector<std::span<const Symbol>>& parts) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
      starts_.push_back(text_.size());
      text_.insert(text_.end(), parts[k].begin(), parts[k].end());
      text_.push_back(kSeparatorBase + static_cast<Symbol>(k));
    }
    starts_.push_back(text_.size());
    sa_ = suffix_array(text_);
    lcp_ = kasai_lcp(text_, sa_);
    rank_.resize(text_.size());
    for (std::size_t r = 0; r < sa_.size(); ++r) rank_[sa_[r]] = r;
    rmq_ = SparseMin(lcp_);
  }

  std::size_t parts() const { return starts_.empty() ? 0 : starts_.size() - 1; }
  std::size_t part_length(std::size_t k) const { return starts_[k + 1] - starts_[k] - 1; }

  /// LCP of part a from offset i and part b from offset j (0-based).
  std::size_t lcp(std::size_t a, std::size_t i, std::size_t b, std::size_t j) const {
    const std::size_t la = part_length(a), lb = part_length(b);
    if (i >= la || j >= lb) return 0;
    const std::size_t p = starts_[a] + i, q = starts_[b] + j;
    if (p == q) return la - i;
    std::size_t rp = rank_[p], rq = rank_[q];
    if (rp > rq) std::swap(rp, rq);
    return rmq_.query(rp + 1, rq);
  }

  Symbol at(std::size_t a, std::size_t i) const { return text_[starts_[a] + i]; }

 private:
  SymbolString text_;
  std::vector<std::size_t> starts_, sa_, lcp_, rank_;
  SparseMin rmq_;
};

/// Index over (a, b); part 0 is a, part 1 is b.
inline LceIndex build_lce(std::span<const Symbol> a, std::span<const Symbol> b) {
  return LceIndex({a, b});
}

struct Fragment {
  std::size_t pos = 0;  // 0-based start
  std::size_t len = 0;
};

/// Dense lexicographic ranks (starting at 1, equal substrings share a rank)
/// of fragments of x.
inline std::vector<std::size_t> sorted_substrings(std::span<const Symbol> x, const std::vector<Fragment>& frags) {
  for (const auto& f : frags)
    if (f.pos > x.size() || f.len > x.size() - f.pos) throw std::out_of_range("fragment outside string");
  LceIndex lce({x});
  auto cmp3 = [&](const Fragment& a, const Fragment& b) {
    const std::size_t l = std::min({lce.lcp(0, a.pos, 0, b.pos), a.len, b.len});
    if (l == a.len && l == b.len) return 0;
    if (l == a.len) return -1;
    if (l == b.len) return 1;
    return x[a.pos + l] < x[b.pos + l] ? -1 : 1;
  };
  std::vector<std::size_t> order(frags.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cmp3(frags[a], frags[b]) < 0; });
  std::vector<std::size_t> ranks(frags.size());
  std::size_t r = 0;
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (t == 0 || cmp3(frags[order[t - 1]], frags[order[t]]) != 0) ++r;
    ranks[order[t]] = r;
  }
  return ranks;
}

}  // namespace edsm
