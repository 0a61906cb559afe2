#pragma once

// Per-segment index: the segment strings in one orientation, truncated to
// m+1 letters (nothing longer can take part in a cross-segment alignment),
// a trie over them and the prefix groups used by the prefix/suffix cases.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "edsm/compacted_trie.hpp"
#include "edsm/eds.hpp"
#include "edsm/geometry.hpp"
#include "edsm/lce.hpp"
#include "edsm/pattern.hpp"
#include "edsm/prefix_set.hpp"

namespace edsm {

/// Distinct length-mu prefixes of the segment strings: the trie over them,
/// the trie over their reverses, and one point (rank, reverse rank) per
/// distinct member. Both rank sets are permutations of [1, h].
struct PrefixGroup {
  std::size_t mu = 0;
  FragmentTrie fwd, rev;
  std::vector<Point2> points;

  std::size_t h() const { return points.size(); }
};

class SegmentIndex {
 public:
  SegmentIndex(const Segment& seg, std::size_t m, bool reverse = false) : m_(m) {
    for (const auto& s : seg.strings()) {
      if (s.empty()) {
        has_empty_ = true;
        continue;
      }
      strings_.push_back(reverse ? reversed(s) : s);
    }
    const std::size_t g = strings_.size();
    std::vector<std::span<const Symbol>> parts;
    rtrunc_.reserve(g);
    for (const auto& s : strings_) {
      const std::size_t tl = std::min(s.size(), m_ + 1);
      trunc_len_.push_back(tl);
      rtrunc_.push_back(SymbolString(s.rend() - static_cast<std::ptrdiff_t>(tl), s.rend()));
    }
    for (std::size_t k = 0; k < g; ++k) parts.emplace_back(strings_[k].data(), trunc_len_[k]);
    for (std::size_t k = 0; k < g; ++k) parts.emplace_back(rtrunc_[k]);
    lce_ = std::make_unique<LceIndex>(parts);

    std::vector<FragmentRef> keys;
    for (std::size_t k = 0; k < g; ++k) keys.push_back({k, 0, trunc_len_[k]});
    trie_ = FragmentTrie(FragmentKeys{lce_.get(), std::move(keys)});
    real_end_.assign(trie_.nodes().size(), 0);
    for (std::size_t k = 0; k < g; ++k)
      if (strings_[k].size() <= m_) real_end_[trie_.key_node(k)] = 1;

    by_length_.assign(m_ + 2, {});
    for (std::size_t k = 0; k < g; ++k)
      if (strings_[k].size() <= m_ + 1) by_length_[strings_[k].size()].push_back(k);
    groups_.resize(m_ + 2);
  }

  SegmentIndex(const SegmentIndex&) = delete;
  SegmentIndex& operator=(const SegmentIndex&) = delete;

  std::size_t m() const { return m_; }
  bool has_empty() const { return has_empty_; }
  /// Nonempty strings in this orientation, full length.
  const std::vector<SymbolString>& strings() const { return strings_; }
  const FragmentTrie& trie() const { return trie_; }

  /// Indices of strings with exactly `len` letters (len <= m+1).
  const std::vector<std::size_t>& of_length(std::size_t len) const {
    static const std::vector<std::size_t> none;
    return len < by_length_.size() ? by_length_[len] : none;
  }

  /// Bit a (a < m) is set iff X[a..m) is a prefix of some string.
  PrefixSet prefix_mask(const SymbolString& x) const {
    PrefixSet out(m_);
    for (std::size_t a = 0; a < m_; ++a) {
      Locus at = trie_.root_locus();
      bool ok = true;
      for (std::size_t t = a; t < m_ && ok; ++t) {
        auto nx = trie_.step(at, x[t]);
        if (nx) at = *nx;
        else ok = false;
      }
      if (ok) out.set(a);
    }
    return out;
  }

  /// Active prefix extension: v[a + |S|] for every a in u and string S with
  /// X[a..a+|S|) = S; u itself is kept when the segment holds the empty string.
  PrefixSet extend(const SymbolString& x, const PrefixSet& u) const {
    PrefixSet v(m_);
    if (has_empty_) v |= u;
    u.for_each([&](std::size_t a) {
      Locus at = trie_.root_locus();
      for (std::size_t t = a; t < m_; ++t) {
        auto nx = trie_.step(at, x[t]);
        if (!nx) break;
        at = *nx;
        if (trie_.at_node(at) && real_end_[at.node]) v.set(t + 1);
      }
    });
    return v;
  }

  /// Group of distinct prefixes of length mu (1 <= mu <= m+1), or nullptr
  /// when no string is that long.
  const PrefixGroup* group(std::size_t mu) const {
    if (mu == 0 || mu > m_ + 1) return nullptr;
    if (!groups_[mu]) groups_[mu] = build_group(mu);
    return groups_[mu]->points.empty() ? nullptr : groups_[mu].get();
  }

 private:
  std::unique_ptr<PrefixGroup> build_group(std::size_t mu) const {
    auto g = std::make_unique<PrefixGroup>();
    g->mu = mu;
    std::vector<FragmentRef> fw;
    for (std::size_t k = 0; k < strings_.size(); ++k)
      if (trunc_len_[k] >= mu) fw.push_back({k, 0, mu});
    if (fw.empty()) return g;
    g->fwd = FragmentTrie(FragmentKeys{lce_.get(), fw});
    const std::size_t h = g->fwd.distinct_keys();
    std::vector<std::size_t> rep(h + 1, static_cast<std::size_t>(-1));
    for (std::size_t t = 0; t < fw.size(); ++t) {
      const std::size_t r = g->fwd.key_rank(t);
      if (rep[r] == static_cast<std::size_t>(-1)) rep[r] = t;
    }
    const std::size_t off = strings_.size();
    std::vector<FragmentRef> rv;
    for (std::size_t r = 1; r <= h; ++r) {
      const std::size_t k = fw[rep[r]].part;
      rv.push_back({off + k, trunc_len_[k] - mu, mu});
    }
    g->rev = FragmentTrie(FragmentKeys{lce_.get(), std::move(rv)});
    for (std::size_t r = 1; r <= h; ++r) g->points.push_back({r, g->rev.key_rank(r - 1)});
    return g;
  }

  std::size_t m_ = 0;
  bool has_empty_ = false;
  std::vector<SymbolString> strings_, rtrunc_;
  std::vector<std::size_t> trunc_len_;
  std::unique_ptr<LceIndex> lce_;
  FragmentTrie trie_;
  std::vector<char> real_end_;
  std::vector<std::vector<std::size_t>> by_length_;
  mutable std::vector<std::unique_ptr<PrefixGroup>> groups_;
};

}  // namespace edsm
