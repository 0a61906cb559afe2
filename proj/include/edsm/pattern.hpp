#pragma once

// Keys that are fragments of strings held by an LceIndex, and the pattern
// index (P and P^R in one LceIndex).

#include <algorithm>
#include <cstddef>
#include <vector>

#include "edsm/compacted_trie.hpp"
#include "edsm/eds.hpp"
#include "edsm/lce.hpp"

namespace edsm {

struct FragmentRef {
  std::size_t part = 0, pos = 0, len = 0;
};

/// Keys policy over fragments of LceIndex parts, with O(1) LCP.
struct FragmentKeys {
  const LceIndex* lce = nullptr;
  std::vector<FragmentRef> keys;

  std::size_t size() const { return keys.size(); }
  std::size_t length(std::size_t k) const { return keys[k].len; }
  Symbol at(std::size_t k, std::size_t p) const { return lce->at(keys[k].part, keys[k].pos + p); }
  std::size_t lcp(std::size_t a, std::size_t b) const {
    const auto& x = keys[a];
    const auto& y = keys[b];
    return std::min({lce->lcp(x.part, x.pos, y.part, y.pos), x.len, y.len});
  }
};

using FragmentTrie = CompactedTrie<FragmentKeys>;

/// Equal fragments share one node and one rank (see key_rank).
inline FragmentTrie build_fragment_trie(const LceIndex& lce, std::vector<FragmentRef> frags) {
  return FragmentTrie(FragmentKeys{&lce, std::move(frags)});
}

class PatternIndex {
 public:
  static constexpr std::size_t kForward = 0, kReverse = 1;

  PatternIndex() = default;
  explicit PatternIndex(const Pattern& p)
      : p_(p.str()), pr_(reversed(p.letters())), lce_({std::span<const Symbol>(p_), std::span<const Symbol>(pr_)}) {}

  std::size_t m() const { return p_.size(); }
  const SymbolString& forward() const { return p_; }
  const SymbolString& backward() const { return pr_; }
  const SymbolString& oriented(bool reverse) const { return reverse ? pr_ : p_; }
  const LceIndex& lce() const { return lce_; }

  /// P[pos..pos+len) as a key.
  FragmentRef fragment(std::size_t pos, std::size_t len) const { return {kForward, pos, len}; }
  /// The reverse of P[pos..pos+len), which is P^R[m-pos-len..m-pos).
  FragmentRef reversed_fragment(std::size_t pos, std::size_t len) const {
    return {kReverse, m() - pos - len, len};
  }

 private:
  SymbolString p_, pr_;
  LceIndex lce_;
};

}  // namespace edsm
