#pragma once

// Compacted trie built by sorting keys and sweeping adjacent LCPs with a
// stack. Keys are read through a Keys policy so that fragments of a larger
// string, reversed strings and one-letter-modified strings all work without
// copying.
//
// Keys policy:
//   std::size_t size() const;                 number of keys
//   std::size_t length(std::size_t k) const;
//   Symbol at(std::size_t k, std::size_t pos) const;
//   optional: std::size_t lcp(std::size_t a, std::size_t b) const;

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "edsm/eds.hpp"

namespace edsm {

/// Keys given as spans; the caller owns the storage.
struct SpanKeys {
  std::vector<std::span<const Symbol>> keys;

  std::size_t size() const { return keys.size(); }
  std::size_t length(std::size_t k) const { return keys[k].size(); }
  Symbol at(std::size_t k, std::size_t p) const { return keys[k][p]; }
};

template <class Keys>
std::size_t key_lcp(const Keys& keys, std::size_t a, std::size_t b) {
  if constexpr (requires { keys.lcp(a, b); }) {
    return keys.lcp(a, b);
  } else {
    const std::size_t n = std::min(keys.length(a), keys.length(b));
    std::size_t l = 0;
    while (l < n && keys.at(a, l) == keys.at(b, l)) ++l;
    return l;
  }
}

struct TrieNode {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t parent = kNone;
  std::size_t depth = 0;  // string depth
  std::size_t rep = 0;    // some key whose string passes through this node
  std::vector<std::size_t> children;  // sorted by first edge letter
  std::vector<std::size_t> payloads;  // keys ending exactly here
  std::size_t lo = 0, hi = 0;         // rank interval of distinct keys below, 1-based
  std::size_t leaves = 0;             // childless nodes in the subtree
  std::size_t tin = 0, tout = 0;      // preorder entry/exit
};

/// A point on the trie: `depth` letters spelled, lying on the edge into
/// `node` (or exactly at it when depth == node.depth).
struct Locus {
  std::size_t node = 0;
  std::size_t depth = 0;
};

struct RankInterval {
  std::size_t lo = 1, hi = 0;
  bool empty() const { return lo > hi; }
  friend bool operator==(const RankInterval&, const RankInterval&) = default;
};

template <class Keys>
class CompactedTrie {
 public:
  CompactedTrie() = default;
  explicit CompactedTrie(Keys keys) : keys_(std::move(keys)) { build(); }

  const Keys& keys() const { return keys_; }
  const std::vector<TrieNode>& nodes() const { return nodes_; }
  const TrieNode& node(std::size_t v) const { return nodes_[v]; }
  std::size_t root() const { return 0; }
  std::size_t key_count() const { return keys_.size(); }
  std::size_t distinct_keys() const { return distinct_; }

  /// Node where key k ends and its rank among distinct keys.
  std::size_t key_node(std::size_t k) const { return key_node_[k]; }
  std::size_t key_rank(std::size_t k) const { return key_rank_[k]; }

  /// First letter of the edge entering v (v != root).
  Symbol edge_letter(std::size_t v) const { return keys_.at(nodes_[v].rep, nodes_[nodes_[v].parent].depth); }

  std::optional<std::size_t> child(std::size_t v, Symbol c) const {
    const auto& ch = nodes_[v].children;
    const std::size_t d = nodes_[v].depth;
    auto it = std::lower_bound(ch.begin(), ch.end(), c,
                               [&](std::size_t u, Symbol x) { return keys_.at(nodes_[u].rep, d) < x; });
    if (it == ch.end() || keys_.at(nodes_[*it].rep, d) != c) return std::nullopt;
    return *it;
  }

  Locus root_locus() const { return Locus{0, 0}; }

  std::optional<Locus> step(Locus at, Symbol c) const {
    const TrieNode& v = nodes_[at.node];
    if (at.depth == v.depth) {
      auto u = child(at.node, c);
      if (!u) return std::nullopt;
      return Locus{*u, at.depth + 1};
    }
    if (keys_.at(v.rep, at.depth) != c) return std::nullopt;
    return Locus{at.node, at.depth + 1};
  }

  RankInterval interval(Locus at) const { return RankInterval{nodes_[at.node].lo, nodes_[at.node].hi}; }

  bool at_node(Locus at) const { return at.depth == nodes_[at.node].depth; }

  /// Intervals after spelling s[0..t) for t = 0.. until the first failure.
  template <class Str>
  std::vector<RankInterval> spell(const Str& s) const {
    std::vector<RankInterval> out{interval(root_locus())};
    Locus at = root_locus();
    for (Symbol c : s) {
      auto nx = step(at, c);
      if (!nx) break;
      at = *nx;
      out.push_back(interval(at));
    }
    return out;
  }

  /// Locus of the full string s, if it is spelled in the trie.
  template <class Str>
  std::optional<Locus> find(const Str& s) const {
    Locus at = root_locus();
    for (Symbol c : s) {
      auto nx = step(at, c);
      if (!nx) return std::nullopt;
      at = *nx;
    }
    return at;
  }

  bool is_ancestor(std::size_t u, std::size_t v) const {
    return nodes_[u].tin <= nodes_[v].tin && nodes_[v].tout <= nodes_[u].tout;
  }

 private:
  void build() {
    const std::size_t n = keys_.size();
    key_node_.assign(n, 0);
    key_rank_.assign(n, 0);
    nodes_.clear();
    nodes_.push_back(TrieNode{});

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const std::size_t l = key_lcp(keys_, a, b);
      const std::size_t la = keys_.length(a), lb = keys_.length(b);
      if (l == la || l == lb) return la < lb;
      return keys_.at(a, l) < keys_.at(b, l);
    });

    std::vector<std::size_t> stack{0};
    std::size_t rank = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t k = order[t];
      const std::size_t len = keys_.length(k);
      const std::size_t l = t == 0 ? 0 : key_lcp(keys_, order[t - 1], k);
      const bool same = t > 0 && l == len && l == keys_.length(order[t - 1]);
      if (!same) ++rank;
      key_rank_[k] = rank;

      std::size_t last = TrieNode::kNone;
      while (nodes_[stack.back()].depth > l) {
        last = stack.back();
        stack.pop_back();
      }
      if (nodes_[stack.back()].depth < l) {
        // split the edge into `last` at depth l
        const std::size_t top = stack.back();
        const std::size_t mid = nodes_.size();
        TrieNode m;
        m.parent = top;
        m.depth = l;
        m.rep = nodes_[last].rep;
        m.children.push_back(last);
        nodes_.push_back(std::move(m));
        nodes_[top].children.back() = mid;
        nodes_[last].parent = mid;
        stack.push_back(mid);
      }
      std::size_t top = stack.back();
      if (nodes_[top].depth == len) {
        nodes_[top].payloads.push_back(k);
        key_node_[k] = top;
      } else {
        const std::size_t v = nodes_.size();
        TrieNode leaf;
        leaf.parent = top;
        leaf.depth = len;
        leaf.rep = k;
        leaf.payloads.push_back(k);
        nodes_.push_back(std::move(leaf));
        nodes_[top].children.push_back(v);
        key_node_[k] = v;
        stack.push_back(v);
      }
    }
    distinct_ = rank;
    if (n > 0) nodes_[0].rep = order[0];
    annotate();
  }

  void annotate() {
    // iterative DFS: preorder times, rank intervals, leaf counts
    std::size_t timer = 0;
    for (auto& v : nodes_) {
      v.lo = static_cast<std::size_t>(-1);
      v.hi = 0;
      v.leaves = 0;
    }
    std::vector<std::pair<std::size_t, std::size_t>> st{{0, 0}};
    nodes_[0].tin = timer++;
    while (!st.empty()) {
      auto& [v, ci] = st.back();
      if (ci < nodes_[v].children.size()) {
        const std::size_t u = nodes_[v].children[ci++];
        nodes_[u].tin = timer++;
        st.emplace_back(u, 0);
        continue;
      }
      TrieNode& x = nodes_[v];
      for (std::size_t k : x.payloads) {
        x.lo = std::min(x.lo, key_rank_[k]);
        x.hi = std::max(x.hi, key_rank_[k]);
      }
      if (x.children.empty()) x.leaves = 1;
      for (std::size_t u : x.children) {
        x.lo = std::min(x.lo, nodes_[u].lo);
        x.hi = std::max(x.hi, nodes_[u].hi);
        x.leaves += nodes_[u].leaves;
      }
      x.tout = timer - 1;
      st.pop_back();
    }
    if (nodes_[0].lo > nodes_[0].hi) {  // no keys at all
      nodes_[0].lo = 1;
      nodes_[0].hi = 0;
    }
  }

  Keys keys_;
  std::vector<TrieNode> nodes_;
  std::vector<std::size_t> key_node_, key_rank_;
  std::size_t distinct_ = 0;
};

using SpanTrie = CompactedTrie<SpanKeys>;

/// Owns its keys, so it is safe to build from temporaries.
struct OwnedKeys {
  std::vector<SymbolString> keys;

  std::size_t size() const { return keys.size(); }
  std::size_t length(std::size_t k) const { return keys[k].size(); }
  Symbol at(std::size_t k, std::size_t p) const { return keys[k][p]; }
};

using StringTrie = CompactedTrie<OwnedKeys>;

inline StringTrie build_trie(std::vector<SymbolString> strings) { return StringTrie(OwnedKeys{std::move(strings)}); }

}  // namespace edsm
