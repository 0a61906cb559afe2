#pragma once

// Heavy-light decomposition of a compacted trie. The heavy child is the one
// with the most leaves below it; ties go to the smallest edge letter, which
// is the first such child since children are kept sorted.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "edsm/compacted_trie.hpp"

namespace edsm {

struct HeavyLightDecomposition {
  static constexpr std::size_t kNone = TrieNode::kNone;

  std::vector<std::size_t> heavy;      // heavy child, or kNone for a leaf
  std::vector<std::size_t> head;       // topmost node of v's heavy path
  std::vector<std::size_t> path_leaf;  // leaf reached by following heavy children
  std::vector<std::size_t> path_id;    // dense id per heavy path

  bool is_light(std::size_t v) const { return head[v] == v; }
};

template <class Keys>
HeavyLightDecomposition heavy_light(const CompactedTrie<Keys>& trie) {
  const auto& nodes = trie.nodes();
  const std::size_t n = nodes.size();
  HeavyLightDecomposition h;
  h.heavy.assign(n, h.kNone);
  h.head.assign(n, h.kNone);
  h.path_leaf.assign(n, h.kNone);
  h.path_id.assign(n, h.kNone);

  for (std::size_t v = 0; v < n; ++v) {
    std::size_t best = h.kNone;
    for (std::size_t u : nodes[v].children)
      if (best == h.kNone || nodes[u].leaves > nodes[best].leaves) best = u;
    h.heavy[v] = best;
  }
  // preorder so that a parent is handled before its children
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<std::size_t> st{trie.root()};
  while (!st.empty()) {
    const std::size_t v = st.back();
    st.pop_back();
    order.push_back(v);
    for (std::size_t u : nodes[v].children) st.push_back(u);
  }
  std::size_t paths = 0;
  for (std::size_t v : order) {
    const std::size_t p = nodes[v].parent;
    if (p == h.kNone || h.heavy[p] != v) {
      h.head[v] = v;
      h.path_id[v] = paths++;
    } else {
      h.head[v] = h.head[p];
      h.path_id[v] = h.path_id[p];
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t v = *it;
    h.path_leaf[v] = h.heavy[v] == h.kNone ? v : h.path_leaf[h.heavy[v]];
  }
  return h;
}

/// Largest number of light edges on any root-to-leaf path.
template <class Keys>
std::size_t max_light_edges(const CompactedTrie<Keys>& trie, const HeavyLightDecomposition& h) {
  const auto& nodes = trie.nodes();
  std::vector<std::size_t> light(nodes.size(), 0);
  std::size_t best = 0;
  std::vector<std::size_t> st{trie.root()};
  while (!st.empty()) {
    const std::size_t v = st.back();
    st.pop_back();
    if (nodes[v].children.empty()) best = std::max(best, light[v]);
    for (std::size_t u : nodes[v].children) {
      light[u] = light[v] + (h.heavy[v] == u ? 0 : 1);
      st.push_back(u);
    }
  }
  return best;
}

}  // namespace edsm
