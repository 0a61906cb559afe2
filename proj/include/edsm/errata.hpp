#pragma once

// Hamming-distance anchor case through a 1-errata tree. T0 is the compacted
// trie of the active pattern suffixes and the segment strings; T1 adds, for
// every labeled node v and every light ancestor u whose heavy path does not
// contain v, the string of v with its first disagreement against u's heavy
// leaf overwritten by the leaf's letter. A DFS with per-length bit vectors
// then reads off the new prefixes with one mismatch.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "edsm/compacted_trie.hpp"
#include "edsm/eds.hpp"
#include "edsm/heavy_light.hpp"
#include "edsm/lce.hpp"
#include "edsm/prefix_set.hpp"

namespace edsm {

/// A string placed in T0: a pattern suffix P[lambda+1..m] or a segment string.
struct ErrataSource {
  bool pattern = false;
  std::size_t id = 0;  // lambda for pattern suffixes, string index otherwise
  std::size_t part = 0, pos = 0, len = 0;
};

struct ErrataBase {
  std::size_t m = 0;
  LceIndex lce;  // part 0 is P, part 1+k is segment string k
  std::vector<ErrataSource> sources;
};

/// Key = a source, optionally with one position overwritten.
struct ErrataKey {
  static constexpr std::size_t kNoMod = std::numeric_limits<std::size_t>::max();
  std::size_t src = 0;
  std::size_t mod = kNoMod;  // 0-based overwritten position
  Symbol letter = 0;
};

struct ErrataKeys {
  std::shared_ptr<const ErrataBase> base;
  std::vector<ErrataKey> keys;

  std::size_t size() const { return keys.size(); }
  std::size_t length(std::size_t k) const { return base->sources[keys[k].src].len; }
  Symbol at(std::size_t k, std::size_t p) const {
    const auto& key = keys[k];
    if (p == key.mod) return key.letter;
    const auto& s = base->sources[key.src];
    return base->lce.at(s.part, s.pos + p);
  }
  /// Piecewise LCP: LCE jumps between the (at most two) overwritten positions.
  std::size_t lcp(std::size_t a, std::size_t b) const {
    const auto& ka = keys[a];
    const auto& kb = keys[b];
    const auto& sa = base->sources[ka.src];
    const auto& sb = base->sources[kb.src];
    const std::size_t n = std::min(sa.len, sb.len);
    std::size_t pos = 0;
    while (pos < n) {
      if (pos == ka.mod || pos == kb.mod) {
        if (at(a, pos) != at(b, pos)) return pos;
        ++pos;
        continue;
      }
      std::size_t stop = n;
      if (ka.mod != ErrataKey::kNoMod && ka.mod > pos) stop = std::min(stop, ka.mod);
      if (kb.mod != ErrataKey::kNoMod && kb.mod > pos) stop = std::min(stop, kb.mod);
      const std::size_t l = std::min(base->lce.lcp(sa.part, sa.pos + pos, sb.part, sb.pos + pos), stop - pos);
      pos += l;
      if (pos < stop) return pos;
    }
    return n;
  }
};

using ErrataTrie = CompactedTrie<ErrataKeys>;

/// Label (iota(X), p): p == 0 stands for '#', otherwise the 1-based position
/// that was overwritten.
struct ErrataLabel {
  std::size_t src = 0;
  std::size_t p = 0;
  friend bool operator==(const ErrataLabel&, const ErrataLabel&) = default;
};

struct ErrataTree {
  std::shared_ptr<const ErrataBase> base;
  ErrataTrie trie;
  std::vector<std::vector<ErrataLabel>> labels;  // per node
  HeavyLightDecomposition hld;                   // filled for T0 only

  std::size_t label_count() const {
    std::size_t c = 0;
    for (const auto& l : labels) c += l.size();
    return c;
  }
  const ErrataSource& source(std::size_t s) const { return base->sources[s]; }

  /// The string a node spells.
  SymbolString node_string(std::size_t v) const {
    SymbolString out;
    const auto& nd = trie.node(v);
    for (std::size_t t = 0; t < nd.depth; ++t) out.push_back(trie.keys().at(nd.rep, t));
    return out;
  }
};

namespace detail {
inline ErrataTree make_errata_tree(std::shared_ptr<const ErrataBase> base, std::vector<ErrataKey> keys) {
  ErrataTree t;
  t.base = base;
  std::vector<ErrataLabel> key_labels;
  key_labels.reserve(keys.size());
  for (const auto& k : keys)
    key_labels.push_back({k.src, k.mod == ErrataKey::kNoMod ? 0 : k.mod + 1});
  t.trie = ErrataTrie(ErrataKeys{std::move(base), std::move(keys)});
  t.labels.assign(t.trie.nodes().size(), {});
  for (std::size_t k = 0; k < key_labels.size(); ++k) t.labels[t.trie.key_node(k)].push_back(key_labels[k]);
  return t;
}
}  // namespace detail

/// T0 over {P[lambda+1..m] : lambda in ap_prev, lambda < m} and the nonempty
/// segment strings of length at most m (longer ones cannot sit inside a
/// pattern suffix).
inline ErrataTree build_t0(std::span<const Symbol> pattern, const PrefixSet& ap_prev,
                           const std::vector<SymbolString>& strings) {
  auto base = std::make_shared<ErrataBase>();
  base->m = pattern.size();
  std::vector<std::span<const Symbol>> parts{pattern};
  for (const auto& s : strings) parts.emplace_back(s);
  base->lce = LceIndex(parts);
  ap_prev.for_each([&](std::size_t lambda) {
    if (lambda < base->m) base->sources.push_back({true, lambda, 0, lambda, base->m - lambda});
  });
  for (std::size_t k = 0; k < strings.size(); ++k)
    if (!strings[k].empty() && strings[k].size() <= base->m)
      base->sources.push_back({false, k, 1 + k, 0, strings[k].size()});
  std::vector<ErrataKey> keys;
  for (std::size_t s = 0; s < base->sources.size(); ++s) keys.push_back({s});
  ErrataTree t0 = detail::make_errata_tree(std::move(base), std::move(keys));
  t0.hld = heavy_light(t0.trie);
  return t0;
}

/// T1: T0 plus the one-letter variants described above. The result is built
/// as a fresh compacted trie over all keys, so variants that coincide with
/// existing strings land on the same node.
inline ErrataTree build_t1(const ErrataTree& t0) {
  const auto& tr = t0.trie;
  const auto& h = t0.hld;
  std::vector<ErrataKey> keys = tr.keys().keys;
  for (std::size_t v = 0; v < tr.nodes().size(); ++v) {
    if (t0.labels[v].empty()) continue;
    // light nodes u above v whose heavy path leaves v's root path
    std::size_t cur = h.head[v];
    while (tr.node(cur).parent != TrieNode::kNone) {
      const std::size_t u = h.head[tr.node(cur).parent];
      const std::size_t leaf = h.path_leaf[u];
      const std::size_t xkey = tr.node(leaf).payloads.front();
      const std::size_t ykey = tr.node(v).payloads.front();
      const std::size_t l = key_lcp(tr.keys(), xkey, ykey);
      if (l < tr.keys().length(ykey) && l < tr.keys().length(xkey))
        for (const auto& lab : t0.labels[v]) keys.push_back({lab.src, l, tr.keys().at(xkey, l)});
      cur = u;
    }
  }
  return detail::make_errata_tree(t0.base, std::move(keys));
}

struct ErrataSearchStats {
  bool vectors_clean = true;  // all per-length vectors back to zero after the DFS
};

/// DFS search: bit lambda + |Y| of the result is set when the segment string
/// Y is within one mismatch of P[lambda+1..lambda+|Y|].
inline PrefixSet search_t1(const ErrataTree& t1, ErrataSearchStats* stats = nullptr) {
  const std::size_t m = t1.base->m;
  PrefixSet v_any(m), v_hash(m), v_res(m);
  std::vector<std::unique_ptr<PrefixSet>> v_pos(m + 2);
  auto vec_for = [&](std::size_t p) -> PrefixSet& {
    if (p == 0) return v_hash;
    if (!v_pos[p]) v_pos[p] = std::make_unique<PrefixSet>(m);
    return *v_pos[p];
  };
  const auto& tr = t1.trie;
  auto set_segment_bits = [&](std::size_t v, bool on) {
    for (const auto& lab : t1.labels[v]) {
      const auto& s = t1.source(lab.src);
      if (s.pattern) continue;
      if (on) {
        vec_for(lab.p).set(s.len);
        v_any.set(s.len);
      } else {
        vec_for(lab.p).reset(s.len);
        v_any.reset(s.len);
      }
    }
  };
  std::vector<std::pair<std::size_t, std::size_t>> st{{tr.root(), 0}};
  set_segment_bits(tr.root(), true);
  auto visit_patterns = [&](std::size_t v) {
    for (const auto& lab : t1.labels[v]) {
      const auto& s = t1.source(lab.src);
      if (!s.pattern) continue;
      const std::size_t shift = m - s.len;
      if (lab.p == 0) {
        v_res.or_shifted(v_any, shift);
      } else {
        v_res.or_shifted(vec_for(lab.p) | v_hash, shift);
      }
    }
  };
  visit_patterns(tr.root());
  while (!st.empty()) {
    auto& [v, ci] = st.back();
    if (ci < tr.node(v).children.size()) {
      const std::size_t u = tr.node(v).children[ci++];
      set_segment_bits(u, true);
      visit_patterns(u);
      st.emplace_back(u, 0);
      continue;
    }
    set_segment_bits(v, false);
    st.pop_back();
  }
  if (stats) {
    stats->vectors_clean = v_any.none() && v_hash.none();
    for (const auto& p : v_pos)
      if (p && p->any()) stats->vectors_clean = false;
  }
  return v_res;
}

/// Full Hamming anchor contribution for one segment.
inline PrefixSet errata_anchor(std::span<const Symbol> pattern, const PrefixSet& ap_prev,
                               const std::vector<SymbolString>& strings) {
  const ErrataTree t1 = build_t1(build_t0(pattern, ap_prev, strings));
  return search_t1(t1);
}

/// The node-pair condition: a node labeled (X, p) below (or at) a node
/// labeled (Y, p') with p = p' a position, or p = '#', or p' = '#'.
inline bool errata_pair_condition(const ErrataTree& t1, std::size_t x_src, std::size_t y_src) {
  std::vector<std::pair<std::size_t, std::size_t>> xs, ys;
  for (std::size_t v = 0; v < t1.labels.size(); ++v)
    for (const auto& lab : t1.labels[v]) {
      if (lab.src == x_src) xs.emplace_back(v, lab.p);
      if (lab.src == y_src) ys.emplace_back(v, lab.p);
    }
  for (auto [u, p] : xs)
    for (auto [v, q] : ys)
      if (t1.trie.is_ancestor(v, u) && (p == 0 || q == 0 || p == q)) return true;
  return false;
}

/// Label-count bound (m + N_i)(log2(m + N_i) + 1).
inline double errata_label_bound(std::size_t m, std::size_t n_i) {
  const double s = static_cast<double>(m + n_i);
  return s * (std::log2(s) + 1.0);
}

}  // namespace edsm
