#pragma once

// Seeded random ED texts and patterns for tests, the CLI and benchmarks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "edsm/eds.hpp"

namespace edsm {

struct GenParams {
  std::size_t n = 8;
  std::size_t max_alts = 3;
  std::size_t max_len = 4;
  std::string alphabet = "ACGT";
  double eps_prob = 0.1;
  std::uint64_t seed = 1;
  std::optional<std::string> plant;  // pattern embedded along one path
  bool plant_error = false;          // inject one edit into the planted copy
};

inline void check(const GenParams& g) {
  if (g.n == 0) throw std::invalid_argument("n must be positive");
  if (g.max_alts == 0) throw std::invalid_argument("max_alts must be positive");
  if (g.alphabet.empty()) throw std::invalid_argument("alphabet must be non-empty");
  if (g.eps_prob < 0.0 || g.eps_prob > 1.0) throw std::invalid_argument("eps_prob must be in [0,1]");
  if (g.plant && g.plant->empty()) throw std::invalid_argument("planted pattern must be non-empty");
}

namespace detail {

inline SymbolString random_string(std::mt19937_64& rng, const std::string& alpha, std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
  SymbolString s;
  for (std::size_t t = 0; t < len; ++t) s.push_back(static_cast<unsigned char>(alpha[pick(rng)]));
  return s;
}

inline std::vector<SymbolString> random_alts(std::mt19937_64& rng, const GenParams& g) {
  std::uniform_int_distribution<std::size_t> count(1, g.max_alts);
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, g.max_len));
  std::bernoulli_distribution eps(g.eps_prob);
  std::vector<SymbolString> alts;
  const std::size_t k = count(rng);
  for (std::size_t a = 0; a < k; ++a) alts.push_back(random_string(rng, g.alphabet, g.max_len ? len(rng) : 0));
  if (eps(rng)) alts.push_back({});
  return alts;
}

}  // namespace detail

/// The planted copy with one edit applied (substitution, deletion or insertion).
inline SymbolString inject_error(std::mt19937_64& rng, SymbolString s, const std::string& alpha) {
  std::uniform_int_distribution<int> op(0, s.size() > 1 ? 2 : 1);
  std::uniform_int_distribution<std::size_t> letter(0, alpha.size() - 1);
  const int o = op(rng);
  if (o == 0) {
    std::uniform_int_distribution<std::size_t> pos(0, s.size() - 1);
    const std::size_t p = pos(rng);
    Symbol c = static_cast<unsigned char>(alpha[letter(rng)]);
    if (alpha.size() > 1)
      while (c == s[p]) c = static_cast<unsigned char>(alpha[letter(rng)]);
    s[p] = c;
  } else if (o == 1) {
    std::uniform_int_distribution<std::size_t> pos(0, s.size());
    s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos(rng)), static_cast<unsigned char>(alpha[letter(rng)]));
  } else {
    std::uniform_int_distribution<std::size_t> pos(0, s.size() - 1);
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(pos(rng)));
  }
  return s;
}

/// Deterministic for fixed parameters. With a planted pattern, the copy is
/// cut into consecutive pieces that are added as alternatives to a run of
/// segments, so at least one occurrence exists.
inline EDString generate(const GenParams& g) {
  check(g);
  std::mt19937_64 rng(g.seed);
  std::vector<std::vector<SymbolString>> segs;
  for (std::size_t i = 0; i < g.n; ++i) segs.push_back(detail::random_alts(rng, g));
  if (g.plant) {
    SymbolString copy = to_symbols(*g.plant);
    if (g.plant_error) copy = inject_error(rng, copy, g.alphabet);
    std::uniform_int_distribution<std::size_t> start(0, g.n - 1);
    std::size_t i = start(rng);
    std::size_t pos = 0;
    while (pos < copy.size()) {
      const std::size_t left = copy.size() - pos;
      std::size_t take = left;
      if (i + 1 < g.n && left > 1) {
        std::uniform_int_distribution<std::size_t> piece(1, left);
        take = piece(rng);
      }
      segs[i].emplace_back(copy.begin() + static_cast<std::ptrdiff_t>(pos),
                           copy.begin() + static_cast<std::ptrdiff_t>(pos + take));
      pos += take;
      ++i;
    }
  }
  std::vector<Segment> out;
  for (auto& a : segs) out.emplace_back(std::move(a));
  return EDString(std::move(out));
}

inline Pattern random_pattern(std::mt19937_64& rng, const std::string& alpha, std::size_t m) {
  return Pattern(detail::random_string(rng, alpha, m));
}

/// Text of total size about `target_n` whose segments hold about
/// `seg_size` letters each, split into strings of 1..max_len letters.
inline EDString generate_sized(std::size_t target_n, std::size_t seg_size, std::size_t max_len,
                               const std::string& alpha, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::vector<Segment> segs;
  std::size_t total = 0;
  while (total < target_n) {
    // duplicates collapse inside a segment, so count distinct strings only
    std::set<SymbolString> alts;
    std::size_t here = 0, misses = 0;
    while (here < seg_size && misses < 256) {
      // after repeated collisions, allow overshooting seg_size
      const std::size_t l = misses < 32 ? std::min(len(rng), seg_size - here) : len(rng);
      if (alts.insert(detail::random_string(rng, alpha, l)).second) {
        here += l;
        misses = 0;
      } else {
        ++misses;
      }
    }
    Segment s(std::vector<SymbolString>(alts.begin(), alts.end()));
    total += s.size_contribution();
    segs.push_back(std::move(s));
  }
  return EDString(std::move(segs));
}

}  // namespace edsm
