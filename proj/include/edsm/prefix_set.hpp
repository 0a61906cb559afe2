#pragma once

// Packed bit vector over [0, m]. Index j means "P[1..j] is active".

#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace edsm {

class PrefixSet {
 public:
  PrefixSet() = default;
  /// Empty set over [0, m].
  explicit PrefixSet(std::size_t m) : m_(m), words_((m + 1 + 63) / 64, 0) {}

  static PrefixSet of(std::size_t m, std::initializer_list<std::size_t> bits) {
    PrefixSet s(m);
    for (auto b : bits) s.set(b);
    return s;
  }

  std::size_t m() const { return m_; }
  std::size_t universe() const { return m_ + 1; }

  bool test(std::size_t j) const { return j <= m_ && ((words_[j >> 6] >> (j & 63)) & 1u); }
  void set(std::size_t j) {
    if (j > m_) throw std::out_of_range("PrefixSet index");
    words_[j >> 6] |= std::uint64_t{1} << (j & 63);
  }
  void reset(std::size_t j) {
    if (j <= m_) words_[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  PrefixSet& operator|=(const PrefixSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  PrefixSet& operator&=(const PrefixSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend PrefixSet operator|(PrefixSet a, const PrefixSet& b) { return a |= b; }
  friend PrefixSet operator&(PrefixSet a, const PrefixSet& b) { return a &= b; }

  /// Bit j moves to j + k; bits pushed past m are dropped.
  PrefixSet shifted_up(std::size_t k) const {
    PrefixSet out(m_);
    if (k > m_) return out;
    const std::size_t ws = k >> 6, bs = k & 63;
    for (std::size_t t = words_.size(); t-- > ws;) {
      std::uint64_t w = words_[t - ws] << bs;
      if (bs && t - ws >= 1) w |= words_[t - ws - 1] >> (64 - bs);
      out.words_[t] = w;
    }
    out.trim();
    return out;
  }

  /// OR of (other shifted up by k) into this, the primitive of the DFS search.
  void or_shifted(const PrefixSet& other, std::size_t k) { *this |= other.shifted_up(k); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t t = 0; t < words_.size(); ++t) {
      std::uint64_t w = words_[t];
      while (w) {
        const int b = std::countr_zero(w);
        f(t * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> v;
    for_each([&](std::size_t j) { v.push_back(j); });
    return v;
  }

  friend bool operator==(const PrefixSet& a, const PrefixSet& b) { return a.m_ == b.m_ && a.words_ == b.words_; }

 private:
  void check_same(const PrefixSet& o) const {
    if (o.m_ != m_) throw std::invalid_argument("PrefixSet universe mismatch");
  }
  void trim() {
    const std::size_t used = (m_ + 1) & 63;
    if (used) words_.back() &= (std::uint64_t{1} << used) - 1;
  }

  std::size_t m_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::ostream& operator<<(std::ostream& os, const PrefixSet& s) {
  os << '{';
  bool first = true;
  s.for_each([&](std::size_t j) {
    if (!first) os << ',';
    os << j;
    first = false;
  });
  return os << '}';
}

}  // namespace edsm
