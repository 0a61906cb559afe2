#pragma once

// 2d range emptiness, 2d rectangle stabbing, the prefix-sum grid stabber and
// the offline stabber for nested rectangle families. Closed bounds everywhere.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <utility>
#include <vector>

namespace edsm {

struct Point2 {
  std::size_t x = 0, y = 0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Rect {
  std::size_t x1 = 0, x2 = 0, y1 = 0, y2 = 0;  // [x1,x2] x [y1,y2]

  bool contains(const Point2& p) const { return x1 <= p.x && p.x <= x2 && y1 <= p.y && p.y <= y2; }
  bool valid() const { return x1 <= x2 && y1 <= y2; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Static range tree (merge-sort tree over x) answering "is this rectangle
/// free of points" in O(log^2 n).
class RangeEmptiness {
 public:
  RangeEmptiness() = default;
  explicit RangeEmptiness(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) { return a.x < b.x; });
    xs_.reserve(pts.size());
    for (const auto& p : pts) xs_.push_back(p.x);
    n_ = pts.size();
    if (n_ == 0) return;
    size_ = 1;
    while (size_ < n_) size_ <<= 1;
    ys_.assign(2 * size_, {});
    for (std::size_t i = 0; i < n_; ++i) ys_[size_ + i] = {pts[i].y};
    for (std::size_t v = size_ - 1; v >= 1; --v) {
      std::merge(ys_[2 * v].begin(), ys_[2 * v].end(), ys_[2 * v + 1].begin(), ys_[2 * v + 1].end(),
                 std::back_inserter(ys_[v]));
    }
  }

  /// True iff no point lies in r. Inverted rectangles are a precondition failure.
  bool empty(const Rect& r) const {
    if (!r.valid()) throw std::invalid_argument("inverted query rectangle");
    if (n_ == 0) return true;
    std::size_t lo = static_cast<std::size_t>(std::lower_bound(xs_.begin(), xs_.end(), r.x1) - xs_.begin());
    std::size_t hi = static_cast<std::size_t>(std::upper_bound(xs_.begin(), xs_.end(), r.x2) - xs_.begin());
    auto hit = [&](std::size_t v) {
      auto it = std::lower_bound(ys_[v].begin(), ys_[v].end(), r.y1);
      return it != ys_[v].end() && *it <= r.y2;
    };
    for (lo += size_, hi += size_; lo < hi; lo >>= 1, hi >>= 1) {
      if ((lo & 1) && hit(lo++)) return false;
      if ((hi & 1) && hit(--hi)) return false;
    }
    return true;
  }

  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0, size_ = 0;
  std::vector<std::size_t> xs_;
  std::vector<std::vector<std::size_t>> ys_;
};

/// Segment tree over elementary x-slots; each canonical node keeps the union
/// of the y-intervals of the rectangles assigned to it. Query is O(log^2 r).
class RectStabbing {
 public:
  RectStabbing() = default;
  explicit RectStabbing(const std::vector<Rect>& rects) {
    for (const auto& r : rects)
      if (!r.valid()) throw std::invalid_argument("inverted rectangle");
    // slot k is the half-open x range [bp_[k], bp_[k+1])
    for (const auto& r : rects) {
      bp_.push_back(r.x1);
      bp_.push_back(r.x2 + 1);
    }
    std::sort(bp_.begin(), bp_.end());
    bp_.erase(std::unique(bp_.begin(), bp_.end()), bp_.end());
    if (bp_.size() < 2) return;
    const std::size_t slots = bp_.size() - 1;
    size_ = 1;
    while (size_ < slots) size_ <<= 1;
    nodes_.assign(2 * size_, {});
    for (const auto& r : rects) {
      std::size_t lo = slot_of_breakpoint(r.x1) + size_, hi = slot_of_breakpoint(r.x2 + 1) + size_;
      for (; lo < hi; lo >>= 1, hi >>= 1) {
        if (lo & 1) nodes_[lo++].emplace_back(r.y1, r.y2);
        if (hi & 1) nodes_[--hi].emplace_back(r.y1, r.y2);
      }
    }
    for (auto& iv : nodes_) merge_intervals(iv);
  }

  bool stabbed(const Point2& p) const {
    if (bp_.size() < 2 || p.x < bp_.front() || p.x >= bp_.back()) return false;
    const std::size_t slot = static_cast<std::size_t>(std::upper_bound(bp_.begin(), bp_.end(), p.x) - bp_.begin()) - 1;
    for (std::size_t v = slot + size_; v >= 1; v >>= 1)
      if (in_union(nodes_[v], p.y)) return true;
    return false;
  }

 private:
  using Interval = std::pair<std::size_t, std::size_t>;

  std::size_t slot_of_breakpoint(std::size_t x) const {
    return static_cast<std::size_t>(std::lower_bound(bp_.begin(), bp_.end(), x) - bp_.begin());
  }

  static void merge_intervals(std::vector<Interval>& iv) {
    if (iv.empty()) return;
    std::sort(iv.begin(), iv.end());
    std::size_t w = 0;
    for (std::size_t i = 1; i < iv.size(); ++i) {
      if (iv[i].first <= iv[w].second + 1) {
        iv[w].second = std::max(iv[w].second, iv[i].second);
      } else {
        iv[++w] = iv[i];
      }
    }
    iv.resize(w + 1);
  }

  static bool in_union(const std::vector<Interval>& iv, std::size_t y) {
    auto it = std::upper_bound(iv.begin(), iv.end(), Interval{y, static_cast<std::size_t>(-1)});
    return it != iv.begin() && std::prev(it)->second >= y;
  }

  std::size_t size_ = 0;
  std::vector<std::size_t> bp_;
  std::vector<std::vector<Interval>> nodes_;
};

/// Counts of covering rectangles on a fixed [1,m]^2 grid: +-1 at the four
/// corners, then 2d prefix sums. Built in O(m^2 + r), queried in O(1).
class GridStabber {
 public:
  GridStabber() = default;
  explicit GridStabber(std::size_t m) : m_(m), w_(m + 2), cells_((m + 2) * (m + 2), 0) {}
  GridStabber(const std::vector<Rect>& rects, std::size_t m) : GridStabber(m) {
    for (const auto& r : rects) add(r);
    finalize();
  }

  void add(const Rect& r) {
    if (finalized_) throw std::logic_error("grid already summed");
    if (!r.valid() || r.x1 < 1 || r.y1 < 1 || r.x2 > m_ || r.y2 > m_)
      throw std::out_of_range("rectangle outside the grid");
    cell(r.x1, r.y1) += 1;
    cell(r.x2 + 1, r.y1) -= 1;
    cell(r.x1, r.y2 + 1) -= 1;
    cell(r.x2 + 1, r.y2 + 1) += 1;
  }

  void finalize() {
    for (std::size_t x = 1; x <= m_ + 1; ++x)
      for (std::size_t y = 1; y <= m_ + 1; ++y)
        cell(x, y) += cell(x - 1, y) + cell(x, y - 1) - cell(x - 1, y - 1);
    finalized_ = true;
  }

  std::int32_t count(std::size_t x, std::size_t y) const {
    if (x < 1 || y < 1 || x > m_ || y > m_) throw std::out_of_range("point outside the grid");
    return cells_[x * w_ + y];
  }
  bool stabbed(const Point2& p) const { return count(p.x, p.y) > 0; }
  std::size_t m() const { return m_; }

 private:
  std::int32_t& cell(std::size_t x, std::size_t y) { return cells_[x * w_ + y]; }

  std::size_t m_ = 0, w_ = 0;
  std::vector<std::int32_t> cells_;
  bool finalized_ = false;
};

/// Offline stabbing for a permutation point set on [1,h]^2 and rectangles
/// whose x-intervals shrink and y-intervals grow along the list. Linear in
/// h + r. Throws std::invalid_argument when either precondition fails.
inline std::vector<bool> nested_stab_offline(std::size_t h, const std::vector<Point2>& points,
                                             const std::vector<Rect>& rects) {
  if (points.size() != h) throw std::invalid_argument("nested stabbing needs h points");
  std::vector<std::size_t> by_x(h + 1, static_cast<std::size_t>(-1)), by_y(h + 1, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < h; ++i) {
    const auto& p = points[i];
    if (p.x < 1 || p.x > h || p.y < 1 || p.y > h || by_x[p.x] != static_cast<std::size_t>(-1) ||
        by_y[p.y] != static_cast<std::size_t>(-1))
      throw std::invalid_argument("points are not a permutation pairing");
    by_x[p.x] = i;
    by_y[p.y] = i;
  }
  for (std::size_t k = 0; k < rects.size(); ++k) {
    const auto& r = rects[k];
    if (!r.valid() || r.x1 < 1 || r.y1 < 1 || r.x2 > h || r.y2 > h)
      throw std::invalid_argument("rectangle outside [1,h]^2");
    if (k > 0) {
      const auto& q = rects[k - 1];
      if (r.x1 < q.x1 || r.x2 > q.x2 || r.y1 > q.y1 || r.y2 < q.y2)
        throw std::invalid_argument("rectangles are not nested");
    }
  }
  std::vector<bool> hit(h, false);
  if (rects.empty()) return hit;

  std::vector<char> in_x(h + 1, 0);  // H in the usual description
  std::size_t xl = rects[0].x1, xr = rects[0].x2;
  for (std::size_t x = xl; x <= xr; ++x) in_x[x] = 1;
  std::size_t yl = rects[0].y1, yr = rects[0].y2;
  auto probe = [&](std::size_t y) {
    const std::size_t i = by_y[y];
    if (in_x[points[i].x]) hit[i] = true;
  };
  for (std::size_t y = yl; y <= yr; ++y) probe(y);
  for (std::size_t k = 1; k < rects.size(); ++k) {
    const auto& r = rects[k];
    for (; xl < r.x1; ++xl) in_x[xl] = 0;
    for (; xr > r.x2; --xr) in_x[xr] = 0;
    for (; yl > r.y1;) probe(--yl);
    for (; yr < r.y2;) probe(++yr);
  }
  return hit;
}

}  // namespace edsm
