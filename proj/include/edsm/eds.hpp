#pragma once

// Elastic-degenerate text model: symbols, patterns, segments, the `.eds`
// text format, alphabet remapping and reversal.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edsm {

using Symbol = std::uint32_t;
using SymbolString = std::vector<Symbol>;

/// Symbols at or above this value are reserved for separators inside
/// concatenated backing texts (see lce.hpp).
inline constexpr Symbol kSeparatorBase = 0x80000000u;

inline SymbolString to_symbols(std::string_view s) {
  SymbolString out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(c);
  return out;
}

inline std::string to_bytes(std::span<const Symbol> s) {
  std::string out;
  out.reserve(s.size());
  for (Symbol c : s) out.push_back(static_cast<char>(c & 0xFFu));
  return out;
}

inline SymbolString reversed(std::span<const Symbol> s) {
  return SymbolString(s.rbegin(), s.rend());
}

class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(SymbolString letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("pattern must be non-empty");
  }
  static Pattern from_string(std::string_view s) { return Pattern(to_symbols(s)); }

  std::size_t size() const { return letters_.size(); }
  Symbol operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Symbol> letters() const { return letters_; }
  const SymbolString& str() const { return letters_; }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  SymbolString letters_;
};

/// One set of alternatives. Strings are kept sorted and unique, which is
/// the canonical form used by serialization.
class Segment {
 public:
  Segment() = default;
  explicit Segment(std::vector<SymbolString> strings) : strings_(std::move(strings)) {
    if (strings_.empty()) throw std::invalid_argument("segment must hold at least one string");
    std::sort(strings_.begin(), strings_.end());
    strings_.erase(std::unique(strings_.begin(), strings_.end()), strings_.end());
  }
  static Segment from_strings(std::initializer_list<std::string_view> alts) {
    std::vector<SymbolString> v;
    for (auto a : alts) v.push_back(to_symbols(a));
    return Segment(std::move(v));
  }

  const std::vector<SymbolString>& strings() const { return strings_; }
  std::size_t count() const { return strings_.size(); }
  const SymbolString& operator[](std::size_t i) const { return strings_[i]; }

  bool has_empty() const { return !strings_.empty() && strings_.front().empty(); }

  /// Total length with the empty string counted as 1.
  std::size_t size_contribution() const {
    std::size_t n = 0;
    for (const auto& s : strings_) n += s.empty() ? 1 : s.size();
    return n;
  }

  std::size_t max_length() const {
    std::size_t n = 0;
    for (const auto& s : strings_) n = std::max(n, s.size());
    return n;
  }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  std::vector<SymbolString> strings_;
};

class EDString {
 public:
  EDString() = default;
  explicit EDString(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw std::invalid_argument("ED string must hold at least one segment");
    for (const auto& s : segments_) size_ += s.size_contribution();
  }

  std::size_t length() const { return segments_.size(); }
  std::size_t size() const { return size_; }
  const Segment& operator[](std::size_t i) const { return segments_[i]; }
  const std::vector<Segment>& segments() const { return segments_; }

  /// Segments [0, count) as a standalone text.
  EDString prefix(std::size_t count) const {
    return EDString(std::vector<Segment>(segments_.begin(), segments_.begin() + static_cast<std::ptrdiff_t>(count)));
  }

  friend bool operator==(const EDString& a, const EDString& b) { return a.segments_ == b.segments_; }

 private:
  std::vector<Segment> segments_;
  std::size_t size_ = 0;
};

enum class MatchKind : std::uint8_t { Exact = 0, Hamming1 = 1, Edit1 = 2 };

inline std::string_view to_string(MatchKind k) {
  switch (k) {
    case MatchKind::Exact: return "exact";
    case MatchKind::Hamming1: return "hamming1";
    case MatchKind::Edit1: return "edit1";
  }
  return "?";
}

struct OccurrenceReport {
  std::size_t end_segment = 0;  // 1-based
  MatchKind kind = MatchKind::Exact;
  friend bool operator==(const OccurrenceReport&, const OccurrenceReport&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const OccurrenceReport& r) {
  return os << r.end_segment << '\t' << to_string(r.kind);
}

// ---------------------------------------------------------------------------
// .eds format

class EdsParseError : public std::runtime_error {
 public:
  EdsParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("eds syntax error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {
inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
inline bool is_letter(char c) { return c != '{' && c != '}' && c != ',' && !is_space(c); }
}  // namespace detail

/// text := unit+ ; unit := run | group ; run := letter+ ;
/// group := '{' alt (',' alt)* '}' ; alt := letter*  (empty alt is epsilon)
inline EDString parse_eds(std::string_view bytes) {
  std::vector<Segment> segments;
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    char c = bytes[i];
    if (detail::is_space(c)) {
      ++i;
      continue;
    }
    if (c == '}' || c == ',') throw EdsParseError(i, std::string("unexpected '") + c + "'");
    if (c == '{') {
      const std::size_t open = i++;
      std::vector<SymbolString> alts(1);
      bool closed = false;
      while (i < n) {
        char d = bytes[i];
        if (d == '}') {
          closed = true;
          ++i;
          break;
        }
        if (d == '{') throw EdsParseError(i, "nested '{'");
        if (d == ',') {
          alts.emplace_back();
        } else if (!detail::is_space(d)) {
          alts.back().push_back(static_cast<unsigned char>(d));
        }
        ++i;
      }
      if (!closed) throw EdsParseError(open, "unbalanced '{'");
      if (alts.size() == 1 && alts[0].empty()) throw EdsParseError(open, "empty segment '{}'");
      segments.emplace_back(std::move(alts));
      continue;
    }
    SymbolString run;
    while (i < n && detail::is_letter(bytes[i])) run.push_back(static_cast<unsigned char>(bytes[i++]));
    segments.emplace_back(std::vector<SymbolString>{std::move(run)});
  }
  if (segments.empty()) throw EdsParseError(0, "empty text");
  return EDString(std::move(segments));
}

/// Canonical serialization: every segment braced, alternatives sorted, and
/// a lone empty string written as "{,}".
inline std::string to_eds(const EDString& text) {
  std::string out;
  for (const auto& seg : text.segments()) {
    out.push_back('{');
    if (seg.count() == 1 && seg[0].empty()) {
      out.push_back(',');
    } else {
      for (std::size_t k = 0; k < seg.count(); ++k) {
        if (k) out.push_back(',');
        out += to_bytes(seg[k]);
      }
    }
    out.push_back('}');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Alphabet remapping and reversal

struct RemappedInput {
  Pattern pattern;
  EDString text;
  std::map<Symbol, Symbol> ranks;  // original pattern letter -> rank in [1, m]
  Symbol sentinel = 0;             // m + 1
};

/// Pattern letters get their rank among the distinct pattern letters;
/// every other text letter becomes the sentinel m + 1.
inline RemappedInput remap_alphabet(const Pattern& pattern, const EDString& text) {
  RemappedInput out;
  const auto m = static_cast<Symbol>(pattern.size());
  SymbolString distinct(pattern.letters().begin(), pattern.letters().end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t r = 0; r < distinct.size(); ++r) out.ranks[distinct[r]] = static_cast<Symbol>(r + 1);
  out.sentinel = m + 1;

  auto map_string = [&](std::span<const Symbol> s) {
    SymbolString t;
    t.reserve(s.size());
    for (Symbol c : s) {
      auto it = out.ranks.find(c);
      t.push_back(it == out.ranks.end() ? out.sentinel : it->second);
    }
    return t;
  };
  out.pattern = Pattern(map_string(pattern.letters()));
  std::vector<Segment> segs;
  segs.reserve(text.length());
  for (const auto& seg : text.segments()) {
    std::vector<SymbolString> alts;
    alts.reserve(seg.count());
    for (const auto& s : seg.strings()) alts.push_back(map_string(s));
    segs.emplace_back(std::move(alts));
  }
  out.text = EDString(std::move(segs));
  return out;
}

inline Pattern reverse(const Pattern& p) { return Pattern(reversed(p.letters())); }

inline Segment reverse(const Segment& seg) {
  std::vector<SymbolString> alts;
  alts.reserve(seg.count());
  for (const auto& s : seg.strings()) alts.push_back(reversed(s));
  return Segment(std::move(alts));
}

inline EDString reverse(const EDString& text) {
  std::vector<Segment> segs;
  segs.reserve(text.length());
  for (auto it = text.segments().rbegin(); it != text.segments().rend(); ++it) segs.push_back(reverse(*it));
  return EDString(std::move(segs));
}

}  // namespace edsm
