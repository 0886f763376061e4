#pragma once

// Dowker-Thistlethwaite codes, Gauss codes, and the diagram-level
// operations on them (mirror, reverse, rotation, canonical form, nugatory
// crossings).
//
// Labelling conventions used throughout the library:
//   * Passages of a Gauss code are indexed 0..2c-1; the DT label of passage
//     k is k+1.
//   * DT entry i (1-based) pairs odd label 2i-1 with even label |entry|.
//     A positive entry means the odd passage goes over; a negative entry
//     means the even passage goes over.
//   * dt_to_gauss numbers crossings by their odd label (crossing i owns
//     odd label 2i-1). Gauss codes read from text or built from braids
//     number crossings 1..c in order of first passage.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdlib>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rollercoaster/error.hpp"

namespace rollercoaster {

enum class Strand : unsigned char { Over, Under };
enum class Direction : unsigned char { Forward, Backward };

constexpr Strand opposite(Strand s) noexcept {
  return s == Strand::Over ? Strand::Under : Strand::Over;
}

class DTCode {
public:
  explicit DTCode(std::vector<int> entries) : entries_(std::move(entries)) { validate(); }

  std::span<const int> entries() const noexcept { return entries_; }
  int crossings() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](std::size_t i) const { return entries_[i]; }

  bool alternating() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e > 0; }) ||
           std::all_of(entries_.begin(), entries_.end(), [](int e) { return e < 0; });
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(entries_[i]);
    }
    return out + "]";
  }

  friend bool operator==(const DTCode&, const DTCode&) = default;

  // Order used for canonical forms: absolute values first, then signs with
  // positive before negative.
  friend std::strong_ordering operator<=>(const DTCode& a, const DTCode& b) {
    const auto n = std::min(a.entries_.size(), b.entries_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = std::abs(a.entries_[i]) <=> std::abs(b.entries_[i]); c != 0) return c;
    }
    if (auto c = a.entries_.size() <=> b.entries_.size(); c != 0) return c;
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = (a.entries_[i] < 0) <=> (b.entries_[i] < 0); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

private:
  void validate() const {
    if (entries_.empty()) throw ParseError("DT code is empty");
    const int c = crossings();
    std::vector<bool> seen(static_cast<std::size_t>(c) + 1, false);
    for (int e : entries_) {
      if (e == 0) throw ParseError("zero entry in DT code");
      if (e % 2 != 0) throw ParseError("odd entry " + std::to_string(e) + " in DT code");
      const int half = std::abs(e) / 2;
      if (half > c) {
        throw ParseError("entry " + std::to_string(e) + " outside {2, ..., " + std::to_string(2 * c) + "}");
      }
      if (seen[half]) throw ParseError("duplicate absolute value " + std::to_string(std::abs(e)) + " in DT code");
      seen[half] = true;
    }
  }

  std::vector<int> entries_;
};

struct Passage {
  int crossing;
  Strand role;
  friend bool operator==(const Passage&, const Passage&) = default;
};

class GaussCode {
public:
  explicit GaussCode(std::vector<Passage> passages) : passages_(std::move(passages)) { validate(); }

  std::span<const Passage> passages() const noexcept { return passages_; }
  const Passage& operator[](std::size_t i) const { return passages_[i]; }
  int size() const noexcept { return static_cast<int>(passages_.size()); }
  int crossings() const noexcept { return size() / 2; }

  // Indices of the two passages through each crossing, first then second.
  std::vector<std::pair<int, int>> occurrences() const {
    std::vector<std::pair<int, int>> occ(static_cast<std::size_t>(crossings()) + 1, {-1, -1});
    for (int k = 0; k < size(); ++k) {
      auto& slot = occ[passages_[k].crossing];
      (slot.first < 0 ? slot.first : slot.second) = k;
    }
    return occ;
  }

  // Signed form: "+id" for an over passage, "-id" for an under passage.
  std::string str() const {
    std::string out;
    for (const auto& p : passages_) {
      if (!out.empty()) out += ' ';
      out += (p.role == Strand::Under ? "-" : "") + std::to_string(p.crossing);
    }
    return out;
  }

  friend bool operator==(const GaussCode&, const GaussCode&) = default;

private:
  void validate() const {
    if (passages_.size() < 2 || passages_.size() % 2 != 0) {
      throw ParseError("Gauss code must have an even number (>= 2) of passages");
    }
    const int c = crossings();
    std::vector<int> over(static_cast<std::size_t>(c) + 1, 0), under(static_cast<std::size_t>(c) + 1, 0);
    for (const auto& p : passages_) {
      if (p.crossing < 1 || p.crossing > c) {
        throw ParseError("crossing id " + std::to_string(p.crossing) + " outside 1.." + std::to_string(c));
      }
      ++(p.role == Strand::Over ? over : under)[p.crossing];
    }
    for (int x = 1; x <= c; ++x) {
      if (over[x] != 1 || under[x] != 1) {
        throw ParseError("crossing " + std::to_string(x) + " must appear once over and once under");
      }
    }
  }

  std::vector<Passage> passages_;
};

struct Basepoint {
  int edge = 0;  // gap just before passage `edge`
  Direction direction = Direction::Forward;
  friend bool operator==(const Basepoint&, const Basepoint&) = default;
};

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError("unbalanced bracket in " + std::string(what));
    text = trim(text.substr(1, text.size() - 2));
  } else if (!text.empty() && text.back() == ']') {
    throw ParseError("unbalanced bracket in " + std::string(what));
  }
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
    std::string_view token = text.substr(i, j - i);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError("malformed token '" + std::string(token) + "' in " + std::string(what));
    }
    values.push_back(value);
    i = j;
  }
  return values;
}

// Renumbers crossing ids 1..c in order of first passage.
inline std::vector<Passage> renumber_by_first_passage(std::vector<Passage> passages) {
  std::vector<std::pair<int, int>> map;  // old id -> new id
  auto lookup = [&](int id) {
    for (auto [o, n] : map)
      if (o == id) return n;
    map.emplace_back(id, static_cast<int>(map.size()) + 1);
    return static_cast<int>(map.size());
  };
  for (auto& p : passages) p.crossing = lookup(p.crossing);
  return passages;
}

}  // namespace detail

// Accepts "[4, 6, 2]" and "4 6 2".
inline DTCode parse_dt(std::string_view text) { return DTCode(detail::parse_int_list(text, "DT code")); }

// Signed integer form, "1 -2 3 -1 2 -3": positive = over, negative = under.
// Ids may be any positive integers; they are renumbered by first passage.
inline GaussCode parse_gauss(std::string_view text) {
  std::vector<Passage> passages;
  for (int v : detail::parse_int_list(text, "Gauss code")) {
    if (v == 0) throw ParseError("zero crossing id in Gauss code");
    passages.push_back({std::abs(v), v > 0 ? Strand::Over : Strand::Under});
  }
  return GaussCode(detail::renumber_by_first_passage(std::move(passages)));
}

inline GaussCode dt_to_gauss(const DTCode& code) {
  const int c = code.crossings();
  std::vector<Passage> passages(static_cast<std::size_t>(2 * c));
  for (int i = 0; i < c; ++i) {
    const int e = code[static_cast<std::size_t>(i)];
    const Strand odd_role = e > 0 ? Strand::Over : Strand::Under;
    passages[static_cast<std::size_t>(2 * i)] = {i + 1, odd_role};
    passages[static_cast<std::size_t>(std::abs(e) - 1)] = {i + 1, opposite(odd_role)};
  }
  return GaussCode(std::move(passages));
}

// DT code read from passage 0. Fails when some crossing is visited at two
// labels of equal parity, which never happens for a planar diagram.
inline std::optional<DTCode> try_gauss_to_dt(const GaussCode& code) {
  const int c = code.crossings();
  std::vector<int> entries(static_cast<std::size_t>(c), 0);
  const auto occ = code.occurrences();
  for (int x = 1; x <= c; ++x) {
    auto [a, b] = occ[x];
    if ((a - b) % 2 == 0) return std::nullopt;
    const int odd_index = a % 2 == 0 ? a : b;  // label = index + 1
    const int even_index = a % 2 == 0 ? b : a;
    const bool odd_over = code[static_cast<std::size_t>(odd_index)].role == Strand::Over;
    entries[static_cast<std::size_t>(odd_index / 2)] = (odd_over ? 1 : -1) * (even_index + 1);
  }
  return DTCode(std::move(entries));
}

inline DTCode gauss_to_dt(const GaussCode& code) {
  if (auto dt = try_gauss_to_dt(code)) return *dt;
  const auto occ = code.occurrences();
  for (int x = 1; x <= code.crossings(); ++x) {
    if ((occ[x].first - occ[x].second) % 2 == 0) {
      throw FramingError("crossing " + std::to_string(x) + " is visited at two " +
                         (occ[x].first % 2 == 0 ? "odd" : "even") + " labels");
    }
  }
  throw FramingError("inconsistent odd/even pairing");
}

// Passage `shift` becomes passage 0.
inline GaussCode rotate(const GaussCode& code, int shift) {
  const int n = code.size();
  shift = ((shift % n) + n) % n;
  std::vector<Passage> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(code[static_cast<std::size_t>((k + shift) % n)]);
  return GaussCode(std::move(out));
}

inline GaussCode mirror(const GaussCode& code) {
  std::vector<Passage> out(code.passages().begin(), code.passages().end());
  for (auto& p : out) p.role = opposite(p.role);
  return GaussCode(std::move(out));
}

inline GaussCode reverse(const GaussCode& code) {
  std::vector<Passage> out(code.passages().rbegin(), code.passages().rend());
  return GaussCode(std::move(out));
}

// Least DT code over every starting passage and both traversal directions
// (and over the mirror image too when `up_to_mirror`).
inline DTCode canonical_dt(const GaussCode& code, bool up_to_mirror = false) {
  std::optional<DTCode> best;
  auto consider = [&](const GaussCode& g) {
    for (int k = 0; k < g.size(); ++k) {
      if (auto dt = try_gauss_to_dt(rotate(g, k)); dt && (!best || *dt < *best)) best = std::move(dt);
    }
  };
  consider(code);
  consider(reverse(code));
  if (up_to_mirror) {
    consider(mirror(code));
    consider(reverse(mirror(code)));
  }
  if (!best) throw FramingError("no starting point gives a consistent DT framing");
  return *best;
}

// Crossing x is nugatory iff the ids strictly between its two passages
// each occur there zero or two times.
inline std::vector<int> nugatory_crossings(const GaussCode& code) {
  std::vector<int> result;
  const auto occ = code.occurrences();
  std::vector<int> count(static_cast<std::size_t>(code.crossings()) + 1);
  for (int x = 1; x <= code.crossings(); ++x) {
    std::fill(count.begin(), count.end(), 0);
    for (int k = occ[x].first + 1; k < occ[x].second; ++k) ++count[code[static_cast<std::size_t>(k)].crossing];
    if (std::all_of(count.begin(), count.end(), [](int n) { return n != 1; })) result.push_back(x);
  }
  return result;
}

inline bool is_reduced(const GaussCode& code) { return nugatory_crossings(code).empty(); }

// A diagram is composite when some proper cyclic run of passages, holding at
// least one crossing and missing at least one, contains both passages of
// every crossing it meets. Nugatory crossings make a diagram composite too.
inline bool is_prime_diagram(const GaussCode& code) {
  const int n = code.size();
  std::vector<int> count(static_cast<std::size_t>(code.crossings()) + 1);
  for (int start = 0; start < n; ++start) {
    std::fill(count.begin(), count.end(), 0);
    int odd = 0;  // crossings seen once so far
    for (int len = 1; len < n - 1; ++len) {
      const int x = code[static_cast<std::size_t>((start + len - 1) % n)].crossing;
      odd += ++count[x] == 1 ? 1 : -1;
      if (odd == 0) return false;
    }
  }
  return true;
}

// One bracketed code per line; '#' starts a comment; blank lines skipped.
inline std::vector<DTCode> read_dt_lines(std::istream& in) {
  std::vector<DTCode> codes;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      codes.push_back(parse_dt(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return codes;
}

}  // namespace rollercoaster
