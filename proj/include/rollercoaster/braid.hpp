#pragma once

// Braid words and their closures.
//
// Positions are numbered 1 (top) to n (bottom) and the braid is read left
// to right. In a positive letter s_i the strand entering at position i
// passes over the strand entering at position i+1; a negative letter
// swaps the roles. The closure joins each right endpoint to the left
// endpoint at the same position.
//
// Strands of the braid diagram (the n arcs running from the left edge to
// the right edge) are identified by their starting position.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rollercoaster/codes.hpp"
#include "rollercoaster/warp.hpp"

namespace rollercoaster {

class BraidWord {
public:
  BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw ParseError("braid needs at least one strand");
    for (int l : letters_) {
      if (l == 0) throw ParseError("generator index 0 is not allowed");
      if (std::abs(l) >= strands_) {
        throw ParseError("generator " + std::to_string(std::abs(l)) + " needs at least " +
                         std::to_string(std::abs(l) + 1) + " strands, have " + std::to_string(strands_));
      }
    }
  }

  int strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  bool positive() const noexcept {
    return std::all_of(letters_.begin(), letters_.end(), [](int l) { return l > 0; });
  }

  std::string str() const {
    std::string out;
    for (int l : letters_) {
      if (!out.empty()) out += ' ';
      out += std::to_string(l);
    }
    return out.empty() ? "(empty)" : out;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_;
  std::vector<int> letters_;
};

// Accepts "1 2 -1", "[1, 2, -1]" and "s1 s2 s1^-1" (also s1^3, s1^{-1}).
// Without `strands` the strand count is the largest index + 1.
inline BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt) {
  std::string cleaned;
  for (char ch : text) cleaned += (ch == ',' || ch == '[' || ch == ']' || ch == '{' || ch == '}') ? ' ' : ch;
  std::vector<int> letters;
  std::size_t i = 0;
  auto parse_int = [](std::string_view s, std::string_view token) {
    int v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
      throw ParseError("malformed braid token '" + std::string(token) + "'");
    }
    return v;
  };
  while (i < cleaned.size()) {
    if (std::isspace(static_cast<unsigned char>(cleaned[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cleaned.size() && !std::isspace(static_cast<unsigned char>(cleaned[j]))) ++j;
    std::string_view token(cleaned.data() + i, j - i);
    i = j;
    if (token.front() == 's' || token.front() == 'S') {
      std::string_view body = token.substr(1);
      int power = 1;
      if (auto caret = body.find('^'); caret != std::string_view::npos) {
        power = parse_int(body.substr(caret + 1), token);
        body = body.substr(0, caret);
      }
      const int gen = parse_int(body, token);
      if (gen < 0) throw ParseError("malformed braid token '" + std::string(token) + "'");
      if (gen == 0) throw ParseError("generator index 0 is not allowed");
      if (power == 0) throw ParseError("zero power in braid token '" + std::string(token) + "'");
      for (int k = 0; k < std::abs(power); ++k) letters.push_back(power > 0 ? gen : -gen);
    } else {
      const int v = parse_int(token, token);
      if (v == 0) throw ParseError("generator index 0 is not allowed");
      letters.push_back(v);
    }
  }
  int n = 1;
  for (int l : letters) n = std::max(n, std::abs(l) + 1);
  if (strands) {
    if (*strands < n) {
      throw ParseError("generator index " + std::to_string(n - 1) + " requires more than " +
                       std::to_string(*strands) + " strands");
    }
    n = *strands;
  }
  return BraidWord(n, std::move(letters));
}

// end_position[s] for the strand starting at position s (1-based; index 0 unused).
inline std::vector<int> braid_permutation(const BraidWord& word) {
  const int n = word.strands();
  std::vector<int> strand_at(static_cast<std::size_t>(n) + 1);
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (int l : word.letters()) std::swap(strand_at[std::abs(l)], strand_at[std::abs(l) + 1]);
  std::vector<int> end(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 1; p <= n; ++p) end[strand_at[p]] = p;
  return end;
}

inline int closure_components(const BraidWord& word) {
  const auto end = braid_permutation(word);
  const int n = word.strands();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int cycles = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int p = s; !seen[p]; p = end[p]) seen[p] = 1;
  }
  return cycles;
}

inline void require_knot(const BraidWord& word) {
  if (const int k = closure_components(word); k != 1) {
    throw NotAKnot("closure has " + std::to_string(k) + " components");
  }
}

inline void require_positive(const BraidWord& word) {
  if (!word.positive()) throw PreconditionError("braid word is not positive");
}

struct ClosureDiagram {
  GaussCode code;
  Basepoint base;                       // top-left of position 1, heading right
  std::vector<int> letter_of_crossing;  // crossing id -> letter index (index 0 unused)
};

inline ClosureDiagram closure_gauss(const BraidWord& word) {
  require_knot(word);
  if (word.length() == 0) throw PreconditionError("closure has no crossings");
  struct Visit {
    int letter;
    Strand role;
  };
  std::vector<Visit> visits;
  visits.reserve(static_cast<std::size_t>(2 * word.length()));
  int pos = 1;
  do {
    for (int k = 0; k < word.length(); ++k) {
      const int l = word.letters()[static_cast<std::size_t>(k)];
      const int i = std::abs(l);
      if (pos == i) {
        visits.push_back({k, l > 0 ? Strand::Over : Strand::Under});
        pos = i + 1;
      } else if (pos == i + 1) {
        visits.push_back({k, l > 0 ? Strand::Under : Strand::Over});
        pos = i;
      }
    }
  } while (pos != 1);

  std::vector<int> id_of_letter(static_cast<std::size_t>(word.length()), 0);
  std::vector<int> letter_of_crossing{-1};
  std::vector<Passage> passages;
  passages.reserve(visits.size());
  for (const auto& v : visits) {
    auto& id = id_of_letter[static_cast<std::size_t>(v.letter)];
    if (id == 0) {
      letter_of_crossing.push_back(v.letter);
      id = static_cast<int>(letter_of_crossing.size()) - 1;
    }
    passages.push_back({id, v.role});
  }
  return {GaussCode(std::move(passages)), Basepoint{0, Direction::Forward}, std::move(letter_of_crossing)};
}

struct ABCounts {
  int above = 0;  // |A|: crossings first met from above
  int below = 0;  // |B|: crossings first met from below
  friend bool operator==(const ABCounts&, const ABCounts&) = default;
};

// Counts from the roller-coaster run started at the top-left of the braid.
inline ABCounts ab_counts(const BraidWord& word) {
  require_positive(word);
  require_knot(word);
  if (word.length() == 0) return {};
  const auto closure = closure_gauss(word);
  const auto w = warp_from(closure.code, closure.base);
  return {static_cast<int>(w.above.size()), static_cast<int>(w.below.size())};
}

// (C - n + 1) / 2 for a positive braid with knot closure.
inline int positive_unknotting(const BraidWord& word) {
  require_positive(word);
  require_knot(word);
  const int twice = word.length() - word.strands() + 1;
  if (twice < 0 || twice % 2 != 0) {
    throw Error("parity violation: C - n + 1 = " + std::to_string(twice) + " for a knot closure");
  }
  return twice / 2;
}

struct Bigon {
  int first = 0;   // letter positions, first < second
  int second = 0;
  std::pair<int, int> strands;  // strand ids (starting positions), smaller first
  friend bool operator==(const Bigon&, const Bigon&) = default;
};

namespace detail {

// Strand ids meeting at each letter, as (upper, lower) at entry.
inline std::vector<std::pair<int, int>> letter_strands(const BraidWord& word) {
  std::vector<int> strand_at(static_cast<std::size_t>(word.strands()) + 2);
  std::iota(strand_at.begin(), strand_at.end(), 0);
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(word.length()));
  for (int l : word.letters()) {
    const int i = std::abs(l);
    out.emplace_back(strand_at[i], strand_at[i + 1]);
    std::swap(strand_at[i], strand_at[i + 1]);
  }
  return out;
}

inline std::pair<int, int> unordered(std::pair<int, int> p) {
  return p.first < p.second ? p : std::pair{p.second, p.first};
}

}  // namespace detail

// Consecutive crossings of one strand pair bound a bigon. The bigon of
// smallest letter span contains no other bigon; ties go to the leftmost.
inline std::optional<Bigon> find_innermost_bigon(const BraidWord& word) {
  require_positive(word);
  const auto meet = detail::letter_strands(word);
  std::optional<Bigon> best;
  for (int p = 0; p < word.length(); ++p) {
    const auto pair = detail::unordered(meet[static_cast<std::size_t>(p)]);
    for (int q = p + 1; q < word.length(); ++q) {
      if (detail::unordered(meet[static_cast<std::size_t>(q)]) != pair) continue;
      if (!best || q - p < best->second - best->first) best = Bigon{p, q, pair};
      break;
    }
  }
  return best;
}

// Oriented smoothing of a braid crossing is deletion of its letter.
inline BraidWord smooth_bigon(const BraidWord& word, const Bigon& bigon) {
  if (bigon.first < 0 || bigon.second >= word.length() || bigon.first >= bigon.second) {
    throw PreconditionError("stale bigon: letter positions out of range");
  }
  const auto meet = detail::letter_strands(word);
  const auto want = detail::unordered(bigon.strands);
  if (detail::unordered(meet[static_cast<std::size_t>(bigon.first)]) != want ||
      detail::unordered(meet[static_cast<std::size_t>(bigon.second)]) != want) {
    throw PreconditionError("stale bigon: strands do not cross at both letters");
  }
  std::vector<int> letters;
  for (int k = 0; k < word.length(); ++k) {
    if (k != bigon.first && k != bigon.second) letters.push_back(word.letters()[static_cast<std::size_t>(k)]);
  }
  return BraidWord(word.strands(), std::move(letters));
}

struct RemovalCertificate {
  int resolved_letter = 0;  // position of the resolved crossing in the input word
  int removed_strand = 0;   // starting position of the deleted component
  int m = 0;                // crossings along the deleted component, per role
};

// Bigon-free step of the induction: find the first traversal strand that
// rises, resolve its crossing with the previous (falling) strand, and delete
// the closed component that resolution splits off.
inline std::pair<BraidWord, RemovalCertificate> remove_first_ascending_strand(const BraidWord& word) {
  require_positive(word);
  require_knot(word);
  if (word.strands() < 2) throw PreconditionError("need at least two strands to remove one");
  if (find_innermost_bigon(word)) throw PreconditionError("bigon present");

  const int n = word.strands();
  const auto end = braid_permutation(word);
  int prev = 1;
  int rising = end[1];
  while (end[rising] > rising) {
    prev = rising;
    rising = end[rising];
  }
  // prev falls from its start to `rising`, which then climbs above it, so
  // the two cross exactly once in a bigon-free word.
  const auto meet = detail::letter_strands(word);
  int resolved = -1;
  for (int k = 0; k < word.length(); ++k) {
    if (detail::unordered(meet[static_cast<std::size_t>(k)]) == detail::unordered({prev, rising})) {
      resolved = k;
      break;
    }
  }
  if (resolved < 0) throw Error("falling and rising strands never cross");

  std::vector<int> resolved_letters;
  for (int k = 0; k < word.length(); ++k)
    if (k != resolved) resolved_letters.push_back(word.letters()[static_cast<std::size_t>(k)]);

  // Follow the component through the starting point of `rising`.
  int pos = rising;
  int over = 0, under = 0;
  std::vector<int> kept;
  for (int l : resolved_letters) {
    const int i = std::abs(l);
    if (pos == i) {
      ++over;
      pos = i + 1;
    } else if (pos == i + 1) {
      ++under;
      pos = i;
    } else {
      kept.push_back(pos < i ? i - 1 : i);
    }
  }
  if (pos != rising || over != under) throw Error("resolved component is not a closed strand");
  return {BraidWord(n - 1, std::move(kept)), RemovalCertificate{resolved, rising, over}};
}

struct ReductionStep {
  enum class Kind { Start, SmoothBigon, RemoveStrand };
  Kind kind = Kind::Start;
  BraidWord word{1, {}};
  ABCounts counts;
  std::optional<Bigon> bigon;
  std::optional<RemovalCertificate> removal;
};

// Runs the induction to its base case (C = n - 1), recording each step.
inline std::vector<ReductionStep> reduce(const BraidWord& word) {
  std::vector<ReductionStep> steps;
  steps.push_back({ReductionStep::Kind::Start, word, ab_counts(word), std::nullopt, std::nullopt});
  BraidWord current = word;
  while (current.length() > current.strands() - 1) {
    if (auto bigon = find_innermost_bigon(current)) {
      current = smooth_bigon(current, *bigon);
      steps.push_back({ReductionStep::Kind::SmoothBigon, current, ab_counts(current), bigon, std::nullopt});
    } else {
      auto [next, cert] = remove_first_ascending_strand(current);
      current = std::move(next);
      steps.push_back({ReductionStep::Kind::RemoveStrand, current, ab_counts(current), std::nullopt, cert});
    }
  }
  return steps;
}

// Seeded generator of positive braid words with knot closure in which every
// generator occurs. Strand count is drawn from [2, n_max] and the length from
// [n-1, c_max] with the parity a knot closure needs.
inline BraidWord random_positive_braid_knot(int n_max, int c_max, std::uint64_t seed) {
  if (n_max < 2 || c_max < n_max - 1) {
    throw PreconditionError("infeasible bounds: need n_max >= 2 and c_max >= n_max - 1");
  }
  std::mt19937_64 rng(seed);
  auto draw = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = draw(2, n_max);
  const int slots = (c_max - (n - 1)) / 2;
  const int length = n - 1 + 2 * draw(0, slots);
  for (;;) {
    std::vector<int> letters(static_cast<std::size_t>(n - 1));
    std::iota(letters.begin(), letters.end(), 1);
    std::shuffle(letters.begin(), letters.end(), rng);
    int attempts = 0;
    while (static_cast<int>(letters.size()) < length && attempts < 1000) {
      ++attempts;
      auto trial = letters;
      for (int k = 0; k < 2; ++k) {
        const int at = draw(0, static_cast<int>(trial.size()));
        trial.insert(trial.begin() + at, draw(1, n - 1));
      }
      if (closure_components(BraidWord(n, trial)) == 1) letters = std::move(trial);
    }
    if (static_cast<int>(letters.size()) == length) return BraidWord(n, std::move(letters));
  }
}

}  // namespace rollercoaster
