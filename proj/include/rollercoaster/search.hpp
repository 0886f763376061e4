#pragma once

// Enumeration of reduced alternating knot diagrams by DT code, and the
// diagram-level minimum warping degree over them.
//
// An alternating diagram has an all-positive DT code. Codes are emitted in
// canonical form (least over starting point, direction and mirror image),
// so each diagram class appears once.

#include <optional>
#include <vector>

#include "rollercoaster/codes.hpp"
#include "rollercoaster/embed.hpp"
#include "rollercoaster/warp.hpp"

namespace rollercoaster {

inline constexpr int kDefaultSearchCap = 10;

namespace detail {

inline void check_search_range(int c, int cap) {
  if (c < 3) throw InputError("crossing number must be at least 3");
  if (c > cap) throw CapExceeded("crossing number " + std::to_string(c) + " above search cap " + std::to_string(cap));
}

}  // namespace detail

// Calls `emit` for every canonical reduced realizable alternating code with
// c crossings, in increasing canonical order.
template <typename Fn>
void for_each_alternating(int c, Fn&& emit, int cap = kDefaultSearchCap) {
  detail::check_search_range(c, cap);
  const int labels = 2 * c;
  std::vector<int> entries(static_cast<std::size_t>(c), 0);
  std::vector<char> used(static_cast<std::size_t>(labels) + 1, 0);
  // Assign even labels to odd labels in order; the lexicographic order of
  // the recursion is the canonical order on all-positive codes.
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == c) {
      DTCode code(entries);
      const GaussCode gauss = dt_to_gauss(code);
      if (!is_reduced(gauss)) return;
      if (canonical_dt(gauss, true) != code) return;
      if (!planar_rotations(gauss)) return;
      emit(code);
      return;
    }
    const int odd = 2 * i + 1;
    for (int even = 2; even <= labels; even += 2) {
      if (used[static_cast<std::size_t>(even)]) continue;
      // Adjacent labels at one crossing make a kink.
      if (even == odd + 1 || even == odd - 1 || (odd == 1 && even == labels)) continue;
      used[static_cast<std::size_t>(even)] = 1;
      entries[static_cast<std::size_t>(i)] = even;
      self(self, i + 1);
      used[static_cast<std::size_t>(even)] = 0;
    }
  };
  recurse(recurse, 0);
}

inline std::vector<DTCode> enumerate_alternating(int c, int cap = kDefaultSearchCap) {
  std::vector<DTCode> out;
  for_each_alternating(c, [&](const DTCode& code) { out.push_back(code); }, cap);
  return out;
}

struct MinWarpWitness {
  int value = 0;
  DTCode witness{std::vector<int>{2}};
  int diagrams = 0;  // number of canonical diagrams examined
};

// Minimum over reduced alternating c-crossing diagrams of their minimal
// warping degree. This is a diagram-level quantity: it bounds the knot-level
// minimum ascending number from above.
inline MinWarpWitness a_min_warp(int c, int cap = kDefaultSearchCap) {
  std::optional<MinWarpWitness> best;
  int count = 0;
  for_each_alternating(
      c,
      [&](const DTCode& code) {
        ++count;
        const int d = min_warp(dt_to_gauss(code)).degree;
        if (!best || d < best->value) best = MinWarpWitness{d, code, 0};
      },
      cap);
  if (!best) throw Error("no reduced alternating diagram with " + std::to_string(c) + " crossings");
  best->diagrams = count;
  return *best;
}

struct ConjectureRow {
  int crossings = 0;
  int a_min = 0;
  int predicted = 0;  // ceil(c / 4)
  bool match = false;
  DTCode witness{std::vector<int>{2}};
  int diagrams = 0;
};

inline std::vector<ConjectureRow> conjecture_report(int c_max, int cap = kDefaultSearchCap) {
  detail::check_search_range(c_max, cap);
  std::vector<ConjectureRow> rows;
  for (int c = 3; c <= c_max; ++c) {
    const auto w = a_min_warp(c, cap);
    const int predicted = (c + 3) / 4;
    rows.push_back({c, w.value, predicted, w.value == predicted, w.witness, w.diagrams});
  }
  return rows;
}

}  // namespace rollercoaster
