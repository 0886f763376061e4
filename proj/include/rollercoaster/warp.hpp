#pragma once

// Warping degree and the roller-coaster algorithm.
//
// A basepoint sits on an edge: edge e is the gap just before passage e.
// Travelling Forward from edge e visits passages e, e+1, ...; travelling
// Backward visits e-1, e-2, ... . A crossing is "below" when its first
// visited passage is an under passage; those are the crossings the
// roller-coaster algorithm changes.

#include <algorithm>
#include <vector>

#include "rollercoaster/codes.hpp"

namespace rollercoaster {

struct WarpResult {
  Basepoint basepoint;
  std::vector<int> below;  // crossing ids first met from below, ascending
  std::vector<int> above;  // crossing ids first met from above, ascending
  int degree = 0;          // == below.size()
};

namespace detail {

// Visits every passage once, in traversal order from `base`.
template <typename Fn>
void traverse(const GaussCode& code, Basepoint base, Fn&& visit) {
  const int n = code.size();
  const int start = ((base.edge % n) + n) % n;
  for (int step = 0; step < n; ++step) {
    const int k = base.direction == Direction::Forward ? (start + step) % n : (start - 1 - step + 2 * n) % n;
    visit(k, code[static_cast<std::size_t>(k)]);
  }
}

inline int warp_degree(const GaussCode& code, Basepoint base, std::vector<char>& seen) {
  seen.assign(static_cast<std::size_t>(code.crossings()) + 1, 0);
  int degree = 0;
  traverse(code, base, [&](int, const Passage& p) {
    if (seen[p.crossing]) return;
    seen[p.crossing] = 1;
    degree += p.role == Strand::Under;
  });
  return degree;
}

}  // namespace detail

inline WarpResult warp_from(const GaussCode& code, Basepoint base) {
  if (base.edge < 0 || base.edge >= code.size()) throw InputError("basepoint edge out of range");
  WarpResult result{base, {}, {}, 0};
  std::vector<char> seen(static_cast<std::size_t>(code.crossings()) + 1, 0);
  detail::traverse(code, base, [&](int, const Passage& p) {
    if (seen[p.crossing]) return;
    seen[p.crossing] = 1;
    (p.role == Strand::Under ? result.below : result.above).push_back(p.crossing);
  });
  std::sort(result.below.begin(), result.below.end());
  std::sort(result.above.begin(), result.above.end());
  result.degree = static_cast<int>(result.below.size());
  return result;
}

// Degree at each of the 2c basepoints, in edge order.
inline std::vector<int> warp_profile(const GaussCode& code, Direction direction) {
  std::vector<int> profile;
  profile.reserve(static_cast<std::size_t>(code.size()));
  std::vector<char> seen;
  for (int e = 0; e < code.size(); ++e) profile.push_back(detail::warp_degree(code, {e, direction}, seen));
  return profile;
}

struct MinWarp {
  int degree;
  WarpResult witness;
};

// Minimum over every edge and both directions. Ties go to the smallest
// edge, Forward before Backward.
inline MinWarp min_warp(const GaussCode& code) {
  std::vector<char> seen;
  Basepoint best{0, Direction::Forward};
  int best_degree = code.crossings() + 1;
  for (int e = 0; e < code.size(); ++e) {
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      const int deg = detail::warp_degree(code, {e, d}, seen);
      if (deg < best_degree) {
        best_degree = deg;
        best = {e, d};
      }
    }
  }
  return {best_degree, warp_from(code, best)};
}

// Changes every crossing first met from below; the result is descending
// from `base`.
inline GaussCode apply_roller_coaster(const GaussCode& code, Basepoint base) {
  const WarpResult w = warp_from(code, base);
  std::vector<char> flip(static_cast<std::size_t>(code.crossings()) + 1, 0);
  for (int x : w.below) flip[x] = 1;
  std::vector<Passage> out(code.passages().begin(), code.passages().end());
  for (auto& p : out)
    if (flip[p.crossing]) p.role = opposite(p.role);
  return GaussCode(std::move(out));
}

}  // namespace rollercoaster
