#pragma once

// Planar diagrams: realization of DT codes and braid-closure diagrams.
//
// Edge k of a diagram with c crossings runs from passage k to passage k+1
// (mod 2c). Each crossing lists its four edge ends counterclockwise,
// starting with the incoming under edge, so the under strand occupies slots
// 0 -> 2 and the over strand slots 1 and 3. The crossing is positive when
// the over strand leaves through slot 1.

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rollercoaster/braid.hpp"
#include "rollercoaster/codes.hpp"

namespace rollercoaster {

struct PDCrossing {
  std::array<int, 4> edges{};
  int sign = 1;

  static constexpr std::array<int, 2> over_slots() noexcept { return {1, 3}; }
  int over_in_slot() const noexcept { return sign > 0 ? 3 : 1; }
  int over_out_slot() const noexcept { return sign > 0 ? 1 : 3; }
  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

class PlanarDiagram {
public:
  PlanarDiagram() = default;  // the 0-crossing unknot
  explicit PlanarDiagram(std::vector<PDCrossing> crossings) : crossings_(std::move(crossings)) { validate(); }

  const std::vector<PDCrossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return 2 * crossing_count(); }

  std::string str() const {
    std::string out;
    for (const auto& x : crossings_) {
      if (!out.empty()) out += ' ';
      out += "X[" + std::to_string(x.edges[0]) + "," + std::to_string(x.edges[1]) + "," + std::to_string(x.edges[2]) +
             "," + std::to_string(x.edges[3]) + "]";
    }
    return out.empty() ? "(unknot)" : out;
  }

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

private:
  void validate() const {
    const int m = edge_count();
    std::vector<int> uses(static_cast<std::size_t>(m), 0);
    for (const auto& x : crossings_) {
      for (int e : x.edges) {
        if (e < 0 || e >= m) throw InputError("edge id " + std::to_string(e) + " out of range");
        ++uses[static_cast<std::size_t>(e)];
      }
      if (x.sign != 1 && x.sign != -1) throw InputError("crossing sign must be +1 or -1");
      if (x.edges[2] != (x.edges[0] + 1) % m) throw InputError("under strand is not continuous");
      if (x.edges[x.over_out_slot()] != (x.edges[x.over_in_slot()] + 1) % m) {
        throw InputError("over strand inconsistent with crossing sign");
      }
    }
    for (int e = 0; e < m; ++e) {
      if (uses[static_cast<std::size_t>(e)] != 2) throw InputError("edge " + std::to_string(e) + " must appear twice");
    }
  }

  std::vector<PDCrossing> crossings_;
};

inline int writhe(const PlanarDiagram& pd) {
  int w = 0;
  for (const auto& x : pd.crossings()) w += x.sign;
  return w;
}

// Number of faces of the embedded 4-valent graph given by the rotations.
inline int face_count(const PlanarDiagram& pd) {
  const int c = pd.crossing_count();
  if (c == 0) return 2;
  const int darts = 4 * c;
  std::vector<int> partner(static_cast<std::size_t>(darts), -1);
  std::vector<int> first_end(static_cast<std::size_t>(pd.edge_count()), -1);
  for (int x = 0; x < c; ++x) {
    for (int s = 0; s < 4; ++s) {
      const int d = 4 * x + s;
      const int e = pd.crossings()[static_cast<std::size_t>(x)].edges[static_cast<std::size_t>(s)];
      auto& other = first_end[static_cast<std::size_t>(e)];
      if (other < 0) {
        other = d;
      } else {
        partner[static_cast<std::size_t>(d)] = other;
        partner[static_cast<std::size_t>(other)] = d;
      }
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(darts), 0);
  int faces = 0;
  for (int d0 = 0; d0 < darts; ++d0) {
    if (seen[static_cast<std::size_t>(d0)]) continue;
    ++faces;
    for (int d = d0; !seen[static_cast<std::size_t>(d)];) {
      seen[static_cast<std::size_t>(d)] = 1;
      const int arrive = partner[static_cast<std::size_t>(d)];
      d = 4 * (arrive / 4) + (arrive % 4 + 1) % 4;
    }
  }
  return faces;
}

// Euler characteristic of the sphere: V - E + F = c - 2c + F = 2.
inline bool is_planar(const PlanarDiagram& pd) { return face_count(pd) == pd.crossing_count() + 2; }

// Diagram from a Gauss code and one rotation bit per crossing (index = id-1).
// With passages p < q through a crossing, bit 0 puts the ends in the
// counterclockwise order (in_p, in_q, out_p, out_q), bit 1 in the order
// (in_p, out_q, out_p, in_q).
inline PlanarDiagram diagram_from_rotations(const GaussCode& code, const std::vector<char>& bits) {
  const int m = code.size();
  const auto occ = code.occurrences();
  std::vector<PDCrossing> out(static_cast<std::size_t>(code.crossings()));
  for (int x = 1; x <= code.crossings(); ++x) {
    const auto [p, q] = occ[x];
    const int in_p = (p - 1 + m) % m, out_p = p, in_q = (q - 1 + m) % m, out_q = q;
    const bool flip = bits[static_cast<std::size_t>(x - 1)] != 0;
    const std::array<int, 4> ccw =
        flip ? std::array<int, 4>{in_p, out_q, out_p, in_q} : std::array<int, 4>{in_p, in_q, out_p, out_q};
    // Start the rotation at the incoming under edge.
    const bool p_under = code[static_cast<std::size_t>(p)].role == Strand::Under;
    const int start = p_under ? 0 : (flip ? 3 : 1);
    PDCrossing& cx = out[static_cast<std::size_t>(x - 1)];
    for (int s = 0; s < 4; ++s) cx.edges[static_cast<std::size_t>(s)] = ccw[static_cast<std::size_t>((start + s) % 4)];
    // Over strand leaves through slot 1 exactly in these two cases.
    cx.sign = p_under == flip ? 1 : -1;
  }
  return PlanarDiagram(std::move(out));
}

// Rotation bits that embed `code` in the sphere, if any.
//
// For crossings u, v whose passages interlace, the bits of any planar
// embedding satisfy
//   bit(u) ^ bit(v) = [u, v share an even number of interlaced crossings]
//                     ^ [their first passages have different parity],
// so the bits are a 2-colouring of the interlacement graph, fixed up to one
// free choice per connected component. The colouring is then checked by
// counting faces, which is exact for the resulting rotation system.
inline std::optional<std::vector<char>> planar_rotations(const GaussCode& code) {
  const int c = code.crossings();
  const auto occ = code.occurrences();
  std::vector<std::vector<char>> inter(static_cast<std::size_t>(c) + 1, std::vector<char>(static_cast<std::size_t>(c) + 1, 0));
  for (int u = 1; u <= c; ++u) {
    for (int v = u + 1; v <= c; ++v) {
      const auto [a, b] = occ[u];
      const auto [p, q] = occ[v];
      inter[u][v] = inter[v][u] = (a < p && p < b) != (a < q && q < b);
    }
  }
  auto constraint = [&](int u, int v) {
    int common = 0;
    for (int w = 1; w <= c; ++w) common += inter[u][w] && inter[v][w];
    const bool parity_differs = (occ[u].first - occ[v].first) % 2 != 0;
    return static_cast<char>((common % 2 == 0) != parity_differs);
  };
  std::vector<int> bit(static_cast<std::size_t>(c) + 1, -1);
  std::vector<int> queue;
  for (int root = 1; root <= c; ++root) {
    if (bit[root] >= 0) continue;
    bit[root] = 0;
    queue.assign(1, root);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int u = queue[h];
      for (int v = 1; v <= c; ++v) {
        if (!inter[u][v]) continue;
        const int want = bit[u] ^ constraint(u, v);
        if (bit[v] < 0) {
          bit[v] = want;
          queue.push_back(v);
        } else if (bit[v] != want) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<char> bits(static_cast<std::size_t>(c));
  for (int x = 1; x <= c; ++x) bits[static_cast<std::size_t>(x - 1)] = static_cast<char>(bit[x]);
  if (!is_planar(diagram_from_rotations(code, bits))) return std::nullopt;
  return bits;
}

// Planar diagram whose traversal from passage 0 reproduces the DT code.
// The embedding is reflected if needed so that crossing 1 is positive.
inline PlanarDiagram realize(const DTCode& code) {
  const GaussCode gauss = dt_to_gauss(code);
  auto bits = planar_rotations(gauss);
  if (!bits) throw NotRealizable("DT code " + code.str() + " is not realizable by a planar diagram");
  PlanarDiagram pd = diagram_from_rotations(gauss, *bits);
  if (pd.crossings().front().sign < 0) {
    for (auto& b : *bits) b = static_cast<char>(!b);
    pd = diagram_from_rotations(gauss, *bits);
  }
  return pd;
}

inline bool is_realizable(const DTCode& code) { return planar_rotations(dt_to_gauss(code)).has_value(); }

// Gauss code read off a diagram, starting at passage 0 (the end of edge 2c-1).
inline GaussCode diagram_gauss(const PlanarDiagram& pd) {
  const int m = pd.edge_count();
  if (m == 0) throw PreconditionError("diagram has no crossings");
  std::vector<Passage> passages(static_cast<std::size_t>(m));
  std::vector<char> filled(static_cast<std::size_t>(m), 0);
  for (int x = 0; x < pd.crossing_count(); ++x) {
    const auto& cx = pd.crossings()[static_cast<std::size_t>(x)];
    // Passage k is entered through edge k-1.
    const int under_passage = (cx.edges[0] + 1) % m;
    const int over_passage = (cx.edges[static_cast<std::size_t>(cx.over_in_slot())] + 1) % m;
    passages[static_cast<std::size_t>(under_passage)] = {x + 1, Strand::Under};
    passages[static_cast<std::size_t>(over_passage)] = {x + 1, Strand::Over};
    filled[static_cast<std::size_t>(under_passage)] = filled[static_cast<std::size_t>(over_passage)] = 1;
  }
  for (char f : filled)
    if (!f) throw InputError("diagram traversal does not visit every passage");
  return GaussCode(std::move(passages));
}

inline DTCode diagram_dt(const PlanarDiagram& pd) { return gauss_to_dt(diagram_gauss(pd)); }

inline PlanarDiagram mirror(const PlanarDiagram& pd) {
  std::vector<PDCrossing> out;
  for (const auto& x : pd.crossings()) {
    const int start = x.over_in_slot();
    PDCrossing y;
    for (int s = 0; s < 4; ++s) y.edges[static_cast<std::size_t>(s)] = x.edges[static_cast<std::size_t>((start + s) % 4)];
    y.sign = -x.sign;
    out.push_back(y);
  }
  return PlanarDiagram(std::move(out));
}

// Inserts a one-crossing kink on edge `edge`. The new crossing is met first
// as an under passage when `under_first`; `sign` picks its handedness.
inline PlanarDiagram insert_kink(const PlanarDiagram& pd, int edge, bool under_first, int sign) {
  const int m = pd.edge_count();
  if (m == 0) {
    // Kink on the round unknot: edges 0 (into the kink loop) and 1.
    PDCrossing k;
    k.sign = sign;
    if (under_first) k.edges = sign > 0 ? std::array<int, 4>{1, 1, 0, 0} : std::array<int, 4>{1, 0, 0, 1};
    else k.edges = sign > 0 ? std::array<int, 4>{0, 0, 1, 1} : std::array<int, 4>{0, 1, 1, 0};
    return PlanarDiagram({k});
  }
  if (edge < 0 || edge >= m) throw InputError("edge out of range for kink insertion");
  // Old edge e splits into e (old tail -> kink), e+1 (the loop), e+2 (kink ->
  // old head); every later edge shifts by 2. Which end of `edge` is its
  // head is read from the slot roles, since a loop edge repeats at one crossing.
  const int e = edge;
  auto shift = [&](int f) { return f > e ? f + 2 : f; };
  std::vector<PDCrossing> out;
  for (const auto& x : pd.crossings()) {
    PDCrossing y = x;
    for (int s = 0; s < 4; ++s) {
      const int f = x.edges[static_cast<std::size_t>(s)];
      const bool incoming = s == 0 || s == x.over_in_slot();
      y.edges[static_cast<std::size_t>(s)] = (f == e && incoming) ? e + 2 : shift(f);
    }
    out.push_back(y);
  }
  PDCrossing k;
  k.sign = sign;
  const int in = e, loop = e + 1, outgoing = e + 2;
  if (under_first) {
    k.edges = sign > 0 ? std::array<int, 4>{in, outgoing, loop, loop} : std::array<int, 4>{in, loop, loop, outgoing};
  } else {
    k.edges = sign > 0 ? std::array<int, 4>{loop, loop, outgoing, in} : std::array<int, 4>{loop, in, outgoing, loop};
  }
  out.push_back(k);
  return PlanarDiagram(std::move(out));
}

// Standard closed-braid picture: position 1 on top, braid read left to
// right, edges numbered along the closure from its top-left corner.
inline PlanarDiagram pd_from_braid(const BraidWord& word) {
  require_knot(word);
  if (word.length() == 0) return PlanarDiagram();
  const auto closure = closure_gauss(word);
  const int m = closure.code.size();
  // Ends of each letter: NW, SW (incoming), NE, SE (outgoing).
  struct Ends {
    int nw = -1, sw = -1, ne = -1, se = -1;
  };
  std::vector<Ends> ends(static_cast<std::size_t>(word.length()));
  for (int k = 0; k < m; ++k) {
    const int x = closure.code[static_cast<std::size_t>(k)].crossing;
    const int letter = closure.letter_of_crossing[static_cast<std::size_t>(x)];
    const int l = word.letters()[static_cast<std::size_t>(letter)];
    const bool upper = (l > 0) == (closure.code[static_cast<std::size_t>(k)].role == Strand::Over);
    auto& en = ends[static_cast<std::size_t>(letter)];
    const int in = (k - 1 + m) % m, out = k;
    if (upper) {
      en.nw = in;
      en.se = out;
    } else {
      en.sw = in;
      en.ne = out;
    }
  }
  // Counterclockwise around a crossing: NE, NW, SW, SE.
  std::vector<PDCrossing> crossings;
  for (int letter = 0; letter < word.length(); ++letter) {
    const auto& en = ends[static_cast<std::size_t>(letter)];
    PDCrossing cx;
    if (word.letters()[static_cast<std::size_t>(letter)] > 0) {
      cx.edges = {en.sw, en.se, en.ne, en.nw};  // under SW->NE, over NW->SE
      cx.sign = 1;
    } else {
      cx.edges = {en.nw, en.sw, en.se, en.ne};  // under NW->SE, over SW->NE
      cx.sign = -1;
    }
    crossings.push_back(cx);
  }
  return PlanarDiagram(std::move(crossings));
}

}  // namespace rollercoaster
