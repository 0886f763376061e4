#pragma once

// Kauffman bracket, Jones polynomial and identification against a table
// of reference Jones polynomials.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rollercoaster/embed.hpp"
#include "rollercoaster/polynomial.hpp"

namespace rollercoaster {

inline constexpr int kDefaultBracketCap = 16;

// <D> in the variable A: sum over all 2^c smoothings, loop value
// -A^2 - A^-2, normalised so the round unknot is 1.
inline LaurentPolynomial kauffman_bracket(const PlanarDiagram& pd, int cap = kDefaultBracketCap) {
  const int c = pd.crossing_count();
  if (c > cap) {
    throw CapExceeded("bracket state sum limited to " + std::to_string(cap) + " crossings, diagram has " +
                      std::to_string(c));
  }
  if (c == 0) return 1;
  const int m = pd.edge_count();
  // histogram[a][loops] counts states with `a` A-smoothings.
  std::vector<std::vector<std::int64_t>> histogram(static_cast<std::size_t>(c) + 1,
                                                   std::vector<std::int64_t>(static_cast<std::size_t>(m) + 1, 0));
  std::vector<int> parent(static_cast<std::size_t>(m));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  const std::uint64_t states = std::uint64_t{1} << c;
  for (std::uint64_t state = 0; state < states; ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int loops = m;
    auto join = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --loops;
      }
    };
    for (int x = 0; x < c; ++x) {
      const auto& e = pd.crossings()[static_cast<std::size_t>(x)].edges;
      if (state >> x & 1u) {  // A-smoothing
        join(e[0], e[1]);
        join(e[2], e[3]);
      } else {
        join(e[0], e[3]);
        join(e[1], e[2]);
      }
    }
    ++histogram[static_cast<std::size_t>(std::popcount(state))][static_cast<std::size_t>(loops)];
  }
  const LaurentPolynomial delta = LaurentPolynomial::monomial(2, -1) + LaurentPolynomial::monomial(-2, -1);
  std::vector<LaurentPolynomial> delta_pow{1};
  for (int k = 1; k < m; ++k) delta_pow.push_back(delta_pow.back() * delta);
  LaurentPolynomial bracket;
  for (int a = 0; a <= c; ++a) {
    for (int loops = 1; loops <= m; ++loops) {
      const auto n = histogram[static_cast<std::size_t>(a)][static_cast<std::size_t>(loops)];
      if (n) bracket += LaurentPolynomial::monomial(2 * a - c, n) * delta_pow[static_cast<std::size_t>(loops - 1)];
    }
  }
  return bracket;
}

// V(t) = (-A^3)^(-w) <D> at A = t^(-1/4), exponents in quarter-units of t.
inline LaurentPolynomial jones(const PlanarDiagram& pd, int cap = kDefaultBracketCap) {
  const int w = writhe(pd);
  const LaurentPolynomial f = kauffman_bracket(pd, cap) * LaurentPolynomial::monomial(-3 * w, w % 2 == 0 ? 1 : -1);
  return f.mirrored();
}

struct JonesReference {
  std::string name;
  LaurentPolynomial jones;
  std::string source;
};

// Records "name | exponent:coefficient ... | source"; '#' lines are comments.
inline std::vector<JonesReference> parse_jones_refs(std::istream& in) {
  std::vector<JonesReference> refs;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto bar1 = line.find('|');
    const auto bar2 = bar1 == std::string::npos ? std::string::npos : line.find('|', bar1 + 1);
    if (bar2 == std::string::npos) throw ParseError("refs line " + std::to_string(lineno) + ": expected 3 fields");
    JonesReference ref{trim(line.substr(0, bar1)), {}, trim(line.substr(bar2 + 1))};
    std::istringstream terms(line.substr(bar1 + 1, bar2 - bar1 - 1));
    std::string term;
    while (terms >> term) {
      const auto colon = term.find(':');
      try {
        if (colon == std::string::npos) throw std::invalid_argument(term);
        std::size_t used = 0;
        const int e = std::stoi(term.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument(term);
        const auto coeff = std::stoll(term.substr(colon + 1), &used);
        if (used != term.size() - colon - 1) throw std::invalid_argument(term);
        ref.jones += LaurentPolynomial::monomial(e, coeff);
      } catch (const std::logic_error&) {
        throw ParseError("refs line " + std::to_string(lineno) + ": malformed term '" + term + "'");
      }
    }
    if (ref.name.empty()) throw ParseError("refs line " + std::to_string(lineno) + ": empty name");
    refs.push_back(std::move(ref));
  }
  return refs;
}

inline std::vector<JonesReference> load_jones_refs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("refs not found: " + path.string());
  return parse_jones_refs(in);
}

struct Identification {
  enum class Status { Unique, Unknown, Ambiguous };
  Status status = Status::Unknown;
  std::vector<std::string> names;  // every reference matching up to mirror
  bool mirror = false;             // unique match only via t -> 1/t

  std::string str() const {
    switch (status) {
      case Status::Unique: return names.front();
      case Status::Unknown: return "unknown";
      case Status::Ambiguous: {
        std::string out = "ambiguous:";
        for (const auto& n : names) out += " " + n;
        return out;
      }
    }
    return "unknown";
  }
};

// Matches a Jones polynomial against the references up to t <-> 1/t.
inline Identification identify_jones(const LaurentPolynomial& v, const std::vector<JonesReference>& refs) {
  Identification id;
  const LaurentPolynomial vm = v.mirrored();
  for (const auto& ref : refs) {
    if (ref.jones == v || ref.jones == vm) {
      id.names.push_back(ref.name);
      id.mirror = ref.jones != v;
    }
  }
  if (id.names.size() == 1) id.status = Identification::Status::Unique;
  else if (id.names.size() > 1) id.status = Identification::Status::Ambiguous;
  if (id.status != Identification::Status::Unique) id.mirror = false;
  return id;
}

inline Identification identify(const PlanarDiagram& pd, const std::vector<JonesReference>& refs) {
  return identify_jones(jones(pd), refs);
}

}  // namespace rollercoaster
