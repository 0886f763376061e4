#include <gtest/gtest.h>

#include <sstream>

#include "rollercoaster/catalog.hpp"
#include "rollercoaster/codes.hpp"
#include "test_support.hpp"

using namespace rollercoaster;

namespace {

GaussCode trefoil() { return dt_to_gauss(parse_dt("[4, 6, 2]")); }

std::vector<Passage> passages_of(const GaussCode& g) { return {g.passages().begin(), g.passages().end()}; }

}  // namespace

TEST(ParseDt, BracketedForm) {
  const auto d = parse_dt("[4, 6, 2]");
  EXPECT_EQ(std::vector<int>(d.entries().begin(), d.entries().end()), (std::vector<int>{4, 6, 2}));
  EXPECT_EQ(d.str(), "[4, 6, 2]");
}

TEST(ParseDt, SignedEntries) {
  const auto d = parse_dt("[-8, 10, 2, -12, 6, 4]");
  EXPECT_EQ(std::vector<int>(d.entries().begin(), d.entries().end()), (std::vector<int>{-8, 10, 2, -12, 6, 4}));
  EXPECT_FALSE(d.alternating());
}

TEST(ParseDt, BareForm) { EXPECT_EQ(parse_dt("4 6 2"), parse_dt("[4,6,2]")); }

TEST(ParseDt, Rejections) {
  auto message = [](const char* text) {
    try {
      parse_dt(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("[4, 5, 2]").find("odd entry"), std::string::npos);
  EXPECT_NE(message("[4, 4, 2]").find("duplicate"), std::string::npos);
  EXPECT_NE(message("[4, 8, 2]").find("outside"), std::string::npos);
  EXPECT_NE(message("[4, x, 2]").find("malformed"), std::string::npos);
  EXPECT_NE(message("[4, 6, 2").find("bracket"), std::string::npos);
  EXPECT_NE(message("[]").find("empty"), std::string::npos);
  EXPECT_NE(message("[0]").find("zero"), std::string::npos);
}

TEST(DtToGauss, TrefoilHandTrace) {
  // Pairing 1-4, 3-6, 5-2; crossing i owns odd label 2i-1.
  const std::vector<Passage> expected = {{1, Strand::Over}, {3, Strand::Under}, {2, Strand::Over},
                                         {1, Strand::Under}, {3, Strand::Over}, {2, Strand::Under}};
  EXPECT_EQ(passages_of(trefoil()), expected);
}

TEST(DtToGauss, NegativeEntryPutsEvenPassageOver) {
  const auto g = dt_to_gauss(parse_dt("[-4, 6, 2]"));
  EXPECT_EQ(g[0].role, Strand::Under);
  EXPECT_EQ(g[3].role, Strand::Over);
}

TEST(DtToGauss, FigureEightInvariants) {
  const auto g = dt_to_gauss(parse_dt("[4, 6, 8, 2]"));
  EXPECT_EQ(g.size(), 8);
  EXPECT_EQ(g.crossings(), 4);
  for (auto [a, b] : g.occurrences()) {
    if (a < 0) continue;  // slot 0 unused
    EXPECT_NE(g[static_cast<std::size_t>(a)].role, g[static_cast<std::size_t>(b)].role);
  }
}

TEST(DtToGauss, OneCrossingKinkRoundTrips) {
  const auto d = parse_dt("[2]");
  EXPECT_EQ(gauss_to_dt(dt_to_gauss(d)), d);
  EXPECT_THROW(parse_dt("[-4]"), ParseError);
}

TEST(GaussToDt, RoundTripsSpecExamples) {
  for (const char* text : {"[4, 6, 2]", "[-8, 10, 2, -12, 6, 4]"}) {
    const auto d = parse_dt(text);
    EXPECT_EQ(gauss_to_dt(dt_to_gauss(d)), d) << text;
  }
}

TEST(GaussToDt, RoundTripsEveryCatalogWitness) {
  for (const auto& e : load_catalog(test_support::data_path("catalog.csv"))) {
    EXPECT_EQ(gauss_to_dt(dt_to_gauss(e.witness)), e.witness) << e.name;
  }
}

TEST(GaussToDt, RotatedPlanarCodesKeepTheirFraming) {
  // Rotating by one passage swaps every label's parity, so a planar code
  // stays well framed; only the labelling changes.
  const auto g = rotate(trefoil(), 1);
  const auto d = gauss_to_dt(g);
  EXPECT_EQ(d.crossings(), 3);
  EXPECT_EQ(canonical_dt(g), parse_dt("[4, 6, 2]"));
}

TEST(GaussToDt, OddOddCollisionIsSignalled) {
  // Crossing 1 sits at passages 1 and 3, both odd labels: no DT framing.
  const auto g = parse_gauss("1 -2 -1 2");
  EXPECT_FALSE(try_gauss_to_dt(g).has_value());
  try {
    gauss_to_dt(g);
    FAIL() << "expected FramingError";
  } catch (const FramingError& e) {
    EXPECT_NE(std::string(e.what()).find("two odd labels"), std::string::npos);
  }
}

TEST(ParseGauss, RenumbersByFirstPassage) {
  const auto g = parse_gauss("7 -3 5 -7 3 -5");
  EXPECT_EQ(g.str(), "1 -2 3 -1 2 -3");
  EXPECT_THROW(parse_gauss("1 -1 1"), InputError);
  EXPECT_THROW(parse_gauss("1 1"), InputError);
  EXPECT_THROW(parse_gauss("1 0 -1"), ParseError);
}

TEST(Mirror, FlipsEveryRoleAndIsInvolutive) {
  const auto g = trefoil();
  const auto m = mirror(g);
  EXPECT_EQ(mirror(m), g);
  EXPECT_EQ(m.crossings(), g.crossings());
  for (int k = 0; k < g.size(); k += 2) EXPECT_EQ(m[static_cast<std::size_t>(k)].role, Strand::Under);
}

TEST(Reverse, ReversesAndIsInvolutive) {
  const auto g = dt_to_gauss(parse_dt("[-8, 10, 2, -12, 6, 4]"));
  const auto r = reverse(g);
  EXPECT_EQ(reverse(r), g);
  EXPECT_EQ(r.crossings(), g.crossings());
  EXPECT_EQ(mirror(reverse(g)), reverse(mirror(g)));
}

TEST(Symmetries, PreserveRoleBalanceOnCatalog) {
  for (const auto& e : load_catalog(test_support::data_path("catalog.csv"))) {
    const auto g = dt_to_gauss(e.witness);
    for (const auto& h : {mirror(g), reverse(g), mirror(reverse(g))}) {
      EXPECT_EQ(h.crossings(), g.crossings());
      int over = 0;
      for (const auto& p : h.passages()) over += p.role == Strand::Over;
      EXPECT_EQ(over, g.crossings()) << e.name;
      EXPECT_EQ(is_reduced(h), is_reduced(g)) << e.name;
    }
    EXPECT_EQ(mirror(reverse(g)), reverse(mirror(g))) << e.name;
  }
}

TEST(IsReduced, Trefoil) {
  EXPECT_TRUE(is_reduced(trefoil()));
  EXPECT_TRUE(nugatory_crossings(trefoil()).empty());
}

TEST(IsReduced, Kink) {
  const auto kink = parse_gauss("1 -1");
  EXPECT_FALSE(is_reduced(kink));
  EXPECT_EQ(nugatory_crossings(kink), std::vector<int>{1});
}

TEST(IsReduced, TrefoilWithKinkInserted) {
  // Trefoil passages with a kink (crossing 9) spliced between two passages.
  const auto g = parse_gauss("1 -2 9 -9 3 -1 2 -3");
  EXPECT_FALSE(is_reduced(g));
  EXPECT_EQ(nugatory_crossings(g).size(), 1u);
}

TEST(IsPrimeDiagram, PrimeAndCompositeCodes) {
  EXPECT_TRUE(is_prime_diagram(trefoil()));
  EXPECT_TRUE(is_prime_diagram(dt_to_gauss(parse_dt("[4, 6, 8, 2]"))));
  EXPECT_FALSE(is_prime_diagram(parse_gauss("1 -2 9 -9 3 -1 2 -3")));
  // Two trefoils in a row.
  EXPECT_FALSE(is_prime_diagram(parse_gauss("1 -2 3 -1 2 -3 4 -5 6 -4 5 -6")));
}

TEST(CanonicalDt, IndependentOfStartAndDirection) {
  const auto d = parse_dt("[4, 10, 14, 12, 2, 8, 6]");
  const auto g = dt_to_gauss(d);
  const auto canon = canonical_dt(g);
  for (int s = 0; s < g.size(); ++s) {
    EXPECT_EQ(canonical_dt(rotate(g, s)), canon);
    EXPECT_EQ(canonical_dt(reverse(rotate(g, s))), canon);
  }
  EXPECT_LE(canon, d);
}

TEST(CanonicalDt, UpToMirror) {
  const auto g = trefoil();
  EXPECT_EQ(canonical_dt(mirror(g), true), canonical_dt(g, true));
  EXPECT_EQ(canonical_dt(g, true), parse_dt("[4, 6, 2]"));
}

TEST(ReadDtLines, SkipsCommentsAndBlankLines) {
  std::istringstream in("# header\n[4, 6, 2]   # trefoil\n\n4 6 8 2\n");
  const auto codes = read_dt_lines(in);
  ASSERT_EQ(codes.size(), 2u);
  EXPECT_EQ(codes[1], parse_dt("[4, 6, 8, 2]"));
}
