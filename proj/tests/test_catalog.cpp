#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "rollercoaster/catalog.hpp"
#include "test_support.hpp"

using namespace rollercoaster;

namespace {

const std::vector<CatalogEntry>& catalog() {
  static const auto c = load_catalog(test_support::data_path("catalog.csv"));
  return c;
}

const std::vector<JonesReference>& refs() {
  static const auto r = load_jones_refs(test_support::data_path("jones_refs.dat"));
  return r;
}

const CatalogEntry& row(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::runtime_error("no row " + name);
}

std::string csv_text() {
  std::ifstream in(test_support::data_path("catalog.csv"));
  return {std::istreambuf_iterator<char>(in), {}};
}

const std::string kHeader = "table,name,alternating,unknotting,ascending,lower_bound,property,dt_code,rc_crossing\n";

}  // namespace

TEST(LoadCatalog, RowCounts) {
  EXPECT_EQ(catalog().size(), 86u);
  EXPECT_EQ(entries_in_tables(catalog(), {"1", "2"}).size(), 84u);
  EXPECT_EQ(entries_in_tables(catalog(), {"1"}).size(), 35u);
  EXPECT_EQ(entries_in_tables(catalog(), {"2"}).size(), 49u);
}

TEST(LoadCatalog, Trefoil) {
  const auto& e = row("3_1");
  EXPECT_EQ(e.ascending, (Range{1, 1}));
  EXPECT_EQ(e.property, Property::SRC);
  EXPECT_EQ(e.rc_crossing.value, 3);
  EXPECT_FALSE(e.rc_crossing.at_least_12);
  EXPECT_EQ(e.witness, parse_dt("[4, 6, 2]"));
}

TEST(LoadCatalog, RangeRowWithSetValuedRcCrossing) {
  const auto& e = row("8_7");
  EXPECT_EQ(e.ascending, (Range{2, 3}));
  EXPECT_EQ(e.rc_crossing.value, 9);
  EXPECT_TRUE(e.rc_crossing.at_least_12);
  EXPECT_EQ(e.rc_crossing.str(), "9|12+");
}

TEST(LoadCatalog, TwelveCrossingWitnesses) {
  const auto& a = row("12a_181");
  EXPECT_EQ(a.ascending.hi, 3);
  EXPECT_EQ(a.witness, parse_dt("[8, 6, 16, 10, 24, 14, 20, 18, 4, 22, 12, 2]"));
  const auto& b = row("12a_477");
  EXPECT_EQ(b.ascending.hi, 3);
  EXPECT_EQ(b.witness.crossings(), 12);
}

TEST(LoadCatalog, LowerBoundSources) {
  EXPECT_EQ(row("6_2").lower_bound, LowerBoundSource::TwistKnotTheorem);
  EXPECT_EQ(row("8_2").lower_bound, LowerBoundSource::ConwayBound);
  EXPECT_EQ(row("3_1").lower_bound, LowerBoundSource::UnknottingNumber);
}

TEST(ParseCatalog, SchemaErrorsCarryRowNumbers) {
  auto error_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_catalog(in);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  const std::string good = "1,3_1,Y,1,1,u(K),SRC,\"[4, 6, 2]\",3\n";
  EXPECT_EQ(error_of(kHeader + good), "no error");
  EXPECT_NE(error_of("name,dt\n").find("header"), std::string::npos);
  EXPECT_NE(error_of(kHeader + good + "1,x,Y,1,1,u(K),SRC,\"[4, 5, 2]\",3\n").find("catalog row 2"), std::string::npos);
  EXPECT_NE(error_of(kHeader + "1,3_1,Y,2,1,u(K),neither,\"[4, 6, 2]\",3\n").find("below unknotting"),
            std::string::npos);
  EXPECT_NE(error_of(kHeader + "1,3_1,Y,1,1,u(K),SRC,\"[4, 6, 2]\",4\n").find("SRC"), std::string::npos);
  EXPECT_NE(error_of(kHeader + "1,3_1,Y,1,3..2,u(K),?,\"[4, 6, 2]\",3\n").find("empty range"), std::string::npos);
  EXPECT_NE(error_of(kHeader + "1,3_1,maybe,1,1,u(K),SRC,\"[4, 6, 2]\",3\n").find("alternating"), std::string::npos);
  EXPECT_NE(error_of(kHeader + "1,3_1,Y,1,1\n").find("expected 9 fields"), std::string::npos);
  EXPECT_NE(error_of(kHeader + "1,3_1,Y,1,1,u(K),SRC,\"[4, 6, 2],3\n").find("unterminated"), std::string::npos);
  EXPECT_THROW(load_catalog("/nonexistent/catalog.csv"), InputError);
}

TEST(Classify, SpecExamples) {
  EXPECT_EQ(classify(row("6_2")), Property::Neither);
  EXPECT_EQ(classify(row("7_3")), Property::RC);
  EXPECT_EQ(classify(row("8_10")), Property::Unknown);
  EXPECT_EQ(classify(row("3_1")), Property::SRC);
}

TEST(Classify, ReproducesEveryStoredProperty) {
  for (const auto& e : catalog()) EXPECT_EQ(classify(e), e.property) << e.name;
}

TEST(Summarize, ClassCounts) {
  EXPECT_EQ(summarize(entries_in_tables(catalog(), {"1", "2"})), (ClassCounts{12, 32, 34, 6}));
  EXPECT_EQ(summarize(entries_in_tables(catalog(), {"1", "2"})).str(), "SRC=12 RC=32 Neither=34 Unknown=6");
}

TEST(Summarize, PerTableSrc) {
  EXPECT_EQ(summarize(entries_in_tables(catalog(), {"1"})).src, 7);
  EXPECT_EQ(summarize(entries_in_tables(catalog(), {"2"})).src, 5);
}

TEST(VerifyEntry, SpecExamples) {
  const auto r932 = verify_entry(row("9_32"), refs());
  EXPECT_EQ(r932.computed_min_warp, 2);
  EXPECT_EQ(r932.witness_crossings, 11);
  EXPECT_TRUE(r932.pass());

  const auto r940 = verify_entry(row("9_40"), refs());
  EXPECT_EQ(r940.computed_min_warp, 3);
  EXPECT_EQ(r940.expected, 3);
  EXPECT_EQ(r940.witness_crossings, 11);
  EXPECT_TRUE(r940.pass());

  const auto r52 = verify_entry(row("5_2"), refs());
  EXPECT_EQ(r52.computed_min_warp, 1);
  EXPECT_EQ(r52.witness_crossings, 6);
  EXPECT_EQ(r52.rc_crossing, "6");
  EXPECT_EQ(r52.identification, "5_2");
}

TEST(VerifyEntry, EveryRowPasses) {
  for (const auto& r : verify_catalog(catalog(), refs())) {
    EXPECT_TRUE(r.pass()) << r.to_json().dump();
    EXPECT_EQ(r.identification, r.name);
  }
}

TEST(VerifyEntry, ConcurrentVerificationKeepsRowOrder) {
  const auto reports = verify_catalog(catalog(), refs());
  ASSERT_EQ(reports.size(), catalog().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].row, catalog()[i].row);
    EXPECT_EQ(reports[i].to_json(), verify_entry(catalog()[i], refs()).to_json());
  }
}

TEST(VerifyEntry, FlaggedRowsAreExactlyTheSmallWitnessRows) {
  // These four rows print an 8-crossing witness realizing the listed
  // ascending number next to a roller-coaster crossing number of 9.
  std::vector<std::string> flagged;
  for (const auto& r : verify_catalog(catalog(), refs())) {
    for (const auto& f : r.flags) {
      EXPECT_EQ(f.rfind("Jones collision", 0), std::string::npos) << r.name;
      EXPECT_EQ(f.rfind("witness improves", 0), std::string::npos) << r.name;
    }
    if (!r.flags.empty()) flagged.push_back(r.name);
  }
  EXPECT_EQ(flagged, (std::vector<std::string>{"8_2", "8_5", "8_9", "8_10"}));
}

TEST(VerifyEntry, FaultInjectionFailsRow) {
  auto e = row("3_1");
  e.ascending = {2, 2};
  const auto r = verify_entry(e, refs());
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.checks[0].pass);  // min_warp
  EXPECT_EQ(r.checks[0].name, "min_warp");
}

TEST(VerifyEntry, WrongNameFailsIdentification) {
  auto e = row("4_1");
  e.name = "5_1";
  const auto r = verify_entry(e, refs());
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.identification, "4_1");
}

TEST(VerifyEntry, BetterWitnessOnRangeRowIsFlaggedNotFailed) {
  auto e = row("3_1");
  e.ascending = {1, 2};
  e.unknotting = {1, 1};
  e.property = Property::Unknown;
  const auto r = verify_entry(e, refs());
  EXPECT_TRUE(r.pass());
  ASSERT_EQ(r.flags.size(), 1u);
  EXPECT_EQ(r.flags[0], "witness improves ascending upper bound to 1");
}

TEST(VerifyEntry, LargerWitnessThanRcCrossingFails) {
  auto e = row("5_2");
  e.rc_crossing = {5, false};
  EXPECT_FALSE(verify_entry(e, refs()).pass());
}

TEST(RowReport, JsonKeyOrder) {
  const auto j = verify_entry(row("3_1"), refs()).to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"row", "name", "computed_min_warp", "expected", "witness_crossings",
                                            "rc_crossing", "identification", "checks", "flags"}));
  EXPECT_EQ(j.dump(),
            R"({"row":1,"name":"3_1","computed_min_warp":1,"expected":1,"witness_crossings":3,"rc_crossing":"3",)"
            R"("identification":"3_1","checks":[{"name":"min_warp","pass":true},{"name":"rc_crossing","pass":true},)"
            R"({"name":"identification","pass":true},{"name":"property","pass":true}],"flags":[]})");
}

TEST(MinimalCrossingNumber, FromName) {
  EXPECT_EQ(minimal_crossing_number("9_32"), 9);
  EXPECT_EQ(minimal_crossing_number("12a_181"), 12);
  EXPECT_THROW(minimal_crossing_number("unknot"), InputError);
}

TEST(CatalogFile, RoundTripsThroughParser) {
  std::istringstream in(csv_text());
  EXPECT_EQ(parse_catalog(in).size(), 86u);
}
