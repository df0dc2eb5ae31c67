#include <gtest/gtest.h>

#include "pk/error.hpp"
#include "pk/families.hpp"
#include "pk/invariants.hpp"

namespace {

namespace fam = pk::families;
using pk::linalg::Integer;

TEST(Table, HasSixtyRowsInOrder) {
  const auto& table = fam::familyTable();
  ASSERT_EQ(table.size(), 60u);
  for (std::size_t k = 0; k < table.size(); ++k) EXPECT_EQ(table[k].rowId, static_cast<int>(k + 1));
  EXPECT_EQ(fam::supplementaryRows().size(), 4u);
  EXPECT_EQ(fam::allRows().size(), 64u);
}

TEST(Table, TranscribedRows) {
  EXPECT_EQ(fam::familyRow(1).templ, "(2p+1) (i^{2k-1}) (2q+1)");
  EXPECT_EQ(fam::familyRow(1).formula, "gcd((2p+1)(2q+1),4pq-1)");
  EXPECT_EQ(fam::familyRow(17).templ, "8*(i^{2k-1})::(i^{2m-1})");
  EXPECT_EQ(fam::familyRow(17).formula, "3");
  EXPECT_EQ(fam::familyRow(47).templ, "9*(i^{2k-1})::::(i^{2m-1})");
  EXPECT_EQ(fam::familyRow(47).formula, "5");
  EXPECT_THROW(fam::familyRow(99), pk::Error);
}

TEST(Table, EveryRowInstantiatesAtBase) {
  for (const auto& spec : fam::allRows()) {
    fam::Params base;
    for (char name : spec.parameters()) base[name] = 1;
    EXPECT_NO_THROW(fam::instantiate(spec, base)) << spec.rowId;
    EXPECT_GE(fam::predictedD(spec, base), 0) << spec.rowId;
  }
}

TEST(Instantiate, Symbols) {
  const fam::Params ones{{'p', 1}, {'q', 1}, {'k', 1}};
  EXPECT_EQ(fam::instantiateSymbol(fam::familyRow(1), ones), "3 i 3");
  EXPECT_EQ(fam::instantiateSymbol(fam::familyRow(2), ones), "3 i -3");
  EXPECT_EQ(fam::instantiateSymbol(fam::familyRow(1), {{'p', 22}, {'q', 4}, {'k', 1}}), "45 i 9");
  EXPECT_EQ(fam::instantiateSymbol(fam::familyRow(1), {{'p', 1}, {'q', 1}, {'k', 3}}),
            "3 i^5 3");
  EXPECT_EQ(fam::instantiateSymbol(fam::familyRow(17), {{'k', 1}, {'m', 2}}), "8*i::i^3");
}

TEST(Instantiate, BuildsSameDiagramAsSymbol) {
  const fam::Params ones{{'p', 1}, {'q', 1}, {'k', 1}};
  EXPECT_EQ(fam::instantiate(fam::familyRow(1), ones), pk::diagram::buildDiagram("3 i 3"));
}

TEST(Instantiate, ParameterErrors) {
  EXPECT_THROW(fam::instantiateSymbol(fam::familyRow(1), {{'p', 1}}), pk::Error);
  EXPECT_THROW(fam::instantiateSymbol(fam::familyRow(1), {{'p', 0}, {'q', 1}, {'k', 1}}),
               pk::Error);
}

TEST(Formula, Evaluation) {
  EXPECT_EQ(fam::evaluateFormula("gcd((2p+1)(2q+1),4pq-1)", {{'p', 1}, {'q', 1}}), 3);
  EXPECT_EQ(fam::evaluateFormula("gcd((2p+1)(2q+1),4pq-1)", {{'p', 22}, {'q', 4}}), 27);
  EXPECT_EQ(fam::evaluateFormula("gcd((2p+1)(2q+1),4pq+4p+1)", {{'p', 1}, {'q', 1}}), 9);
  EXPECT_EQ(fam::evaluateFormula("gcd(8p+1,9)", {{'p', 1}}), 9);
  EXPECT_EQ(fam::evaluateFormula("(2p+1)(2p+1)(2p+1)", {{'p', 2}}), 125);
  EXPECT_EQ(fam::evaluateFormula("12pq-2p-2q-1", {{'p', 1}, {'q', 1}}), 7);
  EXPECT_EQ(fam::evaluateFormula("-3", {}), -3);
  EXPECT_THROW(fam::evaluateFormula("gcd(1,", {}), pk::Error);
  EXPECT_THROW(fam::evaluateFormula("2x", {}), pk::Error);
}

TEST(Formula, PredictedIsNonnegative) {
  EXPECT_EQ(fam::predictedD(fam::familyRow(1), {{'p', 1}, {'q', 1}, {'k', 1}}), 3);
  EXPECT_EQ(fam::predictedD(fam::familyRow(37), {{'p', 1}, {'k', 1}, {'m', 1}}), 9);
}

TEST(Grid, DefaultAndCustom) {
  const auto& row1 = fam::familyRow(1);
  EXPECT_EQ(fam::defaultGrid(row1).size(), 8u);
  const auto grid = fam::parseGrid(row1, "p=1..3;q=1,2,3;k=1");
  EXPECT_EQ(grid.size(), 9u);
  for (const auto& point : grid) EXPECT_EQ(point.at('k'), 1);
  EXPECT_THROW(fam::parseGrid(row1, "p=0"), pk::Error);
  EXPECT_THROW(fam::parseGrid(row1, "x=1"), pk::Error);
  EXPECT_THROW(fam::parseGrid(row1, "p=3..1"), pk::Error);
}

TEST(Verify, RowOneOnLargerGrid) {
  const auto& row = fam::familyRow(1);
  const auto report = fam::verifyRow(row, fam::parseGrid(row, "p=1..3;q=1..3;k=1,2"));
  EXPECT_EQ(report.status, fam::RowStatus::Pass);
  bool sawThree = false;
  for (const auto& r : report.results) {
    EXPECT_TRUE(r.match);
    sawThree = sawThree || *r.computed == 3;
  }
  EXPECT_TRUE(sawThree);
}

TEST(Verify, RowTwentyTwoReports) {
  const auto& row = fam::familyRow(22);
  const auto report = fam::verifyRow(row, fam::parseGrid(row, "k=1"));
  EXPECT_EQ(report.results.size(), 16u);
  EXPECT_NE(report.status, fam::RowStatus::Error);
}

TEST(Verify, MismatchIsFlaggedNotError) {
  const auto& row = fam::familyRow(64);
  const auto report = fam::verifyRow(row, fam::defaultGrid(row));
  EXPECT_EQ(report.status, fam::RowStatus::Flagged);
  for (const auto& r : report.results) {
    ASSERT_TRUE(r.computed.has_value());
    EXPECT_NE(*r.computed, r.predicted);
  }
  const auto j = report.toJson();
  EXPECT_EQ(j["status"], "FLAGGED");
  EXPECT_EQ(j["results"].size(), 2u);
}

TEST(Verify, ErrorsAreReportedPerPoint) {
  const auto& row = fam::familyRow(4);
  const auto report = fam::verifyRow(row, fam::parseGrid(row, "k=3"), 3);
  EXPECT_EQ(report.status, fam::RowStatus::Error);
  for (const auto& r : report.results) EXPECT_FALSE(r.error.empty());
}

TEST(Replacement, Examples) {
  const auto a = pk::notation::parse("3 i 3");
  EXPECT_EQ(fam::pseudotwistCount(a), 1);
  EXPECT_TRUE(fam::twistReplacementCheck(a, 0, fam::Replacement::III));
  const auto b = pk::notation::parse("(3)(i)(-3)");
  EXPECT_TRUE(fam::twistReplacementCheck(b, 0, fam::Replacement::IOneOne));
  EXPECT_THROW(fam::twistReplacementCheck(b, 1, fam::Replacement::IOneOne), pk::Error);
  EXPECT_THROW(fam::replacePseudotwist(pk::notation::parse("3"), 0, fam::Replacement::III),
               pk::Error);
}

TEST(Replacement, SubstitutesTangle) {
  const auto replaced =
      fam::replacePseudotwist(pk::notation::parse("3 i 3"), 0, fam::Replacement::IOneMinus);
  EXPECT_EQ(replaced, pk::notation::parse("3 (i,1,-1) 3"));
}

TEST(Replacement, RTwoPairAlwaysPreserves) {
  for (const char* s : {"3 i 3", "2 1 i 1 2", "5 i 3", "i,1,1", "6*2.2 0.i.1.1.1"}) {
    const auto e = pk::notation::parse(s);
    for (int loc = 0; loc < fam::pseudotwistCount(e); ++loc) {
      EXPECT_TRUE(fam::twistReplacementCheck(e, loc, fam::Replacement::IOneMinus)) << s;
    }
  }
}

}  // namespace
