#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pk/diagram.hpp"
#include "pk/error.hpp"
#include "pk/invariants.hpp"

namespace {

using pk::diagram::PseudoDiagram;
using pk::linalg::Integer;
namespace inv = pk::invariants;

PseudoDiagram build(std::string_view s) { return pk::diagram::buildDiagram(s); }

TEST(ColoringSystem, TrefoilRows) {
  const auto sys = inv::coloringSystem(build("3"));
  ASSERT_EQ(sys.matrix.rows(), 3u);
  ASSERT_EQ(sys.matrix.cols(), 3u);
  for (std::size_t r = 0; r < 3; ++r) {
    std::vector<long> row;
    for (const Integer& v : sys.matrix.row(r)) row.push_back(v.get_si());
    std::sort(row.begin(), row.end());
    EXPECT_EQ(row, (std::vector<long>{-1, -1, 2}));
  }
}

TEST(ColoringSystem, RowsSumToZero) {
  for (const char* s : {"3", "2 1 i,3,-3", "9*.i", "(5)(i)(-5)", "6*2:2:2 0"}) {
    const auto sys = inv::coloringSystem(build(s), true);
    EXPECT_EQ(static_cast<int>(sys.arcCount()), build(s).arcs().count);
    for (std::size_t r = 0; r < sys.matrix.rows(); ++r) {
      Integer total = 0;
      for (const Integer& v : sys.matrix.row(r)) total += v;
      EXPECT_EQ(total, 0) << s;
    }
  }
}

TEST(ColoringSystem, ShadowHasOnlyEqualityRows) {
  const PseudoDiagram shadow = build("i^3");
  const auto sys = inv::coloringSystem(shadow, true);
  EXPECT_EQ(sys.matrix.rows(), 0u);
  EXPECT_EQ(inv::coloringSystem(shadow, false).strongRows.rows(), 0u);
}

TEST(ColoringSystem, MatchesStrandWalkOracle) {
  for (const char* s : {"3", "2 2", "2 1 1 2", "(3)(1)(-3)", "6*", "8*", "9*", "2 1,2 1,-(1,1,1)"}) {
    const PseudoDiagram d = build(s);
    int arcs = 0;
    const oracle::Matrix m = oracle::coloringMatrix(d, &arcs);
    ASSERT_EQ(static_cast<int>(m.size()), arcs) << s;
    EXPECT_EQ(inv::determinant(d), abs(oracle::cofactorDeterminant(oracle::dropRowCol(m, 0, 0))))
        << s;
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(inv::determinant(build("3")), 3);
  EXPECT_EQ(inv::determinant(build("2 2")), 5);
  EXPECT_EQ(inv::determinant(build("2")), 2);
  EXPECT_EQ(inv::determinant(build("6*")), 16);
  EXPECT_EQ(inv::determinant(build("8*")), 45);
  EXPECT_EQ(inv::determinant(build("9*")), 75);
}

TEST(Determinant, DegenerateConventions) {
  const PseudoDiagram unknot = pk::diagram::denominatorClose(pk::diagram::buildTangle(
      pk::notation::parse("0")));
  EXPECT_EQ(inv::determinant(unknot), 1);
  EXPECT_EQ(inv::determinant(build("0")), 0);
  EXPECT_EQ(inv::determinant(build("1")), 1);
}

TEST(Determinant, RefusesPrecrossings) {
  try {
    inv::determinant(build("3 i 3"));
    FAIL();
  } catch (const pk::Error& e) {
    EXPECT_EQ(e.kind(), pk::ErrorKind::HasPrecrossings);
  }
}

TEST(Pseudodeterminant, ReportIsGcdOfResolutions) {
  const auto report = inv::pseudodeterminant(build("(i,i,i),3,-3"));
  ASSERT_EQ(report.resolutions.size(), 8u);
  Integer g = 0;
  for (const auto& r : report.resolutions) {
    EXPECT_EQ(r.assignment.size(), 3u);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.det.get_mpz_t());
  }
  EXPECT_EQ(report.pseudodet, g);
  EXPECT_EQ(report.pseudodet, 9);
}

TEST(Pseudodeterminant, PretzelOracle) {
  // pretzel (b,3,-3): |3b - 9 - 3b| = 9 for every resolved middle tangle b
  const auto report = inv::pseudodeterminant(build("(i,i,i),3,-3"));
  for (const auto& r : report.resolutions) EXPECT_EQ(r.det, 9) << r.assignment;
}

TEST(Pseudodeterminant, ThreeIThreeResolutions) {
  const auto report = inv::pseudodeterminant(build("3 i 3"));
  std::multiset<Integer> dets;
  for (const auto& r : report.resolutions) dets.insert(r.det);
  EXPECT_EQ(dets, (std::multiset<Integer>{oracle::continuedFractionNumerator({3, 1, 3}),
                                          oracle::continuedFractionNumerator({3, -1, 3})}));
  EXPECT_EQ(report.pseudodet, 3);
}

TEST(Pseudodeterminant, ClassicalEqualsDeterminant) {
  for (const char* s : {"3", "2 2", "6*", "2 1 1 2", "5 1 3"}) {
    EXPECT_EQ(inv::pseudodeterminant(build(s)).pseudodet, inv::determinant(build(s))) << s;
  }
}

TEST(Pseudodeterminant, Cap) {
  EXPECT_THROW(inv::pseudodeterminant(build("i^6"), 5), pk::Error);
}

TEST(Pseudodeterminant, Json) {
  auto report = inv::pseudodeterminant(build("3 i 3"));
  report.symbol = "3 i 3";
  const auto j = report.toJson();
  EXPECT_EQ(j["symbol"], "3 i 3");
  EXPECT_EQ(j["pseudodet"], 3);
  EXPECT_EQ(j["resolutions"].size(), 2u);
}

TEST(Colorable, Examples) {
  EXPECT_TRUE(inv::isColorable(build("3 i 3"), 3));
  EXPECT_TRUE(inv::isColorable(build("6*2.2 0.i.1.1.1"), 7));
  EXPECT_TRUE(inv::isColorable(build("6*2.2 0.1.1.1.i"), 5));
  EXPECT_TRUE(inv::isColorable(build("2 1 i 1 2"), 3));
  EXPECT_FALSE(inv::isColorable(build("3"), 2));
  EXPECT_THROW(inv::isColorable(build("3"), 1), pk::Error);
}

TEST(Colorable, AgreesWithBruteForce) {
  for (const char* s : {"3", "2 2", "(3)(1)(-3)", "6*", "2 1 1 2", "1,1"}) {
    const PseudoDiagram d = build(s);
    for (long p = 2; p <= 9; ++p) {
      EXPECT_EQ(inv::isColorable(d, p), oracle::bruteColorable(d, p)) << s << " mod " << p;
    }
  }
}

TEST(Strong, ClassicalEqualsWeak) {
  for (const char* s : {"3", "2 2", "6*", "(3)(1)(-3)", "9*"}) {
    for (long p = 2; p <= 13; ++p) {
      EXPECT_EQ(inv::isStrongColorable(build(s), p), inv::isColorable(build(s), p))
          << s << " mod " << p;
    }
  }
}

TEST(Strong, ShadowNeverStrong) {
  EXPECT_FALSE(inv::isStrongColorable(build("i^3"), 3));
}

TEST(ColoringNumbers, Examples) {
  // resolution determinants 75 and 15; multiples of 3 or 5 share a factor with both
  const auto nine = inv::coloringNumbers(build("9*.i"), 15);
  EXPECT_EQ(nine, (std::vector<long>{3, 5, 6, 9, 10, 12, 15}));
  for (long p : {3, 5, 15}) EXPECT_NE(std::find(nine.begin(), nine.end(), p), nine.end());
  EXPECT_EQ(inv::coloringNumbers(build("3"), 10), (std::vector<long>{3, 6, 9}));
}

TEST(ColoringNumbers, ShortcutMatchesDirectSolve) {
  for (const char* s : {"3 i 3", "9*.i", "(3)(i)(-3)", "(i,i,i),3,-3", "2 1 i,3,-3", "i,1"}) {
    const PseudoDiagram d = build(s);
    const auto numbers = inv::coloringNumbers(d, 13);
    for (long p = 2; p <= 13; ++p) {
      const bool listed = std::find(numbers.begin(), numbers.end(), p) != numbers.end();
      EXPECT_EQ(listed, inv::isColorable(d, p)) << s << " mod " << p;
    }
  }
}

TEST(Colorings, CountColors) {
  EXPECT_EQ(inv::countColors({3, {1, 1, 1}}), 1);
  const auto all = inv::findColorings(build("3"), 3, false);
  ASSERT_EQ(all.size(), 6u);
  for (const auto& c : all) EXPECT_EQ(inv::countColors(c), 3);
}

TEST(Colorings, AreSolutionsAndNontrivial) {
  const PseudoDiagram d = build("(3)(1)(-3)");
  const auto sys = inv::coloringSystem(d);
  for (const auto& c : inv::findColorings(d, 9, false)) {
    EXPECT_GT(inv::countColors(c), 1);
    for (std::size_t r = 0; r < sys.matrix.rows(); ++r) {
      Integer s = 0;
      for (std::size_t k = 0; k < c.values.size(); ++k) s += sys.matrix(r, k) * c.values[k];
      EXPECT_EQ(Integer(s % 9), 0);
    }
  }
}

TEST(Colorings, PretzelKHColorCounts) {
  std::set<int> counts;
  for (const auto& c : inv::findColorings(build("(3)(1)(-3)"), 9, false)) {
    counts.insert(inv::countColors(c));
  }
  EXPECT_TRUE(counts.count(7));
  counts.clear();
  for (const auto& c : inv::findColorings(build("(5)(1)(-5)"), 25, false)) {
    counts.insert(inv::countColors(c));
  }
  EXPECT_TRUE(counts.count(11));
}

TEST(Colorings, RequireResolvedDiagram) {
  EXPECT_THROW(inv::findColorings(build("3 i 3"), 3, false), pk::Error);
  EXPECT_NO_THROW(inv::findColorings(build("3 i 3"), 3, true));
}

TEST(MaxColors, IsPseudodeterminant) {
  EXPECT_EQ(inv::maxColors(build("9*.i")), 15);
  EXPECT_EQ(inv::maxColors(build("(3)(i)(-3)")), 9);
  EXPECT_EQ(inv::maxColors(build("3")), 3);
}

TEST(KH, Examples) {
  const auto a = inv::khProperty(build("(3)(i)(-3)"));
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.modulus, 9);
  EXPECT_EQ(a.witnesses.size(), 2u);
  const auto b = inv::khProperty(build("(5)(i)(-5)"));
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.modulus, 25);
}

TEST(KH, FigureEightAgreesWithEnumeration) {
  const PseudoDiagram d = build("2 2");
  bool distinct = false;
  for (const auto& c : inv::findColorings(d, 5, false)) {
    distinct = distinct || inv::countColors(c) == static_cast<int>(c.values.size());
  }
  EXPECT_EQ(inv::khProperty(d).holds, distinct);
  EXPECT_TRUE(distinct);
}

TEST(KH, UndefinedBelowTwo) {
  try {
    inv::khProperty(build("i"));
    FAIL();
  } catch (const pk::Error& e) {
    EXPECT_EQ(e.kind(), pk::ErrorKind::UndefinedForPseudodetBelow2);
  }
}

TEST(Progression, Examples) {
  const std::vector<PseudoDiagram> twists{build("3"), build("5"), build("7")};
  EXPECT_TRUE(inv::detProgression(twists));
  const std::vector<PseudoDiagram> rational{build("2 2"), build("2 4"), build("2 6")};
  EXPECT_TRUE(inv::detProgression(rational));
  const std::vector<PseudoDiagram> constant{build("6*"), build("6*"), build("6*")};
  EXPECT_TRUE(inv::detProgression(constant));
  const std::vector<PseudoDiagram> broken{build("3"), build("5"), build("2 2")};
  EXPECT_FALSE(inv::detProgression(broken));
  const std::vector<PseudoDiagram> pre{build("3 i 3"), build("5"), build("7")};
  EXPECT_THROW(inv::detProgression(pre), pk::Error);
}

}  // namespace
