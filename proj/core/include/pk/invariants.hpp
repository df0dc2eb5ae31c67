#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pk/diagram.hpp"
#include "pk/linalg.hpp"

namespace pk::invariants {

using diagram::PseudoDiagram;
using linalg::Integer;
using linalg::IntMatrix;

/// Columns are arcs. `matrix` has one row 2*over - under - under per
/// classical crossing; `strongRows` has one row a - b per precrossing whose
/// two strands lie on different arcs.
struct ColoringSystem {
  IntMatrix matrix;
  IntMatrix strongRows;

  std::size_t arcCount() const noexcept { return matrix.cols(); }
  /// Classical rows followed by the strong rows.
  IntMatrix combined() const { return matrix.stacked(strongRows); }
};

ColoringSystem coloringSystem(const PseudoDiagram& d, bool strong = false);

/// Determinant of a classical diagram: 1 for a crossingless knot, 0 for
/// split or crossingless multi-component diagrams. Throws HasPrecrossings.
Integer determinant(const PseudoDiagram& d);

struct ResolutionDet {
  std::string assignment;
  Integer det;
};

struct PseudoDetReport {
  std::string symbol;
  std::vector<ResolutionDet> resolutions;
  Integer pseudodet;

  nlohmann::json toJson() const;
};

/// gcd of the determinants of all full resolutions (gcd(0, x) = x).
PseudoDetReport pseudodeterminant(const PseudoDiagram& d,
                                  int cap = diagram::kDefaultPrecrossingCap);

/// Every full resolution has a nontrivial coloring mod p.
bool isColorable(const PseudoDiagram& d, const Integer& p,
                 int cap = diagram::kDefaultPrecrossingCap);

/// The classical system plus the precrossing equalities has a nontrivial
/// solution mod p.
bool isStrongColorable(const PseudoDiagram& d, const Integer& p);

/// All p in [2, bound] for which d is colorable mod p.
std::vector<long> coloringNumbers(const PseudoDiagram& d, long bound,
                                  int cap = diagram::kDefaultPrecrossingCap);

/// Same, from precomputed resolution determinants.
std::vector<long> coloringNumbers(const PseudoDetReport& report, long bound);

struct Coloring {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> values;  // indexed by arc

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Visits every nontrivial coloring mod p of the classical system (or of the
/// strong system when `strong`). With strong = false the diagram must be
/// classical. Stops early when `visit` returns false.
void forEachColoring(const PseudoDiagram& d, std::int64_t p, bool strong,
                     const std::function<bool(const Coloring&)>& visit,
                     std::uint64_t cap = linalg::kDefaultEnumerationCap);

std::vector<Coloring> findColorings(const PseudoDiagram& d, std::int64_t p, bool strong,
                                    std::uint64_t cap = linalg::kDefaultEnumerationCap);

/// Number of distinct residues used.
int countColors(const Coloring& c);

/// The pseudodeterminant.
Integer maxColors(const PseudoDiagram& d, int cap = diagram::kDefaultPrecrossingCap);

struct KHWitness {
  std::string assignment;
  Coloring coloring;
};

struct KHResult {
  bool holds = false;
  Integer modulus;
  /// One coloring with pairwise distinct arc colors per resolution, in
  /// resolution order; empty when the property fails.
  std::vector<KHWitness> witnesses;
};

/// Kauffman-Harary property mod the pseudodeterminant.
/// Throws UndefinedForPseudodetBelow2 when the pseudodeterminant is 0 or 1.
KHResult khProperty(const PseudoDiagram& d, int cap = diagram::kDefaultPrecrossingCap,
                    std::uint64_t enumerationCap = linalg::kDefaultEnumerationCap);

/// det(L1) - det(L0) == det(L2) - det(L1) for three classical diagrams.
bool detProgression(std::span<const PseudoDiagram> family);

/// Integers that fit in 64 bits become JSON numbers, others strings.
nlohmann::json integerJson(const Integer& value);

}  // namespace pk::invariants
