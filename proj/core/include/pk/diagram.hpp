#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pk/notation.hpp"
#include "pk/polyhedra.hpp"

namespace pk::diagram {

/// Node slots are numbered 4*v + k with k counterclockwise. A Positive node
/// has its over-strand on slots k=0,2, a Negative node on k=1,3.
enum class NodeKind : std::uint8_t { Positive, Negative, Pre };

/// Tangle boundary ends, counterclockwise.
enum Port : int { NW = 0, SW = 1, SE = 2, NE = 3 };

/// Encodes boundary port b inside a mate/port table.
constexpr int portRef(int b) { return -1 - b; }
constexpr bool isPortRef(int x) { return x < 0; }
constexpr int portOf(int x) { return -1 - x; }

/// Open 4-ended diagram fragment.
///
/// `mate[s]` is the slot joined to slot s, or portRef(b) when s is wired to
/// boundary end b. `port[b]` is the slot at end b, or portRef(b') when the
/// two ends b and b' are joined by a crossingless strand.
struct Tangle {
  std::vector<NodeKind> kinds;
  std::vector<int> mate;
  std::array<int, 4> port{};
  int freeLoops = 0;

  std::size_t nodeCount() const noexcept { return kinds.size(); }

  static Tangle elementary(notation::Elementary kind);
};

/// Reflection in the NW-SE diagonal.
Tangle reflect(const Tangle& t);
/// Counterclockwise quarter turn: the end at NE moves to NW.
Tangle rotate90(const Tangle& t);
/// Horizontal sum: a.NE-b.NW and a.SE-b.SW are joined.
Tangle sum(const Tangle& a, const Tangle& b);
/// a b = -a + b.
Tangle product(const Tangle& a, const Tangle& b);
/// (a1,...,an) = -a1 + ... + -an.
Tangle ramification(const std::vector<Tangle>& items);

/// Builds a non-polyhedral expression.
Tangle buildTangle(const notation::ConwayExpr& expr);

/// Arc decomposition of a closed diagram.
struct ArcStructure {
  int count = 0;             // including one arc per free loop
  std::vector<int> slotArc;  // arc of the edge at each slot
};

/// Closed 4-valent plane map whose nodes are crossings or precrossings.
class PseudoDiagram {
 public:
  PseudoDiagram() = default;
  /// Throws InvalidDiagram when `mate` is not a fixed-point-free involution
  /// on 4 * kinds.size() slots.
  PseudoDiagram(std::vector<NodeKind> kinds, std::vector<int> mate, int freeLoops = 0);

  std::size_t nodeCount() const noexcept { return kinds_.size(); }
  NodeKind kind(std::size_t node) const { return kinds_.at(node); }
  const std::vector<NodeKind>& kinds() const noexcept { return kinds_; }
  const std::vector<int>& mates() const noexcept { return mate_; }
  int mate(int slot) const { return mate_.at(static_cast<std::size_t>(slot)); }
  int freeLoops() const noexcept { return freeLoops_; }

  /// Node ids of the precrossings, ascending.
  std::vector<int> precrossings() const;
  std::size_t precrossingCount() const;
  std::size_t classicalCount() const { return nodeCount() - precrossingCount(); }

  /// Number of closed strands.
  int components() const;
  /// Faces of the map (free loops excluded); V - E + F = 2 for connected maps.
  int faceCount() const;
  /// Connected pieces of the node graph (free loops excluded).
  int connectedPieces() const;

  const ArcStructure& arcs() const noexcept { return arcs_; }
  /// Over-arc of a classical node and its two under-arcs.
  std::array<int, 3> crossingArcs(int node) const;
  /// The arcs through the two strands of a node (over pair first for
  /// classical nodes).
  std::pair<int, int> throughArcs(int node) const;

  friend bool operator==(const PseudoDiagram& a, const PseudoDiagram& b) {
    return a.kinds_ == b.kinds_ && a.mate_ == b.mate_ && a.freeLoops_ == b.freeLoops_;
  }

 private:
  void computeArcs();

  std::vector<NodeKind> kinds_;
  std::vector<int> mate_;
  int freeLoops_ = 0;
  ArcStructure arcs_;
};

/// Joins NW-NE and SW-SE.
PseudoDiagram numeratorClose(const Tangle& t);
/// Joins NW-SW and NE-SE.
PseudoDiagram denominatorClose(const Tangle& t);

/// Substitutes the slot tangles into the registered template.
PseudoDiagram buildPolyhedral(const notation::ConwayExpr& expr,
                              const PolyhedronRegistry& registry = PolyhedronRegistry::builtin());

/// Polyhedral forms are substituted, everything else is numerator-closed.
PseudoDiagram buildDiagram(const notation::ConwayExpr& expr,
                           const PolyhedronRegistry& registry = PolyhedronRegistry::builtin());
PseudoDiagram buildDiagram(std::string_view symbol,
                           const PolyhedronRegistry& registry = PolyhedronRegistry::builtin());

/// Over/under choices for some precrossings (a pseudoresolution when not
/// every precrossing is listed).
struct Resolution {
  std::vector<std::pair<int, NodeKind>> choices;
};

/// Assigned precrossings become classical; the input is not modified.
/// Throws UnknownNode / NotAPrecrossing for bad node ids.
PseudoDiagram resolve(const PseudoDiagram& d, const Resolution& r);

inline constexpr int kDefaultPrecrossingCap = 20;

/// One '+' or '-' per precrossing in ascending node order.
std::string assignmentString(const PseudoDiagram& d, const Resolution& r);

/// Visits the 2^k full resolutions in binary order ('+' before '-').
/// Stops early when `visit` returns false. Throws TooManyPrecrossings.
void forEachResolution(const PseudoDiagram& d,
                       const std::function<bool(const Resolution&, const PseudoDiagram&)>& visit,
                       int cap = kDefaultPrecrossingCap);

std::vector<Resolution> fullResolutions(const PseudoDiagram& d, int cap = kDefaultPrecrossingCap);

/// True iff some resolution of d is alternating.
bool isPseudoalternating(const PseudoDiagram& d);

/// Orientation-preserving isomorphism invariant: equal codes iff isomorphic.
std::vector<int> canonicalCode(const PseudoDiagram& d);
/// Same for tangles; ports are fixed, not permuted.
std::vector<int> canonicalCode(const Tangle& t);

nlohmann::json toJson(const PseudoDiagram& d);
/// Accepts arbitrary endpoint ids; throws InvalidDiagram on malformed input.
PseudoDiagram diagramFromJson(const nlohmann::json& j);

std::string_view kindName(NodeKind kind);

}  // namespace pk::diagram
