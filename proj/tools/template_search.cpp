// Derives vertex numberings for the basic polyhedra 6*, 8*, 9*.
//
// Each polyhedron is the medial graph of a small plane graph (tetrahedron,
// square pyramid, triangular prism). A numbering assigns symbol slots to
// medial vertices; the search keeps numberings for which every required
// check holds and picks the one satisfying the most optional checks.
//
//   template_search [output.json]

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>

#include "pk/diagram.hpp"
#include "pk/error.hpp"
#include "pk/families.hpp"
#include "pk/invariants.hpp"
#include "pk/notation.hpp"
#include "pk/polyhedra.hpp"

namespace {

using pk::PolyhedronRegistry;
using pk::PolyhedronTemplate;

struct PlaneGraph {
  std::string key;
  std::vector<std::pair<double, double>> points;
  std::vector<std::pair<int, int>> edges;
};

const std::vector<PlaneGraph>& baseGraphs() {
  static const std::vector<PlaneGraph> graphs = {
      {"6*",
       {{0, 0}, {0, 1}, {-0.87, -0.5}, {0.87, -0.5}},
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
      {"8*",
       {{0, 0}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}},
       {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}}},
      {"9*",
       {{0, 1}, {-0.87, -0.5}, {0.87, -0.5}, {0, 3}, {-2.6, -1.5}, {2.6, -1.5}},
       {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}},
  };
  return graphs;
}

// Medial map: vertex e = (u, v) has slots [succ_u, pred_u, succ_v, pred_v]
// counterclockwise. Returns mate over 4 * edges slots.
std::vector<int> medialMates(const PlaneGraph& g, bool mirrored) {
  const int n = static_cast<int>(g.points.size());
  std::vector<std::vector<int>> rotation(n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    rotation[g.edges[e].first].push_back(e);
    rotation[g.edges[e].second].push_back(e);
  }
  for (int w = 0; w < n; ++w) {
    auto angle = [&](int e) {
      const int other = g.edges[e].first == w ? g.edges[e].second : g.edges[e].first;
      return std::atan2(g.points[other].second - g.points[w].second,
                        g.points[other].first - g.points[w].first);
    };
    std::sort(rotation[w].begin(), rotation[w].end(),
              [&](int a, int b) { return angle(a) < angle(b); });
    if (mirrored) std::reverse(rotation[w].begin(), rotation[w].end());
  }
  std::vector<int> mate(4 * g.edges.size(), -1);
  for (int w = 0; w < n; ++w) {
    const auto& r = rotation[w];
    for (std::size_t j = 0; j < r.size(); ++j) {
      const int e = r[j];
      const int f = r[(j + 1) % r.size()];
      const int succ = 4 * e + (g.edges[e].first == w ? 0 : 2);
      const int pred = 4 * f + (g.edges[f].first == w ? 1 : 3);
      mate[succ] = pred;
      mate[pred] = succ;
    }
  }
  return mate;
}

PolyhedronTemplate makeTemplate(const std::vector<int>& medial,
                                const std::vector<int>& slotToVertex,
                                const std::vector<bool>& reversed) {
  const int n = static_cast<int>(slotToVertex.size());
  std::vector<int> vertexToSlot(n);
  for (int i = 0; i < n; ++i) vertexToSlot[slotToVertex[i]] = i;
  PolyhedronTemplate t;
  t.vertices = n;
  t.stars = 1;
  t.nw.assign(n, 0);
  t.reversed = reversed;
  t.mate.assign(4 * n, -1);
  for (int h = 0; h < 4 * n; ++h) {
    const int m = medial[h];
    t.mate[4 * vertexToSlot[h / 4] + h % 4] = 4 * vertexToSlot[m / 4] + m % 4;
  }
  return t;
}

struct Check {
  std::string label;
  bool required = true;
  int weight = 1;
  std::vector<int> slots;     // slots holding something other than 1
  std::vector<int> oriented;  // slots whose tangle changes under reflection
  std::function<bool(const PolyhedronRegistry&)> run;
};

std::vector<int> nonUnitSlots(const std::string& symbol, const PolyhedronRegistry& any) {
  const auto e = pk::notation::parse(symbol, any);
  std::vector<int> out;
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    if (!e.children[i].isOne()) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> orientedSlots(const std::string& symbol, const PolyhedronRegistry& any) {
  const auto e = pk::notation::parse(symbol, any);
  std::vector<int> out;
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    const auto t = pk::diagram::buildTangle(e.children[i]);
    if (pk::diagram::canonicalCode(t) != pk::diagram::canonicalCode(pk::diagram::reflect(t))) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

void addSlots(std::vector<int>& to, const std::vector<int>& from) {
  for (int s : from) {
    if (std::find(to.begin(), to.end(), s) == to.end()) to.push_back(s);
  }
}

pk::linalg::Integer pseudodet(const std::string& symbol, const PolyhedronRegistry& reg) {
  return pk::invariants::pseudodeterminant(pk::diagram::buildDiagram(symbol, reg)).pseudodet;
}

Check rowCheck(int row, bool required, int weight, const PolyhedronRegistry& any) {
  const auto& spec = pk::families::familyRow(row);
  // Pseudotwist lengths stay at their smallest value during the search.
  const auto grid = pk::families::parseGrid(spec, "k=1;m=1;n=1");
  std::vector<std::string> symbols;
  std::vector<pk::linalg::Integer> expected;
  Check c;
  for (const auto& params : grid) {
    symbols.push_back(pk::families::instantiateSymbol(spec, params));
    expected.push_back(pk::families::predictedD(spec, params));
    addSlots(c.slots, nonUnitSlots(symbols.back(), any));
    addSlots(c.oriented, orientedSlots(symbols.back(), any));
  }
  c.label = "row " + std::to_string(row);
  c.required = required;
  c.weight = weight;
  c.run = [symbols, expected](const PolyhedronRegistry& reg) {
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      if (pseudodet(symbols[i], reg) != expected[i]) return false;
    }
    return true;
  };
  return c;
}

Check colorCheck(const std::string& symbol, long p, bool required, const PolyhedronRegistry& any) {
  Check c;
  c.label = symbol + " mod " + std::to_string(p);
  c.required = required;
  c.slots = nonUnitSlots(symbol, any);
  c.oriented = orientedSlots(symbol, any);
  c.run = [symbol, p](const PolyhedronRegistry& reg) {
    return pk::invariants::isColorable(pk::diagram::buildDiagram(symbol, reg), p);
  };
  return c;
}

Check detCheck(const std::string& symbol, long value, bool required, int weight,
               const PolyhedronRegistry& any) {
  Check c;
  c.label = symbol + " = " + std::to_string(value);
  c.required = required;
  c.weight = weight;
  c.slots = nonUnitSlots(symbol, any);
  c.oriented = orientedSlots(symbol, any);
  c.run = [symbol, value](const PolyhedronRegistry& reg) { return pseudodet(symbol, reg) == value; };
  return c;
}

std::vector<Check> checksFor(const std::string& key, const PolyhedronRegistry& any) {
  std::vector<Check> out;
  if (key == "6*") {
    out.push_back(colorCheck("6*2.2 0.i.1.1.1", 7, true, any));
    out.push_back(colorCheck("6*2.2 0.1.1.1.i", 5, true, any));
    // Knot table values for alternating 6* knots.
    out.push_back(detCheck("6*.2.2", 37, false, 1, any));
    out.push_back(detCheck("6*.2.2 0", 35, false, 1, any));
    out.push_back(detCheck("6*.2.2.2", 57, false, 1, any));
    out.push_back(detCheck("6*2:2:2 0", 55, false, 1, any));
    out.push_back(detCheck("6*2 0:2 0:2 0", 49, false, 1, any));
    out.push_back(detCheck("6*-2 0:-2 0:-2 0", 25, false, 1, any));
    for (int row : {11, 12, 13, 14, 15, 16, 27, 28, 29, 30, 31, 42, 43, 44, 45, 46, 58, 59, 60}) {
      out.push_back(rowCheck(row, false, 10, any));
    }
  } else if (key == "8*") {
    for (int row : {17, 18, 19, 33, 34, 35, 36}) out.push_back(rowCheck(row, true, 10, any));
    out.push_back(colorCheck("8*i.1.1.1.i.1.1.1", 3, true, any));
    for (int row : {37, 38, 39}) out.push_back(rowCheck(row, false, 10, any));
    out.push_back(detCheck("8*2 0", 69, false, 1, any));
    out.push_back(detCheck("8*-2 0", 27, false, 1, any));
  } else if (key == "9*") {
    for (int row = 47; row <= 57; ++row) out.push_back(rowCheck(row, true, 10, any));
    out.push_back(detCheck("9*.i", 15, true, 1, any));
  }
  return out;
}

struct Best {
  int score = -1;
  std::vector<int> slotToVertex;
  std::vector<bool> reversed;
  bool mirrored = false;
  std::vector<std::string> passed;
};

// Backtracking over slot -> (vertex, reversed). Required checks prune as soon
// as their last slot is placed; optional checks are scored the same way and
// bound the remaining search.
void search(const PlaneGraph& g, const std::vector<Check>& checks, Best& best) {
  const int n = static_cast<int>(g.edges.size());
  std::vector<int> lastSlot(checks.size(), 0);
  std::vector<bool> orientedAnywhere(n, false);
  for (std::size_t ci = 0; ci < checks.size(); ++ci) {
    for (int s : checks[ci].slots) lastSlot[ci] = std::max(lastSlot[ci], s);
    for (int s : checks[ci].oriented) orientedAnywhere[s] = true;
  }

  for (int mirrored = 0; mirrored < 2; ++mirrored) {
    const std::vector<int> medial = medialMates(g, mirrored != 0);
    std::map<std::pair<std::size_t, std::vector<int>>, bool> memo;
    std::vector<int> perm(n, -1);
    std::vector<bool> reversed(n, false);
    std::vector<bool> usedVertex(n, false);
    std::vector<std::string> passed;
    int score = 0;

    auto evaluate = [&](std::size_t ci) {
      const Check& c = checks[ci];
      std::vector<int> key;
      for (int s : c.slots) key.push_back(perm[s]);
      for (int s : c.oriented) key.push_back(reversed[s] ? 1 : 0);
      auto it = memo.find({ci, key});
      if (it != memo.end()) return it->second;
      std::vector<int> full = perm;
      std::vector<bool> used = usedVertex;
      int next = 0;
      for (int& v : full) {
        if (v >= 0) continue;
        while (used[next]) ++next;
        v = next;
        used[next] = true;
      }
      PolyhedronRegistry reg = PolyhedronRegistry::builtin();
      reg.add(makeTemplate(medial, full, reversed));
      bool ok = false;
      try {
        ok = c.run(reg);
      } catch (const pk::Error&) {
        ok = false;
      }
      memo[{ci, key}] = ok;
      return ok;
    };

    std::function<void(int)> place = [&](int depth) {
      int bound = score;
      for (std::size_t ci = 0; ci < checks.size(); ++ci) {
        if (!checks[ci].required && lastSlot[ci] >= depth) bound += checks[ci].weight;
      }
      if (bound <= best.score) return;
      if (depth == n) {
        best = {score, perm, reversed, mirrored != 0, passed};
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (usedVertex[v]) continue;
        for (int flip = 0; flip < (orientedAnywhere[depth] ? 2 : 1); ++flip) {
          perm[depth] = v;
          reversed[depth] = flip != 0;
          usedVertex[v] = true;
          bool ok = true;
          const int before = score;
          const std::size_t passedBefore = passed.size();
          for (std::size_t ci = 0; ci < checks.size() && ok; ++ci) {
            if (lastSlot[ci] != depth) continue;
            const bool pass = evaluate(ci);
            if (checks[ci].required) {
              ok = pass;
            } else if (pass) {
              score += checks[ci].weight;
              passed.push_back(checks[ci].label);
            }
          }
          if (ok) place(depth + 1);
          score = before;
          passed.resize(passedBefore);
          perm[depth] = -1;
          reversed[depth] = false;
          usedVertex[v] = false;
        }
      }
    };
    place(0);
  }
}

}  // namespace

int main(int argc, char** argv) {
  PolyhedronRegistry out = PolyhedronRegistry::builtin();
  for (const PlaneGraph& g : baseGraphs()) {
    // A placeholder with the right vertex count lets symbols parse.
    PolyhedronRegistry any = PolyhedronRegistry::builtin();
    std::vector<int> identity(g.edges.size());
    std::iota(identity.begin(), identity.end(), 0);
    any.add(makeTemplate(medialMates(g, false), identity, std::vector<bool>(g.edges.size())));

    std::vector<Check> checks = checksFor(g.key, any);
    Best best;
    search(g, checks, best);
    if (best.score < 0) {
      std::cerr << g.key << ": no numbering satisfies the required checks\n";
      return 1;
    }
    out.add(makeTemplate(medialMates(g, best.mirrored), best.slotToVertex, best.reversed));
    std::cerr << g.key << ": score " << best.score << (best.mirrored ? ", mirrored" : "")
              << ", slots ->";
    for (int i = 0; i < static_cast<int>(best.slotToVertex.size()); ++i) {
      std::cerr << ' ' << best.slotToVertex[i] << (best.reversed[i] ? "r" : "");
    }
    std::cerr << "\n  optional checks passed:";
    for (const auto& label : best.passed) std::cerr << " [" << label << "]";
    std::cerr << "\n";
  }
  const std::string text = out.toJson().dump(1);
  if (argc > 1) {
    std::ofstream(argv[1]) << text << "\n";
  } else {
    std::cout << text << "\n";
  }
  return 0;
}
