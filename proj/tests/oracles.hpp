#pragma once

// Reference implementations used only by the tests. None of them calls into
// the library's linear algebra or arc extraction.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "pk/diagram.hpp"

namespace oracle {

using Integer = mpz_class;
using Matrix = std::vector<std::vector<long>>;

// Numerator of a_n + 1/(a_{n-1} + 1/(... + 1/a_1)).
inline Integer continuedFractionNumerator(const std::vector<long>& word) {
  Integer num = word.at(0);
  Integer den = 1;
  for (std::size_t k = 1; k < word.size(); ++k) {
    Integer next = word[k] * num + den;
    den = num;
    num = next;
  }
  return abs(num);
}

inline Integer cofactorDeterminant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][c] * cofactorDeterminant(minor);
    total += c % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

inline Matrix dropRowCol(const Matrix& m, std::size_t row, std::size_t col) {
  Matrix out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == row) continue;
    std::vector<long> line;
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      if (c != col) line.push_back(m[r][c]);
    }
    out.push_back(std::move(line));
  }
  return out;
}

// Number of x in (Z/p)^cols with m x = 0 mod p.
inline std::uint64_t bruteSolutionCount(const Matrix& m, std::size_t cols, long p) {
  std::vector<long> x(cols, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& row : m) {
      long s = 0;
      for (std::size_t c = 0; c < cols; ++c) s += row[c] * x[c];
      if (((s % p) + p) % p != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < cols && ++x[k] == p) x[k++] = 0;
    if (k == cols) break;
  }
  return count;
}

// Arcs found by walking strands: start at each slot entering a node as an
// under-strand (or any slot if a strand never passes under), follow the
// strand straight through over-passages and precrossings.
struct WalkArcs {
  int count = 0;
  std::vector<int> slotArc;
};

inline WalkArcs walkArcs(const pk::diagram::PseudoDiagram& d) {
  using pk::diagram::NodeKind;
  const int slots = static_cast<int>(d.nodeCount()) * 4;
  auto isUnder = [&](int s) {
    const NodeKind k = d.kind(static_cast<std::size_t>(s / 4));
    if (k == NodeKind::Pre) return false;
    const int overPair = k == NodeKind::Positive ? 0 : 1;
    return s % 2 != overPair;
  };
  auto opposite = [](int s) { return (s & ~3) | ((s + 2) & 3); };

  WalkArcs out;
  out.slotArc.assign(static_cast<std::size_t>(slots), -1);
  auto label = [&](int start) {
    // Walk from slot `start` away from its node, labelling until an
    // under-passage ends the arc.
    const int arc = out.count++;
    int s = start;
    while (out.slotArc[static_cast<std::size_t>(s)] == -1) {
      out.slotArc[static_cast<std::size_t>(s)] = arc;
      const int t = d.mate(s);
      out.slotArc[static_cast<std::size_t>(t)] = arc;
      if (isUnder(t)) break;
      s = opposite(t);
    }
  };
  for (int s = 0; s < slots; ++s) {
    if (isUnder(s) && out.slotArc[static_cast<std::size_t>(s)] == -1) label(s);
  }
  for (int s = 0; s < slots; ++s) {
    if (out.slotArc[static_cast<std::size_t>(s)] == -1) label(s);
  }
  out.count += d.freeLoops();
  return out;
}

// Coloring matrix assembled from walkArcs: one row per classical crossing.
inline Matrix coloringMatrix(const pk::diagram::PseudoDiagram& d, int* arcCount = nullptr) {
  using pk::diagram::NodeKind;
  const WalkArcs arcs = walkArcs(d);
  Matrix m;
  for (std::size_t v = 0; v < d.nodeCount(); ++v) {
    const NodeKind k = d.kind(v);
    if (k == NodeKind::Pre) continue;
    const int o = k == NodeKind::Positive ? 0 : 1;
    std::vector<long> row(static_cast<std::size_t>(arcs.count), 0);
    const int base = 4 * static_cast<int>(v);
    row[static_cast<std::size_t>(arcs.slotArc[base + o])] += 2;
    row[static_cast<std::size_t>(arcs.slotArc[base + 1 - o])] -= 1;
    row[static_cast<std::size_t>(arcs.slotArc[base + 3 - o])] -= 1;
    m.push_back(std::move(row));
  }
  if (arcCount) *arcCount = arcs.count;
  return m;
}

// Nontrivial colorings mod p exist iff more than the p constant ones solve.
inline bool bruteColorable(const pk::diagram::PseudoDiagram& d, long p) {
  int arcs = 0;
  const Matrix m = coloringMatrix(d, &arcs);
  return bruteSolutionCount(m, static_cast<std::size_t>(arcs), p) > static_cast<std::uint64_t>(p);
}

}  // namespace oracle
