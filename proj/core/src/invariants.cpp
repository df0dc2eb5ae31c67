#include "pk/invariants.hpp"

#include <optional>
#include <set>

#include "pk/error.hpp"

namespace pk::invariants {

using diagram::NodeKind;

ColoringSystem coloringSystem(const PseudoDiagram& d, bool strong) {
  const std::size_t arcs = static_cast<std::size_t>(d.arcs().count);
  ColoringSystem sys;
  sys.matrix = IntMatrix(d.classicalCount(), arcs);
  std::size_t row = 0;
  std::vector<std::pair<int, int>> equalities;
  for (std::size_t v = 0; v < d.nodeCount(); ++v) {
    if (d.kind(v) == NodeKind::Pre) {
      const auto [a, b] = d.throughArcs(static_cast<int>(v));
      if (strong && a != b) equalities.emplace_back(a, b);
      continue;
    }
    const auto [over, under1, under2] = d.crossingArcs(static_cast<int>(v));
    sys.matrix(row, static_cast<std::size_t>(over)) += 2;
    sys.matrix(row, static_cast<std::size_t>(under1)) -= 1;
    sys.matrix(row, static_cast<std::size_t>(under2)) -= 1;
    ++row;
  }
  sys.strongRows = IntMatrix(equalities.size(), arcs);
  for (std::size_t k = 0; k < equalities.size(); ++k) {
    sys.strongRows(k, static_cast<std::size_t>(equalities[k].first)) = 1;
    sys.strongRows(k, static_cast<std::size_t>(equalities[k].second)) = -1;
  }
  return sys;
}

namespace {

void requireClassical(const PseudoDiagram& d) {
  if (const std::size_t k = d.precrossingCount(); k > 0) {
    throw Error(ErrorKind::HasPrecrossings,
                "diagram still has " + std::to_string(k) + " precrossing(s)");
  }
}

bool hasNontrivialSolution(const IntMatrix& m, const Integer& p) {
  return linalg::solutionCount(linalg::smithNormalForm(m), m.cols(), p) > p;
}

void requireModulus(const Integer& p) {
  if (p < 2) throw Error(ErrorKind::InvalidModulus, "modulus must be at least 2");
}

}  // namespace

Integer determinant(const PseudoDiagram& d) {
  requireClassical(d);
  const IntMatrix m = coloringSystem(d, false).matrix;
  const std::size_t cols = m.cols();
  if (cols == 0) return 1;
  if (m.rows() == cols) return linalg::minorDeterminant(m, 0, 0);
  // Product of the first cols-1 invariant factors; absent factors are 0.
  const auto form = linalg::smithNormalForm(m);
  if (form.invariantFactors.size() < cols - 1) return 0;
  Integer det = 1;
  for (std::size_t i = 0; i + 1 < cols; ++i) det *= form.invariantFactors[i];
  return det;
}

nlohmann::json integerJson(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

nlohmann::json PseudoDetReport::toJson() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : resolutions) {
    list.push_back({{"assignment", r.assignment}, {"det", integerJson(r.det)}});
  }
  return {{"symbol", symbol}, {"resolutions", std::move(list)}, {"pseudodet", integerJson(pseudodet)}};
}

PseudoDetReport pseudodeterminant(const PseudoDiagram& d, int cap) {
  PseudoDetReport report;
  report.pseudodet = 0;
  diagram::forEachResolution(
      d,
      [&](const diagram::Resolution& r, const PseudoDiagram& resolved) {
        Integer det = determinant(resolved);
        report.pseudodet = gcd(report.pseudodet, det);
        report.resolutions.push_back({diagram::assignmentString(d, r), std::move(det)});
        return true;
      },
      cap);
  return report;
}

bool isColorable(const PseudoDiagram& d, const Integer& p, int cap) {
  requireModulus(p);
  bool all = true;
  diagram::forEachResolution(
      d,
      [&](const diagram::Resolution&, const PseudoDiagram& resolved) {
        all = hasNontrivialSolution(coloringSystem(resolved, false).matrix, p);
        return all;
      },
      cap);
  return all;
}

bool isStrongColorable(const PseudoDiagram& d, const Integer& p) {
  requireModulus(p);
  return hasNontrivialSolution(coloringSystem(d, true).combined(), p);
}

std::vector<long> coloringNumbers(const PseudoDetReport& report, long bound) {
  std::vector<long> out;
  for (long p = 2; p <= bound; ++p) {
    bool all = true;
    for (const auto& r : report.resolutions) {
      if (gcd(r.det, Integer(p)) == 1) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(p);
  }
  return out;
}

std::vector<long> coloringNumbers(const PseudoDiagram& d, long bound, int cap) {
  return coloringNumbers(pseudodeterminant(d, cap), bound);
}

void forEachColoring(const PseudoDiagram& d, std::int64_t p, bool strong,
                     const std::function<bool(const Coloring&)>& visit, std::uint64_t cap) {
  requireModulus(p);
  if (!strong) requireClassical(d);
  const ColoringSystem sys = coloringSystem(d, strong);
  const linalg::ModularSolutionSpace space(strong ? sys.combined() : sys.matrix, Integer(p));
  Coloring c;
  c.modulus = p;
  space.enumerate(
      [&](std::span<const std::int64_t> x) {
        for (std::size_t i = 1; i < x.size(); ++i) {
          if (x[i] != x[0]) {
            c.values.assign(x.begin(), x.end());
            return visit(c);
          }
        }
        return true;
      },
      cap);
}

std::vector<Coloring> findColorings(const PseudoDiagram& d, std::int64_t p, bool strong,
                                    std::uint64_t cap) {
  std::vector<Coloring> out;
  forEachColoring(
      d, p, strong,
      [&](const Coloring& c) {
        out.push_back(c);
        return true;
      },
      cap);
  return out;
}

int countColors(const Coloring& c) {
  return static_cast<int>(std::set<std::int64_t>(c.values.begin(), c.values.end()).size());
}

Integer maxColors(const PseudoDiagram& d, int cap) { return pseudodeterminant(d, cap).pseudodet; }

KHResult khProperty(const PseudoDiagram& d, int cap, std::uint64_t enumerationCap) {
  KHResult result;
  result.modulus = pseudodeterminant(d, cap).pseudodet;
  if (result.modulus < 2) {
    throw Error(ErrorKind::UndefinedForPseudodetBelow2,
                "pseudodeterminant is " + result.modulus.get_str());
  }
  if (!result.modulus.fits_slong_p()) {
    throw Error(ErrorKind::EnumerationTooLarge, "pseudodeterminant too large to enumerate");
  }
  const std::int64_t p = result.modulus.get_si();
  bool holds = true;
  diagram::forEachResolution(
      d,
      [&](const diagram::Resolution& r, const PseudoDiagram& resolved) {
        std::optional<Coloring> witness;
        if (resolved.arcs().count <= p) {
          forEachColoring(
              resolved, p, false,
              [&](const Coloring& c) {
                if (countColors(c) != static_cast<int>(c.values.size())) return true;
                witness = c;
                return false;
              },
              enumerationCap);
        }
        if (!witness) {
          holds = false;
          return false;
        }
        result.witnesses.push_back({diagram::assignmentString(d, r), std::move(*witness)});
        return true;
      },
      cap);
  result.holds = holds;
  if (!holds) result.witnesses.clear();
  return result;
}

bool detProgression(std::span<const PseudoDiagram> family) {
  if (family.size() != 3) {
    throw Error(ErrorKind::InvalidParameters, "progression check needs exactly three diagrams");
  }
  const Integer a = determinant(family[0]);
  const Integer b = determinant(family[1]);
  const Integer c = determinant(family[2]);
  return b - a == c - b;
}

}  // namespace pk::invariants
