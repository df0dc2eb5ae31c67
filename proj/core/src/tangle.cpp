#include <optional>

#include "pk/diagram.hpp"
#include "pk/error.hpp"

namespace pk::diagram {

namespace {

using notation::ConwayExpr;
using notation::Elementary;

// End b of part i is addressed as 4*i + b.
struct Assembly {
  std::vector<const Tangle*> parts;
  std::vector<std::pair<int, int>> glue;
  std::array<int, 4> outer{-1, -1, -1, -1};
};

struct Assembled {
  std::vector<NodeKind> kinds;
  std::vector<int> mate;
  std::array<int, 4> port{};
  int freeLoops = 0;
};

// Wires the parts together, following strands through crossingless
// port-to-port connections. Closed port-only cycles become free loops.
Assembled assemble(const Assembly& a) {
  const int ends = static_cast<int>(a.parts.size()) * 4;
  std::vector<int> gluedTo(ends, -1);
  std::vector<int> outerIndex(ends, -1);
  std::vector<bool> used(ends, false);
  for (const auto& [x, y] : a.glue) {
    gluedTo[x] = y;
    gluedTo[y] = x;
  }
  for (int b = 0; b < 4; ++b) {
    if (a.outer[b] >= 0) outerIndex[a.outer[b]] = b;
  }

  Assembled out;
  std::vector<int> offset;
  for (const Tangle* t : a.parts) {
    offset.push_back(static_cast<int>(out.kinds.size()) * 4);
    out.kinds.insert(out.kinds.end(), t->kinds.begin(), t->kinds.end());
    out.freeLoops += t->freeLoops;
  }
  out.mate.assign(out.kinds.size() * 4, 0);

  // Leaves through end idx and returns the slot or outer port reached.
  auto exitFrom = [&](int idx) {
    for (;;) {
      if (outerIndex[idx] >= 0) return portRef(outerIndex[idx]);
      const int j = gluedTo[idx];
      if (j < 0) throw Error(ErrorKind::InvalidDiagram, "tangle end left unconnected");
      used[idx] = used[j] = true;
      const int inner = a.parts[j / 4]->port[j % 4];
      if (!isPortRef(inner)) return offset[j / 4] + inner;
      idx = (j / 4) * 4 + portOf(inner);
    }
  };

  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    const Tangle& t = *a.parts[i];
    for (std::size_t s = 0; s < t.mate.size(); ++s) {
      const int g = offset[i] + static_cast<int>(s);
      const int m = t.mate[s];
      if (!isPortRef(m)) {
        out.mate[g] = offset[i] + m;
        continue;
      }
      const int target = exitFrom(static_cast<int>(i) * 4 + portOf(m));
      out.mate[g] = target;
      if (isPortRef(target)) out.port[portOf(target)] = g;
    }
  }
  for (int b = 0; b < 4; ++b) {
    const int idx = a.outer[b];
    if (idx < 0) continue;
    const int inner = a.parts[idx / 4]->port[idx % 4];
    if (!isPortRef(inner)) {
      out.port[b] = offset[idx / 4] + inner;
    } else {
      out.port[b] = exitFrom((idx / 4) * 4 + portOf(inner));
    }
  }
  for (int idx = 0; idx < ends; ++idx) {
    if (gluedTo[idx] < 0 || used[idx]) continue;
    int cur = idx;
    do {
      const int j = gluedTo[cur];
      used[cur] = used[j] = true;
      cur = (j / 4) * 4 + portOf(a.parts[j / 4]->port[j % 4]);
    } while (cur != idx);
    ++out.freeLoops;
  }
  return out;
}

Tangle toTangle(Assembled a) {
  Tangle t;
  t.kinds = std::move(a.kinds);
  t.mate = std::move(a.mate);
  t.port = a.port;
  t.freeLoops = a.freeLoops;
  return t;
}

PseudoDiagram toDiagram(Assembled a) {
  return PseudoDiagram(std::move(a.kinds), std::move(a.mate), a.freeLoops);
}

// Relabels boundary ends by b -> f(b); node slots by s -> g(s).
template <typename PortMap, typename SlotMap>
Tangle relabel(const Tangle& t, PortMap f, SlotMap g) {
  Tangle r;
  r.kinds = t.kinds;
  r.freeLoops = t.freeLoops;
  r.mate.assign(t.mate.size(), 0);
  auto map = [&](int x) { return isPortRef(x) ? portRef(f(portOf(x))) : g(x); };
  for (std::size_t s = 0; s < t.mate.size(); ++s) {
    r.mate[g(static_cast<int>(s))] = map(t.mate[s]);
  }
  for (int b = 0; b < 4; ++b) r.port[f(b)] = map(t.port[b]);
  return r;
}

}  // namespace

Tangle Tangle::elementary(Elementary kind) {
  Tangle t;
  if (kind == Elementary::Zero) {
    t.port = {portRef(NE), portRef(SE), portRef(SW), portRef(NW)};
    return t;
  }
  t.kinds = {kind == Elementary::Pos   ? NodeKind::Positive
             : kind == Elementary::Neg ? NodeKind::Negative
                                       : NodeKind::Pre};
  t.mate = {portRef(NW), portRef(SW), portRef(SE), portRef(NE)};
  t.port = {0, 1, 2, 3};
  return t;
}

Tangle reflect(const Tangle& t) {
  // Mirror in the NW-SE line reverses the cyclic order everywhere.
  auto flip = [](int b) { return (4 - b) % 4; };
  auto slot = [](int s) { return (s & ~3) | ((4 - (s & 3)) & 3); };
  return relabel(t, flip, slot);
}

Tangle rotate90(const Tangle& t) {
  return relabel(t, [](int b) { return (b + 1) % 4; }, [](int s) { return s; });
}

Tangle sum(const Tangle& a, const Tangle& b) {
  Assembly as;
  as.parts = {&a, &b};
  as.glue = {{NE, 4 + NW}, {SE, 4 + SW}};
  as.outer = {NW, SW, 4 + SE, 4 + NE};
  return toTangle(assemble(as));
}

Tangle product(const Tangle& a, const Tangle& b) { return sum(reflect(a), b); }

Tangle ramification(const std::vector<Tangle>& items) {
  if (items.empty()) throw Error(ErrorKind::InvalidDiagram, "empty ramification");
  Tangle acc = reflect(items.front());
  for (std::size_t k = 1; k < items.size(); ++k) acc = sum(acc, reflect(items[k]));
  return acc;
}

Tangle buildTangle(const ConwayExpr& expr) {
  using Op = ConwayExpr::Op;
  switch (expr.op) {
    case Op::Elementary:
      return Tangle::elementary(expr.kind);
    case Op::Twist: {
      const Tangle unit = Tangle::elementary(expr.kind);
      Tangle acc = unit;
      for (int k = 1; k < expr.count; ++k) acc = sum(acc, unit);
      return acc;
    }
    case Op::Product:
      return product(buildTangle(expr.children[0]), buildTangle(expr.children[1]));
    case Op::Sum:
      return sum(buildTangle(expr.children[0]), buildTangle(expr.children[1]));
    case Op::Ramification: {
      std::vector<Tangle> items;
      items.reserve(expr.children.size());
      for (const ConwayExpr& c : expr.children) items.push_back(buildTangle(c));
      return ramification(items);
    }
    case Op::Reflect:
      return reflect(buildTangle(expr.children[0]));
    case Op::Polyhedral:
      break;
  }
  throw Error(ErrorKind::InvalidDiagram, "a polyhedral symbol is a closed diagram, not a tangle");
}

PseudoDiagram numeratorClose(const Tangle& t) {
  Assembly as;
  as.parts = {&t};
  as.glue = {{NW, NE}, {SW, SE}};
  return toDiagram(assemble(as));
}

PseudoDiagram denominatorClose(const Tangle& t) {
  Assembly as;
  as.parts = {&t};
  as.glue = {{NW, SW}, {NE, SE}};
  return toDiagram(assemble(as));
}

PseudoDiagram buildPolyhedral(const ConwayExpr& expr, const PolyhedronRegistry& registry) {
  if (expr.op != ConwayExpr::Op::Polyhedral) {
    throw Error(ErrorKind::InvalidDiagram, "not a polyhedral symbol");
  }
  const PolyhedronTemplate* tpl = registry.find(expr.vertices, expr.stars);
  if (!tpl) {
    throw Error(ErrorKind::UnsupportedPolyhedron,
                "no template for " + std::to_string(expr.vertices) +
                    std::string(static_cast<std::size_t>(expr.stars), '*'));
  }
  if (static_cast<int>(expr.children.size()) != tpl->vertices) {
    throw Error(ErrorKind::TooManySlots, "slot count does not match the polyhedron");
  }
  std::vector<Tangle> tangles;
  tangles.reserve(expr.children.size());
  for (std::size_t v = 0; v < expr.children.size(); ++v) {
    // A reversed vertex takes the mirror image, which keeps the map planar.
    Tangle t = buildTangle(expr.children[v]);
    tangles.push_back(tpl->reversed[v] ? reflect(t) : std::move(t));
  }

  Assembly as;
  for (const Tangle& t : tangles) as.parts.push_back(&t);
  auto end = [&](int h) {
    const int v = h / 4;
    return 4 * v + (h % 4 - tpl->nw[static_cast<std::size_t>(v)] + 4) % 4;
  };
  for (int h = 0; h < 4 * tpl->vertices; ++h) {
    if (h < tpl->mate[h]) as.glue.emplace_back(end(h), end(tpl->mate[h]));
  }
  return toDiagram(assemble(as));
}

PseudoDiagram buildDiagram(const ConwayExpr& expr, const PolyhedronRegistry& registry) {
  if (expr.isPolyhedral()) return buildPolyhedral(expr, registry);
  return numeratorClose(buildTangle(expr));
}

PseudoDiagram buildDiagram(std::string_view symbol, const PolyhedronRegistry& registry) {
  return buildDiagram(notation::parse(symbol, registry), registry);
}

}  // namespace pk::diagram
