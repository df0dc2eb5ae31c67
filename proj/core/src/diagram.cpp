#include <algorithm>
#include <numeric>
#include <queue>

#include "pk/diagram.hpp"
#include "pk/error.hpp"

namespace pk::diagram {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

  // Dense class ids in order of first appearance.
  std::vector<int> labels(int* classes) {
    std::vector<int> id(parent_.size(), -1);
    std::vector<int> out(parent_.size());
    int next = 0;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      const int r = find(static_cast<int>(x));
      if (id[r] < 0) id[r] = next++;
      out[x] = id[r];
    }
    *classes = next;
    return out;
  }

 private:
  std::vector<int> parent_;
};

bool isUnderPair(NodeKind kind, int k) {
  if (kind == NodeKind::Pre) return false;
  return (kind == NodeKind::Positive) == (k % 2 == 1);
}

}  // namespace

std::string_view kindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::Positive: return "pos";
    case NodeKind::Negative: return "neg";
    case NodeKind::Pre: return "pre";
  }
  return "?";
}

PseudoDiagram::PseudoDiagram(std::vector<NodeKind> kinds, std::vector<int> mate, int freeLoops)
    : kinds_(std::move(kinds)), mate_(std::move(mate)), freeLoops_(freeLoops) {
  const int slots = static_cast<int>(kinds_.size()) * 4;
  if (static_cast<int>(mate_.size()) != slots || freeLoops_ < 0) {
    throw Error(ErrorKind::InvalidDiagram, "diagram needs exactly four joined slots per node");
  }
  for (int s = 0; s < slots; ++s) {
    const int m = mate_[s];
    if (m < 0 || m >= slots || m == s || mate_[m] != s) {
      throw Error(ErrorKind::InvalidDiagram, "slot " + std::to_string(s) + " is not joined");
    }
  }
  computeArcs();
}

void PseudoDiagram::computeArcs() {
  DisjointSets sets(mate_.size());
  for (std::size_t s = 0; s < mate_.size(); ++s) sets.unite(static_cast<int>(s), mate_[s]);
  for (std::size_t v = 0; v < kinds_.size(); ++v) {
    const int base = static_cast<int>(v) * 4;
    for (int k = 0; k < 2; ++k) {
      if (!isUnderPair(kinds_[v], k)) sets.unite(base + k, base + k + 2);
    }
  }
  int classes = 0;
  arcs_.slotArc = sets.labels(&classes);
  arcs_.count = classes + freeLoops_;
}

std::vector<int> PseudoDiagram::precrossings() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < kinds_.size(); ++v) {
    if (kinds_[v] == NodeKind::Pre) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::size_t PseudoDiagram::precrossingCount() const {
  return static_cast<std::size_t>(std::count(kinds_.begin(), kinds_.end(), NodeKind::Pre));
}

int PseudoDiagram::components() const {
  DisjointSets sets(mate_.size());
  for (std::size_t s = 0; s < mate_.size(); ++s) sets.unite(static_cast<int>(s), mate_[s]);
  for (std::size_t v = 0; v < kinds_.size(); ++v) {
    sets.unite(4 * static_cast<int>(v), 4 * static_cast<int>(v) + 2);
    sets.unite(4 * static_cast<int>(v) + 1, 4 * static_cast<int>(v) + 3);
  }
  int classes = 0;
  sets.labels(&classes);
  return classes + freeLoops_;
}

int PseudoDiagram::faceCount() const {
  std::vector<bool> seen(mate_.size(), false);
  int faces = 0;
  for (std::size_t start = 0; start < mate_.size(); ++start) {
    if (seen[start]) continue;
    ++faces;
    int s = static_cast<int>(start);
    while (!seen[s]) {
      seen[s] = true;
      const int t = mate_[s];
      s = (t & ~3) | ((t + 1) & 3);
    }
  }
  return faces;
}

int PseudoDiagram::connectedPieces() const {
  DisjointSets sets(mate_.size());
  for (std::size_t s = 0; s < mate_.size(); ++s) {
    sets.unite(static_cast<int>(s), mate_[s]);
    sets.unite(static_cast<int>(s), static_cast<int>(s & ~std::size_t{3}));
  }
  int classes = 0;
  sets.labels(&classes);
  return classes;
}

std::array<int, 3> PseudoDiagram::crossingArcs(int node) const {
  const NodeKind k = kinds_.at(static_cast<std::size_t>(node));
  if (k == NodeKind::Pre) throw Error(ErrorKind::InvalidDiagram, "precrossing has no over-arc");
  const int o = k == NodeKind::Positive ? 0 : 1;
  const int u = 1 - o;
  const auto& a = arcs_.slotArc;
  return {a[4 * node + o], a[4 * node + u], a[4 * node + u + 2]};
}

std::pair<int, int> PseudoDiagram::throughArcs(int node) const {
  const auto& a = arcs_.slotArc;
  if (kinds_.at(static_cast<std::size_t>(node)) == NodeKind::Negative) {
    return {a[4 * node + 1], a[4 * node]};
  }
  return {a[4 * node], a[4 * node + 1]};
}

PseudoDiagram resolve(const PseudoDiagram& d, const Resolution& r) {
  std::vector<NodeKind> kinds = d.kinds();
  for (const auto& [node, choice] : r.choices) {
    if (node < 0 || static_cast<std::size_t>(node) >= kinds.size()) {
      throw Error(ErrorKind::UnknownNode, "no node " + std::to_string(node));
    }
    if (d.kind(static_cast<std::size_t>(node)) != NodeKind::Pre) {
      throw Error(ErrorKind::NotAPrecrossing, "node " + std::to_string(node) + " is classical");
    }
    if (choice == NodeKind::Pre) {
      throw Error(ErrorKind::InvalidDiagram, "a resolution must choose a crossing");
    }
    kinds[static_cast<std::size_t>(node)] = choice;
  }
  return PseudoDiagram(std::move(kinds), d.mates(), d.freeLoops());
}

std::string assignmentString(const PseudoDiagram& d, const Resolution& r) {
  std::string out;
  for (int node : d.precrossings()) {
    char c = '.';
    for (const auto& [n, choice] : r.choices) {
      if (n == node) c = choice == NodeKind::Positive ? '+' : '-';
    }
    out += c;
  }
  return out;
}

void forEachResolution(const PseudoDiagram& d,
                       const std::function<bool(const Resolution&, const PseudoDiagram&)>& visit,
                       int cap) {
  const std::vector<int> pre = d.precrossings();
  const int k = static_cast<int>(pre.size());
  if (k > cap) {
    throw Error(ErrorKind::TooManyPrecrossings,
                std::to_string(k) + " precrossings exceed the cap of " + std::to_string(cap));
  }
  const std::uint64_t total = std::uint64_t{1} << k;
  std::vector<NodeKind> kinds = d.kinds();
  Resolution r;
  r.choices.resize(static_cast<std::size_t>(k));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int j = 0; j < k; ++j) {
      const bool negative = (mask >> (k - 1 - j)) & 1U;
      const NodeKind choice = negative ? NodeKind::Negative : NodeKind::Positive;
      r.choices[static_cast<std::size_t>(j)] = {pre[static_cast<std::size_t>(j)], choice};
      kinds[static_cast<std::size_t>(pre[static_cast<std::size_t>(j)])] = choice;
    }
    if (!visit(r, PseudoDiagram(kinds, d.mates(), d.freeLoops()))) return;
  }
}

std::vector<Resolution> fullResolutions(const PseudoDiagram& d, int cap) {
  std::vector<Resolution> out;
  forEachResolution(
      d,
      [&](const Resolution& r, const PseudoDiagram&) {
        out.push_back(r);
        return true;
      },
      cap);
  return out;
}

bool isPseudoalternating(const PseudoDiagram& d) {
  // x[v] = 1 when the over-strand of v runs through slots 0 and 2. Along a
  // strand joining slot s to slot t, alternation forces
  // x[s/4] ^ x[t/4] = 1 ^ (s%2) ^ (t%2).
  const int n = static_cast<int>(d.nodeCount());
  std::vector<int> x(n, -1);
  for (int root = 0; root < n; ++root) {
    if (x[root] >= 0) continue;
    std::vector<int> piece{root};
    x[root] = 0;
    for (std::size_t head = 0; head < piece.size(); ++head) {
      const int u = piece[head];
      for (int k = 0; k < 4; ++k) {
        const int s = 4 * u + k;
        const int t = d.mate(s);
        const int w = t / 4;
        const int want = x[u] ^ 1 ^ (s % 2) ^ (t % 2);
        if (x[w] < 0) {
          x[w] = want;
          piece.push_back(w);
        } else if (x[w] != want) {
          return false;
        }
      }
    }
    bool agree = true;
    bool disagree = true;
    for (int v : piece) {
      const NodeKind k = d.kind(static_cast<std::size_t>(v));
      if (k == NodeKind::Pre) continue;
      const int actual = k == NodeKind::Positive ? 1 : 0;
      if (actual == x[v]) disagree = false;
      else agree = false;
    }
    if (!agree && !disagree) return false;
  }
  return true;
}

namespace {

int localKind(NodeKind k, int offset) {
  if (k == NodeKind::Pre) return 2;
  const bool positive = (k == NodeKind::Positive) != (offset % 2 == 1);
  return positive ? 0 : 1;
}

// Breadth-first relabelling that fixes node order and slot rotation from the
// seeds. Returns the code of every node reached.
struct Walk {
  std::vector<int> id;
  std::vector<int> offset;
  std::vector<int> order;

  explicit Walk(std::size_t nodes) : id(nodes, -1), offset(nodes, 0) {}

  void seed(int slot) {
    const int v = slot / 4;
    if (id[v] >= 0) return;
    id[v] = static_cast<int>(order.size());
    offset[v] = slot % 4;
    order.push_back(v);
  }

  int local(int slot) const {
    const int v = slot / 4;
    return id[v] * 4 + ((slot % 4) - offset[v] + 4) % 4;
  }

  template <typename Kinds, typename Mate>
  void run(const Kinds& kinds, const Mate& mate, std::vector<int>& code) {
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int v = order[head];
      code.push_back(localKind(kinds[static_cast<std::size_t>(v)], offset[v]));
      for (int k = 0; k < 4; ++k) {
        const int m = mate(4 * v + (offset[v] + k) % 4);
        if (isPortRef(m)) {
          code.push_back(m);
          continue;
        }
        seed(m);
        code.push_back(local(m));
      }
    }
  }
};

}  // namespace

std::vector<int> canonicalCode(const PseudoDiagram& d) {
  const std::size_t n = d.nodeCount();
  auto mate = [&](int s) { return d.mate(s); };
  DisjointSets sets(4 * n);
  for (std::size_t s = 0; s < 4 * n; ++s) {
    sets.unite(static_cast<int>(s), d.mate(static_cast<int>(s)));
    sets.unite(static_cast<int>(s), static_cast<int>(s & ~std::size_t{3}));
  }
  int classes = 0;
  const std::vector<int> piece = sets.labels(&classes);

  std::vector<std::vector<int>> best(static_cast<std::size_t>(classes));
  for (std::size_t s = 0; s < 4 * n; ++s) {
    Walk walk(n);
    walk.seed(static_cast<int>(s));
    std::vector<int> code;
    walk.run(d.kinds(), mate, code);
    auto& b = best[static_cast<std::size_t>(piece[s])];
    if (b.empty() || code < b) b = std::move(code);
  }
  std::sort(best.begin(), best.end());
  std::vector<int> out{d.freeLoops(), classes};
  for (const auto& b : best) {
    out.push_back(static_cast<int>(b.size()));
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::vector<int> canonicalCode(const Tangle& t) {
  const std::size_t n = t.nodeCount();
  Walk walk(n);
  for (int b = 0; b < 4; ++b) {
    if (!isPortRef(t.port[b])) walk.seed(t.port[b]);
  }
  std::vector<int> out{t.freeLoops, static_cast<int>(n)};
  for (int b = 0; b < 4; ++b) {
    out.push_back(isPortRef(t.port[b]) ? t.port[b] : walk.local(t.port[b]));
  }
  walk.run(t.kinds, [&](int s) { return t.mate[static_cast<std::size_t>(s)]; }, out);
  out.push_back(static_cast<int>(n - walk.order.size()));
  return out;
}

}  // namespace pk::diagram
