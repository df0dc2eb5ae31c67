#include <algorithm>
#include <unordered_map>

#include "pk/diagram.hpp"
#include "pk/error.hpp"

namespace pk::diagram {

nlohmann::json toJson(const PseudoDiagram& d) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t v = 0; v < d.nodeCount(); ++v) {
    const int base = 4 * static_cast<int>(v);
    nlohmann::json over = nullptr;
    if (d.kind(v) == NodeKind::Positive) over = 0;
    if (d.kind(v) == NodeKind::Negative) over = 1;
    nodes.push_back({{"id", v},
                     {"kind", kindName(d.kind(v))},
                     {"slots", {base, base + 1, base + 2, base + 3}},
                     {"over", over}});
  }
  nlohmann::json joins = nlohmann::json::array();
  for (int s = 0; s < static_cast<int>(d.mates().size()); ++s) {
    if (s < d.mate(s)) joins.push_back({s, d.mate(s)});
  }
  nlohmann::json out = {{"nodes", std::move(nodes)}, {"joins", std::move(joins)}};
  if (d.freeLoops() > 0) out["loops"] = d.freeLoops();
  return out;
}

PseudoDiagram diagramFromJson(const nlohmann::json& j) {
  try {
    const auto& nodes = j.at("nodes");
    const std::size_t n = nodes.size();
    std::vector<NodeKind> kinds(n, NodeKind::Pre);
    std::vector<bool> seen(n, false);
    std::unordered_map<long, int> local;
    for (const auto& node : nodes) {
      const long id = node.at("id").get<long>();
      if (id < 0 || static_cast<std::size_t>(id) >= n || seen[static_cast<std::size_t>(id)]) {
        throw Error(ErrorKind::InvalidDiagram, "node ids must be 0..n-1 without repeats");
      }
      seen[static_cast<std::size_t>(id)] = true;

      std::optional<int> over;
      if (node.contains("over") && !node.at("over").is_null()) {
        over = node.at("over").get<int>();
        if (*over != 0 && *over != 1) throw Error(ErrorKind::InvalidDiagram, "over must be 0 or 1");
      }
      NodeKind kind;
      if (node.contains("kind")) {
        const auto name = node.at("kind").get<std::string>();
        if (name == "pos") kind = NodeKind::Positive;
        else if (name == "neg") kind = NodeKind::Negative;
        else if (name == "pre") kind = NodeKind::Pre;
        else throw Error(ErrorKind::InvalidDiagram, "unknown node kind '" + name + "'");
        const bool consistent = kind == NodeKind::Pre ? !over.has_value()
                                                      : over == (kind == NodeKind::Positive ? 0 : 1) ||
                                                            !over.has_value();
        if (!consistent) throw Error(ErrorKind::InvalidDiagram, "kind and over disagree");
      } else {
        kind = !over ? NodeKind::Pre : *over == 0 ? NodeKind::Positive : NodeKind::Negative;
      }
      kinds[static_cast<std::size_t>(id)] = kind;

      const auto slots = node.at("slots").get<std::vector<long>>();
      if (slots.size() != 4) throw Error(ErrorKind::InvalidDiagram, "nodes need four slots");
      for (int k = 0; k < 4; ++k) {
        if (!local.emplace(slots[k], 4 * static_cast<int>(id) + k).second) {
          throw Error(ErrorKind::InvalidDiagram, "endpoint id used twice");
        }
      }
    }
    std::vector<int> mate(4 * n, -1);
    for (const auto& join : j.at("joins")) {
      const auto pair = join.get<std::array<long, 2>>();
      const auto a = local.find(pair[0]);
      const auto b = local.find(pair[1]);
      if (a == local.end() || b == local.end()) {
        throw Error(ErrorKind::InvalidDiagram, "join references an unknown endpoint");
      }
      if (mate[a->second] != -1 || mate[b->second] != -1 || a->second == b->second) {
        throw Error(ErrorKind::InvalidDiagram, "endpoint joined twice");
      }
      mate[a->second] = b->second;
      mate[b->second] = a->second;
    }
    const int loops = j.contains("loops") ? j.at("loops").get<int>() : 0;
    return PseudoDiagram(std::move(kinds), std::move(mate), loops);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidDiagram, e.what());
  }
}

}  // namespace pk::diagram
