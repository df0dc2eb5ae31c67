#include "pk/polyhedra.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_map>

#include "pk/error.hpp"

namespace pk {

namespace detail {
extern const std::string_view kBuiltinPolyhedraJson;
}

std::string PolyhedronTemplate::key() const {
  return std::to_string(vertices) + std::string(static_cast<std::size_t>(stars), '*');
}

void PolyhedronTemplate::validate() const {
  const int halfEdges = 4 * vertices;
  if (vertices < 1 || stars < 1 || static_cast<int>(mate.size()) != halfEdges ||
      static_cast<int>(nw.size()) != vertices || static_cast<int>(reversed.size()) != vertices) {
    throw Error(ErrorKind::InvalidTemplate, "template " + key() + " has inconsistent sizes");
  }
  for (int h = 0; h < halfEdges; ++h) {
    const int m = mate[h];
    if (m < 0 || m >= halfEdges || m == h || mate[m] != h) {
      throw Error(ErrorKind::InvalidTemplate,
                  "template " + key() + ": half-edge " + std::to_string(h) + " is not paired");
    }
  }
  for (int v = 0; v < vertices; ++v) {
    if (nw[v] < 0 || nw[v] > 3) {
      throw Error(ErrorKind::InvalidTemplate, "template " + key() + ": bad NW slot");
    }
  }
}

std::optional<std::pair<int, int>> parsePolyhedronKey(std::string_view key) {
  int n = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), n);
  if (ec != std::errc() || n < 1) return std::nullopt;
  std::string_view rest(ptr, static_cast<std::size_t>(key.data() + key.size() - ptr));
  if (rest.empty() || rest.find_first_not_of('*') != std::string_view::npos) return std::nullopt;
  return std::pair{n, static_cast<int>(rest.size())};
}

nlohmann::json templateToJson(const PolyhedronTemplate& t) {
  static constexpr std::array<const char*, 4> kPorts{"nw", "sw", "se", "ne"};
  nlohmann::json nodes = nlohmann::json::array();
  for (int v = 0; v < t.vertices; ++v) {
    nlohmann::json stubs = nlohmann::json::object();
    for (int p = 0; p < 4; ++p) stubs[kPorts[p]] = t.halfEdge(v, p);
    nodes.push_back({{"id", v},
                     {"slots", {4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3}},
                     {"stubs", std::move(stubs)}});
  }
  nlohmann::json joins = nlohmann::json::array();
  for (int h = 0; h < 4 * t.vertices; ++h) {
    if (h < t.mate[h]) joins.push_back({h, t.mate[h]});
  }
  return {{"key", t.key()}, {"nodes", std::move(nodes)}, {"joins", std::move(joins)}};
}

PolyhedronTemplate templateFromJson(const nlohmann::json& j) {
  PolyhedronTemplate t;
  try {
    const auto key = parsePolyhedronKey(j.at("key").get<std::string>());
    if (!key) throw Error(ErrorKind::InvalidTemplate, "bad polyhedron key");
    t.vertices = key->first;
    t.stars = key->second;
    const auto& nodes = j.at("nodes");
    if (static_cast<int>(nodes.size()) != t.vertices) {
      throw Error(ErrorKind::InvalidTemplate, "template " + t.key() + " has wrong node count");
    }
    // Endpoint ids in the file are arbitrary; map them to 4*v + k.
    std::unordered_map<long, int> local;
    t.nw.assign(t.vertices, 0);
    t.reversed.assign(t.vertices, false);
    std::vector<bool> seen(t.vertices, false);
    for (const auto& node : nodes) {
      const int v = node.at("id").get<int>();
      if (v < 0 || v >= t.vertices || seen[v]) {
        throw Error(ErrorKind::InvalidTemplate, "template node ids must be 0..n-1");
      }
      seen[v] = true;
      const auto slots = node.at("slots").get<std::vector<long>>();
      if (slots.size() != 4) throw Error(ErrorKind::InvalidTemplate, "nodes need 4 slots");
      for (int k = 0; k < 4; ++k) {
        if (!local.emplace(slots[k], 4 * v + k).second) {
          throw Error(ErrorKind::InvalidTemplate, "duplicate endpoint id");
        }
      }
      const auto& stubs = node.at("stubs");
      const std::array<long, 4> ports{stubs.at("nw").get<long>(), stubs.at("sw").get<long>(),
                                      stubs.at("se").get<long>(), stubs.at("ne").get<long>()};
      auto it = std::find(slots.begin(), slots.end(), ports[0]);
      if (it == slots.end()) throw Error(ErrorKind::InvalidTemplate, "nw stub is not a slot");
      const int nw = static_cast<int>(it - slots.begin());
      auto follows = [&](int dir) {
        for (int p = 1; p < 4; ++p) {
          if (slots[(nw + dir * p + 4) % 4] != ports[p]) return false;
        }
        return true;
      };
      const bool ccw = follows(1);
      if (!ccw && !follows(-1)) {
        throw Error(ErrorKind::InvalidTemplate,
                    "stubs must follow the slot rotation in one direction");
      }
      t.nw[v] = nw;
      t.reversed[v] = !ccw;
    }
    t.mate.assign(4 * t.vertices, -1);
    for (const auto& join : j.at("joins")) {
      const auto pair = join.get<std::array<long, 2>>();
      auto a = local.find(pair[0]);
      auto b = local.find(pair[1]);
      if (a == local.end() || b == local.end()) {
        throw Error(ErrorKind::InvalidTemplate, "join references unknown endpoint");
      }
      if (t.mate[a->second] != -1 || t.mate[b->second] != -1) {
        throw Error(ErrorKind::InvalidTemplate, "endpoint joined twice");
      }
      t.mate[a->second] = b->second;
      t.mate[b->second] = a->second;
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidTemplate, e.what());
  }
  t.validate();
  return t;
}

const PolyhedronRegistry& PolyhedronRegistry::builtin() {
  static const PolyhedronRegistry registry =
      fromJson(nlohmann::json::parse(detail::kBuiltinPolyhedraJson));
  return registry;
}

PolyhedronRegistry PolyhedronRegistry::fromJson(const nlohmann::json& doc) {
  PolyhedronRegistry r;
  r.merge(doc);
  return r;
}

void PolyhedronRegistry::merge(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("polyhedra")) {
    throw Error(ErrorKind::InvalidTemplate, "template file needs a \"polyhedra\" array");
  }
  for (const auto& entry : doc.at("polyhedra")) add(templateFromJson(entry));
}

nlohmann::json PolyhedronRegistry::toJson() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [key, t] : templates_) list.push_back(templateToJson(t));
  return {{"version", 1}, {"polyhedra", std::move(list)}};
}

void PolyhedronRegistry::add(PolyhedronTemplate t) {
  t.validate();
  const auto key = std::pair{t.vertices, t.stars};
  templates_.insert_or_assign(key, std::move(t));
}

const PolyhedronTemplate* PolyhedronRegistry::find(int vertices, int stars) const {
  auto it = templates_.find({vertices, stars});
  return it == templates_.end() ? nullptr : &it->second;
}

std::vector<std::string> PolyhedronRegistry::keys() const {
  std::vector<std::string> out;
  for (const auto& [key, t] : templates_) out.push_back(t.key());
  return out;
}

}  // namespace pk
