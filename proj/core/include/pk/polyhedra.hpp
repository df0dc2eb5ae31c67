#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace pk {

/// A basic polyhedron n*^m with a fixed vertex numbering.
///
/// Half-edge `4*v + k` is the k-th half-edge of vertex v in counterclockwise
/// order; `mate` pairs half-edges into the edges of the 4-regular plane map.
/// When a tangle is substituted into vertex v, its NW end is attached to
/// half-edge `nw[v]` and SW, SE, NE follow counterclockwise, or clockwise
/// when `reversed[v]` is set (the tangle is inserted face down).
struct PolyhedronTemplate {
  int vertices = 0;
  int stars = 1;
  std::vector<int> mate;
  std::vector<int> nw;
  std::vector<bool> reversed;

  std::string key() const;
  /// Half-edge of vertex v that receives tangle end `port` (0=NW,1=SW,2=SE,3=NE).
  int halfEdge(int vertex, int port) const {
    const int step = reversed[vertex] ? 4 - port : port;
    return 4 * vertex + (nw[vertex] + step) % 4;
  }
  /// Tangle end received by half-edge h; inverse of halfEdge.
  int portAt(int h) const {
    const int v = h / 4;
    const int d = (h % 4 - nw[v] + 4) % 4;
    return reversed[v] ? (4 - d) % 4 : d;
  }
  /// Throws InvalidTemplate when mate is not a fixed-point-free involution.
  void validate() const;
};

/// Lookup table of polyhedron templates keyed by (vertex count, star count).
class PolyhedronRegistry {
 public:
  PolyhedronRegistry() = default;

  /// Templates compiled into the library (1*, 6*, 8*, 9*).
  static const PolyhedronRegistry& builtin();

  static PolyhedronRegistry fromJson(const nlohmann::json& doc);
  nlohmann::json toJson() const;

  void add(PolyhedronTemplate t);
  /// Adds or replaces every template in `doc`.
  void merge(const nlohmann::json& doc);

  const PolyhedronTemplate* find(int vertices, int stars) const;
  std::vector<std::string> keys() const;

 private:
  std::map<std::pair<int, int>, PolyhedronTemplate> templates_;
};

/// Parses keys such as "6*" or "10**".
std::optional<std::pair<int, int>> parsePolyhedronKey(std::string_view key);

nlohmann::json templateToJson(const PolyhedronTemplate& t);
PolyhedronTemplate templateFromJson(const nlohmann::json& j);

}  // namespace pk
