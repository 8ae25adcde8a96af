// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace basilica {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// Undirected multigraph with loops. Vertex names are optional.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count);

  std::size_t vertex_count() const { return incidence_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  NodeId add_vertex(std::string name = {});
  EdgeId add_edge(NodeId u, NodeId v);

  const std::pair<NodeId, NodeId>& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
  const std::vector<EdgeId>& incident(NodeId v) const { return incidence_[v]; }
  NodeId other(EdgeId e, NodeId v) const {
    return edges_[e].first == v ? edges_[e].second : edges_[e].first;
  }
  bool is_loop(EdgeId e) const { return edges_[e].first == edges_[e].second; }
  // A loop counts twice.
  std::size_t degree(NodeId v) const;
  std::size_t loop_count(NodeId v) const;

  const std::string& name(NodeId v) const { return names_[v]; }
  void set_name(NodeId v, std::string name) { names_[v] = std::move(name); }

  // Distances from `source`, kUnreachable when disconnected; `blocked`
  // (if any) is treated as deleted.
  std::vector<std::size_t> distances(NodeId source, std::size_t limit = kUnreachable,
                                     NodeId blocked = std::numeric_limits<NodeId>::max()) const;
  std::size_t component_count(NodeId blocked = std::numeric_limits<NodeId>::max()) const;

 private:
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::string> names_;
};

struct RootedGraph {
  Multigraph graph;
  NodeId root = 0;
  // origin[i] is the vertex of the source graph that became vertex i.
  std::vector<NodeId> origin;
};

// Induced subgraph on `vertices` (every edge with both ends inside, loops
// and parallel edges kept), rooted at `root`.
RootedGraph induced_subgraph(const Multigraph& g, const std::vector<NodeId>& vertices, NodeId root);

nlohmann::json to_json(const Multigraph& g);
Multigraph multigraph_from_json(const nlohmann::json& j);
std::string to_dot(const Multigraph& g, const std::string& graph_name = "G");

}  // namespace basilica
