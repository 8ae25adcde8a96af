// SPDX-License-Identifier: Apache-2.0
#include "basilica/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace basilica {

Multigraph::Multigraph(std::size_t vertex_count)
    : incidence_(vertex_count), names_(vertex_count) {}

NodeId Multigraph::add_vertex(std::string name) {
  incidence_.emplace_back();
  names_.push_back(std::move(name));
  return static_cast<NodeId>(incidence_.size() - 1);
}

EdgeId Multigraph::add_edge(NodeId u, NodeId v) {
  if (u >= vertex_count() || v >= vertex_count()) throw std::out_of_range("edge endpoint");
  const EdgeId e = static_cast<EdgeId>(edges_.size());
  edges_.emplace_back(u, v);
  incidence_[u].push_back(e);
  if (u != v) incidence_[v].push_back(e);
  return e;
}

std::size_t Multigraph::degree(NodeId v) const {
  std::size_t d = 0;
  for (EdgeId e : incidence_[v]) d += is_loop(e) ? 2 : 1;
  return d;
}

std::size_t Multigraph::loop_count(NodeId v) const {
  return static_cast<std::size_t>(
      std::count_if(incidence_[v].begin(), incidence_[v].end(), [&](EdgeId e) { return is_loop(e); }));
}

std::vector<std::size_t> Multigraph::distances(NodeId source, std::size_t limit,
                                               NodeId blocked) const {
  std::vector<std::size_t> dist(vertex_count(), kUnreachable);
  if (source == blocked) return dist;
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    if (dist[v] == limit) continue;
    for (EdgeId e : incidence_[v]) {
      const NodeId w = other(e, v);
      if (w == blocked || dist[w] != kUnreachable) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::size_t Multigraph::component_count(NodeId blocked) const {
  std::vector<bool> seen(vertex_count(), false);
  std::size_t count = 0;
  for (NodeId s = 0; s < vertex_count(); ++s) {
    if (s == blocked || seen[s]) continue;
    ++count;
    std::vector<NodeId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (EdgeId e : incidence_[v]) {
        const NodeId w = other(e, v);
        if (w == blocked || seen[w]) continue;
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return count;
}

RootedGraph induced_subgraph(const Multigraph& g, const std::vector<NodeId>& vertices, NodeId root) {
  RootedGraph out;
  std::unordered_map<NodeId, NodeId> local;
  local.reserve(vertices.size());
  for (NodeId v : vertices) {
    if (local.count(v)) continue;
    local.emplace(v, out.graph.add_vertex(g.name(v)));
    out.origin.push_back(v);
  }
  auto it = local.find(root);
  if (it == local.end()) throw std::invalid_argument("root not in the induced vertex set");
  out.root = it->second;
  for (NodeId v : out.origin) {
    for (EdgeId e : g.incident(v)) {
      const NodeId w = g.other(e, v);
      auto jt = local.find(w);
      if (jt == local.end()) continue;
      // Each non-loop edge is seen from both ends; keep it once.
      if (w == v || v < w) out.graph.add_edge(local.at(v), jt->second);
    }
  }
  return out;
}

nlohmann::json to_json(const Multigraph& g) {
  auto name = [&](NodeId v) { return g.name(v).empty() ? std::to_string(v) : g.name(v); };
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges()) {
    std::string a = name(u), b = name(v);
    if (b < a) std::swap(a, b);
    edges.emplace_back(std::move(a), std::move(b));
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::string> vertices;
  for (NodeId v = 0; v < g.vertex_count(); ++v) vertices.push_back(name(v));
  std::sort(vertices.begin(), vertices.end());
  nlohmann::json je = nlohmann::json::array();
  for (const auto& [u, v] : edges) je.push_back({{"u", u}, {"v", v}});
  return {{"vertices", vertices}, {"edges", je}};
}

Multigraph multigraph_from_json(const nlohmann::json& j) {
  Multigraph g;
  std::unordered_map<std::string, NodeId> ids;
  for (const auto& v : j.at("vertices")) {
    const std::string name = v.get<std::string>();
    if (ids.count(name)) throw std::invalid_argument("duplicate vertex " + name);
    ids.emplace(name, g.add_vertex(name));
  }
  for (const auto& e : j.at("edges")) {
    g.add_edge(ids.at(e.at("u").get<std::string>()), ids.at(e.at("v").get<std::string>()));
  }
  return g;
}

std::string to_dot(const Multigraph& g, const std::string& graph_name) {
  auto name = [&](NodeId v) { return g.name(v).empty() ? std::to_string(v) : g.name(v); };
  std::ostringstream out;
  out << "graph " << graph_name << " {\n";
  for (NodeId v = 0; v < g.vertex_count(); ++v) out << "  \"" << name(v) << "\";\n";
  for (const auto& [u, v] : g.edges()) out << "  \"" << name(u) << "\" -- \"" << name(v) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace basilica
