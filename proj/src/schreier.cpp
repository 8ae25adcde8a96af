// SPDX-License-Identifier: Apache-2.0
#include "basilica/schreier.hpp"

#include <algorithm>
#include <sstream>

#include "basilica/automaton.hpp"

namespace basilica {

char label_char(Label l) { return l == Label::a ? 'a' : 'b'; }

VertexId word_index(const BinaryWord& w) {
  if (w.size() > 31) throw LevelError("word too long for a vertex index");
  VertexId v = 0;
  for (std::size_t i = 0; i < w.size(); ++i) v |= static_cast<VertexId>(w[i]) << i;
  return v;
}

BinaryWord index_word(VertexId v, unsigned length) {
  std::vector<Letter> letters(length);
  for (unsigned i = 0; i < length; ++i) letters[i] = (v >> i) & 1u;
  return BinaryWord(std::move(letters));
}

SchreierGraph::SchreierGraph(unsigned level, std::vector<LabeledEdge> edges)
    : level_(level), edges_(std::move(edges)) {
  if (level_ > 31) throw LevelError("level too large");
  for (const LabeledEdge& e : edges_) {
    if (e.u >= vertex_count() || e.v >= vertex_count()) {
      throw std::invalid_argument("edge endpoint outside the level");
    }
  }
}

std::vector<std::tuple<VertexId, VertexId, Label>> SchreierGraph::canonical_edges() const {
  std::vector<std::tuple<VertexId, VertexId, Label>> out;
  out.reserve(edges_.size());
  for (const LabeledEdge& e : edges_) {
    out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), e.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<VertexId, 2>> SchreierGraph::successors() const {
  constexpr VertexId kUnset = ~VertexId{0};
  std::vector<std::array<VertexId, 2>> succ(vertex_count(), {kUnset, kUnset});
  for (const LabeledEdge& e : edges_) {
    auto& slot = succ[e.u][static_cast<int>(e.label)];
    if (slot != kUnset) throw CoveringError("two edges with the same source and label");
    slot = e.v;
  }
  for (const auto& s : succ) {
    if (s[0] == kUnset || s[1] == kUnset) throw CoveringError("vertex missing a generator edge");
  }
  return succ;
}

bool SchreierGraph::operator==(const SchreierGraph& rhs) const {
  return level_ == rhs.level_ && canonical_edges() == rhs.canonical_edges();
}

namespace {

void check_level(unsigned n, unsigned cap) {
  if (n < 1) throw LevelError("level must be at least 1");
  if (n > cap) {
    throw LevelError("level " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  if (n > 30) throw LevelError("level too large for 32-bit vertex ids");
}

}  // namespace

SchreierGraph build_by_action(unsigned n, unsigned cap) {
  check_level(n, cap);
  const Automaton aut = basilica();
  const std::size_t count = std::size_t{1} << n;
  std::vector<LabeledEdge> edges;
  edges.reserve(2 * count);
  for (VertexId v = 0; v < count; ++v) {
    edges.push_back({v, aut.act_index(0, v, n), Label::a});
    edges.push_back({v, aut.act_index(1, v, n), Label::b});
  }
  return SchreierGraph(n, std::move(edges));
}

SchreierGraph build_by_sr(unsigned n, unsigned cap) {
  check_level(n, cap);
  std::vector<LabeledEdge> edges = {
      {0, 0, Label::a}, {1, 1, Label::a}, {0, 1, Label::b}, {1, 0, Label::b}};
  for (unsigned level = 1; level < n; ++level) {
    std::vector<LabeledEdge> next;
    next.reserve(2 * edges.size());
    for (const LabeledEdge& e : edges) {
      if (e.label == Label::b) {
        // b-edge u–v becomes the a-edge 0u–0v.
        next.push_back({e.u << 1, e.v << 1, Label::a});
      } else {
        // a-edge u–v (a loop when u = v) becomes the b-path 0u–1v–0v and an a-loop
        // at 1v.
        const VertexId v0u = e.u << 1, v1v = (e.v << 1) | 1u, v0v = e.v << 1;
        next.push_back({v0u, v1v, Label::b});
        next.push_back({v1v, v0v, Label::b});
        next.push_back({v1v, v1v, Label::a});
      }
    }
    edges = std::move(next);
  }
  return SchreierGraph(n, std::move(edges));
}

SchreierGraph project(const SchreierGraph& g) {
  if (g.level() < 2) throw LevelError("projection needs level at least 2");
  const unsigned n = g.level() - 1;
  const VertexId mask = (VertexId{1} << n) - 1;
  const VertexId top = VertexId{1} << n;
  const auto succ = g.successors();

  std::vector<LabeledEdge> edges;
  edges.reserve(2 * top);
  for (VertexId w = 0; w < top; ++w) {
    for (int l = 0; l < 2; ++l) {
      const VertexId image0 = succ[w][l] & mask;
      const VertexId image1 = succ[w | top][l] & mask;
      if (image0 != image1) {
        throw CoveringError("fiber over " + index_word(w, n).str() + " has inconsistent " +
                            label_char(static_cast<Label>(l)) + "-edges");
      }
      edges.push_back({w, image0, static_cast<Label>(l)});
    }
  }
  // Each label must act as a permutation downstairs for the map to be
  // locally bijective on incoming edges as well.
  for (int l = 0; l < 2; ++l) {
    std::vector<bool> hit(top, false);
    for (const LabeledEdge& e : edges) {
      if (static_cast<int>(e.label) != l) continue;
      if (hit[e.v]) throw CoveringError("quotient label is not a permutation");
      hit[e.v] = true;
    }
  }
  return SchreierGraph(n, std::move(edges));
}

namespace {

std::vector<std::tuple<std::string, std::string, char>> named_edges(const SchreierGraph& g) {
  std::vector<std::tuple<std::string, std::string, char>> out;
  out.reserve(g.edges().size());
  for (const LabeledEdge& e : g.edges()) {
    std::string u = index_word(e.u, g.level()).str();
    std::string v = index_word(e.v, g.level()).str();
    if (v < u) std::swap(u, v);
    out.emplace_back(std::move(u), std::move(v), label_char(e.label));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted_vertex_names(unsigned level) {
  std::vector<std::string> names;
  names.reserve(std::size_t{1} << level);
  for (VertexId v = 0; v < (VertexId{1} << level); ++v) names.push_back(index_word(v, level).str());
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

std::string to_dot(const SchreierGraph& g) {
  std::ostringstream out;
  out << "graph Gamma_" << g.level() << " {\n";
  for (const std::string& name : sorted_vertex_names(g.level())) out << "  \"" << name << "\";\n";
  for (const auto& [u, v, l] : named_edges(g)) {
    out << "  \"" << u << "\" -- \"" << v << "\" [label=\"" << l << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const SchreierGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v, l] : named_edges(g)) {
    edges.push_back({{"u", u}, {"v", v}, {"label", std::string(1, l)}});
  }
  return {{"level", g.level()}, {"vertices", sorted_vertex_names(g.level())}, {"edges", edges}};
}

SchreierGraph schreier_from_json(const nlohmann::json& j) {
  const unsigned level = j.at("level").get<unsigned>();
  if (level < 1 || level > 30) throw LevelError("level out of range in JSON");
  if (j.at("vertices").get<std::vector<std::string>>() != sorted_vertex_names(level)) {
    throw std::invalid_argument("JSON vertex list does not match the level");
  }
  std::vector<LabeledEdge> edges;
  for (const auto& e : j.at("edges")) {
    const BinaryWord u = BinaryWord::parse(e.at("u").get<std::string>());
    const BinaryWord v = BinaryWord::parse(e.at("v").get<std::string>());
    const std::string label = e.at("label").get<std::string>();
    if (u.size() != level || v.size() != level) throw std::invalid_argument("edge endpoint length");
    if (label != "a" && label != "b") throw std::invalid_argument("edge label must be a or b");
    edges.push_back({word_index(u), word_index(v), label == "a" ? Label::a : Label::b});
  }
  return SchreierGraph(level, std::move(edges));
}

}  // namespace basilica
