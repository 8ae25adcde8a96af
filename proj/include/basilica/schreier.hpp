// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "basilica/words.hpp"

namespace basilica {

using VertexId = std::uint32_t;

inline constexpr unsigned kDefaultLevelCap = 20;

enum class Label : std::uint8_t { a = 0, b = 1 };

char label_char(Label l);

// Vertex index of a word: letter i sits at bit i, so dropping the last
// letter is a mask and prepending a letter is a shift.
VertexId word_index(const BinaryWord& w);
BinaryWord index_word(VertexId v, unsigned length);

// Edge from u to s(u); undirected when compared.
struct LabeledEdge {
  VertexId u;
  VertexId v;
  Label label;

  bool operator==(const LabeledEdge&) const = default;
};

class LevelError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class CoveringError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SchreierGraph {
 public:
  SchreierGraph(unsigned level, std::vector<LabeledEdge> edges);

  unsigned level() const { return level_; }
  std::size_t vertex_count() const { return std::size_t{1} << level_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }

  // Edges as (min, max, label), sorted.
  std::vector<std::tuple<VertexId, VertexId, Label>> canonical_edges() const;
  // succ[v][l] for the directed edges as stored.
  std::vector<std::array<VertexId, 2>> successors() const;

  bool operator==(const SchreierGraph& rhs) const;

 private:
  unsigned level_;
  std::vector<LabeledEdge> edges_;
};

SchreierGraph build_by_action(unsigned n, unsigned cap = kDefaultLevelCap);
SchreierGraph build_by_sr(unsigned n, unsigned cap = kDefaultLevelCap);

// Quotient by dropping the last letter; throws CoveringError unless the map
// is a degree-2 covering of labeled graphs.
SchreierGraph project(const SchreierGraph& g);

std::string to_dot(const SchreierGraph& g);
nlohmann::json to_json(const SchreierGraph& g);
SchreierGraph schreier_from_json(const nlohmann::json& j);

}  // namespace basilica
