// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "basilica/multigraph.hpp"
#include "basilica/schreier.hpp"
#include "basilica/words.hpp"

namespace basilica {

using BlockId = std::uint32_t;

enum class BlockKind : std::uint8_t { loop, bridge, cycle, other };

struct Block {
  BlockKind kind = BlockKind::other;
  // Cyclic order for cycles; endpoints for bridges.
  std::vector<NodeId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<std::vector<BlockId>> vertex_blocks;
  // Vertices lying in at least two non-loop blocks.
  std::vector<NodeId> cut_vertices;

  bool is_cactus() const;
};

class NotCactusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Multigraph to_multigraph(const SchreierGraph& g);

BlockDecomposition decompose(const Multigraph& g);
BlockDecomposition decompose(const SchreierGraph& g);

// Position of the first 1 (n for 0^n).
unsigned decoration_height(const BinaryWord& v);

// D(v): v plus everything cut off from 0^n by v; a loop vertex alone;
// for 0^n everything cut off from 0^{n-1}1.
RootedGraph extract_decoration(const Multigraph& g, unsigned level, NodeId v);
RootedGraph extract_decoration(const SchreierGraph& g, const BinaryWord& v);

// Interns rooted cactus shapes; two rooted cacti get the same id from one
// canonizer iff they are isomorphic.
class CactusCanonizer {
 public:
  std::uint32_t id(const Multigraph& g, NodeId root);
  std::uint32_t id(const RootedGraph& g) { return id(g.graph, g.root); }
  std::size_t size() const { return table_.size(); }

 private:
  std::uint32_t intern(std::vector<std::uint32_t> key);
  std::map<std::vector<std::uint32_t>, std::uint32_t> table_;
};

// Reference decorations D(0^h) ⊂ Γ_h, built on demand.
class DecorationCatalog {
 public:
  explicit DecorationCatalog(unsigned max_level = 16);

  unsigned max_level() const { return max_level_; }
  const RootedGraph& decoration(unsigned h);
  std::optional<unsigned> height_of(const RootedGraph& d);
  // D(0^h) truncated to vertices within `depth` of its root. Heights above
  // max_level are served by the tallest same-parity reference whose root
  // cycle is longer than 2·depth, whose truncation is identical.
  RootedGraph truncated(unsigned h, std::size_t depth);
  CactusCanonizer& canonizer() { return canon_; }

 private:
  unsigned max_level_;
  std::vector<std::unique_ptr<RootedGraph>> decorations_;
  std::vector<std::optional<std::uint32_t>> ids_;
  CactusCanonizer canon_;
};

struct Diagram {
  std::vector<unsigned> heights;
  bool includes_boundary = true;

  std::string str() const;
  static Diagram parse(std::string_view text);
  // D_n from D̄_n.
  Diagram interior() const;
  bool operator==(const Diagram&) const = default;
};

Diagram diagram(const SchreierGraph& g, DecorationCatalog& catalog);
Diagram diagram(const SchreierGraph& g);
Diagram diagram_rcr(unsigned n);

struct CyclePathFinite {
  std::vector<BlockId> cycles;
  std::vector<std::size_t> lengths;

  std::size_t size() const { return cycles.size(); }
};

// Per-level data reused across many cycle-path and decoration queries.
class LevelAnalysis {
 public:
  explicit LevelAnalysis(SchreierGraph g);

  unsigned level() const { return graph_.level(); }
  const SchreierGraph& schreier() const { return graph_; }
  const Multigraph& graph() const { return multigraph_; }
  const BlockDecomposition& blocks() const { return blocks_; }
  BlockId central_block() const { return central_; }

  CyclePathFinite cycle_path(NodeId v) const;
  // v ∈ D(0^n).
  bool in_left_decoration(NodeId v) const { return left_[v]; }

 private:
  SchreierGraph graph_;
  Multigraph multigraph_;
  BlockDecomposition blocks_;
  BlockId central_;
  std::vector<std::size_t> block_depth_;
  std::vector<BlockId> block_parent_;
  std::vector<bool> left_;
};

// Unique block containing 0^n and 0^{n-1}1.
BlockId central_block(const BlockDecomposition& d, unsigned level);

CyclePathFinite cycle_path(const SchreierGraph& g, const BinaryWord& v);

struct RootedBall {
  NodeId center = 0;
  std::size_t radius = 0;
  RootedGraph graph;
};

RootedBall ball(const Multigraph& g, NodeId v, std::size_t r);
bool rooted_isomorphic(const RootedBall& b1, const RootedBall& b2);
bool rooted_isomorphic(const RootedGraph& g1, const RootedGraph& g2);

// Value 1/denominator, or the bound "≤ 1/denominator" when the balls agree
// up to the search radius.
struct GhDistance {
  std::uint64_t denominator = 1;
  bool upper_bound = false;
  // Largest radius with isomorphic balls; -1 when radius 0 already differs.
  long long agreeing_radius = -1;

  std::string str() const;
};

GhDistance gh_distance(const RootedGraph& g1, const RootedGraph& g2, std::size_t r_max);

}  // namespace basilica
