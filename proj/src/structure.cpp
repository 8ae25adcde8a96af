// SPDX-License-Identifier: Apache-2.0
#include "basilica/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace basilica {

namespace {

constexpr std::uint32_t kVertexTag = 0xFFFFFFF0u;
constexpr std::uint32_t kLoopTag = 0xFFFFFFF1u;
constexpr std::uint32_t kBridgeTag = 0xFFFFFFF2u;
constexpr std::uint32_t kCycleTag = 0xFFFFFFF3u;

Block classify(const Multigraph& g, std::vector<EdgeId> edges) {
  Block b;
  b.edges = std::move(edges);
  if (b.edges.size() == 1) {
    const auto [u, v] = g.edge(b.edges[0]);
    b.kind = u == v ? BlockKind::loop : BlockKind::bridge;
    b.vertices = u == v ? std::vector<NodeId>{u} : std::vector<NodeId>{u, v};
    return b;
  }
  std::map<NodeId, std::vector<EdgeId>> touch;
  for (EdgeId e : b.edges) {
    touch[g.edge(e).first].push_back(e);
    touch[g.edge(e).second].push_back(e);
  }
  bool cycle = touch.size() == b.edges.size();
  for (const auto& [v, es] : touch) cycle = cycle && es.size() == 2;
  if (!cycle) {
    b.kind = BlockKind::other;
    for (const auto& [v, es] : touch) b.vertices.push_back(v);
    return b;
  }
  b.kind = BlockKind::cycle;
  NodeId v = touch.begin()->first;
  EdgeId via = touch.begin()->second[0];
  for (std::size_t i = 0; i < b.edges.size(); ++i) {
    b.vertices.push_back(v);
    v = g.other(via, v);
    const auto& es = touch[v];
    via = es[0] == via ? es[1] : es[0];
  }
  return b;
}

}  // namespace

bool BlockDecomposition::is_cactus() const {
  return std::none_of(blocks.begin(), blocks.end(),
                      [](const Block& b) { return b.kind == BlockKind::other; });
}

Multigraph to_multigraph(const SchreierGraph& g) {
  Multigraph m(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) m.set_name(v, index_word(v, g.level()).str());
  for (const LabeledEdge& e : g.edges()) m.add_edge(e.u, e.v);
  return m;
}

BlockDecomposition decompose(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  BlockDecomposition d;
  d.vertex_blocks.assign(n, {});

  std::vector<std::vector<EdgeId>> found;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) found.push_back({e});
  }

  // Iterative Hopcroft–Tarjan over edges; parallel edges are told apart by
  // edge id rather than by the parent vertex.
  constexpr std::size_t kUnseen = kUnreachable;
  constexpr EdgeId kNoEdge = ~EdgeId{0};
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0);
  std::vector<EdgeId> edge_stack;
  struct Frame {
    NodeId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::size_t clock = 0;
  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    disc[root] = low[root] = clock++;
    frames.push_back({root, kNoEdge, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.parent_edge || g.is_loop(e)) continue;
        const NodeId w = g.other(e, f.v);
        if (disc[w] == kUnseen) {
          edge_stack.push_back(e);
          disc[w] = low[w] = clock++;
          frames.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      const NodeId u = frames.back().v;
      low[u] = std::min(low[u], low[done.v]);
      if (low[done.v] >= disc[u]) {
        std::vector<EdgeId> comp;
        while (true) {
          const EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          comp.push_back(e);
          if (e == done.parent_edge) break;
        }
        found.push_back(std::move(comp));
      }
    }
  }

  for (auto& edges : found) {
    Block b = classify(g, std::move(edges));
    const BlockId id = static_cast<BlockId>(d.blocks.size());
    for (NodeId v : b.vertices) d.vertex_blocks[v].push_back(id);
    d.blocks.push_back(std::move(b));
  }
  for (NodeId v = 0; v < n; ++v) {
    std::size_t non_loop = 0;
    for (BlockId b : d.vertex_blocks[v]) non_loop += d.blocks[b].kind != BlockKind::loop;
    if (non_loop >= 2) d.cut_vertices.push_back(v);
  }
  return d;
}

BlockDecomposition decompose(const SchreierGraph& g) { return decompose(to_multigraph(g)); }

unsigned decoration_height(const BinaryWord& v) {
  const auto one = v.first_one();
  return static_cast<unsigned>(one ? *one : v.size());
}

RootedGraph extract_decoration(const Multigraph& g, unsigned level, NodeId v) {
  const NodeId zero = 0;
  const NodeId marker = NodeId{1} << (level - 1);
  std::vector<NodeId> keep;
  if (v != zero && g.loop_count(v) > 0) {
    keep.push_back(v);
  } else {
    const auto dist = g.distances(v == zero ? marker : zero, kUnreachable, v);
    for (NodeId u = 0; u < g.vertex_count(); ++u) {
      if (dist[u] == kUnreachable) keep.push_back(u);
    }
  }
  return induced_subgraph(g, keep, v);
}

RootedGraph extract_decoration(const SchreierGraph& g, const BinaryWord& v) {
  if (v.size() != g.level()) throw std::invalid_argument("vertex length differs from level");
  return extract_decoration(to_multigraph(g), g.level(), word_index(v));
}

std::uint32_t CactusCanonizer::intern(std::vector<std::uint32_t> key) {
  auto [it, inserted] = table_.emplace(std::move(key), static_cast<std::uint32_t>(table_.size()));
  return it->second;
}

std::uint32_t CactusCanonizer::id(const Multigraph& g, NodeId root) {
  const BlockDecomposition d = decompose(g);
  if (!d.is_cactus()) throw NotCactusError("graph is not a cactus");
  constexpr BlockId kNone = ~BlockId{0};

  std::function<std::uint32_t(NodeId, BlockId)> vertex_id;
  auto block_id = [&](BlockId b, NodeId entry) -> std::uint32_t {
    const Block& blk = d.blocks[b];
    switch (blk.kind) {
      case BlockKind::loop:
        return intern({kLoopTag});
      case BlockKind::bridge: {
        const NodeId other = blk.vertices[0] == entry ? blk.vertices[1] : blk.vertices[0];
        return intern({kBridgeTag, vertex_id(other, b)});
      }
      default: {
        const std::size_t len = blk.vertices.size();
        const std::size_t at = static_cast<std::size_t>(
            std::find(blk.vertices.begin(), blk.vertices.end(), entry) - blk.vertices.begin());
        std::vector<std::uint32_t> seq;
        for (std::size_t i = 1; i < len; ++i) seq.push_back(vertex_id(blk.vertices[(at + i) % len], b));
        std::vector<std::uint32_t> rev(seq.rbegin(), seq.rend());
        std::vector<std::uint32_t> key{kCycleTag, static_cast<std::uint32_t>(len)};
        const auto& best = std::min(seq, rev);
        key.insert(key.end(), best.begin(), best.end());
        return intern(std::move(key));
      }
    }
  };
  vertex_id = [&](NodeId v, BlockId parent) -> std::uint32_t {
    std::vector<std::uint32_t> children;
    for (BlockId b : d.vertex_blocks[v]) {
      if (b != parent) children.push_back(block_id(b, v));
    }
    std::sort(children.begin(), children.end());
    children.insert(children.begin(), kVertexTag);
    return intern(std::move(children));
  };
  return vertex_id(root, kNone);
}

DecorationCatalog::DecorationCatalog(unsigned max_level)
    : max_level_(max_level), decorations_(max_level + 1), ids_(max_level + 1) {}

const RootedGraph& DecorationCatalog::decoration(unsigned h) {
  if (h < 1 || h > max_level_) throw LevelError("decoration height outside the catalog");
  if (!decorations_[h]) {
    const SchreierGraph g = build_by_action(h, max_level_);
    decorations_[h] = std::make_unique<RootedGraph>(extract_decoration(to_multigraph(g), h, 0));
  }
  return *decorations_[h];
}

std::optional<unsigned> DecorationCatalog::height_of(const RootedGraph& d) {
  const std::size_t size = d.graph.vertex_count();
  const std::uint32_t target = canon_.id(d);
  for (unsigned h = 1; h <= max_level_; ++h) {
    const RootedGraph& ref = decoration(h);
    if (ref.graph.vertex_count() > size) break;
    if (ref.graph.vertex_count() < size) continue;
    if (!ids_[h]) ids_[h] = canon_.id(ref);
    if (*ids_[h] == target) return h;
  }
  return std::nullopt;
}

RootedGraph DecorationCatalog::truncated(unsigned h, std::size_t depth) {
  unsigned source = h;
  if (h > max_level_) {
    source = 0;
    for (unsigned c = max_level_; c >= 2; --c) {
      if (c % 2 != h % 2) continue;
      const std::size_t half = std::size_t{1} << ((c - 1 + 1) / 2 - 1);
      if (half > depth) source = c;
      break;
    }
    if (source == 0) throw LevelError("decoration height " + std::to_string(h) + " beyond catalog");
  }
  const RootedGraph& d = decoration(source);
  const auto dist = d.graph.distances(d.root, depth);
  std::vector<NodeId> keep;
  for (NodeId v = 0; v < d.graph.vertex_count(); ++v) {
    if (dist[v] != kUnreachable) keep.push_back(v);
  }
  return induced_subgraph(d.graph, keep, d.root);
}

std::string Diagram::str() const {
  std::string s;
  for (std::size_t i = 0; i < heights.size(); ++i) s += (i ? "," : "") + std::to_string(heights[i]);
  return s;
}

Diagram Diagram::parse(std::string_view text) {
  Diagram d;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view item = text.substr(start, stop - start);
    if (item.empty()) throw std::invalid_argument("empty diagram entry at position " + std::to_string(start));
    unsigned value = 0;
    for (std::size_t i = 0; i < item.size(); ++i) {
      if (item[i] < '0' || item[i] > '9') {
        throw std::invalid_argument("bad diagram entry at position " + std::to_string(start + i));
      }
      value = value * 10 + static_cast<unsigned>(item[i] - '0');
    }
    d.heights.push_back(value);
    start = stop + 1;
  }
  return d;
}

Diagram Diagram::interior() const {
  if (!includes_boundary || heights.size() < 2) throw std::logic_error("diagram has no boundary");
  return Diagram{std::vector<unsigned>(heights.begin() + 1, heights.end() - 1), false};
}

BlockId central_block(const BlockDecomposition& d, unsigned level) {
  const NodeId marker = NodeId{1} << (level - 1);
  for (BlockId b : d.vertex_blocks[0]) {
    const Block& blk = d.blocks[b];
    if (blk.kind == BlockKind::loop) continue;
    if (std::find(blk.vertices.begin(), blk.vertices.end(), marker) != blk.vertices.end()) return b;
  }
  throw std::logic_error("no block contains both 0^n and 0^{n-1}1");
}

Diagram diagram(const SchreierGraph& g, DecorationCatalog& catalog) {
  const unsigned n = g.level();
  const Multigraph m = to_multigraph(g);
  const BlockDecomposition d = decompose(m);
  const Block& central = d.blocks[central_block(d, n)];
  const NodeId marker = NodeId{1} << (n - 1);

  const std::size_t len = central.vertices.size();
  const std::size_t at = static_cast<std::size_t>(
      std::find(central.vertices.begin(), central.vertices.end(), NodeId{0}) - central.vertices.begin());
  Diagram out;
  for (std::size_t i = 0; i <= len; ++i) {
    const NodeId v = central.vertices[(at + i) % len];
    if (v == 0 || v == marker) {
      out.heights.push_back(n);
      continue;
    }
    const auto h = catalog.height_of(extract_decoration(m, n, v));
    if (!h) throw std::logic_error("decoration at " + m.name(v) + " matches no reference");
    out.heights.push_back(*h);
  }
  return out;
}

Diagram diagram(const SchreierGraph& g) {
  DecorationCatalog catalog(std::max(1u, g.level()));
  return diagram(g, catalog);
}

Diagram diagram_rcr(unsigned n) {
  if (n < 1) throw std::invalid_argument("diagrams start at level 1");
  if (n == 1) return Diagram{{1, 1, 1}, true};
  if (n == 2) return Diagram{{2, 2, 2}, true};
  const Diagram inner = diagram_rcr(n - 2).interior();
  Diagram out;
  for (int copy = 0; copy < 2; ++copy) {
    out.heights.push_back(n);
    out.heights.insert(out.heights.end(), inner.heights.begin(), inner.heights.end());
  }
  out.heights.push_back(n);
  return out;
}

LevelAnalysis::LevelAnalysis(SchreierGraph g)
    : graph_(std::move(g)), multigraph_(to_multigraph(graph_)), blocks_(decompose(multigraph_)) {
  const unsigned n = graph_.level();
  central_ = basilica::central_block(blocks_, n);

  const std::size_t count = blocks_.blocks.size();
  block_depth_.assign(count, kUnreachable);
  block_parent_.assign(count, ~BlockId{0});
  std::deque<BlockId> queue{central_};
  block_depth_[central_] = 0;
  while (!queue.empty()) {
    const BlockId b = queue.front();
    queue.pop_front();
    for (NodeId v : blocks_.blocks[b].vertices) {
      for (BlockId c : blocks_.vertex_blocks[v]) {
        if (block_depth_[c] != kUnreachable || blocks_.blocks[c].kind == BlockKind::loop) continue;
        block_depth_[c] = block_depth_[b] + 1;
        block_parent_[c] = b;
        queue.push_back(c);
      }
    }
  }

  const NodeId marker = NodeId{1} << (n - 1);
  const auto dist = multigraph_.distances(marker, kUnreachable, 0);
  left_.resize(multigraph_.vertex_count());
  for (NodeId v = 0; v < multigraph_.vertex_count(); ++v) left_[v] = dist[v] == kUnreachable;
}

CyclePathFinite LevelAnalysis::cycle_path(NodeId v) const {
  BlockId start = ~BlockId{0};
  for (BlockId b : blocks_.vertex_blocks[v]) {
    if (blocks_.blocks[b].kind == BlockKind::loop) continue;
    if (start == ~BlockId{0} || block_depth_[b] < block_depth_[start]) start = b;
  }
  if (start == ~BlockId{0}) throw std::logic_error("vertex lies on no cycle");
  CyclePathFinite path;
  for (BlockId b = start;; b = block_parent_[b]) {
    path.cycles.push_back(b);
    path.lengths.push_back(blocks_.blocks[b].length());
    if (b == central_) break;
  }
  return path;
}

CyclePathFinite cycle_path(const SchreierGraph& g, const BinaryWord& v) {
  if (v.size() != g.level()) throw std::invalid_argument("vertex length differs from level");
  return LevelAnalysis(g).cycle_path(word_index(v));
}

RootedBall ball(const Multigraph& g, NodeId v, std::size_t r) {
  const auto dist = g.distances(v, r);
  std::vector<NodeId> keep;
  for (NodeId u = 0; u < g.vertex_count(); ++u) {
    if (dist[u] != kUnreachable) keep.push_back(u);
  }
  return RootedBall{v, r, induced_subgraph(g, keep, v)};
}

bool rooted_isomorphic(const RootedGraph& g1, const RootedGraph& g2) {
  if (g1.graph.vertex_count() != g2.graph.vertex_count() ||
      g1.graph.edge_count() != g2.graph.edge_count()) {
    return false;
  }
  CactusCanonizer canon;
  return canon.id(g1) == canon.id(g2);
}

bool rooted_isomorphic(const RootedBall& b1, const RootedBall& b2) {
  return rooted_isomorphic(b1.graph, b2.graph);
}

std::string GhDistance::str() const {
  const std::string value = denominator == 1 ? "1" : "1/" + std::to_string(denominator);
  return upper_bound ? "<= " + value : value;
}

GhDistance gh_distance(const RootedGraph& g1, const RootedGraph& g2, std::size_t r_max) {
  const auto d1 = g1.graph.distances(g1.root, r_max);
  const auto d2 = g2.graph.distances(g2.root, r_max);
  CactusCanonizer canon;
  auto ball_id = [&](const RootedGraph& g, const std::vector<std::size_t>& dist, std::size_t r) {
    std::vector<NodeId> keep;
    for (NodeId u = 0; u < g.graph.vertex_count(); ++u) {
      if (dist[u] <= r) keep.push_back(u);
    }
    return canon.id(induced_subgraph(g.graph, keep, g.root));
  };
  GhDistance out;
  for (std::size_t r = 0; r <= r_max; ++r) {
    if (ball_id(g1, d1, r) != ball_id(g2, d2, r)) {
      out.agreeing_radius = static_cast<long long>(r) - 1;
      out.denominator = static_cast<std::uint64_t>(std::max(out.agreeing_radius, 0LL)) + 1;
      return out;
    }
  }
  out.agreeing_radius = static_cast<long long>(r_max);
  out.denominator = r_max + 2;
  out.upper_bound = true;
  return out;
}

}  // namespace basilica
