#include <doctest.h>

#include <algorithm>
#include <set>

#include "basilica/boundary.hpp"
#include "basilica/schreier.hpp"
#include "basilica/structure.hpp"
#include "oracles.hpp"

using namespace basilica;

namespace {

BinaryWord bw(const char* s) { return BinaryWord::parse(s); }
NodeId node(const char* s) { return word_index(bw(s)); }

std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

// Cycle through `v` other than the central one, or the central one.
const Block& cycle_at(const LevelAnalysis& la, NodeId v, bool central) {
  for (BlockId b : la.blocks().vertex_blocks[v]) {
    const Block& blk = la.blocks().blocks[b];
    if (blk.kind == BlockKind::loop) continue;
    if ((b == la.central_block()) == central) return blk;
  }
  throw std::logic_error("no such cycle");
}

// Cycle distance from position 0 in the block's cyclic order.
std::size_t around(const Block& c, NodeId from, std::size_t i) {
  const auto it = std::find(c.vertices.begin(), c.vertices.end(), from);
  const std::size_t start = static_cast<std::size_t>(it - c.vertices.begin());
  const std::size_t len = c.vertices.size();
  const std::size_t d = (i + len - start) % len;
  return std::min(d, len - d);
}

unsigned two_adic(std::size_t d) {
  unsigned k = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("block decomposition of Γ_2 and Γ_3") {
  const SchreierGraph g2 = build_by_action(2);
  const BlockDecomposition d = decompose(g2);
  CHECK(d.blocks.size() == 5);
  std::multiset<std::pair<BlockKind, std::size_t>> shapes;
  for (const Block& b : d.blocks) shapes.emplace(b.kind, b.length());
  CHECK(shapes.count({BlockKind::loop, 1}) == 2);
  CHECK(shapes.count({BlockKind::cycle, 2}) == 3);
  std::set<NodeId> cuts(d.cut_vertices.begin(), d.cut_vertices.end());
  CHECK(cuts == std::set<NodeId>{node("00"), node("01")});

  const LevelAnalysis la(build_by_action(3));
  const Block& c = la.blocks().blocks[la.central_block()];
  CHECK(std::set<NodeId>(c.vertices.begin(), c.vertices.end()) ==
        std::set<NodeId>{node("000"), node("100"), node("101"), node("001")});

  Multigraph cyc(5);
  for (NodeId i = 0; i < 5; ++i) cyc.add_edge(i, (i + 1) % 5);
  const BlockDecomposition one = decompose(cyc);
  CHECK(one.blocks.size() == 1);
  CHECK(one.blocks[0].kind == BlockKind::cycle);
  CHECK(one.cut_vertices.empty());
}

TEST_CASE("structure of Γ_n: blocks, cut vertices, cycle lengths") {
  for (unsigned n = 1; n <= 10; ++n) {
    const Multigraph g = to_multigraph(build_by_sr(n));
    const BlockDecomposition d = decompose(g);
    CHECK(d.is_cactus());
    std::size_t edges = 0, longest = 0;
    for (const Block& b : d.blocks) {
      CHECK((b.kind == BlockKind::cycle || b.kind == BlockKind::loop));
      edges += b.length();
      longest = std::max(longest, b.length());
    }
    CHECK(edges == g.edge_count());
    CHECK(longest == (std::size_t{1} << ceil_half(n)));
    for (NodeId v : d.cut_vertices) CHECK(d.vertex_blocks[v].size() >= 2);
    if (n < 2) continue;
    std::set<NodeId> cuts(d.cut_vertices.begin(), d.cut_vertices.end());
    for (NodeId v = 0; v < g.vertex_count(); ++v) {
      if (g.loop_count(v) > 0) continue;
      CHECK(cuts.count(v) == 1);
      CHECK(g.component_count(v) == 2);
    }
  }
}

TEST_CASE("decoration heights") {
  CHECK(decoration_height(bw("010")) == 2);
  CHECK(decoration_height(bw("1011")) == 1);
  CHECK(decoration_height(bw("0000")) == 4);

  DecorationCatalog catalog;
  const SchreierGraph g3 = build_by_action(3);
  CHECK(catalog.height_of(extract_decoration(g3, bw("010"))) == 2u);
  const RootedGraph loop = extract_decoration(build_by_action(4), bw("1100"));
  CHECK(loop.graph.vertex_count() == 1);
  CHECK(loop.graph.loop_count(0) == 1);

  for (unsigned n = 1; n <= 10; ++n) {
    const SchreierGraph g = build_by_sr(n);
    const Multigraph m = to_multigraph(g);
    for (NodeId v = 0; v < m.vertex_count(); ++v) {
      const unsigned h = decoration_height(index_word(v, n));
      const auto found = catalog.height_of(extract_decoration(m, n, v));
      REQUIRE(found.has_value());
      CHECK(*found == h);
    }
  }
}

TEST_CASE("diagrams") {
  CHECK(diagram_rcr(1).str() == "1,1,1");
  CHECK(diagram_rcr(2).str() == "2,2,2");
  CHECK(diagram_rcr(3).str() == "3,1,3,1,3");
  CHECK(diagram_rcr(4).str() == "4,2,4,2,4");
  CHECK(diagram_rcr(5).str() == "5,1,3,1,5,1,3,1,5");
  CHECK(diagram_rcr(6).str() == "6,2,4,2,6,2,4,2,6");
  CHECK(diagram_rcr(7).str() == "7,1,3,1,5,1,3,1,7,1,3,1,5,1,3,1,7");
  CHECK_THROWS(diagram_rcr(0));
  CHECK(Diagram::parse("5,1,3,1,5,1,3,1,5") == diagram_rcr(5));
  CHECK(diagram_rcr(5).interior().str() == "1,3,1,5,1,3,1");
  DecorationCatalog catalog;
  for (unsigned n = 1; n <= 12; ++n) {
    const Diagram d = diagram_rcr(n);
    CHECK(diagram(build_by_action(n), catalog) == d);
    CHECK(d.heights.size() == (std::size_t{1} << ceil_half(n)) + 1);
    CHECK(d.heights.front() == n);
    CHECK(d.heights.back() == n);
    CHECK(std::equal(d.heights.begin(), d.heights.end(), d.heights.rbegin()));
  }
}

TEST_CASE("decoration placement around 0^n") {
  for (unsigned n = 2; n <= 12; ++n) {
    const LevelAnalysis la(build_by_sr(n));
    const bool odd = n % 2 == 1;
    for (bool central : {true, false}) {
      const Block& c = cycle_at(la, 0, central);
      const unsigned kmax = central ? (n - 1) / 2 : (n - 2) / 2;
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        const std::size_t d = around(c, 0, i);
        if (d == 0) continue;
        const unsigned k = two_adic(d);
        if (k > kmax) continue;
        const unsigned want = central ? (odd ? 2 * k + 1 : 2 * k + 2) : (odd ? 2 * k + 2 : 2 * k + 1);
        CHECK(decoration_height(index_word(c.vertices[i], n)) == want);
      }
    }
  }
}

TEST_CASE("cycle paths") {
  for (unsigned n = 1; n <= 8; ++n) {
    const SchreierGraph g = build_by_action(n);
    const CyclePathFinite cp = cycle_path(g, BinaryWord::zeros(n));
    CHECK(cp.size() == 1);
    CHECK(cp.lengths[0] == (std::size_t{1} << ceil_half(n)));
  }
  const CyclePathFinite cp = cycle_path(build_by_action(5), bw("11100"));
  CHECK(cp.size() == cp_length_of_prefix(bw("11100")));
}

TEST_CASE("trichotomy of cycle-path lengths between levels") {
  std::vector<LevelAnalysis> levels;
  for (unsigned n = 1; n <= 11; ++n) levels.emplace_back(build_by_sr(n));
  for (unsigned n = 1; n <= 10; ++n) {
    const LevelAnalysis& lo = levels[n - 1];
    const LevelAnalysis& hi = levels[n];
    for (VertexId v = 0; v < (VertexId{1} << (n + 1)); ++v) {
      const VertexId u = v & ((VertexId{1} << n) - 1);
      const long long delta = static_cast<long long>(hi.cycle_path(v).size()) -
                              static_cast<long long>(lo.cycle_path(u).size());
      const bool stable = u == 0;
      if (stable) {
        CHECK(delta == 0);
      } else if (!lo.in_left_decoration(u)) {
        CHECK(delta == 1);
      } else {
        CHECK(delta == -1);
      }
    }
  }
}

TEST_CASE("cycle-path length sequences between levels") {
  std::vector<LevelAnalysis> levels;
  for (unsigned n = 1; n <= 11; ++n) levels.emplace_back(build_by_sr(n));
  for (unsigned n = 1; n <= 10; ++n) {
    const std::size_t grow = n % 2 == 1 ? 1 : 2;
    for (VertexId v = 0; v < (VertexId{1} << (n + 1)); ++v) {
      const VertexId u = v & ((VertexId{1} << n) - 1);
      if (u == 0) continue;
      const auto lo = levels[n - 1].cycle_path(u).lengths;
      const auto hi = levels[n].cycle_path(v).lengths;
      const std::size_t t = lo.size();
      if (!levels[n - 1].in_left_decoration(u)) {
        REQUIRE(hi.size() == t + 1);
        for (std::size_t i = 0; i < t; ++i) CHECK(hi[i] == lo[i]);
        CHECK(hi[t] == grow * lo[t - 1]);
      } else {
        REQUIRE(hi.size() == t - 1);
        for (std::size_t i = 0; i + 2 < t; ++i) CHECK(hi[i] == lo[i]);
        CHECK(hi[t - 2] == grow * lo[t - 1]);
      }
    }
  }
}

TEST_CASE("balls") {
  const Multigraph g2 = to_multigraph(build_by_action(2));
  const RootedBall b0 = ball(g2, node("00"), 0);
  CHECK(b0.graph.graph.vertex_count() == 1);
  CHECK(b0.graph.graph.edge_count() == 0);
  const RootedBall b1 = ball(g2, node("00"), 1);
  CHECK(b1.graph.graph.vertex_count() == 3);
  CHECK(b1.graph.graph.edge_count() == 5);
  const Multigraph g3 = to_multigraph(build_by_action(3));
  const RootedBall l0 = ball(g3, node("100"), 0);
  CHECK(l0.graph.graph.loop_count(0) == 1);
  for (std::size_t r = 0; r < 6; ++r) {
    CHECK(ball(g3, node("110"), r).graph.graph.vertex_count() <= ball(g3, node("110"), r + 1).graph.graph.vertex_count());
  }
}

TEST_CASE("rooted isomorphism of small cycles") {
  auto cycle = [](NodeId len) {
    Multigraph g(len);
    for (NodeId i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
    return g;
  };
  CHECK(rooted_isomorphic(RootedGraph{cycle(4), 0, {}}, RootedGraph{cycle(4), 3, {}}));
  CHECK_FALSE(rooted_isomorphic(RootedGraph{cycle(4), 0, {}}, RootedGraph{cycle(2), 0, {}}));
  Multigraph theta(2);
  theta.add_edge(0, 1);
  theta.add_edge(0, 1);
  theta.add_edge(0, 1);
  CHECK_THROWS_AS(rooted_isomorphic(RootedGraph{theta, 0, {}}, RootedGraph{theta, 1, {}}), NotCactusError);
}

TEST_CASE("property: canonical form agrees with brute-force search on random cacti") {
  oracle::Gen gen(31);
  int agree_true = 0, agree_false = 0;
  for (int it = 0; it < 400; ++it) {
    const std::size_t n = gen.range(1, 14);
    const Multigraph g = oracle::random_cactus(gen, n);
    const auto r1 = static_cast<NodeId>(gen.below(n));
    // Half the time a relabelled copy, half the time an independent cactus.
    Multigraph h(0);
    NodeId r2;
    if (gen.below(2)) {
      auto [copy, perm] = oracle::relabel(g, gen);
      h = std::move(copy);
      r2 = gen.below(3) ? perm[r1] : static_cast<NodeId>(gen.below(n));
    } else {
      h = oracle::random_cactus(gen, n);
      r2 = static_cast<NodeId>(gen.below(n));
    }
    const bool want = oracle::brute_rooted_isomorphic(g, r1, h, r2);
    CHECK(rooted_isomorphic(RootedGraph{g, r1, {}}, RootedGraph{h, r2, {}}) == want);
    (want ? agree_true : agree_false)++;
  }
  CHECK(agree_true > 50);
  CHECK(agree_false > 50);
}

TEST_CASE("balls converge along a boundary point") {
  oracle::Gen gen(32);
  std::vector<Multigraph> levels;
  for (unsigned n = 1; n <= 12; ++n) levels.push_back(to_multigraph(build_by_sr(n)));
  for (int it = 0; it < 20; ++it) {
    const EPWord x = gen.ep_word();
    for (unsigned n = 2; n < 12; ++n) {
      // Smallest agreement radius over all vertices, attained at 0^{n+1}.
      const std::size_t r = (std::size_t{1} << (n / 2 - 1)) - 1;
      const NodeId v = word_index(prefix(x, n)), w = word_index(prefix(x, n + 1));
      CHECK(rooted_isomorphic(ball(levels[n - 1], v, r), ball(levels[n], w, r)));
    }
  }
}

TEST_CASE("Gromov-Hausdorff distance") {
  const Multigraph g = to_multigraph(build_by_action(6));
  const RootedGraph rg{g, 5, {}};
  const GhDistance same = gh_distance(rg, rg, 10);
  CHECK(same.upper_bound);
  CHECK(same.str() == "<= 1/12");

  Multigraph a(1), b(1);
  a.add_edge(0, 0);
  const GhDistance far = gh_distance(RootedGraph{a, 0, {}}, RootedGraph{b, 0, {}}, 10);
  CHECK(far.str() == "1");

  // Distances to a deep level shrink; consecutive levels need not.
  const EPWord x = parse_word_spec("1(1100)");
  const RootedGraph deep{to_multigraph(build_by_sr(13)), word_index(prefix(x, 13)), {}};
  std::uint64_t prev = 0;
  for (unsigned n = 2; n < 13; ++n) {
    const RootedGraph g{to_multigraph(build_by_sr(n)), word_index(prefix(x, n)), {}};
    const GhDistance d = gh_distance(g, deep, 200);
    CHECK(d.denominator >= prev);
    prev = d.denominator;
  }
  CHECK(prev >= 64);
}
