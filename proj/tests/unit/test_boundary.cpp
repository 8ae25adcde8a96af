#include <doctest.h>

#include <set>

#include "basilica/boundary.hpp"
#include "basilica/schreier.hpp"
#include "oracles.hpp"

using namespace basilica;

namespace {

EPWord w(const char* spec) { return parse_word_spec(spec); }

std::string letters(const std::vector<char>& v) { return std::string(v.begin(), v.end()); }

// Class from the letter tails alone.
EndClass class_oracle(const EPWord& x) {
  const std::size_t start = x.preperiod().size() + 4;
  const std::size_t span = 2 * x.period().size();
  bool ones[2] = {false, false}, zero_tail = true, alt[2] = {true, true};
  for (std::size_t i = start; i < start + 2 * span; ++i) {
    const Letter c = x.letter(i);
    ones[i % 2] |= c == 1;
    zero_tail &= c == 0;
    alt[0] &= c == (i % 2 == 1 ? 1 : 0);
    alt[1] &= c == (i % 2 == 0 ? 1 : 0);
  }
  if (zero_tail || alt[0] || alt[1]) return EndClass::four;
  if (ones[0] && ones[1]) return EndClass::one;
  return ones[0] ? EndClass::two_odd : EndClass::two_even;
}

EPWord complement_from(const EPWord& x, std::size_t from, std::size_t step) {
  return EPWord::tabulate(std::max(from + 1, x.preperiod().size()), 2 * x.period().size() * step, [&](std::size_t i) {
    const Letter c = x.letter(i);
    return static_cast<Letter>(i >= from && (i - from) % step == 0 ? 1 - c : c);
  });
}

}  // namespace

TEST_CASE("end classes") {
  CHECK(classify_ends(w("(0)")) == EndClass::four);
  CHECK(classify_ends(w("110(01)")) == EndClass::four);
  CHECK(classify_ends(w("1(10)")) == EndClass::four);
  CHECK(classify_ends(w("1(1100)")) == EndClass::one);
  CHECK(classify_ends(w("(0100)")) == EndClass::two_even);
  CHECK(classify_ends(w("(0001)")) == EndClass::two_even);
  CHECK(classify_ends(w("(1000)")) == EndClass::two_odd);
  CHECK(to_string(EndClass::two_even) == "2even");
  CHECK(end_count(EndClass::four) == 4);
  oracle::Gen gen(41);
  for (int it = 0; it < 500; ++it) {
    const EPWord x = normalize(gen.ep_word(4, 6));
    CHECK(classify_ends(x) == class_oracle(x));
  }
}

TEST_CASE("orbits") {
  CHECK(orbit_equal(w("(0)"), w("(01)")));
  CHECK(orbit_equal(w("(1)"), w("01(1)")));
  CHECK(orbit_equal(w("1(10)"), w("1(01)")));
  CHECK_FALSE(orbit_equal(w("(0)"), w("(1)")));
  CHECK_FALSE(orbit_equal(w("(0100)"), w("(0001)")));
}

TEST_CASE("canonical triples") {
  const CanonicalTriple a = canonical_triple(w("1(1100)"));
  CHECK(a.k == 1);
  CHECK(a.m0 == 0);
  CHECK_FALSE(a.tail_one_omega);
  CHECK(a.units.preperiod().empty());
  REQUIRE(a.units.period().size() == 1);
  CHECK(a.units.period()[0] == TripleUnit{2, 2, {0}});
  CHECK(a.str() == "1;[0,(2)];[(2)]");
  CHECK(a.index_of_stability() == 1);

  const CanonicalTriple b = canonical_triple(w("(1)"));
  CHECK(b.k == 1);
  CHECK(b.m0 == 0);
  CHECK(b.tail_one_omega);
  CHECK(b.units.finite());
  CHECK(b.units.finite_length() == 0);

  const CanonicalTriple c = canonical_triple(w("101(1)"));
  CHECK(c.k == 1);
  CHECK(c.m0 == 2);
  CHECK(c.x0 == std::vector<Letter>{1});
  CHECK(c.tail_one_omega);

  const CanonicalTriple d = canonical_triple(w("0001(000110)"));
  CHECK(d.k == 4);
  CHECK(d.reassemble() == normalize(w("0001(000110)")));

  CHECK_THROWS_AS(canonical_triple(w("(0100)")), EndClassError);
  CHECK_THROWS_AS(canonical_triple(w("(0)")), EndClassError);
}

TEST_CASE("property: triples reassemble their word") {
  oracle::Gen gen(42);
  for (int it = 0; it < 200; ++it) {
    const EPWord x = gen.e1_word(6, 7, true);
    const CanonicalTriple tr = canonical_triple(x);
    CHECK(tr.reassemble_prefix(512) == prefix(x, 512));
    CHECK(tr.reassemble() == normalize(x));
    CHECK(tr.k >= 1);
    CHECK(tr.m0 % 2 == 0);
    for (const auto* part : {&tr.units.preperiod(), &tr.units.period()}) {
      for (const TripleUnit& u : *part) {
        CHECK(u.t >= 1);
        CHECK(u.m >= 2);
        CHECK(u.m % 2 == 0);
        CHECK(u.x.size() == u.m / 2);
      }
    }
  }
}

TEST_CASE("SEC sequences") {
  CHECK(to_string(sec_sequence(w("1(1100)"))) == "S(EEEC)");
  CHECK(letters(sec_prefix(sec_sequence(w("(0)")), 6)) == "SSSSSS");
  CHECK(letters(sec_prefix(sec_sequence(w("(1)")), 4)).front() == 'S');
  oracle::Gen gen(43);
  for (int it = 0; it < 100; ++it) {
    const EPWord x = gen.e1_word();
    const CanonicalTriple tr = canonical_triple(x);
    const auto s = sec_prefix(sec_from_triple(tr), 64);
    for (std::size_t i = 0; i < tr.index_of_stability(); ++i) CHECK(s[i] == 'S');
    CHECK(s[tr.index_of_stability()] != 'S');
    CHECK(sec_from_triple(tr) == sec_by_prefix_dynamics(x));
  }
  for (int it = 0; it < 300; ++it) {
    const auto s = sec_prefix(sec_sequence(gen.ep_word()), 80);
    CHECK(letters(s).find("CC") == std::string::npos);
  }
}

TEST_CASE("SEC from the graphs matches the formula") {
  const LevelTower tower(12);
  oracle::Gen gen(44);
  for (int it = 0; it < 100; ++it) {
    const EPWord x = gen.e1_word();
    const auto graph_side = sec_letters_from_cp(tower.cp_lengths(prefix(x, 12)));
    CHECK(letters(graph_side) == letters(sec_prefix(sec_sequence(x), 12)));
  }
  CHECK(letters(sec_letters_from_cp(tower.cp_lengths(prefix(w("1(1100)"), 12)))) == "SEEECEEECEEE");
}

TEST_CASE("a-sequence, lengths and angles") {
  const CanonicalTriple tr = canonical_triple(w("1(1100)"));
  const CyclePathSummary s = cycle_path_summary(tr, 8);
  CHECK(s.a == std::vector<std::size_t>{1, 2, 5, 6, 9, 10, 13, 14});
  CHECK(s.lengths == std::vector<BigInt>{2, 2, 8, 8, 32, 32, 128, 128});
  CHECK(s.angles == std::vector<Rational>{1, 1, Rational(1, 2), 1, Rational(1, 2), 1, Rational(1, 2), 1});
  CHECK(a_sequence(canonical_triple(w("(1)")), 5) == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(block_angle({1}) == Rational(3, 2));
  CHECK(block_angle({0}) == Rational(1, 2));
  CHECK(block_angle({}) == 1);
}

TEST_CASE("property: a-sequence shape and complementary angles") {
  oracle::Gen gen(45);
  for (int it = 0; it < 100; ++it) {
    const CanonicalTriple tr = canonical_triple(gen.e1_word());
    const CyclePathSummary s = cycle_path_summary(tr, 30);
    std::set<std::size_t> gaps{1};
    for (std::size_t j = 0; j < 40; ++j) gaps.insert(tr.units.at(j).m + 1);
    for (std::size_t i = 0; i < s.a.size(); ++i) {
      CHECK(s.lengths[i] == BigInt(1) << ((s.a[i] + 1) / 2));
      CHECK(s.angles[i] > 0);
      CHECK(s.angles[i] <= 2);
      if (i > 0) CHECK(gaps.count(s.a[i] - s.a[i - 1]) == 1);
    }
    CHECK(s.a[0] == tr.index_of_stability());
  }
  for (int it = 0; it < 200; ++it) {
    const auto bits = gen.bits(gen.range(1, 12));
    auto flipped = bits;
    for (auto& b : flipped) b ^= 1u;
    CHECK(block_angle(bits) + block_angle(flipped) == 2);
    CHECK(block_angle(bits) == block_angle(std::vector<Letter>(bits)));
  }
}

TEST_CASE("graph-side cycle lengths at the a-indices") {
  std::vector<LevelAnalysis> levels;
  for (unsigned n = 1; n <= 12; ++n) levels.emplace_back(build_by_sr(n));
  oracle::Gen gen(46);
  std::vector<EPWord> words{w("1(1100)")};
  for (int i = 0; i < 20; ++i) words.push_back(gen.e1_word());
  for (const EPWord& x : words) {
    const CyclePathSummary s = cycle_path_summary(canonical_triple(x), 12);
    for (std::size_t i = 0; i < s.a.size() && s.a[i] <= 12; ++i) {
      const auto n = static_cast<unsigned>(s.a[i]);
      const auto cp = levels[n - 1].cycle_path(word_index(prefix(x, n)));
      REQUIRE(cp.size() == i + 1);
      for (std::size_t j = 0; j <= i; ++j) CHECK(cp.lengths[j] == (std::size_t{1} << ((s.a[j] + 1) / 2)));
    }
  }
}

TEST_CASE("xi_bar") {
  CHECK(xi_bar(w("(0100)")) == normalize(w("(0001)")));
  CHECK_THROWS_AS(xi_bar(w("1(1100)")), EndClassError);
  oracle::Gen gen(47);
  for (int it = 0; it < 200; ++it) {
    const EPWord x = gen.e2_word();
    const EPWord y = xi_bar(x);
    CHECK(classify_ends(y) == classify_ends(x));
    CHECK(cofinal(xi_bar(y), x));
    CHECK_FALSE(cofinal(x, y));
    CHECK(limit_isomorphic(x, y));
    CHECK_FALSE(orbit_equal(x, y));
  }
}

TEST_CASE("isomorphism examples") {
  CHECK(limit_isomorphic(w("(1)"), w("01(1)")));
  CHECK(limit_isomorphic(w("(0)"), w("(01)")));
  CHECK(limit_isomorphic(w("(0)"), w("10110(10)")));
  CHECK_FALSE(limit_isomorphic(w("(0)"), w("(1)")));
  CHECK_FALSE(limit_isomorphic(w("(1)"), w("1(1100)")));
  CHECK_FALSE(limit_isomorphic(w("(0100)"), w("(1000)")));
  const IsoResult r = decide_isomorphism(w("1(1100)"), w("010(0011)"));
  CHECK(r.isomorphic);
  CHECK(r.witness.has_value());
  // Complementing every block keeps the graph.
  CHECK(limit_isomorphic(w("1(1100)"), w("1(1101)")));
  CHECK_FALSE(limit_isomorphic(w("1(1100)"), w("(1100)")));
}

TEST_CASE("property: limit isomorphism is an equivalence refined by orbits") {
  oracle::Gen gen(48);
  std::vector<EPWord> pool;
  for (int i = 0; i < 20; ++i) {
    const EPWord x = gen.e1_word(3, 4);
    pool.push_back(x);
    pool.push_back(act_epword(gen.group_word(5), x));
    pool.push_back(complement_from(x, 8, 2));
  }
  for (int i = 0; i < 10; ++i) pool.push_back(gen.e2_word());
  for (const auto& x : pool) {
    CHECK(limit_isomorphic(x, x));
    for (const auto& y : pool) {
      const bool xy = limit_isomorphic(x, y);
      CHECK(xy == limit_isomorphic(y, x));
      if (!xy) continue;
      for (const auto& z : pool) {
        if (limit_isomorphic(y, z)) CHECK(limit_isomorphic(x, z));
      }
    }
  }
  for (int it = 0; it < 200; ++it) {
    const EPWord x = normalize(gen.ep_word());
    const EPWord y = act_epword(gen.group_word(6), x);
    REQUIRE(orbit_equal(x, y));
    CHECK(limit_isomorphic(x, y));
  }
}

TEST_CASE("partition of the odd integers") {
  oracle::Gen gen(49);
  for (int it = 0; it < 20; ++it) {
    EPWord x = gen.ep_word();
    if (!has_infinitely_many_ones(x) || !has_infinitely_many_ones(complement_from(x, 0, 1))) continue;
    for (long long n = -4096; n <= 4096; ++n) {
      const auto k = partition_index(n, x, 60);
      if (n % 2 == 0) {
        CHECK_FALSE(k.has_value());
        continue;
      }
      if (!k) FAIL("no class for " << n << " in " << x.str());
      // Brute membership: exactly one k in 1..60.
      int hits = 0;
      for (unsigned j = 1; j <= 40; ++j) {
        long long r = (1LL << j) - 1;
        for (unsigned i = 1; i <= j; ++i) r -= (1LL << i) * x.letter(i - 1);
        const long long mod = 1LL << (j + 1);
        if (((n - r) % mod + mod) % mod == 0) ++hits;
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("model graphs") {
  DecorationCatalog catalog;
  const ModelGraph four = build_four_ended(8, catalog);
  CHECK(four.heights[8 + 1] == 1);
  CHECK(four.heights[8 - 1] == 1);
  CHECK(four.heights[8 + 2] == 3);
  CHECK(four.heights_r2[8 + 2] == 4);
  CHECK(four.heights_r2[8 + 4] == 6);
  for (unsigned n = 2; n <= 10; ++n) {
    const std::size_t r = (std::size_t{1} << ((n - 1 + 1) / 2 - 1)) - 1;
    const ModelGraph m = build_four_ended(r + 1, catalog, r);
    const Multigraph g = to_multigraph(build_by_sr(n));
    CHECK(rooted_isomorphic(ball(m.graph.graph, m.graph.root, r), ball(g, 0, r)));
  }

  const EPWord x = w("(0100)");
  const ModelGraph two = build_two_ended(x, 8, catalog);
  for (long long p = -8; p <= 8; p += 2) CHECK(two.heights[static_cast<std::size_t>(p + 8)] == 2);
  for (unsigned h : two.heights) CHECK(h % 2 == 0);
  CHECK_THROWS_AS(build_two_ended(w("1(1100)"), 4, catalog), EndClassError);
  const ModelGraph odd = build_two_ended(w("(1000)"), 8, catalog);
  for (unsigned h : odd.heights) CHECK(h % 2 == 1);
}

TEST_CASE("two-ended model matches the finite graphs around the hat word") {
  DecorationCatalog catalog;
  oracle::Gen gen(50);
  std::vector<EPWord> words{w("(0100)")};
  for (int i = 0; i < 4; ++i) words.push_back(gen.e2_word(true));
  for (int i = 0; i < 4; ++i) words.push_back(gen.e2_word(false));
  for (const EPWord& x : words) {
    const EPWord hat = hat_word(x);
    CHECK(cofinal(hat, x));
    const unsigned shift = classify_ends(x) == EndClass::two_even ? 0 : 1;
    for (unsigned t = 2; t <= 5; ++t) {
      const unsigned n = 2 * t + shift;
      const Multigraph g = to_multigraph(build_by_sr(n));
      const NodeId v = word_index(prefix(hat, n));
      const std::size_t r = g.distances(v)[0];
      const ModelGraph m = build_two_ended(x, r + 1, catalog, r);
      CHECK(rooted_isomorphic(ball(m.graph.graph, m.graph.root, r), ball(g, v, r)));
    }
  }
}

TEST_CASE("measure series") {
  // Each forced letter removes the next dyadic term, so after j terms 2^−j remain.
  const std::vector<std::size_t> t(40, 2), m(40, 2);
  Rational prev = 1;
  for (std::size_t terms = 0; terms <= 40; ++terms) {
    const Rational v = measure_w_partial(3, t, m, terms);
    CHECK(v == Rational(1, BigInt(1) << terms));
    CHECK(v <= prev);
    CHECK(v >= 0);
    prev = v;
  }
  std::vector<std::size_t> t2, m2{0};
  for (int i = 0; i < 10; ++i) {
    t2.insert(t2.end(), {1, 3});
    m2.insert(m2.end(), {4, 2});
  }
  CHECK(measure_w_partial(5, t2, m2, 21) == Rational(1, BigInt(1) << 21));
  CHECK_THROWS(measure_w_partial(2, t, {2}, 3));
}
