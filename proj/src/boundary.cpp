// SPDX-License-Identifier: Apache-2.0
#include "basilica/boundary.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "basilica/automaton.hpp"
#include "basilica/schreier.hpp"

namespace basilica {

namespace {

bool exceptional(const EPWord& x) {
  static const EPWord zero = parse_word_spec("(0)");
  static const EPWord zero_one = parse_word_spec("(01)");
  static const EPWord one_zero = parse_word_spec("(10)");
  return cofinal(x, zero) || cofinal(x, zero_one) || cofinal(x, one_zero);
}

// The word with its first letter removed.
EPWord drop_first(const EPWord& w) {
  const std::size_t pre = w.preperiod().size();
  return EPWord::tabulate(pre > 0 ? pre - 1 : 0, w.period().size(),
                          [&](std::size_t i) { return w.letter(i + 1); });
}

std::string format_list(const EpSequence<std::size_t>& s, bool infinite_tail) {
  std::string out = "[";
  bool first = true;
  auto put = [&](const std::string& item) {
    out += (first ? "" : ",") + item;
    first = false;
  };
  for (std::size_t v : s.preperiod()) put(std::to_string(v));
  if (infinite_tail) put("inf");
  if (!s.finite()) {
    std::string per = "(";
    for (std::size_t i = 0; i < s.period().size(); ++i) {
      per += (i ? "," : "") + std::to_string(s.period()[i]);
    }
    put(per + ")");
  }
  return out + "]";
}

}  // namespace

std::string to_string(EndClass c) {
  switch (c) {
    case EndClass::one:
      return "1";
    case EndClass::two_even:
      return "2even";
    case EndClass::two_odd:
      return "2odd";
    case EndClass::four:
      return "4";
  }
  return "?";
}

int end_count(EndClass c) {
  return c == EndClass::one ? 1 : c == EndClass::four ? 4 : 2;
}

EndClass classify_ends(const EPWord& x) {
  if (exceptional(x)) return EndClass::four;
  const auto [alpha, beta] = interleave_split(x);
  const bool a = has_infinitely_many_ones(alpha);
  const bool b = has_infinitely_many_ones(beta);
  if (a && b) return EndClass::one;
  return a ? EndClass::two_odd : EndClass::two_even;
}

bool orbit_equal(const EPWord& x, const EPWord& y) {
  return cofinal(x, y) || (exceptional(x) && exceptional(y));
}

// Canonical triples.

CanonicalTriple canonical_triple(const EPWord& x) {
  if (classify_ends(x) != EndClass::one) {
    throw EndClassError("canonical triple needs a one-ended word, got " + x.str());
  }
  const EPWord w = normalize(x);
  const std::size_t pre = w.preperiod().size();
  const std::size_t per = w.period().size();
  const auto& pl = w.period().letters();
  const bool period_all_ones = std::all_of(pl.begin(), pl.end(), [](Letter c) { return c == 1; });
  auto X = [&](std::size_t i) { return w.letter(i); };
  auto ones_forever = [&](std::size_t p) { return p >= pre && period_all_ones; };
  auto read_block = [&](std::size_t& p, std::vector<Letter>& bits) {
    std::size_t m = 0;
    while (X(p) == 0) {
      bits.push_back(X(p + 1));
      p += 2;
      m += 2;
    }
    return m;
  };

  CanonicalTriple tr;
  std::size_t pos = 0;
  while (X(pos) == 0) ++pos;
  tr.k = pos + 1;
  ++pos;
  tr.m0 = read_block(pos, tr.x0);

  std::vector<TripleUnit> units;
  std::map<std::size_t, std::size_t> seen;
  std::optional<std::size_t> cycle_from;
  while (true) {
    if (pos >= pre && !ones_forever(pos)) {
      const std::size_t phase = (pos - pre) % per;
      if (auto it = seen.find(phase); it != seen.end()) {
        cycle_from = it->second;
        break;
      }
      seen.emplace(phase, units.size());
    }
    TripleUnit u;
    while (X(pos) == 1) {
      if (ones_forever(pos)) {
        tr.tail_one_omega = true;
        break;
      }
      ++u.t;
      ++pos;
    }
    if (tr.tail_one_omega) break;
    u.m = read_block(pos, u.x);
    units.push_back(std::move(u));
  }
  if (tr.tail_one_omega) {
    tr.units = EpSequence<TripleUnit>(std::move(units), {});
  } else {
    std::vector<TripleUnit> head(units.begin(), units.begin() + static_cast<std::ptrdiff_t>(*cycle_from));
    std::vector<TripleUnit> cycle(units.begin() + static_cast<std::ptrdiff_t>(*cycle_from), units.end());
    tr.units = EpSequence<TripleUnit>(std::move(head), std::move(cycle));
  }
  return tr;
}

std::string CanonicalTriple::str() const {
  std::vector<std::size_t> m_pre{m0}, m_per, t_pre, t_per;
  for (const auto& u : units.preperiod()) {
    m_pre.push_back(u.m);
    t_pre.push_back(u.t);
  }
  for (const auto& u : units.period()) {
    m_per.push_back(u.m);
    t_per.push_back(u.t);
  }
  return std::to_string(k) + ";" +
         format_list(EpSequence<std::size_t>(std::move(m_pre), std::move(m_per)), false) + ";" +
         format_list(EpSequence<std::size_t>(std::move(t_pre), std::move(t_per)), tail_one_omega);
}

BinaryWord CanonicalTriple::reassemble_prefix(std::size_t n) const {
  BinaryWord out;
  auto put = [&](Letter c) {
    if (out.size() < n) out.push_back(c);
  };
  auto block = [&](const std::vector<Letter>& bits) {
    for (Letter b : bits) {
      put(0);
      put(b);
    }
  };
  for (std::size_t i = 1; i < k; ++i) put(0);
  put(1);
  block(x0);
  for (std::size_t j = 0; out.size() < n; ++j) {
    if (units.finite() && j >= units.finite_length()) {
      while (out.size() < n) put(1);
      break;
    }
    const TripleUnit& u = units.at(j);
    for (std::size_t i = 0; i < u.t; ++i) put(1);
    block(u.x);
  }
  return out;
}

EPWord CanonicalTriple::reassemble() const {
  std::size_t head = k + m0;
  for (const auto& u : units.preperiod()) head += u.t + u.m;
  std::size_t cycle = 0;
  for (const auto& u : units.period()) cycle += u.t + u.m;
  if (tail_one_omega) cycle = 1;
  const BinaryWord letters = reassemble_prefix(head + cycle);
  return EPWord::tabulate(head, cycle, [&](std::size_t i) { return letters[i]; });
}

// SEC sequences.

std::string to_string(const SecSequence& s) {
  std::string out(s.preperiod().begin(), s.preperiod().end());
  if (!s.finite()) out += "(" + std::string(s.period().begin(), s.period().end()) + ")";
  return out;
}

std::vector<char> sec_prefix(const SecSequence& s, std::size_t n) {
  std::vector<char> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = s.at(i);
  return out;
}

SecSequence sec_from_triple(const CanonicalTriple& tr) {
  auto emit = [](std::vector<char>& out, const TripleUnit& u) {
    out.insert(out.end(), u.t, 'E');
    for (std::size_t i = 0; i < u.m / 2; ++i) {
      out.push_back('E');
      out.push_back('C');
    }
  };
  std::vector<char> pre(tr.k + tr.m0, 'S'), period;
  for (const auto& u : tr.units.preperiod()) emit(pre, u);
  for (const auto& u : tr.units.period()) emit(period, u);
  if (tr.tail_one_omega) period = {'E'};
  return SecSequence(std::move(pre), std::move(period));
}

namespace {

// Z: 0^n; N: D(0^n)^c; L: D(0^n) \ {0^n}.
enum class Zone : std::uint8_t { zero, right, left };

Zone step(Zone s, Letter c) {
  switch (s) {
    case Zone::zero:
      return c == 0 ? Zone::zero : Zone::right;
    case Zone::right:
      return c == 0 ? Zone::left : Zone::right;
    case Zone::left:
      return Zone::right;
  }
  return s;
}

int cp_delta(Zone s) { return s == Zone::zero ? 0 : s == Zone::right ? 1 : -1; }
char sec_letter(Zone s) { return s == Zone::zero ? 'S' : s == Zone::right ? 'E' : 'C'; }

}  // namespace

SecSequence sec_by_prefix_dynamics(const EPWord& x) {
  const EPWord w = normalize(x);
  const std::size_t pre = w.preperiod().size();
  const std::size_t per = w.period().size();

  // zone[n], cp[n] for levels n ≥ 1 (index 0 unused).
  std::vector<Zone> zone{Zone::zero, w.letter(0) ? Zone::right : Zone::zero};
  std::vector<long long> cp{0, 1};
  std::map<std::pair<Zone, std::size_t>, std::size_t> seen;
  std::size_t n0 = 0, n1 = 0;
  for (std::size_t n = 1;; ++n) {
    if (n >= pre) {
      const auto key = std::make_pair(zone[n], (n - pre) % per);
      if (auto it = seen.find(key); it != seen.end()) {
        n0 = it->second;
        n1 = n;
        break;
      }
      seen.emplace(key, n);
    }
    cp.push_back(cp[n] + cp_delta(zone[n]));
    zone.push_back(step(zone[n], w.letter(n)));
  }
  const std::size_t cycle = n1 - n0;
  const long long drift = cp[n1] - cp[n0];
  const bool stable_forever =
      drift == 0 && std::find(cp.begin() + static_cast<std::ptrdiff_t>(n0),
                              cp.begin() + static_cast<std::ptrdiff_t>(n1), 1) !=
                        cp.begin() + static_cast<std::ptrdiff_t>(n1);
  if (stable_forever) return SecSequence({}, {'S'});

  std::size_t z = 1;
  for (std::size_t n = 1; n <= n1; ++n) {
    if (cp[n] == 1) z = n;
  }
  auto zone_at = [&](std::size_t m) { return m <= n1 ? zone[m] : zone[n0 + (m - n0) % cycle]; };
  // Letter n is S for n ≤ z and the letter of zone n−1 afterwards.
  const std::size_t head = std::max(z, n0);
  std::vector<char> pre_letters, period;
  for (std::size_t n = 1; n <= head; ++n) pre_letters.push_back(n <= z ? 'S' : sec_letter(zone_at(n - 1)));
  for (std::size_t n = head + 1; n <= head + cycle; ++n) period.push_back(sec_letter(zone_at(n - 1)));
  return SecSequence(std::move(pre_letters), std::move(period));
}

SecSequence sec_sequence(const EPWord& x) {
  if (classify_ends(x) == EndClass::one) return sec_from_triple(canonical_triple(x));
  return sec_by_prefix_dynamics(x);
}

std::size_t cp_length_of_prefix(const BinaryWord& w) {
  if (w.empty()) throw std::invalid_argument("cycle-path of the empty word");
  Zone s = w[0] ? Zone::right : Zone::zero;
  long long cp = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    cp += cp_delta(s);
    s = step(s, w[i]);
  }
  return static_cast<std::size_t>(cp);
}

LevelTower::LevelTower(unsigned top) {
  levels_.reserve(top);
  for (unsigned n = 1; n <= top; ++n) levels_.emplace_back(build_by_action(n, top));
}

std::vector<std::size_t> LevelTower::cp_lengths(const BinaryWord& prefix) const {
  const std::size_t top = std::min<std::size_t>(levels_.size(), prefix.size());
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= top; ++n) {
    out.push_back(levels_[n - 1].cycle_path(word_index(prefix.prefix(n))).size());
  }
  return out;
}

std::vector<char> sec_letters_from_cp(const std::vector<std::size_t>& cp) {
  std::size_t z = 0;
  for (std::size_t n = 1; n <= cp.size(); ++n) {
    if (cp[n - 1] == 1) z = n;
  }
  std::vector<char> out;
  for (std::size_t n = 1; n <= cp.size(); ++n) {
    if (n <= z) {
      out.push_back('S');
    } else if (cp[n - 1] == cp[n - 2] + 1) {
      out.push_back('E');
    } else if (cp[n - 1] + 1 == cp[n - 2]) {
      out.push_back('C');
    } else {
      out.push_back('?');
    }
  }
  return out;
}

// Cycle-path invariants.

namespace {

// Visits i = 1, 2, … with the unit j containing index i and the offset s.
template <class F>
void for_each_index(const CanonicalTriple& tr, std::size_t count, F&& f) {
  std::size_t i = 1;
  std::size_t big_m = tr.m0, big_t = 0;
  for (std::size_t j = 1; i <= count; ++j) {
    const bool last = tr.units.finite() && j > tr.units.finite_length();
    const TripleUnit* u = last ? nullptr : &tr.units.at(j - 1);
    const std::size_t t = last ? count : u->t;
    for (std::size_t s = 0; s < t && i <= count; ++s, ++i) f(i, j, s, tr.k + big_m + big_t + s);
    if (last) break;
    big_t += u->t;
    big_m += u->m;
  }
}

}  // namespace

std::vector<std::size_t> a_sequence(const CanonicalTriple& tr, std::size_t count) {
  std::vector<std::size_t> a;
  for_each_index(tr, count, [&](std::size_t, std::size_t, std::size_t, std::size_t value) {
    a.push_back(value);
  });
  return a;
}

Rational block_angle(const std::vector<Letter>& bits) {
  const std::size_t len = bits.size();
  Rational q(1, BigInt(1) << len);
  for (std::size_t h = 1; h <= len; ++h) {
    if (bits[h - 1]) q += Rational(1, BigInt(1) << (len - h));
  }
  return q;
}

std::vector<Rational> angles(const CanonicalTriple& tr, std::size_t count) {
  std::vector<Rational> out;
  for_each_index(tr, count, [&](std::size_t, std::size_t j, std::size_t s, std::size_t) {
    if (s > 0) {
      out.emplace_back(1);
    } else {
      out.push_back(block_angle(j == 1 ? tr.x0 : tr.units.at(j - 2).x));
    }
  });
  return out;
}

CyclePathSummary cycle_path_summary(const CanonicalTriple& tr, std::size_t count) {
  CyclePathSummary out;
  out.a = a_sequence(tr, count);
  for (std::size_t a : out.a) out.lengths.push_back(BigInt(1) << ((a + 1) / 2));
  out.angles = angles(tr, count);
  return out;
}

// ξ̄.

EPWord xi_bar(const EPWord& x) {
  const EndClass c = classify_ends(x);
  if (c != EndClass::two_even && c != EndClass::two_odd) {
    throw EndClassError("xi_bar needs a two-ended word, got " + x.str());
  }
  const EPWord w = normalize(x);
  const std::size_t pre = w.preperiod().size();
  const std::size_t per = w.period().size();
  const std::size_t limit = pre + 2 * per + 2;

  std::optional<std::size_t> prev;
  std::optional<std::size_t> cut;
  for (std::size_t i = 0; i < limit; ++i) {
    if (!w.letter(i)) continue;
    if (prev && (i - *prev) % 2 == 1) cut = i + 1;
    prev = i;
  }
  // No odd-gap pair: all 1s share a parity (w empty when they sit at odd
  // 0-based indices, w = the first letter otherwise).
  if (!cut) cut = c == EndClass::two_even ? 0 : 1;
  const std::size_t wl = *cut;
  for (std::size_t i = wl; i < limit; i += 2) {
    if (w.letter(i)) throw std::logic_error("xi_bar: expected 0 after the prefix of " + w.str());
  }
  return EPWord::tabulate(std::max(pre, wl), std::lcm(per, std::size_t{2}), [&](std::size_t i) {
    const Letter v = w.letter(i);
    return static_cast<Letter>(i >= wl && (i - wl) % 2 == 1 ? 1 - v : v);
  });
}

// Isomorphism of limit graphs.

namespace {

// (m_j, x^j up to complement, t_{j+1}).
struct ShiftKey {
  std::size_t m = 0;
  std::vector<Letter> x;
  std::size_t t_next = 0;

  bool operator==(const ShiftKey&) const = default;
};

std::vector<Letter> up_to_complement(std::vector<Letter> bits) {
  if (!bits.empty() && bits[0] == 1) {
    for (auto& b : bits) b = static_cast<Letter>(1 - b);
  }
  return bits;
}

EpSequence<ShiftKey> shift_keys(const CanonicalTriple& tr) {
  const auto& u = tr.units;
  auto key = [&](std::size_t idx) {
    return ShiftKey{u.at(idx).m, up_to_complement(u.at(idx).x), u.at(idx + 1).t};
  };
  std::vector<ShiftKey> pre, period;
  for (std::size_t i = 0; i < u.preperiod().size(); ++i) pre.push_back(key(i));
  for (std::size_t i = 0; i < u.period().size(); ++i) period.push_back(key(u.preperiod().size() + i));
  return EpSequence<ShiftKey>(std::move(pre), std::move(period));
}

// k + T_r + M_{r−1}.
long long alignment(const CanonicalTriple& tr, const EpSequence<ShiftKey>& keys, std::size_t r) {
  long long v = static_cast<long long>(tr.k + tr.m0 + tr.units.at(0).t);
  for (std::size_t idx = 0; idx + 1 < r; ++idx) v += static_cast<long long>(keys.at(idx).m + keys.at(idx).t_next);
  return v;
}

IsoResult decide_one_ended(const EPWord& x, const EPWord& y) {
  const CanonicalTriple a = canonical_triple(x);
  const CanonicalTriple b = canonical_triple(y);
  if (a.tail_one_omega && b.tail_one_omega) return {true, "both words end in 1^omega", std::nullopt};
  if (a.tail_one_omega || b.tail_one_omega) {
    return {false, "exactly one word ends in 1^omega", std::nullopt};
  }
  const EpSequence<ShiftKey> ka = shift_keys(a);
  const EpSequence<ShiftKey> kb = shift_keys(b);
  long long cycle_sum = 0;
  for (const auto& key : ka.period()) cycle_sum += static_cast<long long>(key.m + key.t_next);

  bool tails_match = false;
  // Every valid (r, s) slides along its diagonal into the periodic parts.
  const std::size_t ra = ka.preperiod().size(), qa = ka.period().size();
  const std::size_t rb = kb.preperiod().size(), qb = kb.period().size();
  for (std::size_t r = ra + 1; r <= ra + qa; ++r) {
    for (std::size_t s = rb + 1; s <= rb + qb; ++s) {
      if (!tails_equal(ka, r - 1, kb, s - 1)) continue;
      tails_match = true;
      const long long diff = alignment(b, kb, s) - alignment(a, ka, r);
      if (diff % cycle_sum != 0) continue;
      std::size_t rr = r, ss = s;
      if (diff >= 0) {
        rr += static_cast<std::size_t>(diff / cycle_sum) * qa;
      } else {
        ss += static_cast<std::size_t>(-diff / cycle_sum) * qb;
      }
      if (alignment(a, ka, rr) != alignment(b, kb, ss)) throw std::logic_error("shift witness drifted");
      return {true, "shift conditions hold", std::make_pair(rr, ss)};
    }
  }
  if (!tails_match) return {false, "block sequences (m, t, x up to complement) never align", std::nullopt};
  return {false, "blocks align but positions k+T_r+M_{r-1} never agree", std::nullopt};
}

}  // namespace

IsoResult decide_isomorphism(const EPWord& x, const EPWord& y) {
  const EndClass cx = classify_ends(x);
  const EndClass cy = classify_ends(y);
  if (cx != cy) {
    return {false, "end classes differ (" + to_string(cx) + " vs " + to_string(cy) + ")", std::nullopt};
  }
  switch (cx) {
    case EndClass::four:
      return {true, "both four-ended", std::nullopt};
    case EndClass::two_even:
    case EndClass::two_odd:
      if (cofinal(x, y)) return {true, "cofinal", std::nullopt};
      if (cofinal(xi_bar(x), y)) return {true, "cofinal with xi_bar", std::nullopt};
      return {false, "neither cofinal nor cofinal with xi_bar", std::nullopt};
    case EndClass::one:
      return decide_one_ended(x, y);
  }
  return {};
}

bool limit_isomorphic(const EPWord& x, const EPWord& y) { return decide_isomorphism(x, y).isomorphic; }

// Orbital balls.

RootedGraph orbital_ball(const EPWord& x, std::size_t r) {
  static const GroupWord gens[4] = {{Generator::a}, {Generator::b}, {Generator::a_inv}, {Generator::b_inv}};
  std::vector<EPWord> words{normalize(x)};
  std::unordered_map<std::string, NodeId> ids{{words[0].str(), 0}};
  std::vector<std::size_t> dist{0};
  // image[v][0], image[v][1]: a(v), b(v) when inside the ball.
  std::vector<std::array<std::optional<std::string>, 2>> image(1);
  for (std::size_t head = 0; head < words.size(); ++head) {
    for (int g = 0; g < 4; ++g) {
      const EPWord next = act_epword(gens[g], words[head]);
      std::string name = next.str();
      if (g < 2) image[head][static_cast<std::size_t>(g)] = name;
      if (ids.count(name) || dist[head] == r) continue;
      ids.emplace(name, static_cast<NodeId>(words.size()));
      words.push_back(next);
      dist.push_back(dist[head] + 1);
      image.emplace_back();
    }
  }
  RootedGraph out;
  for (const auto& w : words) out.graph.add_vertex(w.str());
  for (NodeId v = 0; v < words.size(); ++v) {
    out.origin.push_back(v);
    for (const auto& target : image[v]) {
      auto it = ids.find(*target);
      if (it != ids.end()) out.graph.add_edge(v, it->second);
    }
  }
  out.root = 0;
  return out;
}

// Model graphs.

std::optional<unsigned> partition_index(long long n, const EPWord& x, unsigned k_max) {
  k_max = std::min(k_max, 60u);
  long long residue = 0;  // 2^k − 1 − Σ 2^i x_i, built incrementally
  for (unsigned k = 1; k <= k_max; ++k) {
    residue += (1LL << (k - 1)) - (x.letter(k - 1) ? (1LL << k) : 0);
    const long long mod = 1LL << (k + 1);
    if (((n - residue) % mod + mod) % mod == 0) return k;
  }
  return std::nullopt;
}

namespace {

unsigned two_adic_valuation(long long n) {
  unsigned v = 0;
  for (unsigned long long m = static_cast<unsigned long long>(n < 0 ? -n : n); m % 2 == 0; m /= 2) ++v;
  return v;
}

void attach(Multigraph& g, NodeId at, const RootedGraph& d, const std::string& prefix) {
  std::vector<NodeId> local(d.graph.vertex_count());
  for (NodeId v = 0; v < d.graph.vertex_count(); ++v) {
    local[v] = v == d.root ? at : g.add_vertex(prefix + "/" + d.graph.name(v));
  }
  for (const auto& [u, v] : d.graph.edges()) g.add_edge(local[u], local[v]);
}

std::optional<RootedGraph> decoration_for(DecorationCatalog& catalog, unsigned h, long long pos,
                                          std::optional<std::size_t> radius) {
  const std::size_t dist = static_cast<std::size_t>(pos < 0 ? -pos : pos);
  if (!radius) return catalog.decoration(h);
  if (dist > *radius) return std::nullopt;
  return catalog.truncated(h, *radius - dist);
}

}  // namespace

ModelGraph build_four_ended(std::size_t window, DecorationCatalog& catalog, std::optional<std::size_t> radius) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  ModelGraph model;
  model.kind = ModelGraph::Kind::four_ended;
  model.window = window;
  Multigraph& g = model.graph.graph;
  const long long w = static_cast<long long>(window);
  const NodeId origin = g.add_vertex("0");
  model.graph.root = origin;
  for (int ray = 1; ray <= 2; ++ray) {
    auto& heights = ray == 1 ? model.heights : model.heights_r2;
    heights.assign(2 * window + 1, 0);
    for (int dir = -1; dir <= 1; dir += 2) {
      NodeId prev = origin;
      for (long long n = 1; n <= w; ++n) {
        const long long pos = dir * n;
        const NodeId v = g.add_vertex("R" + std::to_string(ray) + ":" + std::to_string(pos));
        g.add_edge(prev, v);
        prev = v;
        const unsigned h = 2 * two_adic_valuation(pos) + static_cast<unsigned>(ray);
        heights[static_cast<std::size_t>(pos + w)] = h;
        if (auto d = decoration_for(catalog, h, pos, radius)) attach(g, v, *d, g.name(v));
      }
    }
  }
  for (NodeId v = 0; v < g.vertex_count(); ++v) model.graph.origin.push_back(v);
  return model;
}

ModelGraph build_two_ended(const EPWord& x, std::size_t window, DecorationCatalog& catalog,
                           std::optional<std::size_t> radius) {
  const EndClass c = classify_ends(x);
  if (c != EndClass::two_even && c != EndClass::two_odd) {
    throw EndClassError("two-ended model needs a two-ended word, got " + x.str());
  }
  const bool even = c == EndClass::two_even;
  const auto [alpha, beta] = interleave_split(x);
  const EPWord seq = drop_first(even ? beta : alpha);
  const unsigned offset = even ? 2 : 1;

  ModelGraph model;
  model.kind = ModelGraph::Kind::two_ended;
  model.window = window;
  model.heights.assign(2 * window + 1, 0);
  Multigraph& g = model.graph.graph;
  const long long w = static_cast<long long>(window);
  std::optional<NodeId> prev;
  for (long long pos = -w; pos <= w; ++pos) {
    const NodeId v = g.add_vertex(std::to_string(pos));
    if (prev) g.add_edge(*prev, v);
    prev = v;
    if (pos == 0) model.graph.root = v;
    unsigned h = offset;
    if (pos % 2 != 0) {
      const auto k = partition_index(pos, seq);
      if (!k) throw std::logic_error("position " + std::to_string(pos) + " in no partition class");
      h = 2 * *k + offset;
    }
    model.heights[static_cast<std::size_t>(pos + w)] = h;
    if (auto d = decoration_for(catalog, h, pos, radius)) attach(g, v, *d, g.name(v));
  }
  for (NodeId v = 0; v < g.vertex_count(); ++v) model.graph.origin.push_back(v);
  return model;
}

EPWord hat_word(const EPWord& x) {
  const EndClass c = classify_ends(x);
  if (c != EndClass::two_even && c != EndClass::two_odd) {
    throw EndClassError("hat word needs a two-ended word, got " + x.str());
  }
  const bool even = c == EndClass::two_even;
  const auto [alpha, beta] = interleave_split(x);
  const EPWord& live = even ? beta : alpha;
  return EPWord::tabulate(2 + 2 * live.preperiod().size(), 2 * live.period().size(), [&](std::size_t i) {
    if (i < 2) return static_cast<Letter>(even ? i : 1 - i);
    const bool live_slot = (i % 2 == 1) == even;
    return live_slot ? live.letter(i / 2) : Letter{0};
  });
}

// Measure series.

Rational measure_w_partial(std::size_t z, const std::vector<std::size_t>& t,
                           const std::vector<std::size_t>& m, std::size_t terms) {
  if (m.empty()) throw std::invalid_argument("m must contain m_0");
  if (z <= m[0]) throw std::invalid_argument("index of stability must exceed m_0");
  const std::size_t k = z - m[0];
  Rational total(1);
  std::size_t pos = 0, free = 0, used = 0;
  auto forced = [&] {
    ++pos;
    if (used < terms) {
      total -= Rational(BigInt(1) << free, BigInt(1) << pos);
      ++used;
    }
  };
  auto pair = [&] {
    forced();
    ++pos;
    ++free;
  };
  for (std::size_t i = 0; i < k; ++i) forced();
  for (std::size_t i = 0; i < m[0] / 2; ++i) pair();
  for (std::size_t j = 1; used < terms && (j - 1 < t.size()); ++j) {
    for (std::size_t i = 0; i < t[j - 1]; ++i) forced();
    if (j >= m.size()) break;
    for (std::size_t i = 0; i < m[j] / 2; ++i) pair();
  }
  return total;
}

}  // namespace basilica
