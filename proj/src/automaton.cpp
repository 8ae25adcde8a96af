// SPDX-License-Identifier: Apache-2.0
#include "basilica/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace basilica {

Automaton::Automaton(std::size_t alphabet_size, std::vector<std::string> names,
                     std::vector<std::vector<StateId>> transition,
                     std::vector<std::vector<Letter>> output)
    : q_(alphabet_size),
      names_(std::move(names)),
      transition_(std::move(transition)),
      output_(std::move(output)) {
  if (q_ == 0 || q_ > 256) throw std::invalid_argument("alphabet size must be in [1, 256]");
  if (names_.empty()) throw std::invalid_argument("automaton needs at least one state");
  if (transition_.size() != names_.size() || output_.size() != names_.size()) {
    throw std::invalid_argument("transition/output tables must have one row per state");
  }
  for (std::size_t s = 0; s < names_.size(); ++s) {
    if (transition_[s].size() != q_ || output_[s].size() != q_) {
      throw std::invalid_argument("row of state " + names_[s] + " is not total");
    }
    for (std::size_t x = 0; x < q_; ++x) {
      if (transition_[s][x] >= names_.size()) throw std::invalid_argument("bad transition target");
      if (output_[s][x] >= q_) throw std::invalid_argument("bad output letter");
    }
  }
}

std::optional<StateId> Automaton::find(std::string_view name) const {
  for (std::size_t s = 0; s < names_.size(); ++s) {
    if (names_[s] == name) return static_cast<StateId>(s);
  }
  return std::nullopt;
}

bool Automaton::is_invertible() const {
  for (const auto& row : output_) {
    std::vector<bool> hit(q_, false);
    for (Letter y : row) {
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

std::vector<Letter> Automaton::act(StateId s, const std::vector<Letter>& word) const {
  std::vector<Letter> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    out[i] = output_[s][word[i]];
    s = transition_[s][word[i]];
  }
  return out;
}

std::uint32_t Automaton::act_index(StateId s, std::uint32_t index, unsigned length) const {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < length; ++i) {
    const Letter x = (index >> i) & 1u;
    out |= static_cast<std::uint32_t>(output_[s][x]) << i;
    s = transition_[s][x];
  }
  return out;
}

EPWord Automaton::act(StateId s, const EPWord& x) const {
  if (q_ != 2) throw std::logic_error("EPWord action needs a binary alphabet");
  const EPWord w = normalize(x);
  std::vector<Letter> pre = act(s, w.preperiod().letters());
  for (Letter c : w.preperiod().letters()) s = transition_[s][c];

  // Pass j over the period starts in state starts[j]; the first repeated
  // start state closes the cycle.
  const auto& per = w.period().letters();
  std::vector<int> seen(names_.size(), -1);
  std::vector<std::vector<Letter>> chunks;
  while (seen[s] < 0) {
    seen[s] = static_cast<int>(chunks.size());
    chunks.push_back(act(s, per));
    for (Letter c : per) s = transition_[s][c];
  }
  const std::size_t cycle_start = static_cast<std::size_t>(seen[s]);
  std::vector<Letter> period;
  for (std::size_t j = 0; j < chunks.size(); ++j) {
    auto& target = j < cycle_start ? pre : period;
    target.insert(target.end(), chunks[j].begin(), chunks[j].end());
  }
  return normalize(EPWord(BinaryWord(std::move(pre)), BinaryWord(std::move(period))));
}

Automaton basilica() {
  // States a = e(b, id), b = ε(a, id), id.
  return Automaton(2, {"a", "b", "id"}, {{1, 2}, {0, 2}, {2, 2}}, {{0, 1}, {1, 0}, {0, 1}});
}

Automaton identity_automaton(std::size_t alphabet_size) {
  std::vector<Letter> row(alphabet_size);
  for (std::size_t x = 0; x < alphabet_size; ++x) row[x] = static_cast<Letter>(x);
  return Automaton(alphabet_size, {"id"}, {std::vector<StateId>(alphabet_size, 0)}, {row});
}

Automaton invert(const Automaton& aut) {
  if (!aut.is_invertible()) throw std::invalid_argument("automaton is not invertible");
  const std::size_t q = aut.alphabet_size();
  std::vector<std::string> names;
  std::vector<std::vector<StateId>> transition(aut.state_count(), std::vector<StateId>(q));
  std::vector<std::vector<Letter>> output(aut.state_count(), std::vector<Letter>(q));
  for (StateId s = 0; s < aut.state_count(); ++s) {
    names.push_back(aut.name(s));
    for (std::size_t x = 0; x < q; ++x) {
      const Letter y = aut.output(s, static_cast<Letter>(x));
      output[s][y] = static_cast<Letter>(x);
      transition[s][y] = aut.transition(s, static_cast<Letter>(x));
    }
  }
  return Automaton(q, std::move(names), std::move(transition), std::move(output));
}

namespace {

std::vector<bool> trivial_states(const Automaton& aut) {
  const std::size_t n = aut.state_count();
  std::vector<bool> trivial(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId s = 0; s < n; ++s) {
      if (!trivial[s]) continue;
      for (std::size_t x = 0; x < aut.alphabet_size(); ++x) {
        const Letter c = static_cast<Letter>(x);
        if (aut.output(s, c) != c || !trivial[aut.transition(s, c)]) {
          trivial[s] = false;
          changed = true;
          break;
        }
      }
    }
  }
  return trivial;
}

}  // namespace

bool is_bounded(const Automaton& aut) {
  const std::size_t n = aut.state_count();
  const std::vector<bool> trivial = trivial_states(aut);
  std::vector<std::vector<StateId>> adj(n);
  for (StateId s = 0; s < n; ++s) {
    if (trivial[s]) continue;
    for (std::size_t x = 0; x < aut.alphabet_size(); ++x) {
      const StateId t = aut.transition(s, static_cast<Letter>(x));
      if (!trivial[t]) adj[s].push_back(t);
    }
  }

  // Tarjan's strongly connected components; n is small.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<StateId> stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0, comps = 0;
  std::function<void(StateId)> visit = [&](StateId v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (StateId w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      StateId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = comps;
      } while (w != v);
      ++comps;
    }
  };
  for (StateId s = 0; s < n; ++s) {
    if (!trivial[s] && index[s] < 0) visit(s);
  }

  std::vector<std::size_t> vertices(comps, 0), edges(comps, 0);
  for (StateId s = 0; s < n; ++s) {
    if (trivial[s]) continue;
    ++vertices[comp[s]];
    for (StateId t : adj[s]) {
      if (comp[t] == comp[s]) ++edges[comp[s]];
    }
  }
  std::vector<bool> cyclic(comps, false);
  for (int c = 0; c < comps; ++c) {
    if (edges[c] > vertices[c]) return false;  // two distinct cycles share a state
    cyclic[c] = edges[c] > 0;
  }

  // No directed path between two different cyclic components.
  std::vector<std::vector<int>> dag(comps);
  for (StateId s = 0; s < n; ++s) {
    if (trivial[s]) continue;
    for (StateId t : adj[s]) {
      if (comp[t] != comp[s]) dag[comp[s]].push_back(comp[t]);
    }
  }
  for (int c = 0; c < comps; ++c) {
    if (!cyclic[c]) continue;
    std::vector<bool> reached(comps, false);
    std::vector<int> todo(dag[c].begin(), dag[c].end());
    while (!todo.empty()) {
      const int d = todo.back();
      todo.pop_back();
      if (reached[d]) continue;
      reached[d] = true;
      if (cyclic[d]) return false;
      todo.insert(todo.end(), dag[d].begin(), dag[d].end());
    }
  }
  return true;
}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct MooreCursor {
  std::string_view line;
  std::size_t line_no;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw MooreParseError(what, line_no, pos + 1);
  }
  void skip_space() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
  }
  bool at_end() const { return pos >= line.size(); }
  void expect(std::string_view token) {
    skip_space();
    if (line.substr(pos, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos += token.size();
  }
  std::string name() {
    skip_space();
    const std::size_t start = pos;
    while (pos < line.size() && is_name_char(line[pos])) ++pos;
    if (pos == start) fail("expected state name");
    return std::string(line.substr(start, pos - start));
  }
  unsigned number() {
    skip_space();
    const std::size_t start = pos;
    unsigned value = 0;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
      value = value * 10 + static_cast<unsigned>(line[pos] - '0');
      if (value > 255) fail("letter out of range");
      ++pos;
    }
    if (pos == start) fail("expected letter");
    return value;
  }
};

struct MooreEntry {
  unsigned input;
  unsigned output;
  std::string next;
  std::size_t line;
  std::size_t input_column;
  std::size_t next_column;
};

}  // namespace

Automaton parse_moore(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::vector<MooreEntry>> rows;
  std::vector<std::size_t> row_line, row_end;
  std::map<std::string, StateId, std::less<>> ids;
  unsigned max_letter = 0;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    ++line_no;
    MooreCursor cur{text.substr(start, stop - start), line_no};
    start = stop + 1;
    cur.skip_space();
    if (cur.at_end() || cur.line[cur.pos] == '#') continue;

    const std::size_t name_col = cur.pos + 1;
    std::string name = cur.name();
    if (ids.count(name)) throw MooreParseError("duplicate state '" + name + "'", line_no, name_col);
    ids.emplace(name, static_cast<StateId>(names.size()));
    names.push_back(name);
    cur.expect(":");

    std::vector<MooreEntry> row;
    while (true) {
      MooreEntry e{};
      e.line = line_no;
      cur.skip_space();
      e.input_column = cur.pos + 1;
      e.input = cur.number();
      cur.expect("|");
      e.output = cur.number();
      cur.expect("->");
      cur.skip_space();
      e.next_column = cur.pos + 1;
      e.next = cur.name();
      max_letter = std::max({max_letter, e.input, e.output});
      row.push_back(std::move(e));
      cur.skip_space();
      if (cur.at_end()) break;
      cur.expect(",");
    }
    rows.push_back(std::move(row));
    row_line.push_back(line_no);
    row_end.push_back(cur.line.size() + 1);
  }
  if (names.empty()) throw MooreParseError("no states", 1, 1);

  const std::size_t q = max_letter + 1;
  std::vector<std::vector<StateId>> transition(names.size(), std::vector<StateId>(q));
  std::vector<std::vector<Letter>> output(names.size(), std::vector<Letter>(q));
  for (std::size_t s = 0; s < names.size(); ++s) {
    std::vector<bool> seen(q, false);
    for (const MooreEntry& e : rows[s]) {
      if (seen[e.input]) throw MooreParseError("letter defined twice", e.line, e.input_column);
      seen[e.input] = true;
      auto it = ids.find(e.next);
      if (it == ids.end()) throw MooreParseError("unknown state '" + e.next + "'", e.line, e.next_column);
      transition[s][e.input] = it->second;
      output[s][e.input] = static_cast<Letter>(e.output);
    }
    for (std::size_t x = 0; x < q; ++x) {
      if (!seen[x]) {
        throw MooreParseError("missing letter " + std::to_string(x), row_line[s], row_end[s]);
      }
    }
  }
  return Automaton(q, std::move(names), std::move(transition), std::move(output));
}

std::string to_moore(const Automaton& aut) {
  std::ostringstream out;
  for (StateId s = 0; s < aut.state_count(); ++s) {
    out << aut.name(s) << ":";
    for (std::size_t x = 0; x < aut.alphabet_size(); ++x) {
      const Letter c = static_cast<Letter>(x);
      out << (x ? ", " : " ") << x << "|" << unsigned(aut.output(s, c)) << " -> "
          << aut.name(aut.transition(s, c));
    }
    out << "\n";
  }
  return out.str();
}

GroupWord parse_group_word(std::string_view s) {
  GroupWord g;
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case 'a': g.push_back(Generator::a); break;
      case 'A': g.push_back(Generator::a_inv); break;
      case 'b': g.push_back(Generator::b); break;
      case 'B': g.push_back(Generator::b_inv); break;
      default: throw WordSpecError(std::string("unexpected generator '") + s[i] + "'", i);
    }
  }
  return g;
}

std::string to_string(const GroupWord& g) {
  static constexpr char kSymbols[] = {'a', 'A', 'b', 'B'};
  std::string s;
  for (Generator x : g) s.push_back(kSymbols[static_cast<int>(x)]);
  return s;
}

Generator inverse(Generator g) {
  switch (g) {
    case Generator::a: return Generator::a_inv;
    case Generator::a_inv: return Generator::a;
    case Generator::b: return Generator::b_inv;
    case Generator::b_inv: return Generator::b;
  }
  return g;
}

namespace {

struct BasilicaPair {
  Automaton forward = basilica();
  Automaton backward = invert(forward);
};

const BasilicaPair& basilica_pair() {
  static const BasilicaPair pair;
  return pair;
}

std::pair<const Automaton*, StateId> resolve(Generator g) {
  const BasilicaPair& p = basilica_pair();
  switch (g) {
    case Generator::a: return {&p.forward, 0};
    case Generator::a_inv: return {&p.backward, 0};
    case Generator::b: return {&p.forward, 1};
    case Generator::b_inv: return {&p.backward, 1};
  }
  return {&p.forward, 2};
}

}  // namespace

BinaryWord act_word(const GroupWord& g, const BinaryWord& v) {
  std::vector<Letter> w = v.letters();
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    auto [aut, s] = resolve(*it);
    w = aut->act(s, w);
  }
  return BinaryWord(std::move(w));
}

EPWord act_epword(const GroupWord& g, const EPWord& x) {
  EPWord w = normalize(x);
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    auto [aut, s] = resolve(*it);
    w = aut->act(s, w);
  }
  return w;
}

}  // namespace basilica
