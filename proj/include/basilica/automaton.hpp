// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "basilica/words.hpp"

namespace basilica {

using StateId = std::uint32_t;

// Mealy automaton over the alphabet {0, ..., q-1}.
class Automaton {
 public:
  Automaton(std::size_t alphabet_size, std::vector<std::string> names,
            std::vector<std::vector<StateId>> transition,
            std::vector<std::vector<Letter>> output);

  std::size_t alphabet_size() const { return q_; }
  std::size_t state_count() const { return names_.size(); }
  const std::string& name(StateId s) const { return names_.at(s); }
  std::optional<StateId> find(std::string_view name) const;

  StateId transition(StateId s, Letter x) const { return transition_[s][x]; }
  Letter output(StateId s, Letter x) const { return output_[s][x]; }

  bool is_invertible() const;

  // Image of a finite word under state s.
  std::vector<Letter> act(StateId s, const std::vector<Letter>& word) const;
  // Binary alphabet only: vertex index with letter i stored at bit i.
  std::uint32_t act_index(StateId s, std::uint32_t index, unsigned length) const;
  // Binary alphabet only.
  EPWord act(StateId s, const EPWord& x) const;

  bool operator==(const Automaton&) const = default;

 private:
  std::size_t q_;
  std::vector<std::string> names_;
  std::vector<std::vector<StateId>> transition_;
  std::vector<std::vector<Letter>> output_;
};

Automaton basilica();
Automaton identity_automaton(std::size_t alphabet_size);
Automaton invert(const Automaton& aut);

// Sidki's criterion on the Moore diagram restricted to non-trivial states.
bool is_bounded(const Automaton& aut);

class MooreParseError : public std::invalid_argument {
 public:
  MooreParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::invalid_argument("line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// One line per state: `name: x|y -> next, x|y -> next`. Blank lines and
// lines starting with '#' are skipped. Lines and columns are 1-based.
Automaton parse_moore(std::string_view text);
std::string to_moore(const Automaton& aut);

enum class Generator : std::uint8_t { a, a_inv, b, b_inv };

using GroupWord = std::vector<Generator>;

// Letters a, b and A = a⁻¹, B = b⁻¹.
GroupWord parse_group_word(std::string_view s);
std::string to_string(const GroupWord& g);
Generator inverse(Generator g);

// Factors act right to left: [s1, s2] sends v to s1(s2(v)).
BinaryWord act_word(const GroupWord& g, const BinaryWord& v);
EPWord act_epword(const GroupWord& g, const EPWord& x);

}  // namespace basilica
