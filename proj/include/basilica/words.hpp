// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace basilica {

using Letter = std::uint8_t;

class WordSpecError : public std::invalid_argument {
 public:
  WordSpecError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Finite word over {0,1}.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<Letter> letters);

  static BinaryWord parse(std::string_view s);
  static BinaryWord zeros(std::size_t n) { return BinaryWord(std::vector<Letter>(n, 0)); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter x);
  BinaryWord prefix(std::size_t n) const;
  BinaryWord operator+(const BinaryWord& rhs) const;

  // 1-based position of the first 1.
  std::optional<std::size_t> first_one() const;
  std::string str() const;

  auto operator<=>(const BinaryWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Infinite word preperiod · period^ω.
class EPWord {
 public:
  EPWord(BinaryWord preperiod, BinaryWord period);

  // Builds the word whose letter i is f(i), known to be periodic from
  // pre_len on with period dividing per_len; the result is normalized.
  static EPWord tabulate(std::size_t pre_len, std::size_t per_len,
                         const std::function<Letter(std::size_t)>& f);

  const BinaryWord& preperiod() const { return pre_; }
  const BinaryWord& period() const { return per_; }

  // 0-based.
  Letter letter(std::size_t i) const;
  BinaryWord prefix(std::size_t n) const;

  bool is_normalized() const;
  // Word-spec form, e.g. "1(1100)".
  std::string str() const;

  // Letter-stream equality.
  bool operator==(const EPWord& rhs) const;

 private:
  BinaryWord pre_;
  BinaryWord per_;
};

EPWord normalize(const EPWord& w);
EPWord parse_word_spec(std::string_view spec);

BinaryWord prefix(const EPWord& w, std::size_t n);
bool cofinal(const EPWord& x, const EPWord& y);
std::pair<EPWord, EPWord> interleave_split(const EPWord& x);
bool has_infinitely_many_ones(const EPWord& x);

}  // namespace basilica
