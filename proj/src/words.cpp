// SPDX-License-Identifier: Apache-2.0
#include "basilica/words.hpp"

#include <algorithm>
#include <numeric>

#include "basilica/ep_sequence.hpp"

namespace basilica {

BinaryWord::BinaryWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter x : letters_) {
    if (x > 1) throw std::invalid_argument("BinaryWord letter must be 0 or 1");
  }
}

BinaryWord BinaryWord::parse(std::string_view s) {
  std::vector<Letter> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') {
      throw WordSpecError(std::string("unexpected character '") + s[i] + "'", i);
    }
    out.push_back(static_cast<Letter>(s[i] - '0'));
  }
  return BinaryWord(std::move(out));
}

void BinaryWord::push_back(Letter x) {
  if (x > 1) throw std::invalid_argument("BinaryWord letter must be 0 or 1");
  letters_.push_back(x);
}

BinaryWord BinaryWord::prefix(std::size_t n) const {
  n = std::min(n, letters_.size());
  return BinaryWord(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

BinaryWord BinaryWord::operator+(const BinaryWord& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BinaryWord(std::move(out));
}

std::optional<std::size_t> BinaryWord::first_one() const {
  auto it = std::find(letters_.begin(), letters_.end(), Letter{1});
  if (it == letters_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin()) + 1;
}

std::string BinaryWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s.push_back(static_cast<char>('0' + x));
  return s;
}

EPWord::EPWord(BinaryWord preperiod, BinaryWord period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw std::invalid_argument("EPWord period must be nonempty");
}

EPWord EPWord::tabulate(std::size_t pre_len, std::size_t per_len,
                        const std::function<Letter(std::size_t)>& f) {
  std::vector<Letter> pre(pre_len), per(per_len);
  for (std::size_t i = 0; i < pre_len; ++i) pre[i] = f(i);
  for (std::size_t i = 0; i < per_len; ++i) per[i] = f(pre_len + i);
  return normalize(EPWord(BinaryWord(std::move(pre)), BinaryWord(std::move(per))));
}

Letter EPWord::letter(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

BinaryWord EPWord::prefix(std::size_t n) const {
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = letter(i);
  return BinaryWord(std::move(out));
}

bool EPWord::is_normalized() const {
  const EPWord w = normalize(*this);
  return w.pre_ == pre_ && w.per_ == per_;
}

std::string EPWord::str() const { return pre_.str() + "(" + per_.str() + ")"; }

bool EPWord::operator==(const EPWord& rhs) const {
  const EPWord a = normalize(*this);
  const EPWord b = normalize(rhs);
  return a.pre_ == b.pre_ && a.per_ == b.per_;
}

EPWord normalize(const EPWord& w) {
  EpSequence<Letter> s(w.preperiod().letters(), w.period().letters());
  return EPWord(BinaryWord(s.preperiod()), BinaryWord(s.period()));
}

EPWord parse_word_spec(std::string_view spec) {
  const std::size_t open = spec.find('(');
  for (std::size_t i = 0; i < (open == std::string_view::npos ? spec.size() : open); ++i) {
    if (spec[i] != '0' && spec[i] != '1') {
      throw WordSpecError(std::string("unexpected character '") + spec[i] + "' in prefix", i);
    }
  }
  if (open == std::string_view::npos) throw WordSpecError("expected '('", spec.size());
  std::size_t i = open + 1;
  for (; i < spec.size() && (spec[i] == '0' || spec[i] == '1'); ++i) {
  }
  if (i == open + 1) {
    if (i < spec.size() && spec[i] != ')') {
      throw WordSpecError(std::string("unexpected character '") + spec[i] + "' in period", i);
    }
    throw WordSpecError("empty period", i);
  }
  if (i == spec.size()) throw WordSpecError("expected ')'", i);
  if (spec[i] != ')') {
    throw WordSpecError(std::string("unexpected character '") + spec[i] + "' in period", i);
  }
  if (i + 1 != spec.size()) {
    throw WordSpecError("trailing characters after ')'", i + 1);
  }
  return normalize(EPWord(BinaryWord::parse(spec.substr(0, open)),
                          BinaryWord::parse(spec.substr(open + 1, i - open - 1))));
}

BinaryWord prefix(const EPWord& w, std::size_t n) { return w.prefix(n); }

bool cofinal(const EPWord& x, const EPWord& y) {
  const EPWord a = normalize(x);
  const EPWord b = normalize(y);
  const std::size_t start = std::max(a.preperiod().size(), b.preperiod().size());
  const std::size_t span = std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = start; i < start + span; ++i) {
    if (a.letter(i) != b.letter(i)) return false;
  }
  return true;
}

namespace {

EPWord stride_two(const EPWord& x, std::size_t offset) {
  const std::size_t pre = x.preperiod().size();
  const std::size_t per = x.period().size();
  // First index i with offset + 2i inside the periodic part.
  const std::size_t start = pre > offset ? (pre - offset + 1) / 2 : 0;
  const std::size_t len = per % 2 == 0 ? per / 2 : per;
  return EPWord::tabulate(start, len, [&](std::size_t i) { return x.letter(offset + 2 * i); });
}

}  // namespace

std::pair<EPWord, EPWord> interleave_split(const EPWord& x) {
  return {stride_two(x, 0), stride_two(x, 1)};
}

bool has_infinitely_many_ones(const EPWord& x) {
  const auto& p = x.period().letters();
  return std::find(p.begin(), p.end(), Letter{1}) != p.end();
}

}  // namespace basilica
