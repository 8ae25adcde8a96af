// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace basilica {

// Smallest d dividing s.size() with s == (s[0..d))^(s.size()/d).
template <class T>
std::size_t primitive_root_length(const std::vector<T>& s) {
  const std::size_t n = s.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = s[i] == s[i - d];
    if (ok) return d;
  }
  return n;
}

// Eventually periodic sequence pre · period^ω. An empty period denotes the
// finite sequence `pre`.
template <class T>
class EpSequence {
 public:
  EpSequence() = default;
  EpSequence(std::vector<T> pre, std::vector<T> period)
      : pre_(std::move(pre)), period_(std::move(period)) {
    normalize();
  }

  const std::vector<T>& preperiod() const { return pre_; }
  const std::vector<T>& period() const { return period_; }
  bool finite() const { return period_.empty(); }
  std::size_t finite_length() const { return pre_.size(); }

  const T& at(std::size_t i) const {
    if (i < pre_.size()) return pre_[i];
    if (period_.empty()) throw std::out_of_range("EpSequence::at past finite end");
    return period_[(i - pre_.size()) % period_.size()];
  }

  bool operator==(const EpSequence&) const = default;

 private:
  void normalize() {
    if (period_.empty()) return;
    period_.resize(primitive_root_length(period_));
    while (!pre_.empty() && pre_.back() == period_.back()) {
      pre_.pop_back();
      std::rotate(period_.begin(), period_.end() - 1, period_.end());
    }
  }

  std::vector<T> pre_;
  std::vector<T> period_;
};

// True iff a[i + n] == b[j + n] for every n >= 0 (both infinite).
template <class T>
bool tails_equal(const EpSequence<T>& a, std::size_t i, const EpSequence<T>& b,
                 std::size_t j) {
  const std::size_t lead = std::max(a.preperiod().size() > i ? a.preperiod().size() - i : 0,
                                    b.preperiod().size() > j ? b.preperiod().size() - j : 0);
  const std::size_t span = std::lcm(a.period().size(), b.period().size());
  for (std::size_t n = 0; n < lead + span; ++n) {
    if (!(a.at(i + n) == b.at(j + n))) return false;
  }
  return true;
}

}  // namespace basilica
