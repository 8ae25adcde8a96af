// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "basilica/words.hpp"

namespace basilica {

struct SampleOptions {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  // Every word of length n once; `samples` and `seed` are ignored.
  bool exhaustive = false;
};

struct SampleReport {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::string rng;
  std::size_t both_subseq_hits = 0;
  std::map<std::size_t, std::size_t> cp_length_histogram;

  double frac_both_subseq_hit() const;
  std::string str() const;
  nlohmann::json to_json() const;
  bool operator==(const SampleReport&) const = default;
};

std::uint64_t splitmix64(std::uint64_t x);
// Word number `index` of the stream for `seed`.
BinaryWord sample_word(std::size_t n, std::uint64_t seed, std::uint64_t index);
// Both the odd-position and the even-position letters contain a 1.
bool both_subsequences_hit(const BinaryWord& w);

SampleReport run_sample(const SampleOptions& options);

}  // namespace basilica
