// SPDX-License-Identifier: Apache-2.0
#include "basilica/sampling.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "basilica/boundary.hpp"

namespace basilica {

double SampleReport::frac_both_subseq_hit() const {
  return samples == 0 ? 0.0 : static_cast<double>(both_subseq_hits) / static_cast<double>(samples);
}

std::string SampleReport::str() const {
  std::ostringstream out;
  out << "n=" << n << " samples=" << samples;
  if (exhaustive) {
    out << " exhaustive";
  } else {
    out << " seed=" << seed << " rng=" << rng;
  }
  out << "\nfrac_both_subseq_hit=" << frac_both_subseq_hit() << " (" << both_subseq_hits << "/" << samples
      << ")\ncp_length_histogram:";
  for (const auto& [len, count] : cp_length_histogram) out << " " << len << ":" << count;
  out << "\n";
  return out.str();
}

nlohmann::json SampleReport::to_json() const {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [len, count] : cp_length_histogram) hist[std::to_string(len)] = count;
  return {{"n", n},
          {"samples", samples},
          {"seed", seed},
          {"exhaustive", exhaustive},
          {"rng", rng},
          {"both_subseq_hits", both_subseq_hits},
          {"frac_both_subseq_hit", frac_both_subseq_hit()},
          {"cp_length_histogram", hist}};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

BinaryWord sample_word(std::size_t n, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 gen(splitmix64(seed + index));
  std::vector<Letter> letters(n);
  for (std::size_t i = 0; i < n; i += 64) {
    const std::uint64_t bits = gen();
    for (std::size_t j = 0; j < 64 && i + j < n; ++j) letters[i + j] = (bits >> j) & 1u;
  }
  return BinaryWord(std::move(letters));
}

bool both_subsequences_hit(const BinaryWord& w) {
  bool odd = false, even = false;
  for (std::size_t i = 0; i < w.size(); ++i) (i % 2 == 0 ? odd : even) |= w[i] == 1;
  return odd && even;
}

SampleReport run_sample(const SampleOptions& options) {
  if (options.n < 1) throw std::invalid_argument("sample length must be at least 1");
  if (options.exhaustive && options.n > 30) throw std::invalid_argument("exhaustive sampling needs n <= 30");
  if (!options.exhaustive && options.samples < 1) throw std::invalid_argument("need at least one sample");

  SampleReport report;
  report.n = options.n;
  report.exhaustive = options.exhaustive;
  report.samples = options.exhaustive ? std::size_t{1} << options.n : options.samples;
  report.seed = options.seed;
  report.rng = options.exhaustive ? "none" : "mt19937_64/splitmix64(seed+index)";

  auto word = [&](std::size_t index) {
    if (!options.exhaustive) return sample_word(options.n, options.seed, index);
    std::vector<Letter> letters(options.n);
    for (std::size_t i = 0; i < options.n; ++i) letters[i] = (index >> i) & 1u;
    return BinaryWord(std::move(letters));
  };

  const unsigned workers = std::max(1u, options.workers);
  std::vector<SampleReport> parts(workers);
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < report.samples; i += workers) {
        const BinaryWord w = word(i);
        parts[t].both_subseq_hits += both_subsequences_hit(w);
        ++parts[t].cp_length_histogram[cp_length_of_prefix(w)];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& part : parts) {
    report.both_subseq_hits += part.both_subseq_hits;
    for (const auto& [len, count] : part.cp_length_histogram) report.cp_length_histogram[len] += count;
  }
  return report;
}

}  // namespace basilica
