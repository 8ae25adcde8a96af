#include <doctest.h>

#include "basilica/sampling.hpp"
#include "basilica/schreier.hpp"
#include "basilica/structure.hpp"

using namespace basilica;

TEST_CASE("exhaustive level 2") {
  SampleOptions o;
  o.n = 2;
  o.exhaustive = true;
  const SampleReport r = run_sample(o);
  CHECK(r.samples == 4);
  std::size_t total = 0;
  for (const auto& [len, count] : r.cp_length_histogram) {
    CHECK((len == 1 || len == 2));
    total += count;
  }
  CHECK(total == 4);
  // Only 11 has a 1 in both positions.
  CHECK(r.both_subseq_hits == 1);
}

TEST_CASE("histogram matches cycle paths in Γ_n") {
  for (std::size_t n = 1; n <= 8; ++n) {
    SampleOptions o;
    o.n = n;
    o.exhaustive = true;
    const SampleReport r = run_sample(o);
    const LevelAnalysis la(build_by_sr(static_cast<unsigned>(n)));
    std::map<std::size_t, std::size_t> want;
    for (NodeId v = 0; v < (NodeId{1} << n); ++v) ++want[la.cycle_path(v).size()];
    CHECK(r.cp_length_histogram == want);
  }
}

TEST_CASE("reports are deterministic and independent of worker count") {
  SampleOptions o;
  o.n = 30;
  o.samples = 2000;
  o.seed = 99;
  const SampleReport one = run_sample(o);
  o.workers = 3;
  const SampleReport three = run_sample(o);
  CHECK(one == three);
  CHECK(run_sample(o) == three);
  o.seed = 100;
  CHECK_FALSE(run_sample(o) == three);
  CHECK(one.rng.find("mt19937_64") != std::string::npos);
  std::size_t total = 0;
  for (const auto& [len, count] : one.cp_length_histogram) total += count;
  CHECK(total == one.samples);
  CHECK(one.frac_both_subseq_hit() >= 0.0);
  CHECK(one.frac_both_subseq_hit() <= 1.0);
}

TEST_CASE("JSON report round-trips") {
  SampleOptions o;
  o.n = 12;
  o.samples = 50;
  o.seed = 5;
  const SampleReport r = run_sample(o);
  const nlohmann::json j = nlohmann::json::parse(r.to_json().dump());
  CHECK(j == r.to_json());
  CHECK(j["seed"] == 5);
  CHECK(j["samples"] == 50);
}

TEST_CASE("arguments are validated") {
  SampleOptions o;
  CHECK_THROWS(run_sample(o));
  o.n = 4;
  CHECK_THROWS(run_sample(o));
}

TEST_CASE("words from the stream") {
  CHECK(sample_word(40, 1, 0) == sample_word(40, 1, 0));
  CHECK_FALSE(sample_word(40, 1, 0) == sample_word(40, 1, 1));
  CHECK(sample_word(100, 3, 7).size() == 100);
  CHECK(both_subsequences_hit(BinaryWord::parse("0110")));
  CHECK_FALSE(both_subsequences_hit(BinaryWord::parse("1010")));
}
