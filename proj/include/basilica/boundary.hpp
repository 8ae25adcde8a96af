// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "basilica/ep_sequence.hpp"
#include "basilica/multigraph.hpp"
#include "basilica/structure.hpp"
#include "basilica/words.hpp"

namespace basilica {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class EndClass : std::uint8_t { one, two_even, two_odd, four };

// "1", "2even", "2odd", "4".
std::string to_string(EndClass c);
int end_count(EndClass c);

class EndClassError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

EndClass classify_ends(const EPWord& x);
bool orbit_equal(const EPWord& x, const EPWord& y);

// One block 1^t (0x_1 … 0x_{m/2}) of the canonical form.
struct TripleUnit {
  std::size_t t = 0;
  std::size_t m = 0;
  std::vector<Letter> x;

  bool operator==(const TripleUnit&) const = default;
};

struct CanonicalTriple {
  std::size_t k = 1;
  std::size_t m0 = 0;
  std::vector<Letter> x0;
  // Units j = 1, 2, …; finite exactly when the word ends in 1^ω, in which
  // case t_{l0+1} = ∞.
  EpSequence<TripleUnit> units;
  bool tail_one_omega = false;

  std::size_t index_of_stability() const { return k + m0; }
  // "k;[m];[t]" with eventually periodic lists, e.g. "1;[0,(2)];[(2)]".
  std::string str() const;
  BinaryWord reassemble_prefix(std::size_t n) const;
  EPWord reassemble() const;
};

CanonicalTriple canonical_triple(const EPWord& x);

// Letters over {S, E, C}; always infinite.
using SecSequence = EpSequence<char>;
std::string to_string(const SecSequence& s);
std::vector<char> sec_prefix(const SecSequence& s, std::size_t n);

SecSequence sec_from_triple(const CanonicalTriple& tr);
// Exact symbolic run of the level-to-level trichotomy; defined for every word.
SecSequence sec_by_prefix_dynamics(const EPWord& x);
SecSequence sec_sequence(const EPWord& x);

// |CP_{w}| in Γ_{|w|}.
std::size_t cp_length_of_prefix(const BinaryWord& w);

// Γ_1 … Γ_N analysed once, for repeated graph-side queries.
class LevelTower {
 public:
  explicit LevelTower(unsigned top);
  unsigned top() const { return static_cast<unsigned>(levels_.size()); }
  const LevelAnalysis& level(unsigned n) const { return levels_.at(n - 1); }
  // |CP| of prefix(x, n) for n = 1 … top.
  std::vector<std::size_t> cp_lengths(const BinaryWord& prefix) const;

 private:
  std::vector<LevelAnalysis> levels_;
};

// First cp.size() SEC letters from the |CP| values at levels 1 … N.
std::vector<char> sec_letters_from_cp(const std::vector<std::size_t>& cp);

struct CyclePathSummary {
  std::vector<std::size_t> a;
  std::vector<BigInt> lengths;
  // α_i = angles[i]·π.
  std::vector<Rational> angles;
};

std::vector<std::size_t> a_sequence(const CanonicalTriple& tr, std::size_t count);
Rational block_angle(const std::vector<Letter>& bits);
std::vector<Rational> angles(const CanonicalTriple& tr, std::size_t count);
CyclePathSummary cycle_path_summary(const CanonicalTriple& tr, std::size_t count);

EPWord xi_bar(const EPWord& x);

struct IsoResult {
  bool isomorphic = false;
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

IsoResult decide_isomorphism(const EPWord& x, const EPWord& y);
bool limit_isomorphic(const EPWord& x, const EPWord& y);

// Ball of radius r around x in the orbital graph Γ_x; vertex names are
// normalized word specs.
RootedGraph orbital_ball(const EPWord& x, std::size_t r);

// k ≥ 1 with n ≡ 2^k − 1 − Σ_{i≤k} 2^i x_i (mod 2^{k+1}), searching k ≤ k_max.
std::optional<unsigned> partition_index(long long n, const EPWord& x, unsigned k_max = 62);

struct ModelGraph {
  enum class Kind : std::uint8_t { four_ended, two_ended };
  Kind kind = Kind::four_ended;
  std::size_t window = 0;
  // Rooted at spine position 0.
  RootedGraph graph;
  // Decoration height per spine position −window … window (R_1 for Γ_(4)).
  std::vector<unsigned> heights;
  std::vector<unsigned> heights_r2;
};

// With `radius`, decorations are cut to what a ball of that radius around 0
// can see.
ModelGraph build_four_ended(std::size_t window, DecorationCatalog& catalog,
                            std::optional<std::size_t> radius = std::nullopt);
ModelGraph build_two_ended(const EPWord& x, std::size_t window, DecorationCatalog& catalog,
                           std::optional<std::size_t> radius = std::nullopt);

// The cofinal word 010β_20β_3… (even) or 10α_20α_3… (odd) whose prefixes
// sit on the central cycles of Γ_{2t} (resp. Γ_{2t+1}).
EPWord hat_word(const EPWord& x);

// 1 minus the first `terms` series terms; m = [m_0, m_1, …], t = [t_1, …].
Rational measure_w_partial(std::size_t z, const std::vector<std::size_t>& t,
                           const std::vector<std::size_t>& m, std::size_t terms);

}  // namespace basilica
