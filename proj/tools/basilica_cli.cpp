// SPDX-License-Identifier: Apache-2.0
// basilica: build and analyze Schreier graphs of the Basilica group.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "basilica/boundary.hpp"
#include "basilica/sampling.hpp"
#include "basilica/schreier.hpp"
#include "basilica/structure.hpp"
#include "basilica/words.hpp"

namespace {

using namespace basilica;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  unsigned max_level = kDefaultLevelCap;
  std::string out = "dot";
  std::string output_path;
  std::string method = "sr";
  std::size_t radius = 8;
  std::size_t window = 16;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  unsigned workers = 1;
  bool exhaustive = false;
  unsigned n = 0;
  std::string spec1, spec2;
  std::string model_kind;
};

void emit(const Options& o, const std::string& text) {
  if (o.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output_path);
  if (!f) throw UsageError("cannot write " + o.output_path);
  f << text;
  if (!f) throw UsageError("cannot write " + o.output_path);
}

void check_level(const Options& o) {
  if (o.n < 1) throw UsageError("level must be at least 1");
  if (o.n > o.max_level) {
    throw UsageError("level " + std::to_string(o.n) + " exceeds cap " + std::to_string(o.max_level) +
                     " (raise with --max-level)");
  }
}

std::string angle_str(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  std::string s = num == 1 ? "π" : num.str() + "π";
  if (den != 1) s += "/" + den.str();
  return s;
}

template <class T, class F>
std::string join(const std::vector<T>& v, F f) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + f(v[i]);
  return s;
}

int cmd_build(const Options& o) {
  check_level(o);
  if (o.method == "both") {
    const bool same = build_by_sr(o.n, o.max_level) == build_by_action(o.n, o.max_level);
    std::cout << (same ? "identical" : "MISMATCH") << "\n";
    return same ? kOk : kFalse;
  }
  const SchreierGraph g = o.method == "sr" ? build_by_sr(o.n, o.max_level) : build_by_action(o.n, o.max_level);
  emit(o, o.out == "json" ? to_json(g).dump(2) + "\n" : to_dot(g));
  return kOk;
}

int cmd_diagram(const Options& o) {
  if (o.n < 1) throw UsageError("level must be at least 1");
  const Diagram d = diagram_rcr(o.n);
  std::cout << d.str() << "\n";
  if (o.n <= 14 && o.n <= o.max_level) {
    const Diagram extracted = diagram(build_by_sr(o.n, o.max_level));
    if (!(extracted == d)) {
      std::cerr << "extraction disagrees: " << extracted.str() << "\n";
      return kFalse;
    }
  }
  return kOk;
}

int cmd_classify(const Options& o) {
  const EPWord x = parse_word_spec(o.spec1);
  const EndClass c = classify_ends(x);
  std::cout << "ends=" << to_string(c);
  if (c != EndClass::one) {
    std::cout << "\n";
    return kOk;
  }
  const CanonicalTriple tr = canonical_triple(x);
  std::cout << " z=" << tr.index_of_stability() << " triple=" << tr.str() << "\n";
  std::cout << "sec=" << to_string(sec_sequence(x)) << "\n";
  if (tr.tail_one_omega) {
    std::cout << "cycle-path is finite in the limit (word ends in 1^ω)\n";
    return kOk;
  }
  const CyclePathSummary s = cycle_path_summary(tr, 10);
  std::cout << "a=" << join(s.a, [](std::size_t v) { return std::to_string(v); }) << "\n";
  std::cout << "lengths=" << join(s.lengths, [](const BigInt& v) { return v.str(); }) << "\n";
  std::cout << "angles=" << join(s.angles, angle_str) << "\n";
  return kOk;
}

int cmd_iso(const Options& o) {
  const EPWord x = parse_word_spec(o.spec1);
  const EPWord y = parse_word_spec(o.spec2);
  const IsoResult r = decide_isomorphism(x, y);
  std::cout << (r.isomorphic ? "isomorphic" : "not-isomorphic") << " (" << r.reason << ")";
  if (r.witness) std::cout << " r=" << r.witness->first << " s=" << r.witness->second;
  std::cout << "\n";
  return r.isomorphic ? kOk : kFalse;
}

int cmd_orbit(const Options& o) {
  const bool same = orbit_equal(parse_word_spec(o.spec1), parse_word_spec(o.spec2));
  std::cout << (same ? "same-orbit" : "different-orbit") << "\n";
  return same ? kOk : kFalse;
}

int cmd_cycle_path(const Options& o) {
  const BinaryWord w = BinaryWord::parse(o.spec1);
  if (w.empty()) throw UsageError("cycle-path needs a nonempty binary word");
  if (w.size() > o.max_level) throw UsageError("word longer than cap (raise with --max-level)");
  const auto n = static_cast<unsigned>(w.size());
  const CyclePathFinite cp = cycle_path(build_by_sr(n, o.max_level), w);
  std::cout << "level=" << n << " cycles=" << cp.size()
            << " lengths=" << join(cp.lengths, [](std::size_t v) { return std::to_string(v); }) << "\n";
  return kOk;
}

std::string render(const Options& o, const Multigraph& g, const std::string& name) {
  return o.out == "json" ? to_json(g).dump(2) + "\n" : to_dot(g, name);
}

int cmd_ball(const Options& o) {
  const RootedGraph b = orbital_ball(parse_word_spec(o.spec1), o.radius);
  emit(o, render(o, b.graph, "ball"));
  return kOk;
}

int cmd_model(const Options& o) {
  DecorationCatalog catalog;
  ModelGraph m;
  if (o.model_kind == "4") {
    m = build_four_ended(o.window, catalog, o.radius);
  } else {
    const EPWord x = parse_word_spec(o.model_kind);
    const EndClass c = classify_ends(x);
    if (c == EndClass::one) throw UsageError("model graphs exist only for multi-ended words");
    m = c == EndClass::four ? build_four_ended(o.window, catalog, o.radius)
                            : build_two_ended(x, o.window, catalog, o.radius);
  }
  emit(o, render(o, m.graph.graph, "model"));
  return kOk;
}

int cmd_sample(const Options& o) {
  if (!o.exhaustive && o.n > o.max_level) {
    throw UsageError("prefix length exceeds cap (raise with --max-level)");
  }
  if (o.n < 1) throw UsageError("prefix length must be at least 1");
  if (!o.exhaustive && o.samples < 1) throw UsageError("need at least one sample");
  SampleOptions so;
  so.n = o.n;
  so.samples = o.samples;
  so.seed = o.seed;
  so.workers = o.workers;
  so.exhaustive = o.exhaustive;
  const SampleReport r = run_sample(so);
  emit(o, o.out == "json" ? r.to_json().dump(2) + "\n" : r.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schreier graphs of the Basilica group"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--max-level", o.max_level, "Largest level that may be built")->capture_default_str();

  auto out_opt = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output format")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
    sub->add_option("-o,--output", o.output_path, "Write to this file instead of stdout");
  };

  auto* build = app.add_subcommand("build", "Build Γ_n");
  build->add_option("n", o.n, "Level")->required();
  build->add_option("--method", o.method, "sr, action, or both (compare only)")
      ->check(CLI::IsMember({"sr", "action", "both"}))
      ->capture_default_str();
  out_opt(build);

  auto* diag = app.add_subcommand("diagram", "Print the diagram of Γ_n");
  diag->add_option("n", o.n, "Level")->required();

  auto* classify = app.add_subcommand("classify", "End class and cycle-path data of a boundary point");
  classify->add_option("word", o.spec1, "Word spec such as 1(1100)")->required();

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two limit graphs");
  iso->add_option("x", o.spec1)->required();
  iso->add_option("y", o.spec2)->required();

  auto* orbit = app.add_subcommand("orbit", "Decide whether two boundary points share an orbit");
  orbit->add_option("x", o.spec1)->required();
  orbit->add_option("y", o.spec2)->required();

  auto* cp = app.add_subcommand("cycle-path", "Cycle-path of a finite word in its level");
  cp->add_option("word", o.spec1, "Binary word")->required();

  auto* ball = app.add_subcommand("ball", "Ball around a boundary point in its orbital graph");
  ball->add_option("word", o.spec1)->required();
  ball->add_option("--radius", o.radius)->capture_default_str();
  out_opt(ball);

  auto* model = app.add_subcommand("model", "Model graph: '4' or a two-ended word spec");
  model->add_option("kind", o.model_kind)->required();
  model->add_option("--window", o.window, "Spine positions on each side")->capture_default_str();
  model->add_option("--radius", o.radius, "Cut decorations to this radius")->capture_default_str();
  out_opt(model);

  auto* sample = app.add_subcommand("sample", "Sampling study of random prefixes");
  sample->add_option("n", o.n, "Prefix length")->required();
  sample->add_option("--samples", o.samples)->capture_default_str();
  sample->add_option("--seed", o.seed)->capture_default_str();
  sample->add_option("--workers", o.workers)->capture_default_str();
  sample->add_flag("--exhaustive", o.exhaustive, "Every word of length n once");
  out_opt(sample);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return cmd_build(o);
    if (*diag) return cmd_diagram(o);
    if (*classify) return cmd_classify(o);
    if (*iso) return cmd_iso(o);
    if (*orbit) return cmd_orbit(o);
    if (*cp) return cmd_cycle_path(o);
    if (*ball) return cmd_ball(o);
    if (*model) return cmd_model(o);
    if (*sample) return cmd_sample(o);
  } catch (const WordSpecError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LevelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
