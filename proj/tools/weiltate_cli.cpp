#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weiltate/errors.hpp"
#include "weiltate/field_forge.hpp"
#include "weiltate/lemma_suite.hpp"
#include "weiltate/oracles.hpp"
#include "weiltate/report_io.hpp"
#include "weiltate/scenario.hpp"

using namespace weiltate;

namespace {

enum ExitCode : int {
  kOk = 0,
  kOtherError = 1,
  kUsage = 2,
  kHypothesis = 3,
  kCap = 4,
  kLemmaFail = 5,
  kBadScenario = 6,
};

struct RunConfig {
  std::string format = "text";
  std::size_t max_group = kDefaultGroupCap;
  int max_points = kDefaultMaxPoints;
  int budget = kDefaultForgeBudget;
  unsigned workers = 1;

  // forge
  int g = 0;
  std::uint32_t p = 5, l = 0, lp = 0;
  std::uint64_t seed = 0;

  // classify
  std::string preset;
  std::string file;
  int gp = 0;
  std::vector<int> weights;

  // verify
  std::vector<std::string> presets;
  int random = 0;
  int random_g = 3;
};

template <typename T>
void env_default(const char* name, T& value) {
  const char* text = std::getenv(name);
  if (!text || !*text) return;
  try {
    long long v = std::stoll(text);
    if (v <= 0) throw std::invalid_argument("not positive");
    value = static_cast<T>(v);
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(name), "must be a positive integer");
  }
}

void emit(const RunConfig& cfg, const std::string& text, const std::string& json) {
  std::cout << (cfg.format == "json" ? json : text);
  if (cfg.format == "json") std::cout << '\n';
}

int cmd_forge(const RunConfig& cfg) {
  ForgeOptions opts;
  opts.budget = cfg.budget;
  ForgedField f = forge_totally_real(cfg.g, cfg.p, cfg.l, cfg.lp, cfg.seed, opts);
  emit(cfg, forge_to_text(f), forge_to_json(f));
  return certificates_pass(f) ? kOk : kOtherError;
}

Scenario resolve_preset(const std::string& name, int g, int gp, std::uint32_t p, std::size_t cap) {
  if (name == "main") return scenario_main(g ? g : 4, p, cap);
  if (name == "ramified") return scenario_ramified(gp ? gp : 3, p, cap);
  if (name == "split") return scenario_split(gp ? gp : 3, p, cap);
  throw CLI::ValidationError("--preset", "unknown preset '" + name + "'");
}

int cmd_classify(const RunConfig& cfg) {
  if (cfg.preset.empty() == cfg.file.empty()) {
    throw CLI::ValidationError("classify", "give exactly one of --preset or --file");
  }
  Scenario s = cfg.file.empty() ? resolve_preset(cfg.preset, cfg.g, cfg.gp, cfg.p, cfg.max_group)
                                : load_scenario_file(cfg.file, cfg.max_group);
  ClassifyOptions opts;
  if (!cfg.weights.empty()) opts.weights = cfg.weights;
  opts.max_points = cfg.max_points;
  opts.workers = cfg.workers;
  ClassifyRun run = run_classification(s, opts);
  emit(cfg, classify_to_text(run), classify_to_json(run));
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<std::string> names;
  for (const auto& p : cfg.presets) {
    if (p == "all") {
      names.insert(names.end(), {"main4", "main6", "ramified3", "split3"});
    } else if (p == "main4" || p == "main6" || p == "ramified3" || p == "split3") {
      names.push_back(p);
    } else {
      throw CLI::ValidationError("--presets", "unknown preset '" + p + "'");
    }
  }
  std::vector<LemmaInstance> instances;
  VerifyRun run;
  for (const auto& n : names) {
    Scenario s = n == "main4"       ? scenario_main(4, cfg.p, cfg.max_group)
                 : n == "main6"     ? scenario_main(6, cfg.p, cfg.max_group)
                 : n == "ramified3" ? scenario_ramified(3, cfg.p, cfg.max_group)
                                    : scenario_split(3, cfg.p, cfg.max_group);
    compare_with_oracles(s.name, s.model, s.slopes, run.oracles);
    instances.push_back({s.name, s.family, s.model, s.slopes});
  }
  if (cfg.random > 0) {
    CMGaloisModel model = cm_product_group(cfg.random_g, cfg.max_group);
    for (int i = 0; i < cfg.random; ++i) {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
      compare_with_oracles("random(g=" + std::to_string(cfg.random_g) + ", seed=" + std::to_string(seed) + ")",
                           model, random_admissible_slopes(model, seed), run.oracles);
    }
  }
  run.lemmas = verify_lemma_suite(instances, cfg.workers, cfg.max_points);
  emit(cfg, verify_to_text(run), verify_to_json(run));
  return run.lemmas.any_fail() || !run.oracles.mismatches.empty() ? kLemmaFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil-Tate classes, CM-types and forged number fields"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  try {
    env_default("WEILTATE_MAX_GROUP", cfg.max_group);
    env_default("WEILTATE_MAX_POINTS", cfg.max_points);
    env_default("WEILTATE_FORGE_BUDGET", cfg.budget);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-group", cfg.max_group, "Group order cap (env WEILTATE_MAX_GROUP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-points", cfg.max_points, "Cap on 2g for subset enumeration (env WEILTATE_MAX_POINTS)")
      ->check(CLI::Range(2, kHardMaxPoints));
  app.add_option("--budget", cfg.budget, "Forge retry budget (env WEILTATE_FORGE_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 64u));

  auto* forge = app.add_subcommand("forge", "Forge a totally real field with prescribed local behavior");
  forge->add_option("--g", cfg.g, "Degree")->required();
  forge->add_option("--p", cfg.p, "Prime where the field is inert")->required();
  forge->add_option("--l", cfg.l, "Prime certifying a g-cycle")->required();
  forge->add_option("--lp", cfg.lp, "Prime certifying a transposition")->required();
  forge->add_option("--seed", cfg.seed, "Seed");

  auto* classify = app.add_subcommand("classify", "Classify the submotives of a scenario");
  classify->add_option("--preset", cfg.preset, "main, ramified or split")
      ->check(CLI::IsMember({"main", "ramified", "split"}));
  classify->add_option("--file", cfg.file, "Scenario file");
  classify->add_option("--g", cfg.g, "g for the main preset");
  classify->add_option("--gp", cfg.gp, "g' for the ramified and split presets");
  classify->add_option("--p", cfg.p, "Residue characteristic");
  classify->add_option("--weights", cfg.weights, "Restrict to these even weights");

  auto* verify = app.add_subcommand("verify", "Run the lemma suite and oracle comparisons");
  verify->add_option("--presets", cfg.presets, "all, main4, main6, ramified3, split3");
  verify->add_option("--random", cfg.random, "Number of random slope vectors")->check(CLI::NonNegativeNumber);
  verify->add_option("--g", cfg.random_g, "g for random instances")->check(CLI::Range(2, 8));
  verify->add_option("--seed", cfg.seed, "First seed for random instances");
  verify->add_option("--p", cfg.p, "Residue characteristic for presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*forge) return cmd_forge(cfg);
    if (*classify) return cmd_classify(cfg);
    return cmd_verify(cfg);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "invalid scenario: " << e.what() << '\n';
    return kBadScenario;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return kHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOtherError;
  }
}
