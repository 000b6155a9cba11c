// morphcx: corpus-based morphological complexity measures and their analysis.
//
//   morphcx measure  --config run.conf   sample treebanks, write measure tables
//   morphcx analyze  --config run.conf   correlations, PCA, ridge vs. WALS
//   morphcx plot     --config run.conf   SVG figures from the analysis outputs
//   morphcx run-all  --config run.conf   all three in sequence

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "morphcx/config.hpp"
#include "morphcx/error.hpp"
#include "morphcx/pipeline.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> jobs;
  std::optional<std::size_t> target_tokens;
  std::optional<std::size_t> repetitions;
};

void add_common_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "Run configuration file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "Override the random seed");
  cmd->add_option("--out", o.out, "Override the output directory");
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--target-tokens", o.target_tokens, "Tokens per bootstrap sample")->check(CLI::PositiveNumber);
  cmd->add_option("--repetitions", o.repetitions, "Bootstrap repetitions")->check(CLI::PositiveNumber);
}

morphcx::RunConfig resolve(const Overrides& o) {
  auto config = morphcx::load_config(o.config_path);
  if (o.seed) config.sampling.seed = *o.seed;
  if (o.out) config.out_dir = *o.out;
  if (o.jobs) config.jobs = *o.jobs;
  if (o.target_tokens) config.sampling.target_tokens = *o.target_tokens;
  if (o.repetitions) config.sampling.repetitions = *o.repetitions;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus-based morphological complexity measures"};
  app.require_subcommand(1);

  Overrides overrides;
  std::function<int(const morphcx::RunConfig&, std::ostream&)> action;

  auto* measure = app.add_subcommand("measure", "Compute the eight measures for every treebank in the manifest");
  auto* analyze = app.add_subcommand("analyze", "Correlations, PCA and WALS ridge regression over the measure table");
  auto* plot = app.add_subcommand("plot", "Write SVG figures from the analysis outputs");
  auto* run_all = app.add_subcommand("run-all", "measure, analyze and plot in sequence");
  for (auto* cmd : {measure, analyze, plot, run_all}) add_common_flags(cmd, overrides);
  measure->callback([&] { action = morphcx::cmd_measure; });
  analyze->callback([&] { action = morphcx::cmd_analyze; });
  plot->callback([&] { action = morphcx::cmd_plot; });
  run_all->callback([&] { action = morphcx::cmd_run_all; });

  CLI11_PARSE(app, argc, argv);

  try {
    const auto config = resolve(overrides);
    return action(config, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "morphcx: " << e.what() << '\n';
    return morphcx::kExitFatal;
  }
}
