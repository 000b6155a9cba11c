#include "morphcx/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

#include "morphcx/error.hpp"
#include "morphcx/text.hpp"

namespace morphcx {

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view v) {
  T out{};
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
    throw ConfigError("config key '" + std::string(key) + "': invalid number '" + std::string(v) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw ConfigError("config key '" + std::string(key) + "': expected a boolean, got '" + std::string(v) + "'");
}

std::vector<std::string> parse_list(std::string_view v) {
  std::vector<std::string> out;
  for (auto item : text::split(v, ',')) {
    const auto t = text::trim(item);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view v) {
  std::filesystem::path p{std::string(v)};
  return p.is_relative() ? base / p : p;
}

}  // namespace

bool RunConfig::measure_enabled(Measure m) const {
  return std::find(measures.begin(), measures.end(), m) != measures.end();
}

std::string RunConfig::provenance() const {
  std::vector<std::string> names;
  for (auto m : measures) names.emplace_back(measure_name(m));
  return "seed=" + std::to_string(sampling.seed) + " target_tokens=" + std::to_string(sampling.target_tokens) +
         " repetitions=" + std::to_string(sampling.repetitions) + " measures=" + text::join(names, ",") +
         " compressor=\"" + measure_options.compressor.describe() + "\"" + " is_unit=" +
         (measure_options.synthesis_unit == SynthesisUnit::FeatureKeys ? "keys" : "pairs") +
         " ia_draws=" + std::to_string(ia_search.draws) + " ia_folds=" + std::to_string(ia_search.folds) +
         " lowercase=" + (parse.lowercase ? "true" : "false");
}

RunConfig parse_config(std::string_view input, const std::filesystem::path& base_dir) {
  RunConfig c;
  std::size_t line_no = 0;
  for (auto raw : text::split(input, '\n')) {
    ++line_no;
    auto line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = text::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = text::trim(line.substr(0, eq));
    const auto v = text::trim(line.substr(eq + 1));

    if (key == "manifest") {
      c.manifest = resolve(base_dir, v);
    } else if (key == "wals_csv") {
      c.wals_csv = v.empty() ? std::filesystem::path{} : resolve(base_dir, v);
    } else if (key == "wals_features") {
      c.wals_features = v.empty() ? std::filesystem::path{} : resolve(base_dir, v);
    } else if (key == "wals_language_column") {
      c.wals_language_column = std::string(v);
    } else if (key == "wals_rows") {
      if (v == "treebank") {
        c.wals_rows = WalsRows::PerTreebank;
      } else if (v == "language") {
        c.wals_rows = WalsRows::PerLanguage;
      } else {
        throw ConfigError("wals_rows must be 'treebank' or 'language'");
      }
    } else if (key == "out_dir") {
      c.out_dir = resolve(base_dir, v);
    } else if (key == "target_tokens") {
      c.sampling.target_tokens = parse_number<std::size_t>(key, v);
    } else if (key == "repetitions") {
      c.sampling.repetitions = parse_number<std::size_t>(key, v);
    } else if (key == "seed") {
      c.sampling.seed = parse_number<std::uint64_t>(key, v);
    } else if (key == "jobs") {
      c.jobs = parse_number<std::size_t>(key, v);
    } else if (key == "min_feature_keys") {
      c.exclusion.min_feature_keys = parse_number<std::size_t>(key, v);
    } else if (key == "script_deny") {
      const auto l = parse_list(v);
      c.exclusion.script_deny = {l.begin(), l.end()};
    } else if (key == "script_allow") {
      const auto l = parse_list(v);
      c.exclusion.script_allow = {l.begin(), l.end()};
    } else if (key == "lowercase") {
      c.parse.lowercase = parse_bool(key, v);
    } else if (key == "measures") {
      c.measures.clear();
      for (const auto& name : parse_list(v)) {
        const auto m = measure_from_name(name);
        if (!m) throw ConfigError("unknown measure '" + name + "'");
        if (!c.measure_enabled(*m)) c.measures.push_back(*m);
      }
      std::sort(c.measures.begin(), c.measures.end());
    } else if (key == "is_unit") {
      if (v == "keys") {
        c.measure_options.synthesis_unit = SynthesisUnit::FeatureKeys;
      } else if (v == "pairs") {
        c.measure_options.synthesis_unit = SynthesisUnit::FeaturePairs;
      } else {
        throw ConfigError("is_unit must be 'keys' or 'pairs'");
      }
    } else if (key == "compression_level") {
      c.measure_options.compressor.level = parse_number<int>(key, v);
    } else if (key == "compression_window_bits") {
      c.measure_options.compressor.window_bits = parse_number<int>(key, v);
    } else if (key == "compression_mem_level") {
      c.measure_options.compressor.mem_level = parse_number<int>(key, v);
    } else if (key == "ia_draws") {
      c.ia_search.draws = parse_number<std::size_t>(key, v);
    } else if (key == "ia_folds") {
      c.ia_search.folds = parse_number<std::size_t>(key, v);
    } else if (key == "ia_ngram_min") {
      c.ia_search.ngram_min = parse_number<int>(key, v);
    } else if (key == "ia_ngram_max") {
      c.ia_search.ngram_max = parse_number<int>(key, v);
    } else if (key == "ia_epochs_min") {
      c.ia_search.epochs_min = parse_number<int>(key, v);
    } else if (key == "ia_epochs_max") {
      c.ia_search.epochs_max = parse_number<int>(key, v);
    } else if (key == "ia_step_min") {
      c.ia_search.step_min = parse_number<double>(key, v);
    } else if (key == "ia_step_max") {
      c.ia_search.step_max = parse_number<double>(key, v);
    } else if (key == "alpha_grid") {
      c.alpha_grid.clear();
      for (const auto& a : parse_list(v)) c.alpha_grid.push_back(parse_number<double>(key, a));
    } else if (key == "significance") {
      if (v == "t") {
        c.significance.test = SignificanceTest::TDistribution;
      } else if (v == "permutation") {
        c.significance.test = SignificanceTest::Permutation;
      } else {
        throw ConfigError("significance must be 't' or 'permutation'");
      }
    } else if (key == "permutations") {
      c.significance.permutations = parse_number<std::size_t>(key, v);
    } else {
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_file(path), path.has_parent_path() ? path.parent_path() : std::filesystem::path("."));
}

void validate(const RunConfig& c, bool need_manifest) {
  if (need_manifest) {
    if (c.manifest.empty()) throw ConfigError("config: 'manifest' is required");
    if (!std::filesystem::exists(c.manifest)) throw ConfigError("manifest not found: " + c.manifest.string());
  }
  if (!c.wals_csv.empty() && !std::filesystem::exists(c.wals_csv)) {
    throw ConfigError("WALS CSV not found: " + c.wals_csv.string());
  }
  if (!c.wals_features.empty() && !std::filesystem::exists(c.wals_features)) {
    throw ConfigError("WALS feature list not found: " + c.wals_features.string());
  }
  if (c.sampling.target_tokens < 1) throw ConfigError("target_tokens must be at least 1");
  if (c.sampling.repetitions < 1) throw ConfigError("repetitions must be at least 1");
  if (c.measures.empty()) throw ConfigError("no measures enabled");
  if (c.ia_search.folds < 2) throw ConfigError("ia_folds must be at least 2");
  if (c.ia_search.draws < 1) throw ConfigError("ia_draws must be at least 1");
  if (c.ia_search.ngram_min < 1 || c.ia_search.ngram_max < c.ia_search.ngram_min) {
    throw ConfigError("invalid ia n-gram range");
  }
  if (c.ia_search.epochs_min < 1 || c.ia_search.epochs_max < c.ia_search.epochs_min) {
    throw ConfigError("invalid ia epoch range");
  }
  if (!(c.ia_search.step_min > 0.0) || c.ia_search.step_max < c.ia_search.step_min) {
    throw ConfigError("invalid ia step range");
  }
  for (double a : c.alpha_grid) {
    if (!(a > 0.0)) throw ConfigError("alpha_grid values must be positive");
  }
  const auto& cs = c.measure_options.compressor;
  if (cs.level < 0 || cs.level > 9 || cs.window_bits < 9 || cs.window_bits > 15 || cs.mem_level < 1 ||
      cs.mem_level > 9) {
    throw ConfigError("compressor setting out of range");
  }
}

}  // namespace morphcx
