#include "morphcx/pipeline.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include <json.hpp>

#include "morphcx/error.hpp"
#include "morphcx/measures.hpp"
#include "morphcx/parallel.hpp"
#include "morphcx/svg.hpp"
#include "morphcx/text.hpp"
#include "morphcx/wals.hpp"

namespace morphcx {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kStatusOk = "ok";
constexpr std::string_view kStatusFailed = "failed";

std::string pc_name(std::size_t k) { return "PC" + std::to_string(k + 1); }

}  // namespace

std::optional<double> TreebankOutcome::value(Measure m) const {
  if (m == Measure::NegIA) {
    if (ia) return ia->measure();
    return std::nullopt;
  }
  const auto* s = summary.find(measure_name(m));
  if (s == nullptr || !s->available) return std::nullopt;
  return s->mean;
}

bool TreebankOutcome::no_morph_features() const {
  return std::find(exclusions.begin(), exclusions.end(), ExclusionReason::NoMorphFeatures) != exclusions.end();
}

TreebankOutcome measure_treebank(const Treebank& tb, const RunConfig& config, std::size_t jobs) {
  TreebankOutcome out;
  out.entry.id = tb.id;
  out.entry.language_code = tb.language_code;
  out.n_sentences = tb.sentences.size();
  out.n_tokens = tb.n_tokens;
  out.n_feature_keys = tb.n_feature_keys;
  out.exclusions = exclusion_reasons(tb.id, tb.language_code, tb.n_feature_keys, config.exclusion);

  std::vector<Measure> sample_level;
  for (auto m : config.measures) {
    if (m == Measure::NegIA) continue;
    // WS is not computed where the writing system makes it meaningless
    if (m == Measure::WS && std::find(out.exclusions.begin(), out.exclusions.end(),
                                      ExclusionReason::NonAlphabeticScript) != out.exclusions.end()) {
      continue;
    }
    sample_level.push_back(m);
  }
  if (!sample_level.empty()) {
    out.summary = run_repetitions(tb, config.sampling, sample_measures(sample_level, config.measure_options), jobs);
  }
  if (config.measure_enabled(Measure::NegIA)) {
    auto rng = Rng::derive({config.sampling.seed, Rng::tag(tb.id), Rng::tag("neg_ia")});
    const auto sample = bootstrap_sample(tb, config.sampling.target_tokens, rng);
    out.ia = cross_validate(extract_instances(sample), config.ia_search, rng, jobs);
  }
  out.ok = true;
  return out;
}

std::vector<TreebankOutcome> measure_manifest(const std::vector<ManifestEntry>& entries, const RunConfig& config,
                                              std::ostream& log) {
  std::vector<TreebankOutcome> outcomes(entries.size());
  std::mutex log_mutex;
  const auto outer = std::max<std::size_t>(1, std::min(config.jobs, entries.size()));
  const auto inner = std::max<std::size_t>(1, config.jobs / outer);
  parallel_for(entries.size(), outer, [&](std::size_t i) {
    const auto& e = entries[i];
    try {
      const auto tb = parse_conllu(read_file(e.path), e.id, e.language_code, config.parse);
      outcomes[i] = measure_treebank(tb, config, inner);
      outcomes[i].entry = e;
      std::lock_guard lock(log_mutex);
      log << "measured " << e.id << " (" << tb.n_tokens << " tokens)\n";
    } catch (const std::exception& ex) {
      outcomes[i] = TreebankOutcome{};
      outcomes[i].entry = e;
      outcomes[i].ok = false;
      outcomes[i].message = ex.what();
      std::lock_guard lock(log_mutex);
      log << "FAILED " << e.id << ": " << ex.what() << '\n';
    }
  });
  return outcomes;
}

TsvTable measure_matrix_table(const std::vector<TreebankOutcome>& outcomes, const RunConfig& config) {
  TsvTable t;
  t.metadata.push_back("morphcx measure_matrix " + config.provenance());
  t.header = {"treebank", "language", "status", "exclusion"};
  for (auto m : kAllMeasures) t.header.emplace_back(measure_name(m));
  for (const auto& o : outcomes) {
    const ExclusionEntry ex{o.entry.id, o.exclusions};
    std::vector<std::string> row = {o.entry.id, o.entry.language_code,
                                    std::string(o.ok ? kStatusOk : kStatusFailed),
                                    o.exclusions.empty() ? "-" : ex.reasons_string()};
    for (auto m : kAllMeasures) row.push_back(format_cell(o.ok ? o.value(m) : std::nullopt));
    t.rows.push_back(std::move(row));
  }
  return t;
}

TsvTable measure_long_table(const std::vector<TreebankOutcome>& outcomes, const RunConfig& config) {
  TsvTable t;
  t.metadata.push_back("morphcx measures " + config.provenance());
  t.header = {"treebank", "measure", "mean", "stddev", "n_repetitions", "available"};
  for (const auto& o : outcomes) {
    for (auto m : config.measures) {
      const std::string name(measure_name(m));
      std::optional<double> mean, sd;
      std::size_t n = 0;
      if (o.ok && m == Measure::NegIA && o.ia) {
        mean = o.ia->measure();
        n = 1;
      } else if (o.ok) {
        if (const auto* s = o.summary.find(name); s && s->available) {
          mean = s->mean;
          sd = s->stddev;
          n = s->n_repetitions;
        }
      }
      t.rows.push_back({o.entry.id, name, format_cell(mean), format_cell(sd), std::to_string(n),
                        mean ? "1" : "0"});
    }
  }
  return t;
}

TsvTable treebank_table(const std::vector<TreebankOutcome>& outcomes, const RunConfig& config) {
  TsvTable t;
  t.metadata.push_back("morphcx treebanks " + config.provenance());
  t.header = {"treebank", "language", "status", "n_sentences", "n_tokens", "n_feature_keys", "exclusion", "message"};
  for (const auto& o : outcomes) {
    const ExclusionEntry ex{o.entry.id, o.exclusions};
    std::string msg = o.message;
    std::replace(msg.begin(), msg.end(), '\t', ' ');
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    t.rows.push_back({o.entry.id, o.entry.language_code, std::string(o.ok ? kStatusOk : kStatusFailed),
                      std::to_string(o.n_sentences), std::to_string(o.n_tokens), std::to_string(o.n_feature_keys),
                      o.exclusions.empty() ? "-" : ex.reasons_string(), msg.empty() ? "-" : msg});
  }
  return t;
}

std::string ia_sidecar_json(const std::vector<TreebankOutcome>& outcomes, const RunConfig& config) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["seed"] = config.sampling.seed;
  j["target_tokens"] = config.sampling.target_tokens;
  const auto& s = config.ia_search;
  j["search_space"] = {{"draws", s.draws},          {"folds", s.folds},
                       {"ngram_order", {s.ngram_min, s.ngram_max}},
                       {"epochs", {s.epochs_min, s.epochs_max}},
                       {"step_log_uniform", {s.step_min, s.step_max}}};
  ordered_json tbs = ordered_json::object();
  for (const auto& o : outcomes) {
    ordered_json e;
    if (!o.ok) {
      e["status"] = "failed";
    } else if (!o.ia) {
      e["status"] = "unavailable";
    } else {
      e["status"] = "ok";
      e["n_instances"] = o.ia->n_instances;
      e["mean_accuracy"] = o.ia->mean_accuracy;
      e["fold_accuracy"] = o.ia->fold_accuracy;
      e["best_draw"] = o.ia->best_draw;
      e["hyperparams"] = {{"ngram_order", o.ia->best.ngram_order},
                          {"epochs", o.ia->best.epochs},
                          {"step", o.ia->best.step}};
    }
    tbs[o.entry.id] = std::move(e);
  }
  j["treebanks"] = std::move(tbs);
  return j.dump(2) + "\n";
}

MeasureMatrix read_measure_matrix(const TsvTable& table, bool analysis_rows) {
  MeasureMatrix m;
  const auto c_id = table.require_column("treebank");
  const auto c_lang = table.require_column("language");
  const auto c_status = table.require_column("status");
  const auto c_excl = table.require_column("exclusion");
  std::vector<std::size_t> cols;
  for (auto meas : kAllMeasures) {
    if (auto c = table.column(measure_name(meas))) {
      cols.push_back(*c);
      m.column_names.emplace_back(measure_name(meas));
    }
  }
  if (cols.empty()) throw Error("measure table has no measure columns");
  for (const auto& row : table.rows) {
    if (analysis_rows) {
      if (row[c_status] != kStatusOk) continue;
      if (row[c_excl].find(reason_name(ExclusionReason::NoMorphFeatures)) != std::string::npos) continue;
    }
    m.row_ids.push_back(row[c_id]);
    m.row_languages.push_back(row[c_lang]);
    auto& cells = m.cells.emplace_back();
    for (auto c : cols) cells.push_back(parse_cell(row[c]));
  }
  return m;
}

namespace {

std::vector<std::string> load_feature_list(const RunConfig& config) {
  if (config.wals_features.empty()) return default_wals_features();
  return parse_feature_list(read_file(config.wals_features));
}

RidgeTarget ridge_for_target(const std::string& name, const std::vector<std::string>& languages,
                             const std::vector<double>& values, const std::vector<WalsRecord>& records,
                             const std::vector<std::string>& features, const RunConfig& config) {
  RidgeTarget out;
  out.name = name;
  std::set<std::string, std::less<>> known;
  for (const auto& r : records) known.insert(r.language_code);

  std::vector<std::string> langs;
  std::vector<double> ys;
  if (config.wals_rows == WalsRows::PerLanguage) {
    std::map<std::string, std::pair<double, std::size_t>> agg;
    for (std::size_t i = 0; i < languages.size(); ++i) {
      if (!known.contains(languages[i])) continue;
      auto& a = agg[languages[i]];
      a.first += values[i];
      ++a.second;
    }
    for (const auto& [lang, a] : agg) {
      langs.push_back(lang);
      ys.push_back(a.first / static_cast<double>(a.second));
    }
  } else {
    for (std::size_t i = 0; i < languages.size(); ++i) {
      if (!known.contains(languages[i])) continue;
      langs.push_back(languages[i]);
      ys.push_back(values[i]);
    }
  }
  try {
    if (langs.size() < 3) {
      throw Error("only " + std::to_string(langs.size()) + " rows with both a value and a WALS record");
    }
    const Eigen::VectorXd y = standardize(Eigen::Map<const Eigen::VectorXd>(ys.data(), static_cast<Eigen::Index>(ys.size())), name);
    const auto dm = encode(records, langs, features);
    out.report = ridge_loocv(dm.values, y, config.alpha_grid.empty() ? default_alpha_grid() : config.alpha_grid,
                             config.jobs);
    out.report->target = name;
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

AnalysisResult analyze(const MeasureMatrix& matrix, const RunConfig& config, std::ostream& log) {
  AnalysisResult res;
  res.matrix = matrix;
  res.pearson = correlation_matrix(matrix, CorrelationMethod::Pearson, config.significance);
  res.spearman = correlation_matrix(matrix, CorrelationMethod::Spearman, config.significance);
  auto note = [&](std::string msg) {
    log << msg << '\n';
    res.notes.push_back(std::move(msg));
  };
  for (std::size_t i = 0; i < matrix.n_cols(); ++i) {
    for (std::size_t j = i + 1; j < matrix.n_cols(); ++j) {
      if (!res.pearson.cells[i][j].value) {
        note("correlation " + matrix.column_names[i] + "/" + matrix.column_names[j] +
             ": undefined (fewer than 3 complete rows or a constant column)");
      }
    }
  }

  // measures with no values or a single distinct value carry no variance
  std::vector<std::size_t> pca_cols;
  for (std::size_t c = 0; c < matrix.n_cols(); ++c) {
    std::optional<double> first;
    bool varies = false;
    for (const auto& r : matrix.cells) {
      if (!r[c]) continue;
      if (!first) first = r[c];
      varies = varies || *r[c] != *first;
    }
    if (varies) {
      pca_cols.push_back(c);
    } else if (first) {
      note("measure " + matrix.column_names[c] + " is constant; left out of PCA and ridge regression");
    }
  }
  try {
    res.pca_rows = matrix.complete_rows(pca_cols);
    if (pca_cols.empty() || res.pca_rows.size() < 2) {
      throw Error("PCA: " + std::to_string(res.pca_rows.size()) + " complete rows, need at least 2");
    }
    for (auto c : pca_cols) res.pca_columns.push_back(matrix.column_names[c]);
    const auto st = standardize(matrix.dense(res.pca_rows, pca_cols), res.pca_columns);
    res.pca = pca(st.z, 0);
  } catch (const Error& e) {
    res.pca_error = e.what();
    res.errors.push_back(e.what());
    log << e.what() << '\n';
  }

  if (!config.wals_csv.empty()) {
    const auto features = load_feature_list(config);
    const auto records = load_wals(read_file(config.wals_csv), features, config.wals_language_column);
    for (auto c : pca_cols) {
      std::vector<std::string> langs;
      std::vector<double> vals;
      for (std::size_t r = 0; r < matrix.n_rows(); ++r) {
        if (matrix.cells[r][c]) {
          langs.push_back(matrix.row_languages[r]);
          vals.push_back(*matrix.cells[r][c]);
        }
      }
      res.ridge.push_back(ridge_for_target(matrix.column_names[c], langs, vals, records, features, config));
    }
    if (res.pca) {
      for (Eigen::Index k = 0; k < res.pca->scores.cols(); ++k) {
        std::vector<std::string> langs;
        std::vector<double> vals;
        for (std::size_t i = 0; i < res.pca_rows.size(); ++i) {
          langs.push_back(matrix.row_languages[res.pca_rows[i]]);
          vals.push_back(res.pca->scores(static_cast<Eigen::Index>(i), k));
        }
        res.ridge.push_back(ridge_for_target(pc_name(static_cast<std::size_t>(k)), langs, vals, records, features, config));
      }
    }
    for (const auto& t : res.ridge) {
      if (!t.error.empty()) {
        const auto msg = "ridge " + t.name + ": " + t.error;
        res.errors.push_back(msg);
        log << msg << '\n';
      }
    }
  } else {
    log << "no wals_csv configured; skipping ridge regression\n";
  }
  return res;
}

namespace {

void write_analysis(const AnalysisResult& res, const fs::path& dir) {
  std::vector<std::string> meta = res.provenance;
  for (const auto& n : res.notes) meta.push_back("note: " + n);

  TsvTable corr;
  corr.metadata = meta;
  corr.header = {"method", "measure_i", "measure_j", "value", "significant", "p_value", "n"};
  for (const auto* cm : {&res.pearson, &res.spearman}) {
    for (std::size_t i = 0; i < cm->names.size(); ++i) {
      for (std::size_t j = 0; j < cm->names.size(); ++j) {
        const auto& c = cm->cells[i][j];
        corr.rows.push_back({std::string(method_name(cm->method)), cm->names[i], cm->names[j], format_cell(c.value),
                             c.value ? (c.significant ? "1" : "0") : std::string(kNA),
                             c.value ? text::format_double(c.p_value) : std::string(kNA), std::to_string(c.n)});
      }
    }
  }
  write_file(dir / output::kCorrelations, corr.to_string());

  TsvTable var, load, scores;
  var.metadata = load.metadata = scores.metadata = meta;
  var.header = {"component", "singular_value", "explained_ratio", "cumulative_ratio"};
  load.header = {"measure"};
  scores.header = {"treebank", "language"};
  if (res.pca) {
    const auto& p = *res.pca;
    double cum = 0.0;
    for (Eigen::Index k = 0; k < p.explained_ratio.size(); ++k) {
      cum += p.explained_ratio(k);
      var.rows.push_back({pc_name(static_cast<std::size_t>(k)), text::format_double(p.singular_values(k)),
                          text::format_double(p.explained_ratio(k)), text::format_double(cum)});
      load.header.push_back(pc_name(static_cast<std::size_t>(k)));
      scores.header.push_back(pc_name(static_cast<std::size_t>(k)));
    }
    for (std::size_t v = 0; v < res.pca_columns.size(); ++v) {
      std::vector<std::string> row = {res.pca_columns[v]};
      for (Eigen::Index k = 0; k < p.loadings.cols(); ++k) {
        row.push_back(text::format_double(p.loadings(static_cast<Eigen::Index>(v), k)));
      }
      load.rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < res.pca_rows.size(); ++i) {
      std::vector<std::string> row = {res.matrix.row_ids[res.pca_rows[i]], res.matrix.row_languages[res.pca_rows[i]]};
      for (Eigen::Index k = 0; k < p.scores.cols(); ++k) {
        row.push_back(text::format_double(p.scores(static_cast<Eigen::Index>(i), k)));
      }
      scores.rows.push_back(std::move(row));
    }
  } else {
    var.metadata.push_back("error: " + res.pca_error);
  }
  write_file(dir / output::kPcaVariance, var.to_string());
  write_file(dir / output::kPcaLoadings, load.to_string());
  write_file(dir / output::kPcaScores, scores.to_string());

  TsvTable ridge;
  ridge.metadata = meta;
  ridge.header = {"target", "n", "rmse", "error_reduction", "chosen_alphas", "error"};
  for (const auto& t : res.ridge) {
    if (t.report) {
      std::vector<std::string> alphas;
      for (double a : t.report->chosen_alpha) alphas.push_back(text::format_double(a));
      ridge.rows.push_back({t.name, std::to_string(t.report->n), text::format_double(t.report->rmse),
                            text::format_double(t.report->error_reduction), text::join(alphas, ","), "-"});
    } else {
      std::string err = t.error;
      std::replace(err.begin(), err.end(), '\t', ' ');
      ridge.rows.push_back({t.name, "0", std::string(kNA), std::string(kNA), "-", err});
    }
  }
  write_file(dir / output::kRidge, ridge.to_string());
}

}  // namespace

int cmd_measure(const RunConfig& config, std::ostream& log) {
  validate(config, true);
  const auto base = config.manifest.has_parent_path() ? config.manifest.parent_path() : fs::path(".");
  const auto entries = parse_manifest(read_file(config.manifest), base);
  const auto outcomes = measure_manifest(entries, config, log);

  fs::create_directories(config.out_dir);
  write_file(config.out_dir / output::kMeasureMatrix, measure_matrix_table(outcomes, config).to_string());
  write_file(config.out_dir / output::kMeasures, measure_long_table(outcomes, config).to_string());
  write_file(config.out_dir / output::kTreebanks, treebank_table(outcomes, config).to_string());
  write_file(config.out_dir / output::kIaSidecar, ia_sidecar_json(outcomes, config));

  const bool all_ok = std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.ok; });
  return all_ok ? kExitOk : kExitPartial;
}

int cmd_analyze(const RunConfig& config, std::ostream& log) {
  validate(config, false);
  const auto path = config.out_dir / output::kMeasureMatrix;
  if (!fs::exists(path)) throw Error("analyze: measure table not found: " + path.string());
  const auto table = read_tsv(path);
  auto res = analyze(read_measure_matrix(table, true), config, log);
  res.provenance = table.metadata;
  if (res.provenance.empty()) res.provenance.push_back("morphcx analysis " + config.provenance());
  std::vector<std::string> alphas;
  for (double a : config.alpha_grid.empty() ? default_alpha_grid() : config.alpha_grid) {
    alphas.push_back(text::format_double(a));
  }
  res.provenance.push_back("analysis standardization=population significance=" +
                           std::string(config.significance.test == SignificanceTest::TDistribution ? "t" : "permutation") +
                           " alpha_grid=" + text::join(alphas, ",") + " wals_rows=" +
                           (config.wals_rows == WalsRows::PerTreebank ? "treebank" : "language"));
  write_analysis(res, config.out_dir);
  return res.errors.empty() ? kExitOk : kExitPartial;
}

int cmd_plot(const RunConfig& config, std::ostream& log) {
  const auto& dir = config.out_dir;
  auto need = [&](const char* name) {
    const auto p = dir / name;
    if (!fs::exists(p)) throw Error("plot: missing input " + p.string());
    return read_tsv(p);
  };

  const auto matrix = read_measure_matrix(need(output::kMeasureMatrix), false);
  std::vector<svg::RankPanel> panels;
  for (std::size_t c = 0; c < matrix.n_cols(); ++c) {
    svg::RankPanel p{matrix.column_names[c], {}};
    for (std::size_t r = 0; r < matrix.n_rows(); ++r) {
      if (matrix.cells[r][c]) p.items.push_back({matrix.row_ids[r], *matrix.cells[r][c]});
    }
    if (p.items.empty()) {
      log << "plot: measure " << p.title << " has no values; panel omitted\n";
      continue;
    }
    panels.push_back(std::move(p));
  }
  write_file(dir / output::kMeasuresSvg, svg::rank_panels(panels, "Complexity measures per treebank"));

  const auto variance = need(output::kPcaVariance);
  const auto scores = need(output::kPcaScores);
  if (!variance.rows.empty() && scores.header.size() >= 3) {
    std::vector<double> ratio;
    for (const auto& row : variance.rows) ratio.push_back(parse_cell(row[variance.require_column("explained_ratio")]).value_or(0.0));
    auto pct = [&](std::size_t k) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.2f%%", 100.0 * (k < ratio.size() ? ratio[k] : 0.0));
      return std::string(buf);
    };
    std::vector<svg::ScatterPoint> pts;
    const bool two = scores.header.size() >= 4;
    for (const auto& row : scores.rows) {
      pts.push_back({row[0], parse_cell(row[2]).value_or(0.0), two ? parse_cell(row[3]).value_or(0.0) : 0.0});
    }
    write_file(dir / output::kPcaScatterSvg,
               svg::scatter(pts, "PC1 (" + pct(0) + " of variance)", two ? "PC2 (" + pct(1) + " of variance)" : "PC2",
                            "First two principal components"));

    std::vector<svg::RankPanel> pcs;
    for (std::size_t k = 2; k < scores.header.size(); ++k) {
      svg::RankPanel p{scores.header[k] + " (" + pct(k - 2) + ")", {}};
      for (const auto& row : scores.rows) p.items.push_back({row[0], parse_cell(row[k]).value_or(0.0)});
      pcs.push_back(std::move(p));
    }
    write_file(dir / output::kPcaComponentsSvg, svg::rank_panels(pcs, "Treebanks ranked on every principal component"));
  } else {
    log << "plot: no PCA results; PCA figures omitted\n";
  }

  const auto ridge_path = dir / output::kRidge;
  if (fs::exists(ridge_path)) {
    const auto ridge = read_tsv(ridge_path);
    std::vector<svg::LabeledValue> bars;
    for (const auto& row : ridge.rows) {
      if (auto v = parse_cell(row[ridge.require_column("error_reduction")])) bars.push_back({row[0], *v});
    }
    write_file(dir / output::kWalsSvg, svg::bars(bars, "Error reduction", "Prediction of measures from WALS features"));
  } else {
    log << "plot: no ridge results; WALS figure omitted\n";
  }
  return kExitOk;
}

int cmd_run_all(const RunConfig& config, std::ostream& log) {
  const int m = cmd_measure(config, log);
  const int a = cmd_analyze(config, log);
  const int p = cmd_plot(config, log);
  return std::max({m, a, p});
}

}  // namespace morphcx
