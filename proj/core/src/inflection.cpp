#include "morphcx/inflection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "morphcx/error.hpp"
#include "morphcx/parallel.hpp"
#include "morphcx/text.hpp"

namespace morphcx {

std::string canonical_bundle(std::vector<Feature> feats) {
  std::sort(feats.begin(), feats.end());
  feats.erase(std::unique(feats.begin(), feats.end()), feats.end());
  return feats_to_string(feats);
}

std::vector<InflectionInstance> extract_instances(const Sample& sample) {
  std::vector<InflectionInstance> out;
  std::unordered_set<std::string, StringHash, std::equal_to<>> seen;
  sample.for_each_token([&](const Token& t) {
    if (t.form.empty() || !t.has_lemma() || !t.has_feats()) return;
    InflectionInstance inst{t.lemma, feats_to_string(t.feats), t.form};
    auto key = inst.lemma + '\t' + inst.bundle + '\t' + inst.form;
    if (seen.insert(std::move(key)).second) out.push_back(std::move(inst));
  });
  return out;
}

std::vector<std::string> featurize(std::string_view lemma_utf8, std::string_view bundle, int ngram_order) {
  const auto lemma = text::decode_utf8(lemma_utf8);
  const std::u32string_view lv(lemma);
  std::vector<std::string> f;
  const auto max_k = std::min<std::size_t>(static_cast<std::size_t>(std::max(ngram_order, 0)), lemma.size());
  for (std::size_t k = 1; k <= max_k; ++k) {
    f.push_back('^' + text::encode_utf8(lv.substr(0, k)));
    f.push_back(text::encode_utf8(lv.substr(lemma.size() - k)) + '$');
  }
  if (!bundle.empty()) {
    for (auto pair : text::split(bundle, '|')) f.push_back("F:" + std::string(pair));
  }
  f.push_back("B:" + std::string(bundle));
  std::string last;
  if (!lemma.empty()) text::append_utf8(last, lemma.back());
  f.push_back("BL:" + std::string(bundle) + '|' + last);
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

std::vector<double> InflectionModel::scores(std::string_view lemma, std::string_view bundle) const {
  std::vector<double> s(classes_.size(), 0.0);
  for (const auto& name : featurize(lemma, bundle, hp_.ngram_order)) {
    auto it = feature_ids_.find(name);
    if (it == feature_ids_.end()) continue;
    for (const auto& [cls, w] : weights_[it->second]) s[cls] += w;
  }
  return s;
}

std::vector<std::size_t> InflectionModel::ranking(std::string_view lemma, std::string_view bundle) const {
  const auto s = scores(lemma, bundle);
  std::vector<std::size_t> idx(s.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return s[a] > s[b]; });
  return idx;
}

std::optional<std::size_t> InflectionModel::predict_class(std::string_view lemma, std::string_view bundle) const {
  const auto len = text::utf8_length(lemma);
  for (auto c : ranking(lemma, bundle)) {
    if (classes_[c].applicable(len)) return c;
  }
  return std::nullopt;
}

std::string InflectionModel::predict(std::string_view lemma, std::string_view bundle) const {
  const auto c = predict_class(lemma, bundle);
  if (!c) return std::string(lemma);
  return *apply_edit_script(classes_[*c], lemma);
}

std::vector<std::tuple<std::string, std::string, double>> InflectionModel::weights() const {
  std::vector<std::tuple<std::string, std::string, double>> out;
  for (const auto& [name, id] : feature_ids_) {
    for (const auto& [cls, w] : weights_[id]) out.emplace_back(name, classes_[cls].label(), w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Accumulator {
  std::uint32_t cls;
  double w;
  double u;  // sum of timestamp * update, for averaging
};

void bump(std::vector<Accumulator>& row, std::uint32_t cls, double delta, double t) {
  for (auto& a : row) {
    if (a.cls == cls) {
      a.w += delta;
      a.u += t * delta;
      return;
    }
  }
  row.push_back({cls, delta, t * delta});
}

}  // namespace

InflectionModel train(const std::vector<InflectionInstance>& instances, const Hyperparams& hp, Rng& rng) {
  if (instances.empty()) throw Error("cannot train an inflection model on zero instances");
  InflectionModel model;
  model.hp_ = hp;

  std::unordered_map<std::string, std::uint32_t> class_ids;
  std::vector<std::uint32_t> gold(instances.size());
  std::vector<std::vector<std::uint32_t>> phi(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    auto script = derive_edit_script(inst.lemma, inst.form);
    auto [it, fresh] = class_ids.emplace(script.label(), static_cast<std::uint32_t>(model.classes_.size()));
    if (fresh) model.classes_.push_back(std::move(script));
    gold[i] = it->second;
    for (auto& name : featurize(inst.lemma, inst.bundle, hp.ngram_order)) {
      auto [fit, added] =
          model.feature_ids_.emplace(std::move(name), static_cast<std::uint32_t>(model.feature_ids_.size()));
      phi[i].push_back(fit->second);
    }
  }
  model.weights_.resize(model.feature_ids_.size());
  if (model.classes_.size() == 1) return model;

  const auto n_classes = model.classes_.size();
  std::vector<std::vector<Accumulator>> acc(model.feature_ids_.size());
  std::vector<double> score(n_classes);
  std::vector<std::size_t> order(instances.size());
  std::iota(order.begin(), order.end(), 0);
  double t = 1.0;

  for (int epoch = 0; epoch < hp.epochs; ++epoch) {
    rng.shuffle(order);
    for (auto i : order) {
      std::fill(score.begin(), score.end(), 1.0);  // unit cost for every wrong class
      score[gold[i]] = 0.0;
      for (auto f : phi[i]) {
        for (const auto& a : acc[f]) score[a.cls] += a.w;
      }
      std::uint32_t guess = 0;
      for (std::uint32_t c = 1; c < n_classes; ++c) {
        if (score[c] > score[guess]) guess = c;
      }
      if (guess != gold[i]) {
        for (auto f : phi[i]) {
          bump(acc[f], gold[i], hp.step, t);
          bump(acc[f], guess, -hp.step, t);
        }
      }
      t += 1.0;
    }
  }

  for (std::size_t f = 0; f < acc.size(); ++f) {
    auto& row = model.weights_[f];
    for (const auto& a : acc[f]) {
      const double avg = a.w - a.u / t;
      if (avg != 0.0) row.emplace_back(a.cls, avg);
    }
    std::sort(row.begin(), row.end());
  }
  return model;
}

double exact_match_accuracy(const InflectionModel& model, const std::vector<InflectionInstance>& test) {
  if (test.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto& inst : test) {
    if (model.predict(inst.lemma, inst.bundle) == inst.form) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(test.size());
}

Hyperparams draw_hyperparams(const SearchSpace& space, Rng& rng) {
  Hyperparams hp;
  hp.ngram_order = space.ngram_min + static_cast<int>(rng.uniform_index(
                                         static_cast<std::size_t>(space.ngram_max - space.ngram_min + 1)));
  hp.epochs = space.epochs_min + static_cast<int>(rng.uniform_index(
                                     static_cast<std::size_t>(space.epochs_max - space.epochs_min + 1)));
  hp.step = std::exp(rng.uniform(std::log(space.step_min), std::log(space.step_max)));
  return hp;
}

std::vector<std::size_t> fold_assignment(std::size_t n, std::size_t folds, Rng& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::size_t> fold(n);
  for (std::size_t pos = 0; pos < n; ++pos) fold[order[pos]] = pos % folds;
  return fold;
}

std::optional<IAResult> cross_validate(const std::vector<InflectionInstance>& instances, const SearchSpace& space,
                                       Rng& rng, std::size_t jobs) {
  if (space.folds < 2) throw Error("cross validation needs at least 2 folds");
  if (space.draws == 0) throw Error("hyperparameter search needs at least 1 draw");
  if (instances.size() < space.folds) return std::nullopt;

  const auto fold = fold_assignment(instances.size(), space.folds, rng);
  std::vector<std::vector<InflectionInstance>> train_sets(space.folds), test_sets(space.folds);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (std::size_t k = 0; k < space.folds; ++k) {
      (fold[i] == k ? test_sets[k] : train_sets[k]).push_back(instances[i]);
    }
  }

  std::vector<std::uint64_t> draw_seeds(space.draws);
  for (auto& s : draw_seeds) s = rng.next();

  IAResult result;
  result.n_instances = instances.size();
  result.draws.resize(space.draws);
  for (std::size_t d = 0; d < space.draws; ++d) {
    Rng hp_rng(draw_seeds[d]);
    result.draws[d].hyperparams = draw_hyperparams(space, hp_rng);
    result.draws[d].fold_accuracy.assign(space.folds, 0.0);
  }

  parallel_for(space.draws * space.folds, jobs, [&](std::size_t job) {
    const auto d = job / space.folds;
    const auto k = job % space.folds;
    auto train_rng = Rng::derive({draw_seeds[d], k});
    const auto model = train(train_sets[k], result.draws[d].hyperparams, train_rng);
    result.draws[d].fold_accuracy[k] = exact_match_accuracy(model, test_sets[k]);
  });

  for (std::size_t d = 0; d < space.draws; ++d) {
    auto& dr = result.draws[d];
    dr.mean_accuracy = std::accumulate(dr.fold_accuracy.begin(), dr.fold_accuracy.end(), 0.0) /
                       static_cast<double>(space.folds);
    if (d == 0 || dr.mean_accuracy > result.mean_accuracy) {
      result.mean_accuracy = dr.mean_accuracy;
      result.fold_accuracy = dr.fold_accuracy;
      result.best = dr.hyperparams;
      result.best_draw = d;
    }
  }
  return result;
}

}  // namespace morphcx
