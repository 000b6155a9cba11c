#include "morphcx/distortion.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "morphcx/entropy.hpp"
#include "morphcx/text.hpp"

namespace morphcx {

CharUnigramModel CharUnigramModel::estimate(const Sample& sample) {
  std::map<char32_t, std::size_t> counts;
  std::size_t total = 0;
  sample.for_each_token([&](const Token& t) {
    for (char32_t c : text::decode_utf8(t.form)) {
      if (c == U' ' || c == U'\n') continue;
      ++counts[c];
      ++total;
    }
  });
  CharUnigramModel m;
  double acc = 0.0;
  for (const auto& [c, n] : counts) {
    const double p = static_cast<double>(n) / static_cast<double>(total);
    m.symbols_.push_back(c);
    m.probs_.push_back(p);
    acc += p;
    m.cumulative_.push_back(acc);
  }
  if (!m.cumulative_.empty()) m.cumulative_.back() = 1.0;
  return m;
}

double CharUnigramModel::probability(char32_t c) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
  if (it == symbols_.end() || *it != c) return 0.0;
  return probs_[static_cast<std::size_t>(it - symbols_.begin())];
}

char32_t CharUnigramModel::draw(Rng& rng) const {
  const double u = rng.uniform01();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return symbols_[static_cast<std::size_t>(it - cumulative_.begin())];
}

namespace {

// Next string of the same length in the odometer order over the model's support.
bool increment(std::u32string& s, const std::vector<char32_t>& symbols) {
  for (std::size_t i = s.size(); i-- > 0;) {
    auto it = std::lower_bound(symbols.begin(), symbols.end(), s[i]);
    if (it != symbols.end() && std::next(it) != symbols.end()) {
      s[i] = *std::next(it);
      return true;
    }
    s[i] = symbols.front();
  }
  return false;
}

}  // namespace

TokenText token_text(const Sample& sample) {
  TokenText out;
  out.reserve(sample.sentences.size());
  for (const auto& sent : sample.sentences) {
    auto& row = out.emplace_back();
    row.reserve(sent.size());
    for (const auto& t : sent) row.push_back(t.form);
  }
  return out;
}

Distortion distort(const Sample& sample, Rng& rng) {
  const auto model = CharUnigramModel::estimate(sample);
  std::unordered_map<std::string, std::string, StringHash, std::equal_to<>> mapping;
  std::unordered_set<std::string, StringHash, std::equal_to<>> used;
  Distortion result;

  auto replacement_for = [&](const std::string& form) -> const std::string& {
    auto it = mapping.find(form);
    if (it != mapping.end()) return it->second;
    ++result.stats.types;
    const auto len = text::utf8_length(form);
    std::string candidate;
    if (model.empty() || len == 0) {
      candidate = form;
    } else {
      std::u32string draw(len, U'\0');
      bool placed = false;
      for (std::size_t attempt = 0; attempt <= kDistortionRetries; ++attempt) {
        for (auto& c : draw) c = model.draw(rng);
        candidate = text::encode_utf8(draw);
        if (!used.contains(candidate)) {
          placed = true;
          break;
        }
        ++result.stats.redraws;
      }
      if (!placed) {
        ++result.stats.fallbacks;
        // Walk the same-length strings from the last draw until a free one turns up.
        auto probe = draw;
        do {
          if (!increment(probe, model.symbols())) probe.assign(len, model.symbols().front());
          candidate = text::encode_utf8(probe);
        } while (used.contains(candidate) && probe != draw);
      }
    }
    used.insert(candidate);
    return mapping.emplace(form, std::move(candidate)).first->second;
  };

  result.text.reserve(sample.sentences.size());
  for (const auto& sent : sample.sentences) {
    auto& row = result.text.emplace_back();
    row.reserve(sent.size());
    for (const auto& t : sent) row.push_back(replacement_for(t.form));
  }
  return result;
}

std::string serialize(const TokenText& text) {
  std::string out;
  for (std::size_t s = 0; s < text.size(); ++s) {
    if (s) out += '\n';
    for (std::size_t i = 0; i < text[s].size(); ++i) {
      if (i) out += ' ';
      out += text[s][i];
    }
  }
  return out;
}

}  // namespace morphcx
