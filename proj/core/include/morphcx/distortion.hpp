#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "morphcx/rng.hpp"
#include "morphcx/sampling.hpp"

namespace morphcx {

/// Order-0 character model over the code points of a sample's word forms.
/// Space and newline are never part of the support.
class CharUnigramModel {
 public:
  static CharUnigramModel estimate(const Sample& sample);

  bool empty() const noexcept { return symbols_.empty(); }
  const std::vector<char32_t>& symbols() const noexcept { return symbols_; }  ///< ascending
  const std::vector<double>& probabilities() const noexcept { return probs_; }
  double probability(char32_t c) const;

  char32_t draw(Rng& rng) const;

 private:
  std::vector<char32_t> symbols_;
  std::vector<double> probs_;
  std::vector<double> cumulative_;
};

struct DistortionStats {
  std::size_t types = 0;
  std::size_t redraws = 0;    ///< collisions resolved by drawing again
  std::size_t fallbacks = 0;  ///< types that exhausted the retry bound
};

/// Token strings grouped by sentence; the shape of the source sample.
using TokenText = std::vector<std::vector<std::string>>;

struct Distortion {
  TokenText text;
  DistortionStats stats;
};

inline constexpr std::size_t kDistortionRetries = 100;

/// Replaces every word type by one random string of the same length drawn from
/// the sample's character model. The type -> replacement map is injective.
Distortion distort(const Sample& sample, Rng& rng);

TokenText token_text(const Sample& sample);

/// Tokens joined by a single space, sentences by a newline.
std::string serialize(const TokenText& text);

}  // namespace morphcx
