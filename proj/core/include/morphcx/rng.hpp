#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace morphcx {

/// Seeded random stream. All draws go through platform-independent transforms
/// of the raw mt19937_64 output, so equal seeds give equal sequences everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Stream for a tuple of tags, e.g. (run seed, hash of treebank id, repetition).
  static Rng derive(std::initializer_list<std::uint64_t> tags);
  static std::uint64_t mix(std::initializer_list<std::uint64_t> tags);
  static std::uint64_t tag(std::string_view name);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01();

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double normal();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = uniform_index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace morphcx
