#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace morphcx {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

/// Item counts. Invariant: total() is the sum of counts; every stored count >= 1.
class FrequencyTable {
 public:
  void add(std::string_view item, std::size_t count = 1);

  std::size_t total() const noexcept { return total_; }
  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return total_ == 0; }
  std::size_t count(std::string_view item) const;

  /// Counts in ascending order; the order entropy sums are taken in.
  std::vector<std::size_t> sorted_counts() const;

  const auto& counts() const noexcept { return counts_; }

 private:
  std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>> counts_;
  std::size_t total_ = 0;
};

/// Maximum-likelihood entropy in bits, -sum p log2 p. Throws Error on an empty table.
double plugin_entropy(const FrequencyTable& table);

}  // namespace morphcx
