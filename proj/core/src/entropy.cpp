#include "morphcx/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "morphcx/error.hpp"

namespace morphcx {

void FrequencyTable::add(std::string_view item, std::size_t count) {
  if (count == 0) return;
  auto it = counts_.find(item);
  if (it == counts_.end()) {
    counts_.emplace(std::string(item), count);
  } else {
    it->second += count;
  }
  total_ += count;
}

std::size_t FrequencyTable::count(std::string_view item) const {
  auto it = counts_.find(item);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::size_t> FrequencyTable::sorted_counts() const {
  std::vector<std::size_t> c;
  c.reserve(counts_.size());
  for (const auto& [_, n] : counts_) c.push_back(n);
  std::sort(c.begin(), c.end());
  return c;
}

double plugin_entropy(const FrequencyTable& table) {
  if (table.empty()) throw Error("entropy of an empty frequency table");
  const double n = static_cast<double>(table.total());
  double h = 0.0;
  for (auto c : table.sorted_counts()) {
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return std::max(0.0, h);
}

}  // namespace morphcx
