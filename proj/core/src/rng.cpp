#include "morphcx/rng.hpp"

#include <cmath>
#include <numbers>

#include "morphcx/text.hpp"

namespace morphcx {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t Rng::mix(std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = 0x6a09e667f3bcc908ULL;
  for (auto t : tags) h = splitmix64(h ^ splitmix64(t));
  return h;
}

Rng Rng::derive(std::initializer_list<std::uint64_t> tags) { return Rng(mix(tags)); }

std::uint64_t Rng::tag(std::string_view name) { return text::fnv1a64(name); }

std::size_t Rng::uniform_index(std::size_t n) {
  const std::uint64_t bound = n;
  // rejection threshold removes modulo bias
  const std::uint64_t limit = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= limit) return static_cast<std::size_t>(x % bound);
  }
}

double Rng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace morphcx
