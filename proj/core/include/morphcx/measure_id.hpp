#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace morphcx {

/// The eight complexity measures, in reporting order.
enum class Measure { TTR, MSP, WS, WH, LH, IS, MFH, NegIA };

inline constexpr std::array<Measure, 8> kAllMeasures = {
    Measure::TTR, Measure::MSP, Measure::WS,  Measure::WH,
    Measure::LH,  Measure::IS,  Measure::MFH, Measure::NegIA};

inline constexpr std::size_t kMeasureCount = kAllMeasures.size();

constexpr std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::TTR: return "ttr";
    case Measure::MSP: return "msp";
    case Measure::WS: return "ws";
    case Measure::WH: return "wh";
    case Measure::LH: return "lh";
    case Measure::IS: return "is";
    case Measure::MFH: return "mfh";
    case Measure::NegIA: return "neg_ia";
  }
  return "?";
}

constexpr std::size_t measure_index(Measure m) { return static_cast<std::size_t>(m); }

inline std::optional<Measure> measure_from_name(std::string_view name) {
  for (auto m : kAllMeasures) {
    if (measure_name(m) == name) return m;
  }
  if (name == "-ia" || name == "ia") return Measure::NegIA;
  return std::nullopt;
}

/// Measures that only use word forms, and so stay meaningful without annotation.
constexpr bool needs_annotation(Measure m) {
  return !(m == Measure::TTR || m == Measure::WS || m == Measure::WH);
}

}  // namespace morphcx
