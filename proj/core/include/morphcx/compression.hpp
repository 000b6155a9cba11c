#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace morphcx {

/// Raw deflate (zlib, no header) parameters. WS values are only comparable
/// under one fixed setting, so the setting is written to every output header.
struct CompressorSetting {
  int level = 9;
  int window_bits = 15;
  int mem_level = 8;

  std::string describe() const;
};

/// Size in bytes of the raw-deflate stream for `data`. Throws Error on zlib failure.
std::size_t compressed_size(std::string_view data, const CompressorSetting& setting = {});

/// compressed bytes / input bytes. Throws Error on empty input.
double compression_ratio(std::string_view data, const CompressorSetting& setting = {});

}  // namespace morphcx
