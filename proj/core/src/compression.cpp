#include "morphcx/compression.hpp"

#include <zlib.h>

#include <vector>

#include "morphcx/error.hpp"

namespace morphcx {

std::string CompressorSetting::describe() const {
  return "zlib-" + std::string(zlibVersion()) + " raw-deflate level=" + std::to_string(level) +
         " window_bits=" + std::to_string(window_bits) + " mem_level=" + std::to_string(mem_level) +
         " strategy=default";
}

std::size_t compressed_size(std::string_view data, const CompressorSetting& setting) {
  z_stream zs{};
  if (deflateInit2(&zs, setting.level, Z_DEFLATED, -setting.window_bits, setting.mem_level,
                   Z_DEFAULT_STRATEGY) != Z_OK) {
    throw Error("deflateInit2 failed for " + setting.describe());
  }
  std::vector<unsigned char> out(deflateBound(&zs, static_cast<uLong>(data.size())) + 16);
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&zs, Z_FINISH);
  const std::size_t n = zs.total_out;
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw Error("deflate failed with code " + std::to_string(rc));
  return n;
}

double compression_ratio(std::string_view data, const CompressorSetting& setting) {
  if (data.empty()) throw Error("compression ratio of empty text");
  return static_cast<double>(compressed_size(data, setting)) / static_cast<double>(data.size());
}

}  // namespace morphcx
