#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morphcx {

inline constexpr std::string_view kNA = "NA";

/// Tab-separated table with leading "# " metadata lines and one header row.
struct TsvTable {
  std::vector<std::string> metadata;  ///< without the "# " prefix
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view name) const;
  std::size_t require_column(std::string_view name) const;  ///< throws Error if absent

  std::string to_string() const;
};

TsvTable parse_tsv(std::string_view text);
TsvTable read_tsv(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

std::string format_cell(std::optional<double> v);
std::optional<double> parse_cell(std::string_view cell);

}  // namespace morphcx
