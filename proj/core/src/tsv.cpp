#include "morphcx/tsv.hpp"

#include <charconv>
#include <fstream>

#include "morphcx/conllu.hpp"
#include "morphcx/error.hpp"
#include "morphcx/text.hpp"

namespace morphcx {

std::optional<std::size_t> TsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t TsvTable::require_column(std::string_view name) const {
  if (auto c = column(name)) return *c;
  throw Error("TSV lacks column '" + std::string(name) + "'");
}

std::string TsvTable::to_string() const {
  std::string out;
  for (const auto& m : metadata) out += "# " + m + '\n';
  out += text::join(header, "\t") + '\n';
  for (const auto& r : rows) out += text::join(r, "\t") + '\n';
  return out;
}

TsvTable parse_tsv(std::string_view input) {
  TsvTable t;
  bool have_header = false;
  std::size_t line_no = 0;
  for (auto line : text::split(input, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!have_header && line.front() == '#') {
      auto m = line.substr(1);
      if (!m.empty() && m.front() == ' ') m.remove_prefix(1);
      t.metadata.emplace_back(m);
      continue;
    }
    std::vector<std::string> cells;
    for (auto c : text::split(line, '\t')) cells.emplace_back(c);
    if (!have_header) {
      t.header = std::move(cells);
      have_header = true;
    } else {
      if (cells.size() != t.header.size()) {
        throw ParseError("expected " + std::to_string(t.header.size()) + " cells, found " +
                             std::to_string(cells.size()),
                         line_no);
      }
      t.rows.push_back(std::move(cells));
    }
  }
  if (!have_header) throw ParseError("TSV has no header row", 0);
  return t;
}

TsvTable read_tsv(const std::filesystem::path& path) {
  try {
    return parse_tsv(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("write failed for " + path.string());
}

std::string format_cell(std::optional<double> v) {
  return v ? text::format_double(*v) : std::string(kNA);
}

std::optional<double> parse_cell(std::string_view cell) {
  if (cell == kNA || cell.empty()) return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
    throw ParseError("not a number: '" + std::string(cell) + "'", 0);
  }
  return v;
}

}  // namespace morphcx
