#include "morphcx/wals.hpp"

#include <algorithm>
#include <set>

#include "morphcx/error.hpp"
#include "morphcx/text.hpp"

namespace morphcx {

const std::vector<std::string>& default_wals_features() {
  static const std::vector<std::string> features = {
      "22A", "26A", "27A", "28A", "29A", "30A", "33A", "34A", "37A", "38A",  "49A",  "51A",  "57A",  "59A",
      "65A", "66A", "67A", "69A", "70A", "73A", "74A", "75A", "78A", "94A", "101A", "102A", "111A", "112A"};
  return features;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view input) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    const bool blank = row.size() == 1 && row[0].empty();
    if (!blank) rows.push_back(std::move(row));
    row.clear();
  };

  for (std::size_t i = 0; i < input.size(); ++i) {
    const char c = input[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < input.size() && input[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started) throw ParseError("stray quote inside unquoted CSV field", line);
        quoted = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field", line);
  if (field_started || !row.empty()) end_row();
  return rows;
}

std::vector<WalsRecord> load_wals(std::string_view csv_text, const std::vector<std::string>& feature_list,
                                  std::string_view language_column) {
  const auto rows = parse_csv(csv_text);
  if (rows.empty()) throw ParseError("WALS CSV has no header row", 1);
  const auto& header = rows.front();

  auto column_of = [&](std::string_view name) -> std::ptrdiff_t {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (text::trim(header[i]) == name) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
  };
  const auto lang_col = column_of(language_column);
  if (lang_col < 0) throw Error("WALS CSV lacks language column '" + std::string(language_column) + "'");

  std::vector<std::string> missing;
  std::vector<std::size_t> feature_cols;
  for (const auto& f : feature_list) {
    const auto c = column_of(f);
    if (c < 0) {
      missing.push_back(f);
    } else {
      feature_cols.push_back(static_cast<std::size_t>(c));
    }
  }
  if (!missing.empty()) throw Error("WALS CSV header lacks configured features: " + text::join(missing, ", "));

  std::vector<WalsRecord> records;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    WalsRecord rec;
    if (static_cast<std::size_t>(lang_col) < row.size()) rec.language_code = std::string(text::trim(row[lang_col]));
    if (rec.language_code.empty()) throw ParseError("WALS row without a language code", r + 1);
    for (std::size_t k = 0; k < feature_list.size(); ++k) {
      const auto c = feature_cols[k];
      if (c >= row.size()) continue;
      const auto v = text::trim(row[c]);
      if (!v.empty()) rec.values.emplace(feature_list[k], std::string(v));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<std::string> parse_feature_list(std::string_view input) {
  std::vector<std::string> out;
  for (auto line : text::split(input, '\n')) {
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    for (auto item : text::split(line, ',')) {
      const auto id = text::trim(item);
      if (!id.empty()) out.emplace_back(id);
    }
  }
  return out;
}

DesignMatrix encode(const std::vector<WalsRecord>& records, const std::vector<std::string>& languages,
                    const std::vector<std::string>& feature_list) {
  if (languages.empty()) throw Error("encode needs at least one language");
  std::map<std::string, const WalsRecord*, std::less<>> by_lang;
  for (const auto& r : records) by_lang.emplace(r.language_code, &r);

  auto value_of = [&](const std::string& lang, const std::string& feature) -> const std::string* {
    auto it = by_lang.find(lang);
    if (it == by_lang.end()) return nullptr;
    auto v = it->second->values.find(feature);
    return v == it->second->values.end() ? nullptr : &v->second;
  };

  DesignMatrix dm;
  dm.row_languages = languages;
  dm.features = feature_list;
  std::vector<std::map<std::string, std::size_t>> category_column(feature_list.size());
  std::vector<std::size_t> missing_column(feature_list.size());
  for (std::size_t f = 0; f < feature_list.size(); ++f) {
    std::set<std::string> cats;
    for (const auto& lang : languages) {
      if (const auto* v = value_of(lang, feature_list[f])) cats.insert(*v);
    }
    for (const auto& c : cats) {
      category_column[f][c] = dm.column_names.size();
      dm.column_names.push_back(feature_list[f] + "=" + c);
      dm.column_feature.push_back(f);
    }
    missing_column[f] = dm.column_names.size();
    dm.column_names.push_back(feature_list[f] + ":missing");
    dm.column_feature.push_back(f);
  }

  dm.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(languages.size()),
                                    static_cast<Eigen::Index>(dm.column_names.size()));
  for (std::size_t r = 0; r < languages.size(); ++r) {
    for (std::size_t f = 0; f < feature_list.size(); ++f) {
      const auto* v = value_of(languages[r], feature_list[f]);
      const auto col = v ? category_column[f].at(*v) : missing_column[f];
      dm.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) = 1.0;
    }
  }
  return dm;
}

}  // namespace morphcx
