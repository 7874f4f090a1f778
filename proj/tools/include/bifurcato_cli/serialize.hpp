#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bifurcato::cli {

using json = nlohmann::json;

// Replaces NaN and infinities by the strings "nan", "inf", "-inf" and returns
// the JSON pointers of the replaced values.
std::vector<std::string> sanitize_nonfinite(json& doc);

// Pretty-printed JSON with sorted keys and every double written as %.17g.
void write_json(std::ostream& os, const json& doc);
std::string dump_json(const json& doc);

// One RFC 4180 table: header row, CRLF line ends, fields quoted when they
// contain a comma, quote or line break.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
std::string csv_field(double v);
void write_csv(std::ostream& os, const CsvTable& table);

// Throws Error(IoError).
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bifurcato::cli
