#include "bifurcato_cli/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bifurcato/error.hpp"

namespace bifurcato::cli {

namespace {

void sanitize(json& node, const std::string& path, std::vector<std::string>& hits) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) sanitize(it.value(), path + "/" + it.key(), hits);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) sanitize(node[i], path + "/" + std::to_string(i), hits);
  } else if (node.is_number_float()) {
    const double v = node.get<double>();
    if (std::isnan(v)) {
      node = "nan";
      hits.push_back(path);
    } else if (std::isinf(v)) {
      node = v > 0 ? "inf" : "-inf";
      hits.push_back(path);
    }
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  // keep it a float on re-read so the round trip preserves the type
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void emit(std::ostream& os, const json& node, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (node.type()) {
    case json::value_t::object: {
      if (node.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = node.begin(); it != node.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << json(it.key()).dump() << ": ";
        emit(os, it.value(), indent + 2);
      }
      os << "\n" << close << "}";
      return;
    }
    case json::value_t::array: {
      if (node.empty()) {
        os << "[]";
        return;
      }
      // short numeric arrays (coordinates, matrix rows) stay on one line
      bool flat = node.size() <= 8;
      for (const auto& e : node) flat = flat && e.is_primitive();
      if (flat) {
        os << "[";
        for (std::size_t i = 0; i < node.size(); ++i) {
          if (i) os << ", ";
          emit(os, node[i], indent + 2);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < node.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        emit(os, node[i], indent + 2);
      }
      os << "\n" << close << "]";
      return;
    }
    case json::value_t::number_float:
      os << format_double(node.get<double>());
      return;
    default:
      os << node.dump();
  }
}

}  // namespace

std::vector<std::string> sanitize_nonfinite(json& doc) {
  std::vector<std::string> hits;
  sanitize(doc, "", hits);
  return hits;
}

void write_json(std::ostream& os, const json& doc) {
  emit(os, doc, 0);
  os << "\n";
}

std::string dump_json(const json& doc) {
  std::ostringstream os;
  write_json(os, doc);
  return os.str();
}

std::string csv_field(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {
void put_field(std::ostream& os, const std::string& f) {
  if (f.find_first_of(",\"\r\n") == std::string::npos) {
    os << f;
    return;
  }
  os << '"';
  for (char ch : f) {
    if (ch == '"') os << '"';
    os << ch;
  }
  os << '"';
}

void put_row(std::ostream& os, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ',';
    put_field(os, row[i]);
  }
  os << "\r\n";
}
}  // namespace

void write_csv(std::ostream& os, const CsvTable& table) {
  put_row(os, table.header);
  for (const auto& r : table.rows) put_row(os, r);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  f << text;
  f.flush();
  if (!f) throw Error(ErrorKind::IoError, "write failed: " + path);
}

}  // namespace bifurcato::cli
