#include "idtrade/seed_io.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace idt {

using nlohmann::json;

SeedFile parse_seed_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("seed file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix")) {
    throw ParseError("seed file must be an object with key \"matrix\"");
  }
  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != 4) throw ParseError("\"matrix\" must have exactly 4 rows");

  std::vector<Complex> entries;
  entries.reserve(16);
  for (std::size_t r = 0; r < 4; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != 4) {
      throw ParseError("row " + std::to_string(r) + " must have exactly 4 entries");
    }
    for (std::size_t c = 0; c < 4; ++c) {
      const json& z = row[c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw ParseError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") must be a [re, im] pair of numbers");
      }
      entries.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
  }

  SeedFile seed{ComplexMatrix(4, 4, std::move(entries)), std::nullopt};
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("\"label\" must be a string");
    seed.label = doc["label"].get<std::string>();
  }
  return seed;
}

SeedFile read_seed_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read seed file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_seed_json(buf.str());
}

std::string seed_to_json(const ComplexMatrix& matrix, const std::optional<std::string>& label) {
  json rows = json::array();
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < matrix.cols(); ++c)
      row.push_back({matrix(r, c).real(), matrix(r, c).imag()});
    rows.push_back(row);
  }
  json doc{{"matrix", rows}};
  if (label) doc["label"] = *label;
  return doc.dump(2);
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15f", x == 0.0 ? 0.0 : x);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos) return "0.000000000000000";
  return s;
}

void write_curve_csv(std::ostream& os, std::span<const std::string> extra_columns,
                     std::span<const CurveRow> rows) {
  os << kCurveCsvHeader;
  for (const auto& c : extra_columns) os << ',' << c;
  os << '\n';
  for (const auto& row : rows) {
    os << format_number(row.point.information) << ',' << format_number(row.point.disturbance)
       << ',' << to_string(row.point.mode) << ',' << to_string(row.point.provenance);
    for (const auto& e : row.extra) os << ',' << e;
    os << '\n';
  }
}

}  // namespace idt
