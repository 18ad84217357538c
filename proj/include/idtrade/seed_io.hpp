#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idtrade/evaluator.hpp"
#include "idtrade/linalg.hpp"

namespace idt {

/// Malformed seed document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"matrix": 4x4 array of [re, im] pairs, "label": optional string}
struct SeedFile {
  ComplexMatrix matrix;
  std::optional<std::string> label;
};

SeedFile parse_seed_json(std::string_view text);
SeedFile read_seed_file(const std::filesystem::path& path);
std::string seed_to_json(const ComplexMatrix& matrix, const std::optional<std::string>& label = {});

inline constexpr std::string_view kCurveCsvHeader = "information,disturbance,mode,provenance";

/// One CSV row: the four core columns plus command-specific extras.
struct CurveRow {
  TradeoffPoint point;
  std::vector<std::string> extra;
};

/// Fixed-point decimal with 15 digits after the point; negative zero prints as zero.
std::string format_number(double x);

/// Header line is kCurveCsvHeader followed by `extra_columns`.
void write_curve_csv(std::ostream& os, std::span<const std::string> extra_columns,
                     std::span<const CurveRow> rows);

}  // namespace idt
