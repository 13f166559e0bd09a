#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "densitylab/cantor/cylinder.hpp"
#include "densitylab/core/rational.hpp"
#include "densitylab/realline/interval.hpp"
#include "densitylab/reductions/matrix.hpp"
#include "json.hpp"

namespace dlab::cli {

using Json = nlohmann::ordered_json;

// Flags shared by every leaf command.
struct Common {
  std::size_t depth = 0;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
};

// Depth ceiling: DENSITY_LAB_MAX_DEPTH or 24.
std::size_t max_depth();
void check_depth(std::size_t depth, const std::string& flag = "--depth");

Rational parse_rational(const std::string& flag, const std::string& text);

Json read_json_file(const std::string& path);
CylinderSet cylinder_from_json(const Json& j);
Json cylinder_to_json(const CylinderSet& c);
IntervalSet interval_set_from_json(const Json& j);
Json interval_set_to_json(const IntervalSet& a);
// "allzero:N", "rowones:J:N" or a JSON file with "matrix" (rows as bit
// strings or arrays) and optional "periodic" {"row": pattern}.
MatrixCode matrix_from_arg(const std::string& arg);
Json bits_to_json(const BitMatrix& m);

// Rows of a CSV table; rational cells are written as p/q, and every column
// listed in `approx` is followed by a 20-digit "<name>_approx" column.
class Csv {
 public:
  Csv(std::vector<std::string> columns, std::vector<std::string> approx = {});
  void row(const std::vector<std::string>& cells);
  std::string str() const;

 private:
  std::vector<std::string> columns_;
  std::vector<bool> approx_;
  std::string body_;
};

// Writes text to --out or stdout.
void emit(const Common& c, const std::string& text);
void emit_json(const Common& c, const Json& j);
// Throws unless --format is json or csv, or one of `allowed`.
void check_format(const Common& c, const std::vector<std::string>& allowed = {"json", "csv"});

}  // namespace dlab::cli
