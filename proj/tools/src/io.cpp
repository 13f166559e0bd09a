#include "io.hpp"

#include <cstdlib>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "densitylab/core/errors.hpp"

namespace dlab::cli {

std::size_t max_depth() {
  const char* env = std::getenv("DENSITY_LAB_MAX_DEPTH");
  if (!env || !*env) return 24;
  std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("DENSITY_LAB_MAX_DEPTH must be a natural number; got '" + s + "'");
  return std::stoul(s);
}

void check_depth(std::size_t depth, const std::string& flag) {
  std::size_t cap = max_depth();
  if (depth > cap)
    throw PreconditionError(flag + " " + std::to_string(depth) + " exceeds the ceiling " + std::to_string(cap) +
                            " (set DENSITY_LAB_MAX_DEPTH to raise it)");
}

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError&) {
    throw ParseError(flag + ": malformed rational '" + text + "'");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(what + " needs a \"" + key + "\" field");
  return j.at(key);
}

std::string string_of(const Json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

bool bool_of(const Json& j, const char* key, const std::string& what) {
  const Json& v = field(j, key, what);
  if (!v.is_boolean()) throw ParseError(what + "." + key + " must be a boolean");
  return v.get<bool>();
}

std::vector<std::uint8_t> bits_of(const Json& j, const std::string& what) {
  std::vector<std::uint8_t> out;
  if (j.is_string()) {
    for (char c : j.get<std::string>()) {
      if (c != '0' && c != '1') throw ParseError(what + " must hold only 0 and 1");
      out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  } else if (j.is_array()) {
    for (const auto& b : j) {
      if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1))
        throw ParseError(what + " must hold only 0 and 1");
      out.push_back(static_cast<std::uint8_t>(b.get<int>()));
    }
  } else {
    throw ParseError(what + " must be a bit string or an array of bits");
  }
  return out;
}

}  // namespace

CylinderSet cylinder_from_json(const Json& j) {
  std::string alphabet = j.is_object() && j.contains("alphabet") ? string_of(j.at("alphabet"), "alphabet") : "binary";
  if (alphabet != "binary") throw ParseError("only binary cylinder sets are supported; got '" + alphabet + "'");
  const Json& gens = field(j, "generators", "cylinder set");
  if (!gens.is_array()) throw ParseError("generators must be an array");
  std::vector<Word> words;
  for (const auto& g : gens) words.push_back(Word::parse(Alphabet::Binary, string_of(g, "generator")));
  return CylinderSet(std::move(words));
}

Json cylinder_to_json(const CylinderSet& c) {
  Json gens = Json::array();
  for (const Word& g : c.generators()) gens.push_back(g.str());
  return Json{{"alphabet", "binary"}, {"generators", gens}};
}

IntervalSet interval_set_from_json(const Json& j) {
  const Json& parts = field(j, "parts", "interval set");
  if (!parts.is_array()) throw ParseError("parts must be an array");
  std::vector<Interval> out;
  for (const auto& p : parts) {
    Interval i;
    i.lo = parse_rational("lo", string_of(field(p, "lo", "part"), "lo"));
    i.hi = parse_rational("hi", string_of(field(p, "hi", "part"), "hi"));
    i.lo_closed = bool_of(p, "lo_closed", "part");
    i.hi_closed = bool_of(p, "hi_closed", "part");
    out.push_back(std::move(i));
  }
  return IntervalSet(std::move(out));
}

Json interval_set_to_json(const IntervalSet& a) {
  Json parts = Json::array();
  for (const auto& p : a.parts())
    parts.push_back({{"lo", p.lo.str()}, {"hi", p.hi.str()}, {"lo_closed", p.lo_closed}, {"hi_closed", p.hi_closed}});
  return Json{{"parts", parts}};
}

MatrixCode matrix_from_arg(const std::string& arg) {
  if (arg.rfind("allzero:", 0) == 0 || arg.rfind("rowones:", 0) == 0) return MatrixCode::parse_code(arg);
  Json j = read_json_file(arg);
  BitMatrix block;
  for (const auto& row : field(j, "matrix", "matrix code")) block.push_back(bits_of(row, "matrix row"));
  std::map<std::size_t, std::vector<std::uint8_t>> periodic;
  if (j.contains("periodic")) {
    for (const auto& [key, pattern] : j.at("periodic").items()) {
      if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("periodic row index '" + key + "' is not a natural number");
      periodic.emplace(std::stoul(key), bits_of(pattern, "periodic pattern"));
    }
  }
  return MatrixCode(std::move(block), std::move(periodic));
}

Json bits_to_json(const BitMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    std::string s;
    for (auto b : r) s.push_back(static_cast<char>('0' + b));
    rows.push_back(s);
  }
  return rows;
}

Csv::Csv(std::vector<std::string> columns, std::vector<std::string> approx) : columns_(std::move(columns)) {
  std::string header;
  for (const auto& c : columns_) {
    bool a = std::find(approx.begin(), approx.end(), c) != approx.end();
    approx_.push_back(a);
    header += (header.empty() ? "" : ",") + c;
    if (a) header += "," + c + "_approx";
  }
  body_ = header + "\n";
}

namespace {

// RFC 4180 quoting for cells such as signed-digit words "-1,0".
std::string csv_cell(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

void Csv::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_.size()) throw std::logic_error("csv row width mismatch");
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    line += (i ? "," : "") + csv_cell(cells[i]);
    if (approx_[i]) line += "," + Rational::parse(cells[i]).decimal(20);
  }
  body_ += line + "\n";
}

std::string Csv::str() const { return body_; }

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw PreconditionError("cannot write '" + c.out + "'");
  f << text;
}

void emit_json(const Common& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

void check_format(const Common& c, const std::vector<std::string>& allowed) {
  if (std::find(allowed.begin(), allowed.end(), c.format) == allowed.end()) {
    std::string list;
    for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
    throw PreconditionError("--format " + c.format + " is not available here; use one of " + list);
  }
}

}  // namespace dlab::cli
