#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "twistgate/bundled_curves.inc"
#include "twistgate/curve.hpp"
#include "twistgate/errors.hpp"

namespace twistgate {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

Integer parse_integer(const std::string& text, std::string_view source, int line_no) {
  Integer value;
  const bool plain_decimal = !text.empty() && text.find_first_not_of("-0123456789") == std::string::npos &&
                             text.find('-', 1) == std::string::npos && text != "-";
  if (!plain_decimal || value.set_str(text, 10) != 0)
    throw CurveTableError(std::string(source) + ":" + std::to_string(line_no) + ": bad integer '" + text + "'");
  return value;
}

void check_known_label(const CurveLabel& entry, std::string_view source) {
  std::optional<Rational> expected;
  if (entry.label == "15a1") expected = expected_j_invariant_15a1();
  if (entry.label == "21a1") expected = expected_j_invariant_21a1();
  if (expected && j_invariant(entry.model) != *expected)
    throw CurveTableError(std::string(source) + ": curve " + entry.label + " has j = " +
                          j_invariant(entry.model).get_str() + ", expected " + expected->get_str());
}

}  // namespace

CurveTable CurveTable::parse(std::istream& in, std::string_view source) {
  CurveTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 6)
      throw CurveTableError(std::string(source) + ":" + std::to_string(line_no) + ": expected 6 tab-separated fields, got " +
                            std::to_string(fields.size()));
    if (fields[0].empty()) throw CurveTableError(std::string(source) + ":" + std::to_string(line_no) + ": empty label");
    if (table.find(fields[0]))
      throw CurveTableError(std::string(source) + ":" + std::to_string(line_no) + ": duplicate label " + fields[0]);
    try {
      WeierstrassModel model{parse_integer(fields[1], source, line_no), parse_integer(fields[2], source, line_no),
                             parse_integer(fields[3], source, line_no), parse_integer(fields[4], source, line_no),
                             parse_integer(fields[5], source, line_no)};
      table.entries_.push_back({fields[0], std::move(model)});
    } catch (const SingularCurveError& e) {
      throw CurveTableError(std::string(source) + ":" + std::to_string(line_no) + ": " + e.what());
    }
    check_known_label(table.entries_.back(), source);
  }
  return table;
}

CurveTable CurveTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CurveTableError("cannot open curve table " + path);
  return parse(in, path);
}

const CurveTable& CurveTable::bundled() {
  static const CurveTable table = [] {
    std::istringstream in(detail::kBundledCurveTable);
    return parse(in, "<bundled curves.tsv>");
  }();
  return table;
}

CurveTable CurveTable::from_environment() {
  if (const char* path = std::getenv("TWISTGATE_CURVES"); path != nullptr && *path != '\0') return load_file(path);
  return bundled();
}

const WeierstrassModel* CurveTable::find(std::string_view label) const {
  for (const auto& entry : entries_)
    if (entry.label == label) return &entry.model;
  return nullptr;
}

const WeierstrassModel& CurveTable::at(std::string_view label) const {
  if (const auto* model = find(label)) return *model;
  throw CurveTableError("unknown curve label '" + std::string(label) + "'");
}

}  // namespace twistgate
