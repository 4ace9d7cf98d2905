#include "hilbnum/io.hpp"

#include <fstream>
#include <sstream>

#include "hilbnum/errors.hpp"

namespace hilbnum {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const GradedSeries& f) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"monomial", m.to_string()}, {"coeff", c}});
  return {{"cap", f.cap()}, {"terms", std::move(terms)}};
}

ordered_json to_json(const CollapsedSeries& f) {
  ordered_json terms = ordered_json::array();
  for (const auto& [d, c] : f.terms()) terms.push_back({{"deg", d.vec}, {"coeff", c}});
  return {{"r", f.classes()}, {"cap", f.cap()}, {"terms", std::move(terms)}};
}

ordered_json to_json(const Mismatch& m) {
  return {{"mismatch",
           {{"left", to_string(m.left)},
            {"right", to_string(m.right)},
            {"monomial", m.at.to_string()},
            {"left_coeff", m.left_value},
            {"right_coeff", m.right_value}}}};
}

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw ParseError("series JSON: " + what, 1, 1); }

Degree read_cap(const json& j) {
  if (!j.is_object() || !j.contains("cap") || !j["cap"].is_number_unsigned()) schema_error("missing non-negative \"cap\"");
  if (!j.contains("terms") || !j["terms"].is_array()) schema_error("missing \"terms\" array");
  return j["cap"].get<Degree>();
}

Coefficient read_coeff(const json& term) {
  if (!term.contains("coeff") || !term["coeff"].is_number_integer()) schema_error("term without integer \"coeff\"");
  return term["coeff"].get<Coefficient>();
}

}  // namespace

GradedSeries graded_series_from_json(const json& j) {
  GradedSeries f(read_cap(j));
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("monomial") || !term["monomial"].is_string())
      schema_error("term without \"monomial\" string");
    const Monomial m = parse_monomial(term["monomial"].get<std::string>());
    if (m.total_degree() > f.cap()) schema_error("term " + m.to_string() + " above cap");
    f.accumulate(m, read_coeff(term));
  }
  return f;
}

CollapsedSeries collapsed_series_from_json(const json& j) {
  const Degree cap = read_cap(j);
  if (!j["r"].is_number_unsigned() || j["r"].get<std::uint32_t>() == 0) schema_error("\"r\" must be a positive integer");
  CollapsedSeries f(j["r"].get<std::uint32_t>(), cap);
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("deg") || !term["deg"].is_array()) schema_error("term without \"deg\" array");
    MultiDegree d;
    for (const auto& v : term["deg"]) {
      if (!v.is_number_unsigned()) schema_error("degrees must be non-negative integers");
      d.vec.push_back(v.get<Degree>());
    }
    if (d.vec.size() != f.classes()) schema_error("\"deg\" length differs from r");
    if (d.total() > cap) schema_error("term above cap");
    f.accumulate(d, read_coeff(term));
  }
  return f;
}

std::variant<GradedSeries, CollapsedSeries> parse_series_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
  if (j.is_object() && j.contains("r")) return collapsed_series_from_json(j);
  return graded_series_from_json(j);
}

std::variant<GradedSeries, CollapsedSeries> read_series_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open series file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_series_json(buf.str());
}

}  // namespace hilbnum
