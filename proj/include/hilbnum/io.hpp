#ifndef HILBNUM_IO_HPP
#define HILBNUM_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "hilbnum/engine.hpp"
#include "hilbnum/series.hpp"

namespace hilbnum {

// {"cap": D, "terms": [{"monomial": "x1^2*x3", "coeff": -1}, ...]}, terms in
// canonical monomial order.
nlohmann::ordered_json to_json(const GradedSeries& f);
// {"r": r, "cap": D, "terms": [{"deg": [...], "coeff": c}, ...]}
nlohmann::ordered_json to_json(const CollapsedSeries& f);

// {"mismatch": {"left", "right", "monomial", "left_coeff", "right_coeff"}}
nlohmann::ordered_json to_json(const Mismatch& m);

GradedSeries graded_series_from_json(const nlohmann::json& j);
CollapsedSeries collapsed_series_from_json(const nlohmann::json& j);

// Either JSON shape, told apart by the "r" key. Throws ParseError.
std::variant<GradedSeries, CollapsedSeries> parse_series_json(std::string_view text);
std::variant<GradedSeries, CollapsedSeries> read_series_file(const std::string& path);

}  // namespace hilbnum

#endif
