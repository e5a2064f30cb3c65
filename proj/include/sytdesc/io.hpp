#pragma once

#include "sytdesc/partition.hpp"
#include "sytdesc/rational.hpp"
#include "sytdesc/tableau.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace sytdesc {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& shape);
Partition partition_from_json(const Json& j);

// Array of rows.
Json to_json(const Tableau& t);
// The shape is read off the row lengths. Throws ParseError on malformed
// input, plus the usual validation errors.
Tableau tableau_from_json(const Json& j);

// One row per line, entries separated by single spaces.
std::string to_text(const Tableau& t);
Tableau tableau_from_text(std::string_view text);

// Writes key (canonical "p/q") and key + "_approx" (double).
void put_rational(Json& j, const std::string& key, const Rational& value);
// Empty optional writes `missing` (a string such as "inf") or null.
void put_rational(Json& j, const std::string& key, const std::optional<Rational>& value,
                  std::optional<std::string> missing);

} // namespace sytdesc
