#pragma once

#include <nlohmann/json.hpp>

#include "hypertrans/enumerate.hpp"
#include "hypertrans/extremal.hpp"
#include "hypertrans/hypergraph.hpp"

namespace hypertrans {

// JSON views of the library's results; docs/report_schema.json describes them.

nlohmann::json to_json(const Hypergraph& g);
nlohmann::json to_json(const EnumerationResult& result);
nlohmann::json to_json(const ExtremalReport& report);
nlohmann::json to_json(const GraphRemarkReport& report);
nlohmann::json to_json(const LemmaReport& report);

}  // namespace hypertrans
