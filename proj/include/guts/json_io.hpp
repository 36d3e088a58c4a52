#pragma once

#include <string>

#include <json.hpp>

#include "guts/handles.hpp"
#include "guts/nearly_fibered.hpp"
#include "guts/sutured.hpp"

namespace guts {

// FactBase JSON schema: an object with optional keys
//   "tunnel_number" (int >= 0), "bridge_number" (int >= 1),
//   "positions" (array of [g, b] int pairs), "filling_genus" (int >= 0),
//   "product_at_n1" (bool).
// Unknown keys and wrong types are SchemaErrors.
FactBase fact_base_from_json(const nlohmann::json& j);
FactBase load_fact_base(const std::string& path);

// HfkTable JSON schema: {"entries": [[alexander, maslov, rank], ...]} with
// integer triples, rank >= 1, no duplicate (alexander, maslov) pairs.
HfkTable hfk_table_from_json(const nlohmann::json& j);
HfkTable load_hfk_table(const std::string& path);

// Interval rendering: [lo, hi] with null for an absent upper bound.
nlohmann::json interval_to_json(const HandleInterval& iv);
nlohmann::json propagation_to_json(const PropagationResult& r, long long n_max);

std::string interval_to_text(const HandleInterval& iv);

}  // namespace guts
