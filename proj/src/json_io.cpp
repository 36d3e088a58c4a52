#include "guts/json_io.hpp"

#include <fstream>
#include <sstream>

#include "guts/errors.hpp"

namespace guts {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

long long require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError(where + " must be an integer");
    return j.get<long long>();
}

}  // namespace

FactBase fact_base_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("fact base must be a JSON object");
    FactBase facts;
    for (const auto& [key, value] : j.items()) {
        if (key == "tunnel_number") {
            facts.tunnel_number = require_int(value, "tunnel_number");
        } else if (key == "bridge_number") {
            facts.bridge_number = require_int(value, "bridge_number");
        } else if (key == "filling_genus") {
            facts.filling_genus = require_int(value, "filling_genus");
        } else if (key == "product_at_n1") {
            if (!value.is_boolean()) throw SchemaError("product_at_n1 must be a boolean");
            facts.is_product_at_n1 = value.get<bool>();
        } else if (key == "positions") {
            if (!value.is_array()) throw SchemaError("positions must be an array of [g, b] pairs");
            for (const auto& entry : value) {
                if (!entry.is_array() || entry.size() != 2)
                    throw SchemaError("each position must be a [g, b] pair");
                facts.positions.insert(GBPosition{require_int(entry[0], "position g"),
                                                  require_int(entry[1], "position b")});
            }
        } else {
            throw SchemaError("unknown fact base key: " + key);
        }
    }
    return facts;
}

FactBase load_fact_base(const std::string& path) {
    return fact_base_from_json(load_json(path));
}

HfkTable hfk_table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries"))
        throw SchemaError("HFK table must be an object with an \"entries\" array");
    for (const auto& [key, value] : j.items())
        if (key != "entries") throw SchemaError("unknown HFK table key: " + key);
    const json& entries = j["entries"];
    if (!entries.is_array()) throw SchemaError("\"entries\" must be an array");

    HfkTable table;
    for (const auto& entry : entries) {
        if (!entry.is_array() || entry.size() != 3)
            throw SchemaError("each HFK entry must be an [alexander, maslov, rank] triple");
        const long long alexander = require_int(entry[0], "alexander grading");
        const long long maslov = require_int(entry[1], "maslov grading");
        const long long rank = require_int(entry[2], "rank");
        if (rank < 1) throw SchemaError("HFK ranks must be >= 1");
        if (!table.ranks.emplace(std::make_pair(alexander, maslov), rank).second) {
            std::ostringstream os;
            os << "duplicate HFK bigrading (" << alexander << ", " << maslov << ")";
            throw SchemaError(os.str());
        }
    }
    if (table.ranks.empty()) throw SchemaError("HFK table must have at least one entry");
    return table;
}

HfkTable load_hfk_table(const std::string& path) {
    return hfk_table_from_json(load_json(path));
}

json interval_to_json(const HandleInterval& iv) {
    json bounds = json::array();
    bounds.push_back(iv.lo);
    if (iv.hi)
        bounds.push_back(*iv.hi);
    else
        bounds.push_back(nullptr);
    return bounds;
}

json propagation_to_json(const PropagationResult& r, long long n_max) {
    json out;
    out["n_max"] = n_max;
    json table = json::array();
    for (size_t i = 0; i < r.h.size(); ++i) {
        json row;
        row["n"] = static_cast<long long>(i + 1);
        row["interval"] = interval_to_json(r.h[i]);
        row["rules"] = r.h[i].provenance;
        table.push_back(std::move(row));
    }
    out["h_n"] = std::move(table);
    json plus;
    plus["interval"] = interval_to_json(r.h_plus);
    plus["rules"] = r.h_plus.provenance;
    out["h_plus"] = std::move(plus);
    return out;
}

std::string interval_to_text(const HandleInterval& iv) {
    std::ostringstream os;
    os << "[" << iv.lo << ", ";
    if (iv.hi)
        os << *iv.hi << "]";
    else
        os << "inf)";
    return os.str();
}

}  // namespace guts
