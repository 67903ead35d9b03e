#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgr/diagram.hpp"
#include "hgr/exact_json.hpp"

namespace hgr {

// Combinatorial JSON document: the geometry-free input format and the
// canonical serialization of derive_combinatorics output.
//
// {
//   "genus": 2,
//   "crossings": [{"id": "c", "alpha": 1, "beta": 1, "sign": 1}, ...],
//   "alpha_orders": [["c","d"], ...],
//   "beta_orders": [["c","d","f"], ...],
//   "arc_half_turns": [[1,0,-1],[0]],      // optional, parallel to beta_orders
//   "matching": ["c","e"]                  // optional
// }

struct ParsedDiagram {
    CombinatorialDiagram diagram;
    std::optional<Matching> matching;
};

inline bool looks_like_combinatorial(const JValue& doc) {
    return doc.is_object() && doc.get("alpha_orders") != nullptr;
}

inline ParsedDiagram parse_diagram_json(const JValue& doc) {
    if (!doc.is_object()) throw ParseError("diagram: top level must be an object");
    CombinatorialDiagram d;
    long long genus = expect_int(expect_field(doc, "genus", "diagram"), "diagram.genus");
    if (genus < 0) throw ParseError("diagram.genus: must be >= 0");
    d.genus = static_cast<int>(genus);

    const auto& cross = expect_array(expect_field(doc, "crossings", "diagram"), "crossings");
    for (std::size_t n = 0; n < cross.size(); ++n) {
        std::string at = "crossings[" + std::to_string(n) + "]";
        Crossing c;
        c.id = expect_string(expect_field(cross[n], "id", at), at + ".id");
        if (d.find(c.id) >= 0) throw DuplicateId(at + ": crossing id \"" + c.id + "\" repeated");
        c.alpha = static_cast<int>(expect_int(expect_field(cross[n], "alpha", at), at + ".alpha"));
        c.beta = static_cast<int>(expect_int(expect_field(cross[n], "beta", at), at + ".beta"));
        c.sign = static_cast<int>(expect_int(expect_field(cross[n], "sign", at), at + ".sign"));
        d.crossings.push_back(std::move(c));
    }

    auto parse_orders = [&](const char* key) {
        std::vector<std::vector<int>> orders;
        const auto& arr = expect_array(expect_field(doc, key, "diagram"), key);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            std::vector<int> ord;
            std::string at = std::string(key) + "[" + std::to_string(i) + "]";
            for (const JValue& v : expect_array(arr[i], at)) {
                const std::string& id = expect_string(v, at);
                int k = d.find(id);
                if (k < 0) throw UnknownReference(at + ": unknown crossing id \"" + id + "\"");
                ord.push_back(k);
            }
            orders.push_back(std::move(ord));
        }
        return orders;
    };
    d.alpha_orders = parse_orders("alpha_orders");
    d.beta_orders = parse_orders("beta_orders");

    if (const JValue* ht = doc.get("arc_half_turns")) {
        std::vector<std::vector<HalfInt>> rows;
        const auto& arr = expect_array(*ht, "arc_half_turns");
        for (std::size_t j = 0; j < arr.size(); ++j) {
            std::string at = "arc_half_turns[" + std::to_string(j) + "]";
            std::vector<HalfInt> row;
            for (const JValue& v : expect_array(arr[j], at))
                row.push_back(HalfInt(expect_int(v, at)));
            rows.push_back(std::move(row));
        }
        d.arc_half_turns = std::move(rows);
    }

    ParsedDiagram out;
    if (const JValue* m = doc.get("matching")) {
        std::vector<int> ids;
        for (const JValue& v : expect_array(*m, "matching")) {
            const std::string& id = expect_string(v, "matching");
            int k = d.find(id);
            if (k < 0) throw UnknownReference("matching: unknown crossing id \"" + id + "\"");
            ids.push_back(k);
        }
        out.matching = make_matching(d, std::move(ids));
    }
    out.diagram = std::move(d);
    return out;
}

inline ParsedDiagram parse_diagram_json(std::string_view text) {
    return parse_diagram_json(parse_exact_json(text));
}

// Canonical serialization; stable field order and formatting, suitable for
// golden files and hashing.
inline std::string serialize_diagram(const CombinatorialDiagram& d,
                                     const std::optional<Matching>& m = std::nullopt) {
    std::string s = "{\n  \"genus\": " + std::to_string(d.genus) + ",\n  \"crossings\": [";
    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
        const Crossing& c = d.crossings[k];
        s += k ? ",\n    " : "\n    ";
        s += "{\"id\": \"" + c.id + "\", \"alpha\": " + std::to_string(c.alpha) +
             ", \"beta\": " + std::to_string(c.beta) + ", \"sign\": " + std::to_string(c.sign) +
             "}";
    }
    s += d.crossings.empty() ? "],\n" : "\n  ],\n";
    auto orders = [&](const char* key, const std::vector<std::vector<int>>& os) {
        s += std::string("  \"") + key + "\": [";
        for (std::size_t i = 0; i < os.size(); ++i) {
            s += i ? ", [" : "[";
            for (std::size_t p = 0; p < os[i].size(); ++p) {
                if (p) s += ", ";
                s += "\"" + d.crossings[os[i][p]].id + "\"";
            }
            s += "]";
        }
        s += "]";
    };
    orders("alpha_orders", d.alpha_orders);
    s += ",\n";
    orders("beta_orders", d.beta_orders);
    if (d.arc_half_turns) {
        s += ",\n  \"arc_half_turns\": [";
        const auto& ht = *d.arc_half_turns;
        for (std::size_t j = 0; j < ht.size(); ++j) {
            s += j ? ", [" : "[";
            for (std::size_t p = 0; p < ht[j].size(); ++p) {
                if (p) s += ", ";
                s += std::to_string(ht[j][p].half_turns);
            }
            s += "]";
        }
        s += "]";
    }
    if (m) {
        s += ",\n  \"matching\": [";
        for (std::size_t p = 0; p < m->crossings.size(); ++p) {
            if (p) s += ", ";
            s += "\"" + d.crossings[m->crossings[p]].id + "\"";
        }
        s += "]";
    }
    s += "\n}\n";
    return s;
}

}  // namespace hgr
