#pragma once

// JSON forms of the library's result types (nlohmann::json).

#include <nlohmann/json.hpp>

#include "ribbon/conditions.hpp"
#include "ribbon/tableau.hpp"
#include "ribbon/types.hpp"

namespace ribbon {

inline nlohmann::json to_json(const Partition& p) { return p.parts(); }

/// Sorted list of partitions, largest first in lexicographic order.
inline nlohmann::json to_json(const SupportSet& s) {
    auto out = nlohmann::json::array();
    for (const auto& p : s) out.push_back(p.parts());
    return out;
}

inline nlohmann::json to_json(const ConditionReport& r) {
    nlohmann::json out;
    out["ribbon"] = r.ribbon_sorted.rows();
    auto terms = nlohmann::json::array();
    for (const auto& t : r.per_j) terms.push_back({{"j", t.j}, {"Nj", t.nj}, {"rhs", t.rhs}, {"holds", t.holds}});
    out["perJ"] = std::move(terms);
    out["overall"] = r.overall;
    return out;
}

inline nlohmann::json to_json(const WitnessCertificate& w) {
    return {{"baseRibbon", w.base_ribbon.rows()},
            {"j", w.j},
            {"swappedShape", w.swapped_shape.rows()},
            {"witnessTableau", to_text(w.witness_tableau)},
            {"witnessContent", w.witness_content.counts()},
            {"criticalValues", w.critical_values}};
}

}  // namespace ribbon
