#ifndef EXTCRYSTAL_EXPORT_HPP
#define EXTCRYSTAL_EXPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "extcrystal/affine_a.hpp"
#include "extcrystal/explore.hpp"
#include "extcrystal/multisegment.hpp"

namespace extcrystal {

/// {"terms": [{"i": .., "a": .., "c": ..}, ...]} in ascending (i, a) order.
nlohmann::json weight_to_json(const HLWeight& lambda);
/// Inverse of weight_to_json; throws std::domain_error on malformed input.
HLWeight weight_from_json(const nlohmann::json& j);

/// {"k": "multisegment text", ...} keyed by slot.
nlohmann::json slots_to_json(const ExtElement<Multisegment>& c);

/// Graphviz digraph; nodes are labeled with their ext-element text and edges
/// with "i,k".
std::string graph_to_dot(const CrystalGraph<Multisegment>& graph);
/// {"nodes": [{"id", "slots"}], "edges": [{"src", "dst", "i", "k"}]}.
nlohmann::json graph_to_json(const CrystalGraph<Multisegment>& graph);

}  // namespace extcrystal

#endif  // EXTCRYSTAL_EXPORT_HPP
