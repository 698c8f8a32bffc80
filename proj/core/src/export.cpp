#include "extcrystal/export.hpp"

#include <sstream>
#include <stdexcept>

#include "extcrystal/text_format.hpp"

namespace extcrystal {

nlohmann::json weight_to_json(const HLWeight& lambda) {
  auto terms = nlohmann::json::array();
  for (const auto& [p, c] : lambda.terms()) {
    terms.push_back({{"i", p.i}, {"a", p.a}, {"c", c}});
  }
  return {{"terms", terms}};
}

HLWeight weight_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::domain_error("weight JSON must be an object with a \"terms\" array");
  }
  HLWeight lambda;
  for (const auto& term : j["terms"]) {
    try {
      const int i = term.at("i").get<int>();
      const auto a = term.at("a").get<std::int64_t>();
      const auto c = term.at("c").get<std::int64_t>();
      if (c < 0) throw std::domain_error("negative coefficient");
      lambda.add(HLNode{i, a}, c);
    } catch (const nlohmann::json::exception& e) {
      throw std::domain_error(std::string("malformed weight term: ") + e.what());
    }
  }
  return lambda;
}

nlohmann::json slots_to_json(const ExtElement<Multisegment>& c) {
  auto slots = nlohmann::json::object();
  for (const auto& [k, m] : c.slots()) slots[std::to_string(k)] = format_multisegment(m);
  return slots;
}

std::string graph_to_dot(const CrystalGraph<Multisegment>& graph) {
  std::ostringstream out;
  out << "digraph extended_crystal {\n";
  for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
    out << "  n" << id << " [label=\"" << format_ext(graph.nodes[id]) << "\"];\n";
  }
  for (const auto& e : graph.edges) {
    out << "  n" << e.src << " -> n" << e.dst << " [label=\"(" << e.color.i << ","
        << e.color.k << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json graph_to_json(const CrystalGraph<Multisegment>& graph) {
  auto nodes = nlohmann::json::array();
  for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
    nodes.push_back({{"id", id}, {"slots", slots_to_json(graph.nodes[id])}});
  }
  auto edges = nlohmann::json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"i", e.color.i}, {"k", e.color.k}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace extcrystal
