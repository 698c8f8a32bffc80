#ifndef EXTCRYSTAL_EXPLORE_HPP
#define EXTCRYSTAL_EXPLORE_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "extcrystal/ext_crystal.hpp"

namespace extcrystal {

/// Closed slot range [lo, hi].
struct SlotWindow {
  SlotIndex lo = 0;
  SlotIndex hi = 0;

  bool empty() const { return lo > hi; }
  bool contains(SlotIndex k) const { return lo <= k && k <= hi; }
};

struct GraphEdge {
  std::size_t src;
  std::size_t dst;
  CrystalIndex color;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Colored graph with src --(i,k)--> dst iff dst = F_{i,k}(src).
template <class E>
struct CrystalGraph {
  std::vector<ExtElement<E>> nodes;
  std::vector<GraphEdge> edges;
};

/// Breadth-first closure of `seed` under F_{i,k} and E_{i,k} for k in the
/// window. Nodes are restricted to elements supported inside the window with
/// total height at most max_height; an arrow is kept when both ends qualify.
/// Node ids follow discovery order (slots ascending, then i ascending); edges
/// are sorted by (src, k, i).
template <BInfinityModel C>
CrystalGraph<typename C::Element> explore(const ExtCrystal<C>& crystal,
                                          const ExtElement<typename C::Element>& seed,
                                          SlotWindow window, int max_height) {
  using Ext = ExtElement<typename C::Element>;
  if (window.empty()) throw std::domain_error("explore: empty slot window");
  if (max_height < 0) throw std::domain_error("explore: negative height bound");

  auto admissible = [&](const Ext& c) {
    if (crystal.height(c) > max_height) return false;
    for (const auto& [k, b] : c.slots()) {
      if (!window.contains(k)) return false;
    }
    return true;
  };
  if (!admissible(seed)) {
    throw std::domain_error("explore: seed lies outside the window or height bound");
  }

  CrystalGraph<typename C::Element> graph;
  std::map<Ext, std::size_t> ids;
  std::deque<std::size_t> frontier;
  auto intern = [&](const Ext& c) {
    auto [it, inserted] = ids.try_emplace(c, graph.nodes.size());
    if (inserted) {
      graph.nodes.push_back(c);
      frontier.push_back(it->second);
    }
    return it->second;
  };

  std::set<std::tuple<std::size_t, SlotIndex, int, std::size_t>> seen_edges;
  auto link = [&](std::size_t src, std::size_t dst, int i, SlotIndex k) {
    if (seen_edges.emplace(src, k, i, dst).second) {
      graph.edges.push_back(GraphEdge{src, dst, CrystalIndex{i, k}});
    }
  };

  intern(seed);
  while (!frontier.empty()) {
    const std::size_t id = frontier.front();
    frontier.pop_front();
    const Ext node = graph.nodes[id];
    for (SlotIndex k = window.lo; k <= window.hi; ++k) {
      for (int i = 1; i <= crystal.rank(); ++i) {
        if (Ext up = crystal.F(node, i, k); admissible(up)) link(id, intern(up), i, k);
        if (Ext down = crystal.E(node, i, k); admissible(down)) link(intern(down), id, i, k);
      }
    }
  }

  std::sort(graph.edges.begin(), graph.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
    return std::tie(x.src, x.color.k, x.color.i, x.dst) <
           std::tie(y.src, y.color.k, y.color.i, y.dst);
  });
  return graph;
}

}  // namespace extcrystal

#endif  // EXTCRYSTAL_EXPLORE_HPP
