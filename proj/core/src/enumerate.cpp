#include "extcrystal/enumerate.hpp"

#include <functional>
#include <stdexcept>

namespace extcrystal {

std::vector<Segment> all_segments(int n) {
  checked_rank(n);
  std::vector<Segment> out;
  for (int b = 1; b <= n; ++b) {
    for (int a = b; a >= 1; --a) out.emplace_back(a, b);
  }
  return out;
}

namespace {

// Multisegments of rank n grouped by exact height 0..max_height.
std::vector<std::vector<Multisegment>> by_height(int n, int max_height) {
  const auto segments = all_segments(n);
  std::vector<std::vector<Multisegment>> out(static_cast<std::size_t>(max_height) + 1);
  Multisegment cur;
  std::function<void(std::size_t, int)> walk = [&](std::size_t idx, int used) {
    if (idx == segments.size()) {
      out[static_cast<std::size_t>(used)].push_back(cur);
      return;
    }
    const Segment s = segments[idx];
    int mult = 0;
    walk(idx + 1, used);
    while (used + (mult + 1) * s.length() <= max_height) {
      ++mult;
      cur.add(s);
      walk(idx + 1, used + mult * s.length());
    }
    for (int r = 0; r < mult; ++r) cur.remove(s);
  };
  walk(0, 0);
  return out;
}

}  // namespace

std::vector<Multisegment> multisegments_up_to(int n, int max_height) {
  if (max_height < 0) throw std::domain_error("negative height bound");
  std::vector<Multisegment> out;
  for (auto& level : by_height(n, max_height)) {
    for (auto& m : level) out.push_back(std::move(m));
  }
  return out;
}

std::vector<ExtElement<Multisegment>> ext_elements_up_to(int n, SlotWindow window,
                                                         int max_height) {
  if (window.empty()) throw std::domain_error("empty slot window");
  if (max_height < 0) throw std::domain_error("negative height bound");
  const auto levels = by_height(n, max_height);
  std::vector<ExtElement<Multisegment>> out;
  ExtElement<Multisegment> cur;
  std::function<void(SlotIndex, int)> walk = [&](SlotIndex k, int budget) {
    if (k > window.hi) {
      out.push_back(cur);
      return;
    }
    for (int h = 0; h <= budget; ++h) {
      for (const auto& m : levels[static_cast<std::size_t>(h)]) {
        cur.set(k, m);
        walk(k + 1, budget - h);
      }
    }
    cur.set(k, Multisegment{});
  };
  walk(window.lo, max_height);
  return out;
}

std::vector<HLWeight> weights_up_to(const std::vector<HLNode>& support, int max_total) {
  std::vector<HLWeight> out;
  HLWeight cur;
  std::function<void(std::size_t, int)> walk = [&](std::size_t idx, int budget) {
    if (idx == support.size()) {
      out.push_back(cur);
      return;
    }
    walk(idx + 1, budget);
    HLWeight saved = cur;
    for (int c = 1; c <= budget; ++c) {
      cur.add(support[idx]);
      walk(idx + 1, budget - c);
    }
    cur = std::move(saved);
  };
  walk(0, max_total);
  return out;
}

Multisegment random_multisegment(int n, int max_height, Rng& rng) {
  const auto segments = all_segments(n);
  int remaining = std::uniform_int_distribution<int>(0, max_height)(rng);
  Multisegment m;
  while (remaining > 0) {
    std::vector<Segment> fitting;
    for (const auto& s : segments) {
      if (s.length() <= remaining) fitting.push_back(s);
    }
    const auto& s =
        fitting[std::uniform_int_distribution<std::size_t>(0, fitting.size() - 1)(rng)];
    m.add(s);
    remaining -= s.length();
  }
  return m;
}

ExtElement<Multisegment> random_ext(int n, SlotWindow window, int max_height, Rng& rng) {
  if (window.empty()) throw std::domain_error("empty slot window");
  const auto segments = all_segments(n);
  int remaining = std::uniform_int_distribution<int>(0, max_height)(rng);
  std::uniform_int_distribution<SlotIndex> pick_slot(window.lo, window.hi);
  ExtElement<Multisegment> c;
  while (remaining > 0) {
    std::vector<Segment> fitting;
    for (const auto& s : segments) {
      if (s.length() <= remaining) fitting.push_back(s);
    }
    const auto& s =
        fitting[std::uniform_int_distribution<std::size_t>(0, fitting.size() - 1)(rng)];
    const SlotIndex k = pick_slot(rng);
    Multisegment m = c.slot(k);
    m.add(s);
    c.set(k, std::move(m));
    remaining -= s.length();
  }
  return c;
}

}  // namespace extcrystal
