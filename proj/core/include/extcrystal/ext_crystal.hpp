#ifndef EXTCRYSTAL_EXT_CRYSTAL_HPP
#define EXTCRYSTAL_EXT_CRYSTAL_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "extcrystal/b_infinity.hpp"
#include "extcrystal/root_data.hpp"

namespace extcrystal {

using SlotIndex = std::int64_t;

/// Color (i, k) of an extended crystal arrow.
struct CrystalIndex {
  int i;
  SlotIndex k;

  friend bool operator==(const CrystalIndex&, const CrystalIndex&) = default;
  friend auto operator<=>(const CrystalIndex&, const CrystalIndex&) = default;
};

/// A finitely supported Z-indexed family (b_k) of B(infinity) elements.
/// Slots holding the highest vector are never stored.
template <class E>
class ExtElement {
 public:
  using Element = E;
  using SlotMap = std::map<SlotIndex, E>;

  ExtElement() = default;

  /// iota_k(b): b in slot k, highest vector elsewhere.
  static ExtElement single(SlotIndex k, E b) {
    ExtElement c;
    c.set(k, std::move(b));
    return c;
  }

  E slot(SlotIndex k) const {
    auto it = slots_.find(k);
    return it == slots_.end() ? E{} : it->second;
  }

  void set(SlotIndex k, E b) {
    if (b == E{}) {
      slots_.erase(k);
    } else {
      slots_.insert_or_assign(k, std::move(b));
    }
  }

  const SlotMap& slots() const { return slots_; }
  bool is_highest() const { return slots_.empty(); }
  SlotIndex min_slot() const { return require_support().begin()->first; }
  SlotIndex max_slot() const { return require_support().rbegin()->first; }

  friend bool operator==(const ExtElement&, const ExtElement&) = default;
  friend bool operator<(const ExtElement& x, const ExtElement& y) { return x.slots_ < y.slots_; }

 private:
  const SlotMap& require_support() const {
    if (slots_.empty()) throw std::logic_error("highest vector has empty support");
    return slots_;
  }

  SlotMap slots_;
};

/// D^t: slot k of the result is slot k - t of c.
template <class E>
ExtElement<E> shift(const ExtElement<E>& c, SlotIndex t) {
  ExtElement<E> out;
  for (const auto& [k, b] : c.slots()) out.set(k + t, b);
  return out;
}

/// The extended crystal over a B(infinity) model.
template <BInfinityModel C>
class ExtCrystal {
 public:
  using Element = typename C::Element;
  using Ext = ExtElement<Element>;

  explicit ExtCrystal(C base) : base_(std::move(base)) {}

  const C& base() const { return base_; }
  int rank() const { return base_.rank(); }

  int eps(const Ext& c, int i, SlotIndex k) const { return base_.eps(c.slot(k), i); }
  int eps_star(const Ext& c, int i, SlotIndex k) const { return base_.eps_star(c.slot(k), i); }

  /// eps_i(b_k) - eps*_i(b_{k+1}); selects the slot F and E act on.
  int eps_hat(const Ext& c, int i, SlotIndex k) const {
    return eps(c, i, k) - eps_star(c, i, k + 1);
  }

  /// eps*_i(b_k) - eps_i(b_{k-1}); selects the slot F* and E* act on.
  int eps_hat_star(const Ext& c, int i, SlotIndex k) const {
    return eps_star(c, i, k) - eps(c, i, k - 1);
  }

  Ext F(const Ext& c, int i, SlotIndex k) const {
    Ext out = c;
    if (eps_hat(c, i, k) >= 0) {
      out.set(k, base_.f(c.slot(k), i));
    } else {
      out.set(k + 1, lowered(base_.e_star(c.slot(k + 1), i)));
    }
    return out;
  }

  Ext E(const Ext& c, int i, SlotIndex k) const {
    Ext out = c;
    if (eps_hat(c, i, k) > 0) {
      out.set(k, lowered(base_.e(c.slot(k), i)));
    } else {
      out.set(k + 1, base_.f_star(c.slot(k + 1), i));
    }
    return out;
  }

  Ext F_star(const Ext& c, int i, SlotIndex k) const {
    Ext out = c;
    if (eps_hat_star(c, i, k) >= 0) {
      out.set(k, base_.f_star(c.slot(k), i));
    } else {
      out.set(k - 1, lowered(base_.e(c.slot(k - 1), i)));
    }
    return out;
  }

  Ext E_star(const Ext& c, int i, SlotIndex k) const {
    Ext out = c;
    if (eps_hat_star(c, i, k) > 0) {
      out.set(k, lowered(base_.e_star(c.slot(k), i)));
    } else {
      out.set(k - 1, base_.f(c.slot(k - 1), i));
    }
    return out;
  }

  /// (-1)^k wt(b_k).
  RootLatticeElem wt_k(const Ext& c, SlotIndex k) const {
    auto w = base_.wt(c.slot(k));
    return (k % 2 == 0) ? w : -w;
  }

  RootLatticeElem hwt(const Ext& c) const {
    RootLatticeElem total(rank());
    for (const auto& [k, b] : c.slots()) total += wt_k(c, k);
    return total;
  }

  /// Slot k of the result is *(b_{-k}).
  Ext star_flip(const Ext& c) const {
    Ext out;
    for (const auto& [k, b] : c.slots()) out.set(-k, base_.star(b));
    return out;
  }

  int height(const Ext& c) const {
    int h = 0;
    for (const auto& [k, b] : c.slots()) h += base_.height(b);
    return h;
  }

  /// Colors (i, k) such that applying E along them sends c to the highest
  /// vector. Each step lowers the topmost non-trivial slot with the smallest
  /// admissible i, so the length equals height(c).
  std::vector<CrystalIndex> path_to_highest(Ext c) const {
    std::vector<CrystalIndex> path;
    while (!c.is_highest()) {
      const SlotIndex top = c.max_slot();
      const Element& b = c.slots().rbegin()->second;
      int chosen = 0;
      for (int i = 1; i <= rank(); ++i) {
        if (base_.eps(b, i) > 0) {
          chosen = i;
          break;
        }
      }
      if (chosen == 0) throw std::logic_error("non-highest element with all eps_i = 0");
      path.push_back({chosen, top});
      c = E(c, chosen, top);
    }
    return path;
  }

 private:
  static Element lowered(std::optional<Element> b) {
    if (!b) throw std::logic_error("extended crystal operator hit a zero branch");
    return std::move(*b);
  }

  C base_;
};

}  // namespace extcrystal

#endif  // EXTCRYSTAL_EXT_CRYSTAL_HPP
