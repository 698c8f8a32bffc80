#ifndef EXTCRYSTAL_B_INFINITY_HPP
#define EXTCRYSTAL_B_INFINITY_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "extcrystal/root_data.hpp"

namespace extcrystal {

/// A realization of B(infinity) with its starred structure.
///
/// A value-initialized Element must be the highest vector, and elements must
/// be equality comparable. e and e_star return std::nullopt where the crystal
/// operator is zero.
template <class C>
concept BInfinityModel = requires(const C& crystal, const typename C::Element& b, int i) {
  typename C::Element;
  requires std::regular<typename C::Element>;
  { crystal.rank() } -> std::convertible_to<int>;
  { crystal.f(b, i) } -> std::same_as<typename C::Element>;
  { crystal.e(b, i) } -> std::same_as<std::optional<typename C::Element>>;
  { crystal.f_star(b, i) } -> std::same_as<typename C::Element>;
  { crystal.e_star(b, i) } -> std::same_as<std::optional<typename C::Element>>;
  { crystal.eps(b, i) } -> std::convertible_to<int>;
  { crystal.eps_star(b, i) } -> std::convertible_to<int>;
  { crystal.wt(b) } -> std::same_as<RootLatticeElem>;
  { crystal.height(b) } -> std::convertible_to<int>;
  { crystal.star(b) } -> std::same_as<typename C::Element>;
};

/// B(infinity) for sl_2 identified with the non-negative integers: f adds
/// one, e subtracts one, and the star involution is the identity.
class NaturalCrystal {
 public:
  using Element = std::uint32_t;

  int rank() const { return 1; }

  Element f(Element b, int i) const { return check(i), b + 1; }
  std::optional<Element> e(Element b, int i) const {
    check(i);
    if (b == 0) return std::nullopt;
    return b - 1;
  }
  Element f_star(Element b, int i) const { return f(b, i); }
  std::optional<Element> e_star(Element b, int i) const { return e(b, i); }
  int eps(Element b, int i) const { return check(i), static_cast<int>(b); }
  int eps_star(Element b, int i) const { return eps(b, i); }
  RootLatticeElem wt(Element b) const {
    return -static_cast<std::int64_t>(b) * RootLatticeElem::simple_root(1, 1);
  }
  int height(Element b) const { return static_cast<int>(b); }
  Element star(Element b) const { return b; }

 private:
  static void check(int i) {
    if (i != 1) throw std::domain_error("sl2 crystal index must be 1");
  }
};

}  // namespace extcrystal

#endif  // EXTCRYSTAL_B_INFINITY_HPP
