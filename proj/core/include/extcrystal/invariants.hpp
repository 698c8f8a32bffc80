#ifndef EXTCRYSTAL_INVARIANTS_HPP
#define EXTCRYSTAL_INVARIANTS_HPP

#include <algorithm>
#include <cstdint>

#include "extcrystal/ext_crystal.hpp"
#include "extcrystal/root_data.hpp"

namespace extcrystal {

/// Query for the invariants between D^k R_i and the simple module whose
/// crystal parameter is `c`.
template <class E>
struct InvariantQuery {
  int i;
  SlotIndex k;
  ExtElement<E> c;
};

/// The four string lengths around slot k:
///   x = eps*_i(b_{k+1}), r = eps_i(b_k), s = eps*_i(b_k), y = eps_i(b_{k-1}).
struct StringCounters {
  int x;
  int r;
  int s;
  int y;
};

template <BInfinityModel C>
StringCounters string_counters(const ExtCrystal<C>& crystal,
                               const InvariantQuery<typename C::Element>& q) {
  return StringCounters{crystal.eps_star(q.c, q.i, q.k + 1), crystal.eps(q.c, q.i, q.k),
                        crystal.eps_star(q.c, q.i, q.k), crystal.eps(q.c, q.i, q.k - 1)};
}

namespace detail {

inline std::int64_t parity_sign(SlotIndex k) { return k % 2 == 0 ? 1 : -1; }

// (-1)^k sum_t sign(t) * (alpha_i, wt_t(c)) over the support of c.
template <BInfinityModel C, class SignFn>
std::int64_t signed_weight_sum(const ExtCrystal<C>& crystal,
                               const InvariantQuery<typename C::Element>& q, SignFn sign) {
  std::int64_t total = 0;
  for (const auto& [t, b] : q.c.slots()) total += sign(t) * pair(q.i, crystal.wt_k(q.c, t));
  return parity_sign(q.k) * total;
}

}  // namespace detail

/// Lambda(D^k R_i, M) = 2 max{x, r} + (-1)^k sum_t (-1)^{[t > k]} (alpha_i, wt_t(c)).
///
/// The factor (-1)^k is the pairing with the weight of D^k R_i; it makes the
/// value invariant under D and is 1 for even k.
template <BInfinityModel C>
std::int64_t lambda_left(const ExtCrystal<C>& crystal,
                         const InvariantQuery<typename C::Element>& q) {
  const auto n = string_counters(crystal, q);
  return 2 * std::max(n.x, n.r) +
         detail::signed_weight_sum(crystal, q, [&](SlotIndex t) { return t > q.k ? -1 : 1; });
}

/// Lambda(M, D^k R_i) = 2 max{y, s} + (-1)^k sum_t (-1)^{[t < k]} (alpha_i, wt_t(c)).
template <BInfinityModel C>
std::int64_t lambda_right(const ExtCrystal<C>& crystal,
                          const InvariantQuery<typename C::Element>& q) {
  const auto n = string_counters(crystal, q);
  return 2 * std::max(n.y, n.s) +
         detail::signed_weight_sum(crystal, q, [&](SlotIndex t) { return t < q.k ? -1 : 1; });
}

/// d(D^k R_i, M) = max{x, r} + max{y, s} + (-1)^k (alpha_i, wt_k(c)).
template <BInfinityModel C>
std::int64_t de(const ExtCrystal<C>& crystal, const InvariantQuery<typename C::Element>& q) {
  const auto n = string_counters(crystal, q);
  return std::max(n.x, n.r) + std::max(n.y, n.s) +
         detail::parity_sign(q.k) * pair(q.i, crystal.wt_k(q.c, q.k));
}

}  // namespace extcrystal

#endif  // EXTCRYSTAL_INVARIANTS_HPP
