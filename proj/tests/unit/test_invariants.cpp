#include "doctest.h"

#include <stdexcept>
#include <random>

#include "extcrystal/enumerate.hpp"
#include "extcrystal/invariants.hpp"

using namespace extcrystal;

namespace {

using Ext = ExtElement<Multisegment>;
using Query = InvariantQuery<Multisegment>;

Ext root_module(int j) { return Ext::single(0, Multisegment{{j, j}}); }

// d(D^k R_i, R_j) in type A_n: 1 when (k = +-1, i = j) or (k = 0, |i - j| = 1).
int expected_root_d(int i, int j, SlotIndex k) {
  if ((k == 1 || k == -1) && i == j) return 1;
  if (k == 0 && (i - j == 1 || j - i == 1)) return 1;
  return 0;
}

}  // namespace

TEST_CASE("invariants on a fundamental root module") {
  const ExtCrystal<MultisegmentCrystal> crystal{MultisegmentCrystal(3)};
  for (int i = 1; i <= 3; ++i) {
    CHECK(lambda_left(crystal, Query{i, 0, root_module(i)}) == 0);
    CHECK(lambda_left(crystal, Query{i, 1, root_module(i)}) == 2);
    CHECK(lambda_right(crystal, Query{i, 0, root_module(i)}) == 0);
    CHECK(lambda_right(crystal, Query{i, 1, root_module(i)}) == 0);
    CHECK(lambda_right(crystal, Query{i, -1, root_module(i)}) == 2);
    CHECK(de(crystal, Query{i, 1, root_module(i)}) == 1);
    CHECK(de(crystal, Query{i, 0, root_module(i)}) == 0);
  }
  CHECK(de(crystal, Query{1, 0, root_module(2)}) == 1);
  CHECK(de(crystal, Query{3, 0, root_module(2)}) == 1);
  CHECK(de(crystal, Query{1, 0, root_module(3)}) == 0);
}

TEST_CASE("d between root modules matches the duality datum") {
  for (int n = 1; n <= 5; ++n) {
    const ExtCrystal<MultisegmentCrystal> crystal{MultisegmentCrystal(n)};
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (SlotIndex k = -4; k <= 4; ++k) {
          CHECK(de(crystal, Query{i, k, root_module(j)}) == expected_root_d(i, j, k));
        }
      }
    }
  }
}

TEST_CASE("string counters read the neighbouring slots") {
  const ExtCrystal<MultisegmentCrystal> crystal{MultisegmentCrystal(2)};
  Ext c;
  c.set(1, Multisegment{{1, 1}, {1, 1}});
  c.set(0, Multisegment{{1, 2}});
  c.set(-1, Multisegment{{1, 1}});
  const auto s = string_counters(crystal, Query{1, 0, c});
  CHECK(s.x == 2);
  CHECK(s.r == 1);
  CHECK(s.s == 0);
  CHECK(s.y == 1);
}

TEST_CASE("2d = Lambda + Lambda', parities and shift covariance") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 4;
    const ExtCrystal<MultisegmentCrystal> crystal{MultisegmentCrystal(n)};
    const auto c = random_ext(n, {-2, 2}, 8, rng);
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const SlotIndex k = static_cast<SlotIndex>(rng() % 7) - 3;
    const Query q{i, k, c};
    const auto left = lambda_left(crystal, q);
    const auto right = lambda_right(crystal, q);
    const auto d = de(crystal, q);
    CHECK(2 * d == left + right);
    CHECK(d >= 0);
    CHECK((left - right) % 2 == 0);
    const Query moved{i, k + 3, shift(c, 3)};
    CHECK(de(crystal, moved) == d);
    CHECK(lambda_left(crystal, moved) == left);
  }
}

TEST_CASE("Lambda against root-module values") {
  // L = R_i, M = hd(D L^a (x) L^b) has c = (b_1, b_0) = ([i]^a, [i]^b).
  const ExtCrystal<MultisegmentCrystal> crystal{MultisegmentCrystal(3)};
  for (int i = 1; i <= 3; ++i) {
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; b <= 4; ++b) {
        Ext c;
        Multisegment top, bottom;
        for (int r = 0; r < a; ++r) top.add({i, i});
        for (int r = 0; r < b; ++r) bottom.add({i, i});
        c.set(1, top);
        c.set(0, bottom);
        CHECK(lambda_left(crystal, Query{i, 0, c}) == -2 * std::min(a, b));
        CHECK(lambda_right(crystal, Query{i, 0, c}) == 2 * a);
        // The same values seen through D^3.
        CHECK(lambda_left(crystal, Query{i, 3, shift(c, 3)}) == -2 * std::min(a, b));
      }
    }
  }
}
