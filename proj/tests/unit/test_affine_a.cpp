#include "doctest.h"

#include <stdexcept>
#include <random>
#include <set>

#include "extcrystal/affine_a.hpp"
#include "extcrystal/enumerate.hpp"
#include "extcrystal/text_format.hpp"

using namespace extcrystal;

namespace {

using Ext = ExtElement<Multisegment>;
RootLatticeElem alpha(int n, int i) { return RootLatticeElem::simple_root(n, i); }

std::vector<HLNode> nodes_of(const SBlockList& list) {
  std::vector<HLNode> out;
  for (int t = list.size(); t >= 1; --t) out.push_back(list.at(t).node);
  return out;
}

}  // namespace

TEST_CASE("dual shift of lattice points") {
  const AffineA model(3);
  CHECK(model.dual_node({1, 0}, 1) == HLNode{3, 4});
  CHECK(model.dual_node({2, 5}, 0) == HLNode{2, 5});
  for (int i = 1; i <= 3; ++i) {
    for (std::int64_t a = -9 + (i % 2 == 0); a <= 9; a += 2) {
      const HLNode p{i, a};
      CHECK(model.dual_node(model.dual_node(p, 1), -1) == p);
      CHECK(model.dual_node(model.dual_node(p, 3), -2) == model.dual_node(p, 1));
    }
  }
}

TEST_CASE("blocks of rank 3") {
  const AffineA model(3);
  CHECK(model.block_of({1, 0}) == 0);
  CHECK(model.block_of({3, 4}) == 1);
  CHECK(model.block_of({1, -2}) == -1);
  CHECK(model.block(0) ==
        std::vector<HLNode>{{1, 0}, {1, 2}, {1, 4}, {2, 1}, {2, 3}, {3, 2}});
}

TEST_CASE("blocks tile the lattice") {
  for (int n = 1; n <= 5; ++n) {
    const AffineA model(n);
    for (int i = 1; i <= n; ++i) {
      for (std::int64_t a = -40 + ((i + 1) % 2); a <= 40; a += 2) {
        const HLNode p{i, a};
        int hits = 0;
        for (SlotIndex k = -20; k <= 20; ++k) {
          if (model.in_base_block(model.dual_node(p, -k))) ++hits;
        }
        CHECK(hits == 1);
        const auto k = model.block_of(p);
        const auto blk = model.block(k);
        CHECK(std::find(blk.begin(), blk.end(), p) != blk.end());
      }
    }
    for (SlotIndex k = -3; k <= 3; ++k) CHECK(model.block(k).size() == static_cast<std::size_t>(n * (n + 1) / 2));
  }
}

TEST_CASE("gamma on segments") {
  const AffineA model(3);
  CHECK(model.gamma_seg({1, 3}, 0) == HLNode{3, 2});
  CHECK(model.gamma_seg({1, 1}, 1) == HLNode{3, 4});
  CHECK(model.gamma_seg({1, 3}, -1) == HLNode{1, -2});
  for (int n = 1; n <= 5; ++n) {
    const AffineA m(n);
    for (const auto& s : all_segments(n)) {
      for (SlotIndex k = -3; k <= 3; ++k) {
        const auto p = m.gamma_seg(s, k);
        CHECK(m.block_of(p) == k);
        const auto [back, blk] = m.gamma_seg_inv(p);
        CHECK(back == s);
        CHECK(blk == k);
        CHECK(m.wt_node(p) == ((k % 2 == 0) ? -1 : 1) * RootLatticeElem::root_interval(n, s.a, s.b));
      }
    }
  }
}

TEST_CASE("gamma on ext elements") {
  const AffineA model(3);
  CHECK(model.gamma(Ext{}).is_zero());
  CHECK(model.gamma(Ext::single(0, Multisegment{{1, 3}})) == HLWeight{{{3, 2}, 1}});
  std::mt19937_64 rng(5);
  const ExtCrystal<MultisegmentCrystal> crystal{MultisegmentCrystal(3)};
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = random_ext(3, {-3, 3}, 8, rng);
    CHECK(model.gamma_inv(model.gamma(c)) == c);
    CHECK(model.hwt_weight(model.gamma(c)) == crystal.hwt(c));
    CHECK(model.gamma(shift(c, 1)) == model.dual_weight(model.gamma(c), 1));
  }
}

TEST_CASE("node weights") {
  const AffineA model(3);
  CHECK(model.wt_node({1, 0}) == -alpha(3, 1));
  CHECK(model.wt_node({3, 2}) == -(alpha(3, 1) + alpha(3, 2) + alpha(3, 3)));
  CHECK(model.wt_node({3, 4}) == alpha(3, 1));
}

TEST_CASE("S-lists") {
  const AffineA model(3);
  CHECK(nodes_of(model.s_blocks(1, 0)) ==
        std::vector<HLNode>{{3, 4}, {3, 2}, {2, 3}, {2, 1}, {1, 2}, {1, 0}});
  CHECK(nodes_of(model.s_blocks(1, -1)) ==
        std::vector<HLNode>{{1, 0}, {1, -2}, {2, -1}, {2, -3}, {3, -2}, {3, -4}});
  CHECK(nodes_of(model.s_blocks(2, 0)) ==
        std::vector<HLNode>{{3, 6}, {3, 4}, {2, 5}, {2, 3}, {1, 4}, {1, 2}});
}

TEST_CASE("S-lists at k = 0 follow the closed form") {
  for (int n = 1; n <= 8; ++n) {
    const AffineA model(n);
    for (int i = 1; i <= n; ++i) {
      const auto list = model.s_blocks(i, 0);
      REQUIRE(list.size() == 2 * n);
      CHECK(list.at(1).node == HLNode{1, 2 * (i - 1)});
      for (int j = 1; j <= n; ++j) {
        CHECK(list.at(2 * j - 1).node == HLNode{j, 2 * (i - 1) + j - 1});
        CHECK(list.at(2 * j).node == HLNode{j, 2 * (i - 1) + j + 1});
        CHECK(list.at(2 * j - 1).sign == Sign::Minus);
        CHECK(list.at(2 * j).sign == Sign::Plus);
      }
    }
  }
}

TEST_CASE("signature rule on the worked rank-3 weight") {
  const AffineA model(3);
  const HLWeight lambda =
      parse_weight("(3,-4),(3,-2),2*(2,-1),(1,-2),(1,2),(2,1),(2,3),2*(3,4),(2,5),(2,7)");
  CHECK(signs_of(model.hl_signature(lambda, 1, 0)) == "+++-+");
  CHECK(signs_of(reduce(model.hl_signature(lambda, 1, 0))) == "+++");
  CHECK(signs_of(model.hl_signature(lambda, 1, -1)) == "-+++-");

  HLWeight want = lambda;
  want.remove({3, 4});
  CHECK(model.F_hl(lambda, 1, 0) == want);

  want = lambda;
  want.remove({2, -1});
  want.add({1, -2});
  CHECK(model.F_hl(lambda, 1, -1) == want);
}

TEST_CASE("F_hl on zero weight") {
  for (int n = 1; n <= 4; ++n) {
    const AffineA model(n);
    for (int i = 1; i <= n; ++i) {
      CHECK(model.F_hl(HLWeight{}, i, 0) == HLWeight{{{1, 2 * (i - 1)}, 1}});
    }
  }
}

TEST_CASE("F_hl and E_hl are inverse; duality commutes with the rule") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 1 + trial % 4;
    const AffineA model(n);
    const auto lambda = model.gamma(random_ext(n, {-3, 3}, 6, rng));
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const SlotIndex k = static_cast<SlotIndex>(rng() % 7) - 3;
    CHECK(model.E_hl(model.F_hl(lambda, i, k), i, k) == lambda);
    CHECK(model.F_hl(model.E_hl(lambda, i, k), i, k) == lambda);
    CHECK(model.dual_weight(model.F_hl(lambda, i, k), 1) ==
          model.F_hl(model.dual_weight(lambda, 1), i, k + 1));
    const auto lower = model.s_blocks(i, k);
    const auto upper = model.s_blocks(i, k + 1);
    for (int t = 1; t <= 2 * n; ++t) CHECK(model.dual_node(lower.at(t).node, 1) == upper.at(t).node);
  }
}

TEST_CASE("validation") {
  const AffineA model(3);
  CHECK_THROWS_AS(model.validate(HLNode{1, 1}), std::domain_error);
  CHECK_THROWS_AS(model.validate(HLNode{4, 1}), std::domain_error);
  CHECK_THROWS_AS(model.block_of(HLNode{2, 2}), std::domain_error);
  CHECK_THROWS_AS(model.s_blocks(0, 0), std::domain_error);
  CHECK(psi_label({2, -1}) == "(2, (-q)^-1)");
}
