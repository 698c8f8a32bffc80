#include "doctest.h"

#include <stdexcept>
#include <random>

#include "extcrystal/enumerate.hpp"
#include "extcrystal/export.hpp"
#include "extcrystal/text_format.hpp"

using namespace extcrystal;

using Ext = ExtElement<Multisegment>;

TEST_CASE("formatting") {
  CHECK(format_segment({2, 2}) == "[2]");
  CHECK(format_segment({1, 3}) == "[1,3]");
  CHECK(format_multisegment(Multisegment{}) == "1");
  CHECK(format_multisegment(Multisegment{{1, 1}, {2, 3}, {2, 3}}) == "2*[2,3],[1]");
  CHECK(format_ext(Ext{}) == "1");
  Ext c;
  c.set(1, Multisegment{{1, 3}});
  c.set(0, Multisegment{{2, 2}, {2, 2}});
  CHECK(format_ext(c) == "1:[1,3];0:2*[2]");
  CHECK(format_node({2, -1}) == "(2,-1)");
  CHECK(format_weight(HLWeight{}) == "0");
  CHECK(format_weight(HLWeight{{{2, -1}, 2}, {{1, -2}, 1}}) == "(1,-2),2*(2,-1)");
}

TEST_CASE("parsing") {
  CHECK(parse_ext("") == Ext{});
  CHECK(parse_ext("1") == Ext{});
  CHECK(parse_ext(" 0 : [1] ") == Ext::single(0, Multisegment{{1, 1}}));
  CHECK(parse_ext("-2:[1,2],[1]") == Ext::single(-2, Multisegment{{1, 2}, {1, 1}}));
  CHECK(parse_multisegment("3*[1]") == Multisegment{{1, 1}, {1, 1}, {1, 1}});
  CHECK(parse_weight("0").is_zero());
  CHECK(parse_weight("2*(2,-1),(1,-2)") == HLWeight{{{2, -1}, 2}, {{1, -2}, 1}});
}

TEST_CASE("parse errors carry a position") {
  for (const char* bad : {"0:[1", "0:[2,1]", "0:[1];0:[2]", "x", "0:[0]", "0:[1],", "0:0*[1]"}) {
    CHECK_THROWS_AS(parse_ext(bad), ParseError);
  }
  for (const char* bad : {"(1,1)", "(1,0", "2*", "(1,0)(1,2)"}) {
    CHECK_THROWS_AS(parse_weight(bad), ParseError);
  }
  try {
    parse_ext("0:[1];1:[");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 8);
  }
}

TEST_CASE("text and json round trips") {
  std::mt19937_64 rng(3);
  const AffineA model(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = random_ext(3, {-3, 3}, 9, rng);
    CHECK(parse_ext(format_ext(c)) == c);
    const auto lambda = model.gamma(c);
    CHECK(parse_weight(format_weight(lambda)) == lambda);
    CHECK(weight_from_json(weight_to_json(lambda)) == lambda);
    CHECK(weight_from_json(nlohmann::json::parse(weight_to_json(lambda).dump())) == lambda);
  }
}
