#include "doctest.h"

#include <stdexcept>
#include <random>

#include "extcrystal/signature.hpp"

using namespace extcrystal;

namespace {

SignatureSeq<int> word(const std::string& signs) {
  SignatureSeq<int> w;
  for (std::size_t pos = 0; pos < signs.size(); ++pos) {
    w.push_back({signs[pos] == '+' ? Sign::Plus : Sign::Minus, static_cast<int>(pos)});
  }
  return w;
}

// Deletes randomly chosen adjacent "+-" pairs until none is left.
SignatureSeq<int> reduce_randomly(SignatureSeq<int> w, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> pairs;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p].sign == Sign::Plus && w[p + 1].sign == Sign::Minus) pairs.push_back(p);
    }
    if (pairs.empty()) return w;
    const auto p = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p) + 2);
  }
}

}  // namespace

TEST_CASE("reduce examples") {
  CHECK(signs_of(reduce(word("+-"))).empty());
  CHECK(signs_of(reduce(word("-+"))) == "-+");
  CHECK(signs_of(reduce(word("++-"))) == "+");
}

TEST_CASE("reduce keeps the originating symbols") {
  // "++-" cancels the second + with the -, so the first + survives.
  const auto r = reduce(word("++-"));
  REQUIRE(r.size() == 1);
  CHECK(r[0].source == 0);
  const auto s = summarize(word("-+-++-"));
  CHECK(s.minus_count == 1);
  CHECK(s.plus_count == 1);
  CHECK(*s.rightmost_minus == 0);
  CHECK(*s.leftmost_plus == 3);
}

TEST_CASE("reduction is confluent and ends as -^p +^q") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto len = std::uniform_int_distribution<int>(0, 16)(rng);
    std::string signs;
    for (int p = 0; p < len; ++p) signs.push_back(rng() % 2 ? '+' : '-');
    const auto w = word(signs);
    const auto canonical = reduce(w);
    CHECK(reduce_randomly(w, rng) == canonical);
    const auto text = signs_of(canonical);
    CHECK(text.find("+-") == std::string::npos);
  }
}
