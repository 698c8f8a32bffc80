#ifndef EXTCRYSTAL_SIGNATURE_HPP
#define EXTCRYSTAL_SIGNATURE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace extcrystal {

enum class Sign : char { Plus = '+', Minus = '-' };

/// One signature symbol together with the data it was produced from.
template <class Source>
struct SignatureSymbol {
  Sign sign;
  Source source;

  friend bool operator==(const SignatureSymbol&, const SignatureSymbol&) = default;
};

/// An ordered word in {+, -}, read left to right.
template <class Source>
using SignatureSeq = std::vector<SignatureSymbol<Source>>;

/// Positions (into the input word) of the symbols surviving cancellation of
/// all (+, -) pairs. A - cancels the nearest unmatched + to its left, which is
/// bracket matching; the survivors read as -^p +^q.
template <class Source>
std::vector<std::size_t> surviving_positions(const SignatureSeq<Source>& word) {
  std::vector<std::size_t> open_plus;
  std::vector<std::size_t> minus;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    if (word[pos].sign == Sign::Plus) {
      open_plus.push_back(pos);
    } else if (!open_plus.empty()) {
      open_plus.pop_back();
    } else {
      minus.push_back(pos);
    }
  }
  minus.insert(minus.end(), open_plus.begin(), open_plus.end());
  return minus;
}

template <class Source>
SignatureSeq<Source> reduce(const SignatureSeq<Source>& word) {
  SignatureSeq<Source> out;
  for (auto pos : surviving_positions(word)) out.push_back(word[pos]);
  return out;
}

/// Summary of a reduced word: counts and the two symbols crystal operators
/// act on.
template <class Source>
struct ReducedSignature {
  int minus_count = 0;
  int plus_count = 0;
  std::optional<Source> rightmost_minus;
  std::optional<Source> leftmost_plus;
};

template <class Source>
ReducedSignature<Source> summarize(const SignatureSeq<Source>& word) {
  ReducedSignature<Source> r;
  for (const auto& sym : reduce(word)) {
    if (sym.sign == Sign::Minus) {
      ++r.minus_count;
      r.rightmost_minus = sym.source;
    } else {
      if (r.plus_count == 0) r.leftmost_plus = sym.source;
      ++r.plus_count;
    }
  }
  return r;
}

template <class Source>
std::string signs_of(const SignatureSeq<Source>& word) {
  std::string s;
  s.reserve(word.size());
  for (const auto& sym : word) s.push_back(static_cast<char>(sym.sign));
  return s;
}

}  // namespace extcrystal

#endif  // EXTCRYSTAL_SIGNATURE_HPP
