#include "extcrystal/text_format.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace extcrystal {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  /// True at end of input or at one of the stop characters.
  bool at_stop(std::string_view stops) {
    skip_ws();
    return pos_ == text_.size() || stops.find(text_[pos_]) != std::string_view::npos;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  bool at_integer() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t cur = pos_;
    if (cur < text_.size() && text_[cur] == '+') ++cur;
    std::int64_t value = 0;
    const char* first = text_.data() + cur;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value, 10);
    if (ec == std::errc::result_out_of_range) {
      pos_ = start;
      fail("integer out of range");
    }
    if (ec != std::errc() || ptr == first) {
      pos_ = start;
      fail("expected integer");
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  int small_integer() {
    const std::size_t start = (skip_ws(), pos_);
    const auto v = integer();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      pos_ = start;
      fail("integer out of range");
    }
    return static_cast<int>(v);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int parse_multiplicity(Cursor& cur) {
  if (!cur.at_integer()) return 1;
  const std::size_t at = cur.pos();
  const int mult = cur.small_integer();
  if (mult < 1) cur.fail_at("multiplicity must be positive", at);
  cur.expect('*');
  return mult;
}

Segment parse_segment(Cursor& cur) {
  cur.expect('[');
  const std::size_t at = (cur.skip_ws(), cur.pos());
  const int a = cur.small_integer();
  int b = a;
  if (cur.accept(',')) b = cur.small_integer();
  cur.expect(']');
  if (a < 1 || a > b) cur.fail_at("invalid segment", at);
  return Segment(a, b);
}

Multisegment parse_multisegment_at(Cursor& cur, std::string_view stops) {
  Multisegment m;
  if (cur.at_stop(stops)) return m;
  // "1" denotes the empty multisegment.
  if (cur.peek() == '1') {
    Cursor probe = cur;
    probe.integer();
    if (probe.at_stop(stops)) {
      cur = probe;
      return m;
    }
  }
  do {
    const int mult = parse_multiplicity(cur);
    m.add(parse_segment(cur), mult);
  } while (cur.accept(','));
  if (!cur.at_stop(stops)) cur.fail("unexpected character in multisegment");
  return m;
}

}  // namespace

std::string format_segment(const Segment& s) {
  if (s.a == s.b) return "[" + std::to_string(s.a) + "]";
  return "[" + std::to_string(s.a) + "," + std::to_string(s.b) + "]";
}

std::string format_multisegment(const Multisegment& m) {
  if (m.empty()) return "1";
  std::string out;
  const auto& terms = m.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += ',';
    if (it->multiplicity != 1) out += std::to_string(it->multiplicity) + "*";
    out += format_segment(it->segment);
  }
  return out;
}

std::string format_ext(const ExtElement<Multisegment>& c) {
  if (c.is_highest()) return "1";
  std::string out;
  const auto& slots = c.slots();
  for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
    if (!out.empty()) out += ';';
    out += std::to_string(it->first) + ":" + format_multisegment(it->second);
  }
  return out;
}

std::string format_node(const HLNode& p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.a) + ")";
}

std::string format_weight(const HLWeight& lambda) {
  if (lambda.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : lambda.terms()) {
    if (!out.empty()) out += ',';
    if (c != 1) out += std::to_string(c) + "*";
    out += format_node(p);
  }
  return out;
}

Multisegment parse_multisegment(std::string_view text) {
  Cursor cur(text);
  auto m = parse_multisegment_at(cur, "");
  if (!cur.at_end()) cur.fail("trailing input");
  return m;
}

ExtElement<Multisegment> parse_ext(std::string_view text) {
  Cursor cur(text);
  ExtElement<Multisegment> c;
  if (cur.at_end()) return c;
  {
    Cursor probe = cur;
    if (probe.peek() == '1') {
      probe.integer();
      if (probe.at_end()) return c;
    }
  }
  std::map<SlotIndex, bool> seen;
  do {
    const std::size_t at = (cur.skip_ws(), cur.pos());
    const SlotIndex k = cur.integer();
    if (seen[k]) cur.fail_at("duplicate slot " + std::to_string(k), at);
    seen[k] = true;
    cur.expect(':');
    c.set(k, parse_multisegment_at(cur, ";"));
  } while (cur.accept(';'));
  if (!cur.at_end()) cur.fail("trailing input");
  return c;
}

HLWeight parse_weight(std::string_view text) {
  Cursor cur(text);
  HLWeight lambda;
  if (cur.at_end()) return lambda;
  if (cur.peek() == '0') {
    Cursor probe = cur;
    probe.integer();
    if (probe.at_end()) return lambda;
  }
  do {
    const std::size_t at = (cur.skip_ws(), cur.pos());
    std::int64_t c = 1;
    if (cur.at_integer()) {
      c = cur.integer();
      if (c < 1) cur.fail_at("coefficient must be positive", at);
      cur.expect('*');
    }
    cur.expect('(');
    const std::size_t node_at = (cur.skip_ws(), cur.pos());
    const int i = cur.small_integer();
    cur.expect(',');
    const std::int64_t a = cur.integer();
    cur.expect(')');
    if (i < 1) cur.fail_at("node index must be positive", node_at);
    if ((a - i) % 2 == 0) cur.fail_at("lattice point violates a - i odd", node_at);
    lambda.add(HLNode{i, a}, c);
  } while (cur.accept(','));
  if (!cur.at_end()) cur.fail("trailing input");
  return lambda;
}

}  // namespace extcrystal
