#ifndef EXTCRYSTAL_TEXT_FORMAT_HPP
#define EXTCRYSTAL_TEXT_FORMAT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "extcrystal/affine_a.hpp"
#include "extcrystal/ext_crystal.hpp"
#include "extcrystal/multisegment.hpp"

// Text grammars shared by the CLI, the JSON payloads and verification
// reports:
//
//   multisegment   "2*[1,3],[2]"          empty: "1"
//   ext element    "1:[1,3];0:2*[2]"      highest vector: "1" (or "")
//   hl weight      "2*(2,-1),(1,-2)"      zero: "0"
//
// Printing is canonical: multisegments list segments largest first in the
// left order, ext elements list slots in descending order, weights list
// lattice points in ascending (i, a) order.

namespace extcrystal {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  /// Zero-based character offset of the offending input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

std::string format_segment(const Segment& s);
std::string format_multisegment(const Multisegment& m);
std::string format_ext(const ExtElement<Multisegment>& c);
std::string format_node(const HLNode& p);
std::string format_weight(const HLWeight& lambda);

/// Parsers check syntax and segment/lattice-point shape; rank-dependent
/// checks belong to MultisegmentCrystal::validate and AffineA::validate.
Multisegment parse_multisegment(std::string_view text);
ExtElement<Multisegment> parse_ext(std::string_view text);
HLWeight parse_weight(std::string_view text);

}  // namespace extcrystal

#endif  // EXTCRYSTAL_TEXT_FORMAT_HPP
