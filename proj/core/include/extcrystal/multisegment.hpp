#ifndef EXTCRYSTAL_MULTISEGMENT_HPP
#define EXTCRYSTAL_MULTISEGMENT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "extcrystal/root_data.hpp"
#include "extcrystal/signature.hpp"

namespace extcrystal {

/// Interval [a, b] with 1 <= a <= b. The upper bound n is checked by the
/// crystal that consumes it, not here.
struct Segment {
  int a = 1;
  int b = 1;

  Segment() = default;
  Segment(int start, int end);

  int length() const { return b - a + 1; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Left order: [a,b] < [c,d] iff b < d, or b == d and a > c.
std::strong_ordering left_cmp(const Segment& s, const Segment& t);
/// Right order: [a,b] <' [c,d] iff a < c, or a == c and b > d.
std::strong_ordering right_cmp(const Segment& s, const Segment& t);

struct LeftLess {
  bool operator()(const Segment& s, const Segment& t) const { return left_cmp(s, t) < 0; }
};

/// A finite multiset of segments. Stored as (segment, multiplicity) terms
/// sorted ascending in the left order with positive multiplicities, so equal
/// multisets are equal term-by-term.
class Multisegment {
 public:
  struct Term {
    Segment segment;
    int multiplicity;

    friend bool operator==(const Term&, const Term&) = default;
  };

  Multisegment() = default;
  Multisegment(std::initializer_list<Segment> segments);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Number of segments counted with multiplicity.
  int size() const;
  int count(const Segment& s) const;

  void add(const Segment& s, int multiplicity = 1);
  /// Removes one copy of s; throws std::logic_error if s is absent.
  void remove(const Segment& s);
  /// Removes one copy of from and adds to; an empty `to` means deletion.
  void replace(const Segment& from, const std::optional<Segment>& to);

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  /// Lexicographic on the canonical terms; only used for container keys.
  friend bool operator<(const Multisegment& x, const Multisegment& y);

 private:
  std::vector<Term> terms_;
};

/// The crystal B(infinity) of type A_n realized on multisegments, with both
/// the plain operators (left signature rule) and the starred operators
/// (right signature rule).
class MultisegmentCrystal {
 public:
  using Element = Multisegment;

  explicit MultisegmentCrystal(int n);

  int rank() const { return n_; }

  /// Throws std::domain_error unless every segment lies in [1, n].
  void validate(const Multisegment& m) const;

  SignatureSeq<Segment> left_signature(const Multisegment& m, int i) const;
  SignatureSeq<Segment> right_signature(const Multisegment& m, int i) const;

  Multisegment f(const Multisegment& m, int i) const;
  std::optional<Multisegment> e(const Multisegment& m, int i) const;
  Multisegment f_star(const Multisegment& m, int i) const;
  std::optional<Multisegment> e_star(const Multisegment& m, int i) const;

  int eps(const Multisegment& m, int i) const;
  int eps_star(const Multisegment& m, int i) const;
  std::int64_t phi(const Multisegment& m, int i) const;

  RootLatticeElem wt(const Multisegment& m) const;
  int height(const Multisegment& m) const;

  /// The star involution, computed by unwinding m to the empty multisegment
  /// along e_i with the smallest admissible i and rebuilding with f*_i.
  Multisegment star(const Multisegment& m) const;

  /// Sequence i_1, ..., i_h with m = f_{i_1} ... f_{i_h}(empty), taking the
  /// smallest i with eps_i > 0 at every step.
  std::vector<int> lowering_word(const Multisegment& m) const;

 private:
  void check_index(int i) const;

  int n_;
};

}  // namespace extcrystal

#endif  // EXTCRYSTAL_MULTISEGMENT_HPP
