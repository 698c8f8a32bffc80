#ifndef EXTCRYSTAL_AFFINE_A_HPP
#define EXTCRYSTAL_AFFINE_A_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "extcrystal/ext_crystal.hpp"
#include "extcrystal/multisegment.hpp"
#include "extcrystal/root_data.hpp"
#include "extcrystal/signature.hpp"

namespace extcrystal {

/// A point (i, a) of the lattice I_n = {(i, a) : a - i odd}; it labels the
/// fundamental module V(varpi_i) at spectral parameter (-q)^a.
struct HLNode {
  int i = 1;
  std::int64_t a = 0;

  friend bool operator==(const HLNode&, const HLNode&) = default;
  friend auto operator<=>(const HLNode&, const HLNode&) = default;
};

/// Finitely supported non-negative combination of lattice points, i.e. an
/// affine highest weight. Zero coefficients are never stored.
class HLWeight {
 public:
  using TermMap = std::map<HLNode, std::int64_t>;

  HLWeight() = default;
  HLWeight(std::initializer_list<std::pair<HLNode, std::int64_t>> terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(const HLNode& p) const;
  std::int64_t total() const;

  void add(const HLNode& p, std::int64_t c = 1);
  /// Removes one copy of p; throws std::logic_error if p is absent.
  void remove(const HLNode& p);

  HLWeight& operator+=(const HLWeight& other);

  friend bool operator==(const HLWeight&, const HLWeight&) = default;
  friend bool operator<(const HLWeight& x, const HLWeight& y) { return x.terms_ < y.terms_; }

 private:
  TermMap terms_;
};

/// Entry a_t of an S-list: the lattice point and its sign class
/// (Minus for S^-, Plus for S^+).
struct SBlockEntry {
  HLNode node;
  Sign sign;

  friend bool operator==(const SBlockEntry&, const SBlockEntry&) = default;
};

/// The 2n points S_{i,k} = {a_1, ..., a_{2n}} with a_{2n} > ... > a_1 in the
/// order attached to k.
struct SBlockList {
  int i = 1;
  SlotIndex k = 0;
  std::vector<SBlockEntry> entries;  // entries[t - 1] is a_t

  int size() const { return static_cast<int>(entries.size()); }
  const SBlockEntry& at(int t) const { return entries.at(static_cast<std::size_t>(t - 1)); }
};

/// Combinatorial model of type A_n^(1) for the duality datum
/// {V(varpi_1)_{(-q)^{2i-2}}}: blocks, gamma bijections, and the signature
/// rule for F_{i,k} and E_{i,k} on affine highest weights.
class AffineA {
 public:
  explicit AffineA(int n);

  int rank() const { return n_; }

  /// Throws std::domain_error unless 1 <= i <= n and a - i is odd.
  void validate(const HLNode& p) const;
  void validate(const HLWeight& lambda) const;

  /// D^k(i, a); D(i, a) = (n+1-i, a+n+1).
  HLNode dual_node(const HLNode& p, SlotIndex k) const;
  HLWeight dual_weight(const HLWeight& lambda, SlotIndex k) const;

  /// Membership in I_n^0 = {i-1 <= a <= 2n-1-i}.
  bool in_base_block(const HLNode& p) const;
  /// The unique k with D^{-k}(p) in I_n^0.
  SlotIndex block_of(const HLNode& p) const;
  /// I_n^k listed in ascending (i, a) order.
  std::vector<HLNode> block(SlotIndex k) const;

  /// gamma_k([a,b]) = D^k(b-a+1, b+a-2).
  HLNode gamma_seg(const Segment& s, SlotIndex k) const;
  std::pair<Segment, SlotIndex> gamma_seg_inv(const HLNode& p) const;

  HLWeight gamma(const ExtElement<Multisegment>& c) const;
  ExtElement<Multisegment> gamma_inv(const HLWeight& lambda) const;

  RootLatticeElem wt_node(const HLNode& p) const;
  RootLatticeElem hwt_weight(const HLWeight& lambda) const;

  SBlockList s_blocks(int i, SlotIndex k) const;

  /// The (i,k)-signature sequence: a_{2n} first, one symbol per unit of
  /// coefficient. Each symbol's source is its position t in the S-list.
  SignatureSeq<int> hl_signature(const HLWeight& lambda, int i, SlotIndex k) const;

  HLWeight F_hl(const HLWeight& lambda, int i, SlotIndex k) const;
  HLWeight E_hl(const HLWeight& lambda, int i, SlotIndex k) const;

 private:
  void check_index(int i) const;

  int n_;
};

/// "(i, (-q)^a)".
std::string psi_label(const HLNode& p);

}  // namespace extcrystal

#endif  // EXTCRYSTAL_AFFINE_A_HPP
