#ifndef EXTCRYSTAL_ROOT_DATA_HPP
#define EXTCRYSTAL_ROOT_DATA_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace extcrystal {

/// Largest supported rank.
inline constexpr int kMaxRank = 64;

/// Validates a rank value, throwing std::domain_error outside [1, kMaxRank].
int checked_rank(int n);

/// Cartan matrix of finite type A_n.
class CartanA {
 public:
  explicit CartanA(int n);

  int rank() const { return n_; }

  /// a_ij = 2 if i == j, -1 if |i - j| == 1, 0 otherwise. Indices are 1-based.
  int entry(int i, int j) const;

 private:
  int n_;
};

/// Element of the root lattice of type A_n, stored in simple-root
/// coordinates c_1 .. c_n.
class RootLatticeElem {
 public:
  RootLatticeElem() = default;
  /// Zero element of rank n.
  explicit RootLatticeElem(int n);
  explicit RootLatticeElem(std::vector<std::int64_t> coeffs);

  /// The simple root alpha_i of rank n.
  static RootLatticeElem simple_root(int n, int i);
  /// alpha_a + ... + alpha_b.
  static RootLatticeElem root_interval(int n, int a, int b);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(int j) const;
  bool is_zero() const;

  RootLatticeElem& operator+=(const RootLatticeElem& other);
  RootLatticeElem& operator-=(const RootLatticeElem& other);
  RootLatticeElem& operator*=(std::int64_t scalar);

  friend bool operator==(const RootLatticeElem&, const RootLatticeElem&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

RootLatticeElem add(const RootLatticeElem& v, const RootLatticeElem& w);
RootLatticeElem negate(const RootLatticeElem& v);
/// Sum of coefficients.
std::int64_t height(const RootLatticeElem& v);
/// (alpha_i, v) for the symmetric form normalized by (alpha_i, alpha_i) = 2.
std::int64_t pair(int i, const RootLatticeElem& v);

RootLatticeElem operator+(RootLatticeElem v, const RootLatticeElem& w);
RootLatticeElem operator-(RootLatticeElem v, const RootLatticeElem& w);
RootLatticeElem operator-(const RootLatticeElem& v);
RootLatticeElem operator*(std::int64_t scalar, RootLatticeElem v);

/// Human-readable form such as "-a1-a2+2a3"; the zero element prints as "0".
std::string to_string(const RootLatticeElem& v);

}  // namespace extcrystal

#endif  // EXTCRYSTAL_ROOT_DATA_HPP
