#include "extcrystal/root_data.hpp"

#include <numeric>
#include <stdexcept>

namespace extcrystal {

int checked_rank(int n) {
  if (n < 1 || n > kMaxRank) {
    throw std::domain_error("rank must lie in [1, " + std::to_string(kMaxRank) +
                            "], got " + std::to_string(n));
  }
  return n;
}

CartanA::CartanA(int n) : n_(checked_rank(n)) {}

int CartanA::entry(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::domain_error("Cartan index out of range");
  }
  if (i == j) return 2;
  return (i - j == 1 || j - i == 1) ? -1 : 0;
}

RootLatticeElem::RootLatticeElem(int n)
    : coeffs_(static_cast<std::size_t>(checked_rank(n)), 0) {}

RootLatticeElem::RootLatticeElem(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  checked_rank(static_cast<int>(coeffs_.size()));
}

RootLatticeElem RootLatticeElem::simple_root(int n, int i) {
  return root_interval(n, i, i);
}

RootLatticeElem RootLatticeElem::root_interval(int n, int a, int b) {
  RootLatticeElem v(n);
  if (a < 1 || b > n || a > b) {
    throw std::domain_error("root interval out of range");
  }
  for (int j = a; j <= b; ++j) v.coeffs_[j - 1] = 1;
  return v;
}

std::int64_t RootLatticeElem::coeff(int j) const {
  if (j < 1 || j > rank()) throw std::domain_error("root coordinate out of range");
  return coeffs_[j - 1];
}

bool RootLatticeElem::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

RootLatticeElem& RootLatticeElem::operator+=(const RootLatticeElem& other) {
  if (other.rank() != rank()) throw std::domain_error("rank mismatch in root lattice");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

RootLatticeElem& RootLatticeElem::operator-=(const RootLatticeElem& other) {
  if (other.rank() != rank()) throw std::domain_error("rank mismatch in root lattice");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

RootLatticeElem& RootLatticeElem::operator*=(std::int64_t scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

RootLatticeElem add(const RootLatticeElem& v, const RootLatticeElem& w) { return v + w; }

RootLatticeElem negate(const RootLatticeElem& v) { return -v; }

std::int64_t height(const RootLatticeElem& v) {
  return std::accumulate(v.coeffs().begin(), v.coeffs().end(), std::int64_t{0});
}

std::int64_t pair(int i, const RootLatticeElem& v) {
  const int n = v.rank();
  if (i < 1 || i > n) throw std::domain_error("simple root index out of range");
  std::int64_t s = 2 * v.coeffs()[i - 1];
  if (i > 1) s -= v.coeffs()[i - 2];
  if (i < n) s -= v.coeffs()[i];
  return s;
}

RootLatticeElem operator+(RootLatticeElem v, const RootLatticeElem& w) { return v += w; }
RootLatticeElem operator-(RootLatticeElem v, const RootLatticeElem& w) { return v -= w; }
RootLatticeElem operator-(const RootLatticeElem& v) { return -1 * v; }
RootLatticeElem operator*(std::int64_t scalar, RootLatticeElem v) { return v *= scalar; }

std::string to_string(const RootLatticeElem& v) {
  std::string out;
  for (int j = 1; j <= v.rank(); ++j) {
    const auto c = v.coeff(j);
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += "a" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

}  // namespace extcrystal
