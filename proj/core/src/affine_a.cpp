#include "extcrystal/affine_a.hpp"

#include <algorithm>
#include <stdexcept>

namespace extcrystal {

namespace {

bool is_even(std::int64_t k) { return k % 2 == 0; }

std::int64_t floor_div(std::int64_t x, std::int64_t d) {
  std::int64_t q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
  return q;
}

}  // namespace

HLWeight::HLWeight(std::initializer_list<std::pair<HLNode, std::int64_t>> terms) {
  for (const auto& [p, c] : terms) add(p, c);
}

std::int64_t HLWeight::coeff(const HLNode& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t HLWeight::total() const {
  std::int64_t s = 0;
  for (const auto& [p, c] : terms_) s += c;
  return s;
}

void HLWeight::add(const HLNode& p, std::int64_t c) {
  if (c < 0) throw std::domain_error("negative coefficient in affine highest weight");
  if (c == 0) return;
  terms_[p] += c;
}

void HLWeight::remove(const HLNode& p) {
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    throw std::logic_error("removing (" + std::to_string(p.i) + "," + std::to_string(p.a) +
                           ") with zero coefficient");
  }
  if (--it->second == 0) terms_.erase(it);
}

HLWeight& HLWeight::operator+=(const HLWeight& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

AffineA::AffineA(int n) : n_(checked_rank(n)) {}

void AffineA::check_index(int i) const {
  if (i < 1 || i > n_) {
    throw std::domain_error("index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n_));
  }
}

void AffineA::validate(const HLNode& p) const {
  check_index(p.i);
  if ((p.a - p.i) % 2 == 0) {
    throw std::domain_error("(" + std::to_string(p.i) + "," + std::to_string(p.a) +
                            ") violates a - i odd");
  }
}

void AffineA::validate(const HLWeight& lambda) const {
  for (const auto& [p, c] : lambda.terms()) validate(p);
}

HLNode AffineA::dual_node(const HLNode& p, SlotIndex k) const {
  const std::int64_t step = static_cast<std::int64_t>(n_) + 1;
  return HLNode{is_even(k) ? p.i : n_ + 1 - p.i, p.a + k * step};
}

HLWeight AffineA::dual_weight(const HLWeight& lambda, SlotIndex k) const {
  HLWeight out;
  for (const auto& [p, c] : lambda.terms()) out.add(dual_node(p, k), c);
  return out;
}

bool AffineA::in_base_block(const HLNode& p) const {
  return p.i >= 1 && p.i <= n_ && (p.a - p.i) % 2 != 0 && p.i - 1 <= p.a &&
         p.a <= 2 * n_ - 1 - p.i;
}

SlotIndex AffineA::block_of(const HLNode& p) const {
  validate(p);
  // I_n^k occupies a in [k(n+1), k(n+1) + 2n - 2].
  const SlotIndex guess = floor_div(p.a, n_ + 1);
  SlotIndex found = 0;
  int hits = 0;
  for (SlotIndex k = guess - 1; k <= guess + 1; ++k) {
    if (in_base_block(dual_node(p, -k))) {
      found = k;
      ++hits;
    }
  }
  if (hits != 1) throw std::logic_error("lattice point is not in exactly one block");
  return found;
}

std::vector<HLNode> AffineA::block(SlotIndex k) const {
  std::vector<HLNode> out;
  for (int i = 1; i <= n_; ++i) {
    for (std::int64_t a = i - 1; a <= 2 * n_ - 1 - i; a += 2) out.push_back(dual_node({i, a}, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

HLNode AffineA::gamma_seg(const Segment& s, SlotIndex k) const {
  if (s.b > n_) throw std::domain_error("segment exceeds rank");
  return dual_node(HLNode{s.b - s.a + 1, s.b + s.a - 2}, k);
}

std::pair<Segment, SlotIndex> AffineA::gamma_seg_inv(const HLNode& p) const {
  const SlotIndex k = block_of(p);
  const HLNode base = dual_node(p, -k);
  const auto b = static_cast<int>((base.a + base.i + 1) / 2);
  const auto a = static_cast<int>((base.a - base.i + 3) / 2);
  return {Segment(a, b), k};
}

HLWeight AffineA::gamma(const ExtElement<Multisegment>& c) const {
  HLWeight out;
  for (const auto& [k, m] : c.slots()) {
    for (const auto& t : m.terms()) out.add(gamma_seg(t.segment, k), t.multiplicity);
  }
  return out;
}

ExtElement<Multisegment> AffineA::gamma_inv(const HLWeight& lambda) const {
  std::map<SlotIndex, Multisegment> slots;
  for (const auto& [p, c] : lambda.terms()) {
    const auto [seg, k] = gamma_seg_inv(p);
    slots[k].add(seg, static_cast<int>(c));
  }
  ExtElement<Multisegment> out;
  for (auto& [k, m] : slots) out.set(k, std::move(m));
  return out;
}

RootLatticeElem AffineA::wt_node(const HLNode& p) const {
  const SlotIndex k = block_of(p);
  const HLNode base = dual_node(p, -k);
  const auto first = static_cast<int>((base.a - base.i + 3) / 2);
  const auto last = static_cast<int>((base.a + base.i + 1) / 2);
  auto w = -RootLatticeElem::root_interval(n_, first, last);
  return is_even(k) ? w : -w;
}

RootLatticeElem AffineA::hwt_weight(const HLWeight& lambda) const {
  RootLatticeElem total(n_);
  for (const auto& [p, c] : lambda.terms()) total += c * wt_node(p);
  return total;
}

SBlockList AffineA::s_blocks(int i, SlotIndex k) const {
  check_index(i);
  const bool even = is_even(k);
  const HLNode u = dual_node(HLNode{1, 2 * (i - 1)}, k);
  const HLNode u_shifted{u.i, u.a + 2};

  // S(p) = {(j,b) : j - b = i_p - a_p}; S'(p) = {(j,b) : j + b = i_p + a_p}.
  auto line = [&](const HLNode& p, Sign sign, std::vector<SBlockEntry>& out) {
    for (int j = 1; j <= n_; ++j) {
      const std::int64_t b = even ? j - (p.i - p.a) : (p.i + p.a) - j;
      out.push_back(SBlockEntry{HLNode{j, b}, sign});
    }
  };

  SBlockList list{i, k, {}};
  line(u, Sign::Minus, list.entries);
  line(u_shifted, Sign::Plus, list.entries);

  // Ascending in the order attached to the parity of k, so entries[0] = a_1.
  auto precedes = [even](const SBlockEntry& x, const SBlockEntry& y) {
    if (x.node.i != y.node.i) return even ? x.node.i < y.node.i : x.node.i > y.node.i;
    return x.node.a < y.node.a;
  };
  std::sort(list.entries.begin(), list.entries.end(), precedes);

  for (int t = 1; t <= list.size(); ++t) {
    const Sign expected = (t % 2 == 1) ? Sign::Minus : Sign::Plus;
    if (list.at(t).sign != expected) throw std::logic_error("S-list sign classes out of place");
  }
  return list;
}

SignatureSeq<int> AffineA::hl_signature(const HLWeight& lambda, int i, SlotIndex k) const {
  const SBlockList list = s_blocks(i, k);
  SignatureSeq<int> word;
  for (int t = list.size(); t >= 1; --t) {
    const auto& entry = list.at(t);
    const auto c = lambda.coeff(entry.node);
    word.insert(word.end(), static_cast<std::size_t>(c), SignatureSymbol<int>{entry.sign, t});
  }
  return word;
}

HLWeight AffineA::F_hl(const HLWeight& lambda, int i, SlotIndex k) const {
  const SBlockList list = s_blocks(i, k);
  const auto r = summarize(hl_signature(lambda, i, k));
  HLWeight out = lambda;
  if (r.leftmost_plus) {
    const int t = *r.leftmost_plus;
    out.remove(list.at(t).node);
    if (t + 1 <= list.size()) out.add(list.at(t + 1).node);
  } else {
    out.add(list.at(1).node);
  }
  return out;
}

HLWeight AffineA::E_hl(const HLWeight& lambda, int i, SlotIndex k) const {
  const SBlockList list = s_blocks(i, k);
  const auto r = summarize(hl_signature(lambda, i, k));
  HLWeight out = lambda;
  if (r.rightmost_minus) {
    const int s = *r.rightmost_minus;
    out.remove(list.at(s).node);
    if (s - 1 >= 1) out.add(list.at(s - 1).node);
  } else {
    out.add(list.at(list.size()).node);
  }
  return out;
}

std::string psi_label(const HLNode& p) {
  return "(" + std::to_string(p.i) + ", (-q)^" + std::to_string(p.a) + ")";
}

}  // namespace extcrystal
