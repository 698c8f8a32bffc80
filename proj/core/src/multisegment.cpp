#include "extcrystal/multisegment.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace extcrystal {

Segment::Segment(int start, int end) : a(start), b(end) {
  if (start < 1 || start > end) {
    throw std::domain_error("invalid segment [" + std::to_string(start) + "," +
                            std::to_string(end) + "]");
  }
}

std::strong_ordering left_cmp(const Segment& s, const Segment& t) {
  if (s.b != t.b) return s.b <=> t.b;
  return t.a <=> s.a;
}

std::strong_ordering right_cmp(const Segment& s, const Segment& t) {
  if (s.a != t.a) return s.a <=> t.a;
  return t.b <=> s.b;
}

Multisegment::Multisegment(std::initializer_list<Segment> segments) {
  for (const auto& s : segments) add(s);
}

int Multisegment::size() const {
  int total = 0;
  for (const auto& t : terms_) total += t.multiplicity;
  return total;
}

int Multisegment::count(const Segment& s) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const Term& t, const Segment& x) { return LeftLess{}(t.segment, x); });
  return (it != terms_.end() && it->segment == s) ? it->multiplicity : 0;
}

void Multisegment::add(const Segment& s, int multiplicity) {
  if (multiplicity < 0) throw std::domain_error("negative multiplicity");
  if (multiplicity == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const Term& t, const Segment& x) { return LeftLess{}(t.segment, x); });
  if (it != terms_.end() && it->segment == s) {
    it->multiplicity += multiplicity;
  } else {
    terms_.insert(it, Term{s, multiplicity});
  }
}

void Multisegment::remove(const Segment& s) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const Term& t, const Segment& x) { return LeftLess{}(t.segment, x); });
  if (it == terms_.end() || !(it->segment == s)) {
    throw std::logic_error("segment not present in multisegment");
  }
  if (--it->multiplicity == 0) terms_.erase(it);
}

void Multisegment::replace(const Segment& from, const std::optional<Segment>& to) {
  remove(from);
  if (to) add(*to);
}

bool operator<(const Multisegment& x, const Multisegment& y) {
  return std::lexicographical_compare(
      x.terms_.begin(), x.terms_.end(), y.terms_.begin(), y.terms_.end(),
      [](const Multisegment::Term& s, const Multisegment::Term& t) {
        const auto c = left_cmp(s.segment, t.segment);
        if (c != 0) return c < 0;
        return s.multiplicity < t.multiplicity;
      });
}

MultisegmentCrystal::MultisegmentCrystal(int n) : n_(checked_rank(n)) {}

void MultisegmentCrystal::check_index(int i) const {
  if (i < 1 || i > n_) {
    throw std::domain_error("crystal index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n_));
  }
}

void MultisegmentCrystal::validate(const Multisegment& m) const {
  for (const auto& t : m.terms()) {
    if (t.segment.b > n_) {
      throw std::domain_error("segment [" + std::to_string(t.segment.a) + "," +
                              std::to_string(t.segment.b) + "] exceeds rank " +
                              std::to_string(n_));
    }
  }
}

SignatureSeq<Segment> MultisegmentCrystal::left_signature(const Multisegment& m, int i) const {
  check_index(i);
  SignatureSeq<Segment> word;
  // Terms are stored ascending in the left order; read them largest first.
  const auto& terms = m.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Sign sign;
    if (it->segment.a == i) {
      sign = Sign::Minus;
    } else if (it->segment.a == i + 1) {
      sign = Sign::Plus;
    } else {
      continue;
    }
    word.insert(word.end(), static_cast<std::size_t>(it->multiplicity),
                SignatureSymbol<Segment>{sign, it->segment});
  }
  return word;
}

SignatureSeq<Segment> MultisegmentCrystal::right_signature(const Multisegment& m, int i) const {
  check_index(i);
  std::vector<Multisegment::Term> chosen;
  for (const auto& t : m.terms()) {
    if (t.segment.b == i || t.segment.b == i - 1) chosen.push_back(t);
  }
  std::sort(chosen.begin(), chosen.end(), [](const auto& s, const auto& t) {
    return right_cmp(s.segment, t.segment) > 0;
  });
  SignatureSeq<Segment> word;
  for (const auto& t : chosen) {
    const Sign sign = t.segment.b == i ? Sign::Plus : Sign::Minus;
    word.insert(word.end(), static_cast<std::size_t>(t.multiplicity),
                SignatureSymbol<Segment>{sign, t.segment});
  }
  return word;
}

Multisegment MultisegmentCrystal::f(const Multisegment& m, int i) const {
  const auto r = summarize(left_signature(m, i));
  Multisegment out = m;
  if (!r.leftmost_plus) {
    out.add(Segment(i, i));
  } else {
    out.replace(*r.leftmost_plus, Segment(i, r.leftmost_plus->b));
  }
  return out;
}

std::optional<Multisegment> MultisegmentCrystal::e(const Multisegment& m, int i) const {
  const auto r = summarize(left_signature(m, i));
  if (!r.rightmost_minus) return std::nullopt;
  const Segment s = *r.rightmost_minus;
  Multisegment out = m;
  out.replace(s, s.b > i ? std::optional<Segment>(Segment(i + 1, s.b)) : std::nullopt);
  return out;
}

Multisegment MultisegmentCrystal::f_star(const Multisegment& m, int i) const {
  const auto r = summarize(right_signature(m, i));
  Multisegment out = m;
  if (!r.rightmost_minus) {
    out.add(Segment(i, i));
  } else {
    out.replace(*r.rightmost_minus, Segment(r.rightmost_minus->a, i));
  }
  return out;
}

std::optional<Multisegment> MultisegmentCrystal::e_star(const Multisegment& m, int i) const {
  const auto r = summarize(right_signature(m, i));
  if (!r.leftmost_plus) return std::nullopt;
  const Segment s = *r.leftmost_plus;
  Multisegment out = m;
  out.replace(s, s.a < i ? std::optional<Segment>(Segment(s.a, i - 1)) : std::nullopt);
  return out;
}

int MultisegmentCrystal::eps(const Multisegment& m, int i) const {
  return summarize(left_signature(m, i)).minus_count;
}

int MultisegmentCrystal::eps_star(const Multisegment& m, int i) const {
  return summarize(right_signature(m, i)).plus_count;
}

std::int64_t MultisegmentCrystal::phi(const Multisegment& m, int i) const {
  return eps(m, i) + pair(i, wt(m));
}

RootLatticeElem MultisegmentCrystal::wt(const Multisegment& m) const {
  RootLatticeElem w(n_);
  for (const auto& t : m.terms()) {
    w -= static_cast<std::int64_t>(t.multiplicity) *
         RootLatticeElem::root_interval(n_, t.segment.a, t.segment.b);
  }
  return w;
}

int MultisegmentCrystal::height(const Multisegment& m) const {
  int h = 0;
  for (const auto& t : m.terms()) h += t.multiplicity * t.segment.length();
  return h;
}

std::vector<int> MultisegmentCrystal::lowering_word(const Multisegment& m) const {
  std::vector<int> word;
  Multisegment cur = m;
  while (!cur.empty()) {
    bool stepped = false;
    for (int i = 1; i <= n_; ++i) {
      if (auto next = e(cur, i)) {
        word.push_back(i);
        cur = std::move(*next);
        stepped = true;
        break;
      }
    }
    if (!stepped) throw std::logic_error("non-empty multisegment with all eps_i = 0");
  }
  return word;
}

Multisegment MultisegmentCrystal::star(const Multisegment& m) const {
  const auto word = lowering_word(m);
  Multisegment out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = f_star(out, *it);
  return out;
}

}  // namespace extcrystal
