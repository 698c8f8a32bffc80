#include "extcrystal/verify.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "extcrystal/affine_a.hpp"
#include "extcrystal/enumerate.hpp"
#include "extcrystal/ext_crystal.hpp"
#include "extcrystal/invariants.hpp"
#include "extcrystal/parallel.hpp"
#include "extcrystal/text_format.hpp"

namespace extcrystal {

namespace {

using Ext = ExtElement<Multisegment>;
using Crystal = ExtCrystal<MultisegmentCrystal>;
using Check = std::function<std::optional<std::string>(std::size_t)>;

VerifyReport finish(const std::string& suite, std::size_t cases, const VerifyConfig& config,
                    const Check& check) {
  VerifyReport report{suite, cases, std::nullopt};
  if (auto failure = first_failure(cases, config.jobs, check)) {
    report.counterexample = std::move(failure->message);
  }
  return report;
}

// Per-case generator so randomized suites do not depend on the worker count.
Rng case_rng(const VerifyConfig& config, std::size_t idx) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
  return Rng(seq);
}

std::string at(const Ext& c, int i, SlotIndex k) {
  return "c=\"" + format_ext(c) + "\" i=" + std::to_string(i) + " k=" + std::to_string(k);
}

std::string mismatch(const std::string& what, const std::string& got,
                     const std::string& want) {
  return what + ": got \"" + got + "\", expected \"" + want + "\"";
}

RootLatticeElem signed_root(int n, int i, SlotIndex power) {
  auto a = RootLatticeElem::simple_root(n, i);
  return (power % 2 == 0) ? a : -a;
}

VerifyReport cr_commutation(const VerifyConfig& cfg) {
  const Crystal crystal{MultisegmentCrystal(cfg.n)};
  const AffineA model(cfg.n);
  const auto elements = ext_elements_up_to(cfg.n, {cfg.window.lo, cfg.window.hi + 1},
                                           cfg.max_height);
  const std::size_t colors = static_cast<std::size_t>(cfg.n) *
                             static_cast<std::size_t>(cfg.window.hi - cfg.window.lo + 1);
  return finish("cr-commutation", elements.size() * colors, cfg,
                [&](std::size_t idx) -> std::optional<std::string> {
                  const Ext& c = elements[idx / colors];
                  const std::size_t rem = idx % colors;
                  const int i = static_cast<int>(rem % static_cast<std::size_t>(cfg.n)) + 1;
                  const SlotIndex k =
                      cfg.window.lo + static_cast<SlotIndex>(rem / static_cast<std::size_t>(cfg.n));
                  const HLWeight lambda = model.gamma(c);
                  const auto up = model.gamma(crystal.F(c, i, k));
                  const auto up_hl = model.F_hl(lambda, i, k);
                  if (up != up_hl) {
                    return at(c, i, k) + " " +
                           mismatch("gamma(F) vs F_hl(gamma)", format_weight(up),
                                    format_weight(up_hl));
                  }
                  const auto down = model.gamma(crystal.E(c, i, k));
                  const auto down_hl = model.E_hl(lambda, i, k);
                  if (down != down_hl) {
                    return at(c, i, k) + " " +
                           mismatch("gamma(E) vs E_hl(gamma)", format_weight(down),
                                    format_weight(down_hl));
                  }
                  return std::nullopt;
                });
}

// Cases over (element, i, k) with k in [lo - 1, hi + 1].
struct ColoredCases {
  std::vector<Ext> elements;
  int n;
  SlotIndex k_lo;
  std::size_t k_count;

  std::size_t size() const { return elements.size() * static_cast<std::size_t>(n) * k_count; }
  std::tuple<const Ext&, int, SlotIndex> operator[](std::size_t idx) const {
    const std::size_t per = static_cast<std::size_t>(n) * k_count;
    const std::size_t rem = idx % per;
    return {elements[idx / per], static_cast<int>(rem % static_cast<std::size_t>(n)) + 1,
            k_lo + static_cast<SlotIndex>(rem / static_cast<std::size_t>(n))};
  }
};

ColoredCases colored_cases(const VerifyConfig& cfg) {
  return ColoredCases{ext_elements_up_to(cfg.n, cfg.window, cfg.max_height), cfg.n,
                      cfg.window.lo - 1,
                      static_cast<std::size_t>(cfg.window.hi - cfg.window.lo + 3)};
}

VerifyReport inverse_pairs(const VerifyConfig& cfg) {
  const Crystal crystal{MultisegmentCrystal(cfg.n)};
  const auto cases = colored_cases(cfg);
  return finish("inverse-pairs", cases.size(), cfg,
                [&](std::size_t idx) -> std::optional<std::string> {
                  const auto [c, i, k] = cases[idx];
                  if (crystal.E(crystal.F(c, i, k), i, k) != c) return at(c, i, k) + ": E(F(c)) != c";
                  if (crystal.F(crystal.E(c, i, k), i, k) != c) return at(c, i, k) + ": F(E(c)) != c";
                  if (crystal.E_star(crystal.F_star(c, i, k), i, k) != c) {
                    return at(c, i, k) + ": E*(F*(c)) != c";
                  }
                  if (crystal.F_star(crystal.E_star(c, i, k), i, k) != c) {
                    return at(c, i, k) + ": F*(E*(c)) != c";
                  }
                  return std::nullopt;
                });
}

std::optional<std::string> element_properties(const Crystal& crystal, const Ext& c) {
  const auto flipped = crystal.star_flip(c);
  if (crystal.star_flip(flipped) != c) return "c=\"" + format_ext(c) + "\": star_flip not an involution";
  if (crystal.hwt(flipped) != crystal.hwt(c)) {
    return "c=\"" + format_ext(c) + "\": star_flip changes the weight";
  }
  const auto path = crystal.path_to_highest(c);
  if (static_cast<int>(path.size()) != crystal.height(c)) {
    return "c=\"" + format_ext(c) + "\": path length " + std::to_string(path.size()) +
           " differs from height " + std::to_string(crystal.height(c));
  }
  Ext walk = c;
  for (const auto& step : path) walk = crystal.E(walk, step.i, step.k);
  if (!walk.is_highest()) return "c=\"" + format_ext(c) + "\": path does not reach 1";
  return std::nullopt;
}

VerifyReport ext_properties(const VerifyConfig& cfg) {
  const Crystal crystal{MultisegmentCrystal(cfg.n)};
  const auto cases = colored_cases(cfg);
  const int n = cfg.n;
  return finish(
      "ext-properties", cases.size(), cfg, [&](std::size_t idx) -> std::optional<std::string> {
        const auto [c, i, k] = cases[idx];
        if (i == 1 && k == cases.k_lo) {
          if (auto err = element_properties(crystal, c)) return err;
        }
        const auto F = crystal.F(c, i, k);
        const auto E = crystal.E(c, i, k);
        const auto Fs = crystal.F_star(c, i, k);
        const auto Es = crystal.E_star(c, i, k);
        if (crystal.eps_hat(F, i, k) != crystal.eps_hat(c, i, k) + 1) {
          return at(c, i, k) + ": eps_hat(F) != eps_hat + 1";
        }
        if (crystal.eps_hat(E, i, k) != crystal.eps_hat(c, i, k) - 1) {
          return at(c, i, k) + ": eps_hat(E) != eps_hat - 1";
        }
        if (crystal.eps_hat_star(Fs, i, k) != crystal.eps_hat_star(c, i, k) + 1) {
          return at(c, i, k) + ": eps_hat*(F*) != eps_hat* + 1";
        }
        if (crystal.eps_hat_star(Es, i, k) != crystal.eps_hat_star(c, i, k) - 1) {
          return at(c, i, k) + ": eps_hat*(E*) != eps_hat* - 1";
        }
        if (crystal.hwt(F) != crystal.hwt(c) + signed_root(n, i, k + 1)) {
          return at(c, i, k) + ": hwt(F) != hwt + (-1)^(k+1) alpha_i";
        }
        if (crystal.hwt(E) != crystal.hwt(c) + signed_root(n, i, k)) {
          return at(c, i, k) + ": hwt(E) != hwt + (-1)^k alpha_i";
        }
        const auto flipped = crystal.star_flip(c);
        if (crystal.eps_hat(flipped, i, -k) != -crystal.eps_hat(c, i, k - 1)) {
          return at(c, i, k) + ": eps_hat*_{i,k} != -eps_hat_{i,k-1}";
        }
        if (crystal.star_flip(crystal.F(flipped, i, -k)) != Fs) {
          return at(c, i, k) + ": F* differs from its star_flip conjugate definition";
        }
        if (crystal.star_flip(crystal.E(flipped, i, -k)) != Es) {
          return at(c, i, k) + ": E* differs from its star_flip conjugate definition";
        }
        if (Fs != crystal.E(c, i, k - 1)) return at(c, i, k) + ": F*_{i,k} != E_{i,k-1}";
        if (Es != crystal.F(c, i, k - 1)) return at(c, i, k) + ": E*_{i,k} != F_{i,k-1}";
        for (SlotIndex t : {-2, -1, 1, 3}) {
          if (shift(F, t) != crystal.F(shift(c, t), i, k + t)) {
            return at(c, i, k) + ": D^" + std::to_string(t) + " does not commute with F";
          }
          if (shift(Fs, t) != crystal.F_star(shift(c, t), i, k + t)) {
            return at(c, i, k) + ": D^" + std::to_string(t) + " does not commute with F*";
          }
        }
        return std::nullopt;
      });
}

VerifyReport binf_axioms(const VerifyConfig& cfg) {
  const MultisegmentCrystal crystal(cfg.n);
  const int n = cfg.n;
  return finish(
      "binf-axioms", cfg.random_cases, cfg, [&](std::size_t idx) -> std::optional<std::string> {
        Rng rng = case_rng(cfg, idx);
        const Multisegment m = random_multisegment(n, cfg.max_height, rng);
        const std::string where = "m=\"" + format_multisegment(m) + "\"";
        const Multisegment s = crystal.star(m);
        if (crystal.star(s) != m) return where + ": star is not an involution";
        if (crystal.wt(s) != crystal.wt(m)) return where + ": star changes the weight";
        for (int i = 1; i <= n; ++i) {
          const std::string here = where + " i=" + std::to_string(i);
          const auto alpha = RootLatticeElem::simple_root(n, i);
          const auto up = crystal.f(m, i);
          if (crystal.e(up, i) != m) return here + ": e(f(m)) != m";
          if (crystal.eps(up, i) != crystal.eps(m, i) + 1) return here + ": eps(f(m)) != eps + 1";
          if (crystal.phi(up, i) != crystal.phi(m, i) - 1) return here + ": phi(f(m)) != phi - 1";
          if (crystal.wt(up) != crystal.wt(m) - alpha) return here + ": wt(f(m)) != wt - alpha_i";
          if (auto down = crystal.e(m, i); down && crystal.f(*down, i) != m) {
            return here + ": f(e(m)) != m";
          }
          const auto up_star = crystal.f_star(m, i);
          if (crystal.e_star(up_star, i) != m) return here + ": e*(f*(m)) != m";
          if (crystal.eps_star(up_star, i) != crystal.eps_star(m, i) + 1) {
            return here + ": eps*(f*(m)) != eps* + 1";
          }
          if (crystal.wt(up_star) != crystal.wt(m) - alpha) return here + ": wt(f*(m)) != wt - alpha_i";
          if (auto down = crystal.e_star(m, i); down && crystal.f_star(*down, i) != m) {
            return here + ": f*(e*(m)) != m";
          }
          int string_len = 0;
          for (auto cur = crystal.e(m, i); cur; cur = crystal.e(*cur, i)) ++string_len;
          if (string_len != crystal.eps(m, i)) return here + ": eps differs from e-string length";
          int star_len = 0;
          for (auto cur = crystal.e_star(m, i); cur; cur = crystal.e_star(*cur, i)) ++star_len;
          if (star_len != crystal.eps_star(m, i)) return here + ": eps* differs from e*-string length";
          if (crystal.eps(s, i) != crystal.eps_star(m, i)) return here + ": eps(*m) != eps*(m)";
        }
        return std::nullopt;
      });
}

VerifyReport root_axiom(const VerifyConfig& cfg) {
  const Crystal crystal{MultisegmentCrystal(cfg.n)};
  const CartanA cartan(cfg.n);
  const int n = cfg.n;
  constexpr SlotIndex kReach = 5;
  const std::size_t ks = 2 * kReach + 1;
  return finish("root-axiom", static_cast<std::size_t>(n * n) * ks, cfg,
                [&](std::size_t idx) -> std::optional<std::string> {
                  const int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * ks)) + 1;
                  const std::size_t rem = idx % (static_cast<std::size_t>(n) * ks);
                  const int j = static_cast<int>(rem / ks) + 1;
                  const SlotIndex k = static_cast<SlotIndex>(rem % ks) - kReach;
                  const Ext c = Ext::single(0, Multisegment{Segment(j, j)});
                  std::int64_t want = 0;
                  if (i == j) {
                    want = (k == 1 || k == -1) ? 1 : 0;
                  } else if (k == 0) {
                    want = -cartan.entry(i, j);
                  }
                  const auto got = de(crystal, InvariantQuery<Multisegment>{i, k, c});
                  if (got != want) {
                    return at(c, i, k) + ": d = " + std::to_string(got) + ", expected " +
                           std::to_string(want);
                  }
                  return std::nullopt;
                });
}

VerifyReport invariant_identities(const VerifyConfig& cfg) {
  const Crystal crystal{MultisegmentCrystal(cfg.n)};
  return finish(
      "invariants", cfg.random_cases, cfg, [&](std::size_t idx) -> std::optional<std::string> {
        Rng rng = case_rng(cfg, idx);
        const Ext c = random_ext(cfg.n, cfg.window, cfg.max_height, rng);
        const int i = std::uniform_int_distribution<int>(1, cfg.n)(rng);
        const SlotIndex k =
            std::uniform_int_distribution<SlotIndex>(cfg.window.lo - 1, cfg.window.hi + 1)(rng);
        const SlotIndex t = std::uniform_int_distribution<SlotIndex>(-3, 3)(rng);
        const InvariantQuery<Multisegment> q{i, k, c};
        const auto left = lambda_left(crystal, q);
        const auto right = lambda_right(crystal, q);
        const auto d = de(crystal, q);
        if (left + right != 2 * d) return at(c, i, k) + ": Lambda + Lambda' != 2d";
        if ((left - right) % 2 != 0) return at(c, i, k) + ": Lambda and Lambda' differ in parity";
        const InvariantQuery<Multisegment> moved{i, k + t, shift(c, t)};
        if (de(crystal, moved) != d || lambda_left(crystal, moved) != left ||
            lambda_right(crystal, moved) != right) {
          return at(c, i, k) + ": invariants not covariant under D^" + std::to_string(t);
        }
        return std::nullopt;
      });
}

VerifyReport sig_seq(const VerifyConfig& cfg) {
  const MultisegmentCrystal ms(cfg.n);
  const AffineA model(cfg.n);
  auto support = model.block(0);
  const auto upper = model.block(1);
  support.insert(support.end(), upper.begin(), upper.end());
  const auto weights = weights_up_to(support, cfg.max_height);
  const auto n = static_cast<std::size_t>(cfg.n);
  return finish(
      "sig-seq", weights.size() * n, cfg, [&](std::size_t idx) -> std::optional<std::string> {
        const HLWeight& lambda = weights[idx / n];
        const int i = static_cast<int>(idx % n) + 1;
        const Ext c = model.gamma_inv(lambda);
        const auto list = model.s_blocks(i, 0);
        const auto hl = model.hl_signature(lambda, i, 0);
        const auto right = ms.right_signature(c.slot(1), i);
        const auto left = ms.left_signature(c.slot(0), i);
        const std::string where =
            "lambda=\"" + format_weight(lambda) + "\" i=" + std::to_string(i);
        if (right.size() + left.size() != hl.size()) return where + ": signature lengths differ";
        for (std::size_t pos = 0; pos < hl.size(); ++pos) {
          const bool from_right = pos < right.size();
          const auto& sym = from_right ? right[pos] : left[pos - right.size()];
          const HLNode node = model.gamma_seg(sym.source, from_right ? 1 : 0);
          if (sym.sign != hl[pos].sign || node != list.at(hl[pos].source).node) {
            return where + ": symbol " + std::to_string(pos) + " differs";
          }
        }
        return std::nullopt;
      });
}

VerifyReport dual_cr(const VerifyConfig& cfg) {
  const AffineA model(cfg.n);
  const int n = cfg.n;
  return finish(
      "dual-cr", cfg.random_cases, cfg, [&](std::size_t idx) -> std::optional<std::string> {
        Rng rng = case_rng(cfg, idx);
        const int i = std::uniform_int_distribution<int>(1, n)(rng);
        const SlotIndex k =
            std::uniform_int_distribution<SlotIndex>(cfg.window.lo, cfg.window.hi)(rng);
        const auto lower = model.s_blocks(i, k);
        const auto upper = model.s_blocks(i, k + 1);
        const std::string where = "i=" + std::to_string(i) + " k=" + std::to_string(k);
        for (int t = 1; t <= lower.size(); ++t) {
          if (model.dual_node(lower.at(t).node, 1) != upper.at(t).node ||
              lower.at(t).sign != upper.at(t).sign) {
            return where + ": D(S_{i,k}) != S_{i,k+1} at a_" + std::to_string(t);
          }
        }
        const HLWeight lambda = model.gamma(random_ext(n, cfg.window, cfg.max_height, rng));
        const auto lhs = model.dual_weight(model.F_hl(lambda, i, k), 1);
        const auto rhs = model.F_hl(model.dual_weight(lambda, 1), i, k + 1);
        if (lhs != rhs) {
          return "lambda=\"" + format_weight(lambda) + "\" " + where + " " +
                 mismatch("D(F(lambda)) vs F(D(lambda))", format_weight(lhs), format_weight(rhs));
        }
        return std::nullopt;
      });
}

const std::map<std::string, VerifyReport (*)(const VerifyConfig&)>& registry() {
  static const std::map<std::string, VerifyReport (*)(const VerifyConfig&)> suites{
      {"cr-commutation", &cr_commutation}, {"inverse-pairs", &inverse_pairs},
      {"ext-properties", &ext_properties}, {"binf-axioms", &binf_axioms},
      {"root-axiom", &root_axiom},         {"invariants", &invariant_identities},
      {"sig-seq", &sig_seq},               {"dual-cr", &dual_cr},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cr-commutation", "inverse-pairs",
                                              "ext-properties", "binf-axioms",
                                              "root-axiom",     "invariants",
                                              "sig-seq",        "dual-cr"};
  return names;
}

VerifyReport run_suite(const std::string& name, const VerifyConfig& config) {
  checked_rank(config.n);
  if (config.window.empty()) throw std::domain_error("empty slot window");
  if (config.max_height < 0) throw std::domain_error("negative height bound");
  const auto& suites = registry();
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(config);
}

}  // namespace extcrystal
