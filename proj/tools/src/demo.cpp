#include "demo.hpp"

#include <iomanip>
#include <string>
#include <vector>

#include "extcrystal/affine_a.hpp"
#include "extcrystal/text_format.hpp"

namespace extcrystal::tools {

namespace {

struct Expected {
  int i;
  SlotIndex k;
  std::vector<HLNode> list;  // a_{2n}, ..., a_1
  std::string reduced;       // by position a_{2n} ... a_1
  HLWeight image;
};

// Reduced signature grouped by position, largest position first; "·" marks
// positions with nothing left.
std::string reduced_by_position(const SignatureSeq<int>& word, int positions) {
  std::vector<std::string> cells(static_cast<std::size_t>(positions) + 1);
  for (const auto idx : surviving_positions(word)) {
    cells[static_cast<std::size_t>(word[idx].source)] += static_cast<char>(word[idx].sign);
  }
  std::string out;
  for (int t = positions; t >= 1; --t) {
    if (!out.empty()) out += ' ';
    out += cells[static_cast<std::size_t>(t)].empty() ? "·" : cells[static_cast<std::size_t>(t)];
  }
  return out;
}

bool replay(const AffineA& model, const HLWeight& lambda, const Expected& want,
            std::ostream& out) {
  bool ok = true;
  const auto list = model.s_blocks(want.i, want.k);
  out << "S_{" << want.i << "," << want.k << "}  (position, node, label, coefficient, signs)\n";
  std::vector<HLNode> got_list;
  for (int t = list.size(); t >= 1; --t) {
    const auto& e = list.at(t);
    got_list.push_back(e.node);
    const auto c = lambda.coeff(e.node);
    out << "  a" << t << "  " << std::left << std::setw(8) << format_node(e.node)
        << std::setw(16) << psi_label(e.node) << c << "  "
        << (c == 0 ? std::string("·") : std::string(static_cast<std::size_t>(c),
                                                       static_cast<char>(e.sign)))
        << "\n";
  }
  if (got_list != want.list) {
    out << "  MISMATCH: S-list differs from the expected order\n";
    ok = false;
  }
  const auto word = model.hl_signature(lambda, want.i, want.k);
  const auto reduced = reduced_by_position(word, list.size());
  out << "  signature          " << signs_of(word) << "\n";
  out << "  reduced signature  " << reduced << "\n";
  if (reduced != want.reduced) {
    out << "  MISMATCH: expected reduced signature " << want.reduced << "\n";
    ok = false;
  }
  const auto image = model.F_hl(lambda, want.i, want.k);
  out << "  F_{" << want.i << "," << want.k << "}(lambda) = " << format_weight(image) << "\n";
  if (image != want.image) {
    out << "  MISMATCH: expected " << format_weight(want.image) << "\n";
    ok = false;
  }
  return ok;
}

}  // namespace

bool run_demo_n3(std::ostream& out) {
  const AffineA model(3);
  const HLWeight lambda =
      parse_weight("(3,-4),(3,-2),2*(2,-1),(1,-2),(1,2),(2,1),(2,3),2*(3,4),(2,5),(2,7)");
  out << "n = 3\nlambda = " << format_weight(lambda) << "\n\n";

  HLWeight first = lambda;
  first.remove({3, 4});
  HLWeight second = lambda;
  second.remove({2, -1});
  second.add({1, -2});

  const std::vector<Expected> cases{
      {1, 0, {{3, 4}, {3, 2}, {2, 3}, {2, 1}, {1, 2}, {1, 0}}, "++ · · · + ·", first},
      {1, -1, {{1, 0}, {1, -2}, {2, -1}, {2, -3}, {3, -2}, {3, -4}}, "· - ++ · · ·", second},
  };
  bool ok = true;
  for (const auto& c : cases) {
    ok = replay(model, lambda, c, out) && ok;
    out << "\n";
  }
  out << (ok ? "demo-n3: all values match\n" : "demo-n3: MISMATCH\n");
  return ok;
}

}  // namespace extcrystal::tools
