#ifndef EXTCRYSTAL_VERIFY_HPP
#define EXTCRYSTAL_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extcrystal/explore.hpp"

namespace extcrystal {

struct VerifyConfig {
  int n = 3;
  SlotWindow window{-2, 2};
  int max_height = 4;
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Number of cases for the randomized suites.
  std::size_t random_cases = 10000;
};

struct VerifyReport {
  std::string suite;
  std::size_t cases = 0;
  /// First violation in the order the suite enumerates, printed in the
  /// same grammar the CLI parser accepts.
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample; }
};

/// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws std::invalid_argument for an unknown name.
///
///   cr-commutation  gamma intertwines F_{i,k}/E_{i,k} with F_hl/E_hl, for
///                   colors k in the window and elements supported on
///                   [lo, hi + 1]
///   inverse-pairs   E.F = F.E = id and E*.F* = F*.E* = id
///   ext-properties  counters, weights, star identities, shift, star_flip,
///                   connectedness
///   binf-axioms     randomized crystal axioms on multisegments
///   root-axiom      d(D^k R_i, R_j) reproduces the duality-datum values
///   invariants      2d = Lambda + Lambda', parity, shift covariance
///   sig-seq         concatenated multisegment signatures equal the (i,0)
///                   signature of the weight
///   dual-cr         D(S_{i,k}) = S_{i,k+1} and D.F_{i,k} = F_{i,k+1}.D
VerifyReport run_suite(const std::string& name, const VerifyConfig& config);

}  // namespace extcrystal

#endif  // EXTCRYSTAL_VERIFY_HPP
