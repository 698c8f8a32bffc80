#ifndef EXTCRYSTAL_ENUMERATE_HPP
#define EXTCRYSTAL_ENUMERATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "extcrystal/affine_a.hpp"
#include "extcrystal/explore.hpp"
#include "extcrystal/multisegment.hpp"

namespace extcrystal {

using Rng = std::mt19937_64;

/// All segments [a,b] with 1 <= a <= b <= n, ascending in the left order.
std::vector<Segment> all_segments(int n);

/// Every multisegment of rank n with height at most max_height.
std::vector<Multisegment> multisegments_up_to(int n, int max_height);

/// Every ext element supported in `window` with total height at most
/// max_height.
std::vector<ExtElement<Multisegment>> ext_elements_up_to(int n, SlotWindow window,
                                                         int max_height);

/// Every weight supported on `support` with total coefficient at most
/// max_total.
std::vector<HLWeight> weights_up_to(const std::vector<HLNode>& support, int max_total);

/// Random multisegment whose height is drawn uniformly from [0, max_height].
Multisegment random_multisegment(int n, int max_height, Rng& rng);

/// Random ext element: a total height drawn uniformly from [0, max_height]
/// is spread over uniformly chosen slots of the window.
ExtElement<Multisegment> random_ext(int n, SlotWindow window, int max_height, Rng& rng);

}  // namespace extcrystal

#endif  // EXTCRYSTAL_ENUMERATE_HPP
