#ifndef EXTCRYSTAL_TOOLS_DEMO_HPP
#define EXTCRYSTAL_TOOLS_DEMO_HPP

#include <ostream>

namespace extcrystal::tools {

/// Replays the rank-3 signature example. Returns true when every printed
/// value matches the expected one.
bool run_demo_n3(std::ostream& out);

}  // namespace extcrystal::tools

#endif  // EXTCRYSTAL_TOOLS_DEMO_HPP
