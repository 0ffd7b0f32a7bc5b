#pragma once

#include <boost/rational.hpp>
#include <string>
#include <string_view>

namespace torsion {

// All phase arithmetic is exact. Values stay tiny (grid breakpoints and
// slope compactifications), so a machine-word rational is plenty.
using Rat = boost::rational<long long>;

inline Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

// "p/q" with q omitted when 1; never decimals.
std::string rat_str(const Rat& r);

// Accepts "p" or "p/q" with optional leading sign. Throws std::invalid_argument.
Rat parse_rat(std::string_view s);

}  // namespace torsion
