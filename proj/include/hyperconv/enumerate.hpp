#pragma once

#include "hyperconv/space.hpp"

namespace hyperconv {

/// All labeled topologies on n points (equivalently all preorders), or only
/// the T0 ones (posets). Duplicate-free; 1 <= n <= 5.
std::vector<FiniteSpace> enumerate_spaces(int n, bool t0_only);

/// Independent counting oracle: enumerates set families on {0..n-1} closed
/// under union and intersection containing the empty and full sets, directly
/// over all families. Exponential in 2^n; n <= 4.
long count_topologies_by_families(int n, bool t0_only);

}  // namespace hyperconv
