#include "hyperconv/enumerate.hpp"

namespace hyperconv {

std::vector<FiniteSpace> enumerate_spaces(int n, bool t0_only) {
  if (n < 1 || n > 5) fail(ErrorKind::SizeTooLarge, "enumeration supports 1..5 points");
  const PointSet full = static_cast<PointSet>(full_mask(n));
  std::vector<PointSet> above(static_cast<size_t>(n));
  std::vector<FiniteSpace> out;

  // odometer over the up-sets of each point
  auto build = [&]() {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (!((above[static_cast<size_t>(x)] >> y) & 1u)) continue;
        if (!subset(above[static_cast<size_t>(y)], above[static_cast<size_t>(x)])) return;  // not transitive
        if (t0_only && x != y && ((above[static_cast<size_t>(y)] >> x) & 1u)) return;       // not antisymmetric
      }
    }
    std::vector<PointSet> opens;
    for (PointSet s = 0;; ++s) {
      bool up_closed = true;
      for_each_bit(s, [&](int x) {
        if (!subset(above[static_cast<size_t>(x)], s)) up_closed = false;
      });
      if (up_closed) opens.push_back(s);
      if (s == full) break;
    }
    out.push_back(FiniteSpace::from_opens(n, std::move(opens)));
  };

  for (int x = 0; x < n; ++x) above[static_cast<size_t>(x)] = PointSet{1} << x;
  while (true) {
    build();
    int x = 0;
    for (; x < n; ++x) {
      PointSet& a = above[static_cast<size_t>(x)];
      PointSet self = PointSet{1} << x;
      PointSet rest = full & ~self;
      PointSet free_part = a & rest;
      if (free_part != rest) {
        free_part = (free_part - rest) & rest;  // next submask of rest
        a = self | free_part;
        break;
      }
      a = self;
    }
    if (x == n) break;
  }
  return out;
}

long count_topologies_by_families(int n, bool t0_only) {
  if (n < 1 || n > 4) fail(ErrorKind::SizeTooLarge, "family oracle supports 1..4 points");
  const int subsets = 1 << n;
  const PointSet full = static_cast<PointSet>(full_mask(n));
  long count = 0;
  // families over the power set, one bit per subset
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    if (!(fam & 1) || !(fam & (std::uint64_t{1} << full))) continue;  // empty and full sets
    bool closed = true;
    for (int a = 0; a < subsets && closed; ++a) {
      if (!(fam & (std::uint64_t{1} << a))) continue;
      for (int b = a + 1; b < subsets && closed; ++b) {
        if (!(fam & (std::uint64_t{1} << b))) continue;
        if (!(fam & (std::uint64_t{1} << (a | b))) || !(fam & (std::uint64_t{1} << (a & b)))) closed = false;
      }
    }
    if (!closed) continue;
    if (t0_only) {
      bool t0 = true;
      for (int x = 0; x < n && t0; ++x) {
        for (int y = x + 1; y < n && t0; ++y) {
          bool separated = false;
          for (int a = 0; a < subsets; ++a) {
            if (!(fam & (std::uint64_t{1} << a))) continue;
            if (((a >> x) & 1) != ((a >> y) & 1)) separated = true;
          }
          if (!separated) t0 = false;
        }
      }
      if (!t0) continue;
    }
    ++count;
  }
  return count;
}

}  // namespace hyperconv
