#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hyperconv {

// Subset of the points of a space, one bit per point.
using PointSet = std::uint32_t;

// Subset of a convergence carrier (opens, maps, ...), one bit per element.
using Mask64 = std::uint64_t;

inline int popcount(std::uint64_t v) { return std::popcount(v); }

inline bool subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

inline Mask64 full_mask(int m) { return m >= 64 ? ~Mask64{0} : (Mask64{1} << m) - 1; }

inline Mask64 bit(int i) { return Mask64{1} << i; }

// Applies fn to each set bit index, lowest first.
template <class F>
void for_each_bit(std::uint64_t v, F&& fn) {
  while (v) {
    int i = std::countr_zero(v);
    fn(i);
    v &= v - 1;
  }
}

inline std::vector<int> bit_indices(std::uint64_t v) {
  std::vector<int> out;
  for_each_bit(v, [&](int i) { out.push_back(i); });
  return out;
}

// All subsets of `mask`, including 0, in increasing numeric order.
template <class F>
void for_each_submask(std::uint64_t mask, F&& fn) {
  std::uint64_t s = 0;
  while (true) {
    fn(s);
    if (s == mask) break;
    s = (s - mask) & mask;
  }
}

}  // namespace hyperconv
