#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hyperconv/error.hpp"

namespace hyperconv {

// All region arithmetic is exact; equality of regions must be decidable.
using Rat = boost::multiprecision::cpp_rational;

/// One nonempty interval with rational or infinite endpoints.
struct Interval {
  std::optional<Rat> lo;  // nullopt = -infinity
  std::optional<Rat> hi;  // nullopt = +infinity
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval open(Rat a, Rat b) { return {std::move(a), std::move(b), false, false}; }
  static Interval closed(Rat a, Rat b) { return {std::move(a), std::move(b), true, true}; }
  static Interval point(Rat a) { return {a, a, true, true}; }
  static Interval below(Rat b, bool closed) { return {std::nullopt, std::move(b), false, closed}; }
  static Interval above(Rat a, bool closed) { return {std::move(a), std::nullopt, closed, false}; }
  static Interval line() { return {std::nullopt, std::nullopt, false, false}; }

  bool empty() const;
  bool contains(const Rat& v) const;
  bool operator==(const Interval& o) const = default;
};

/// A finite union of intervals in canonical form: sorted, disjoint, and not
/// mergeable. Canonical form makes equality a vector comparison.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(std::initializer_list<Interval> parts) : IntervalSet(std::vector<Interval>(parts)) {}
  explicit IntervalSet(std::vector<Interval> parts);

  static IntervalSet empty() { return IntervalSet(); }
  static IntervalSet line() { return IntervalSet({Interval::line()}); }
  static IntervalSet point(Rat a) { return IntervalSet({Interval::point(std::move(a))}); }

  bool is_empty() const { return parts_.empty(); }
  const std::vector<Interval>& parts() const { return parts_; }
  bool contains(const Rat& v) const;

  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet complement() const;
  bool subset_of(const IntervalSet& o) const { return intersect(o) == *this; }
  bool operator==(const IntervalSet& o) const { return parts_ == o.parts_; }

  /// Image under t -> scale*t + shift with scale > 0 (throws NonPositiveSlope).
  IntervalSet affine(const Rat& scale, const Rat& shift) const;

  /// Finite endpoint values, for grid refinement.
  std::vector<Rat> endpoints() const;

  std::string describe() const;

 private:
  std::vector<Interval> parts_;
};

}  // namespace hyperconv
