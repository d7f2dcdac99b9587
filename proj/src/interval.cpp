#include "hyperconv/interval.hpp"

#include <algorithm>
#include <sstream>

namespace hyperconv {

bool Interval::empty() const {
  if (!lo || !hi) return false;
  if (*lo < *hi) return false;
  if (*lo > *hi) return true;
  return !(lo_closed && hi_closed);
}

bool Interval::contains(const Rat& v) const {
  if (lo) {
    if (v < *lo) return false;
    if (v == *lo && !lo_closed) return false;
  }
  if (hi) {
    if (v > *hi) return false;
    if (v == *hi && !hi_closed) return false;
  }
  return true;
}

namespace {

// Order of lower bounds; a closed bound starts earlier than an open one.
bool lo_less(const Interval& a, const Interval& b) {
  if (!a.lo) return b.lo.has_value();
  if (!b.lo) return false;
  if (*a.lo != *b.lo) return *a.lo < *b.lo;
  return a.lo_closed && !b.lo_closed;
}

// True when a and b overlap or touch without a gap, assuming a starts first.
bool joinable(const Interval& a, const Interval& b) {
  if (!a.hi || !b.lo) return true;
  if (*a.hi > *b.lo) return true;
  if (*a.hi < *b.lo) return false;
  return a.hi_closed || b.lo_closed;
}

// Later upper bound of two joinable intervals.
void extend_hi(Interval& a, const Interval& b) {
  if (!a.hi) return;
  if (!b.hi) {
    a.hi.reset();
    a.hi_closed = false;
    return;
  }
  if (*b.hi > *a.hi || (*b.hi == *a.hi && b.hi_closed)) {
    a.hi = b.hi;
    a.hi_closed = b.hi_closed;
  }
}

Interval intersect_parts(const Interval& a, const Interval& b) {
  Interval out;
  if (!a.lo) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else if (!b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed;
  } else if (*a.lo > *b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed;
  } else if (*a.lo < *b.lo) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (!a.hi) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else if (!b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed;
  } else if (*a.hi < *b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed;
  } else if (*a.hi > *b.hi) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  }
  return out;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const Interval& i) { return i.empty(); }),
              parts.end());
  std::sort(parts.begin(), parts.end(), lo_less);
  for (const Interval& next : parts) {
    if (!parts_.empty() && joinable(parts_.back(), next))
      extend_hi(parts_.back(), next);
    else
      parts_.push_back(next);
  }
}

bool IntervalSet::contains(const Rat& v) const {
  for (const Interval& i : parts_)
    if (i.contains(v)) return true;
  return false;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  std::vector<Interval> out;
  for (const Interval& a : parts_)
    for (const Interval& b : o.parts_) out.push_back(intersect_parts(a, b));
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement() const {
  std::vector<Interval> out;
  std::optional<Rat> prev_hi;  // start of the pending gap
  bool prev_closed = false;
  bool at_start = true;
  for (const Interval& i : parts_) {
    Interval gap;
    if (at_start) {
      if (i.lo) out.push_back(Interval{std::nullopt, i.lo, false, !i.lo_closed});
    } else {
      out.push_back(Interval{prev_hi, i.lo, !prev_closed, !i.lo_closed});
    }
    at_start = false;
    prev_hi = i.hi;
    prev_closed = i.hi_closed;
    if (!i.hi) return IntervalSet(std::move(out));  // nothing after an unbounded part
  }
  if (at_start) return line();
  out.push_back(Interval{prev_hi, std::nullopt, !prev_closed, false});
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::affine(const Rat& scale, const Rat& shift) const {
  if (scale <= 0) fail(ErrorKind::NonPositiveSlope, "affine map must be strictly increasing");
  std::vector<Interval> out;
  for (Interval i : parts_) {
    if (i.lo) i.lo = scale * *i.lo + shift;
    if (i.hi) i.hi = scale * *i.hi + shift;
    out.push_back(std::move(i));
  }
  return IntervalSet(std::move(out));
}

std::vector<Rat> IntervalSet::endpoints() const {
  std::vector<Rat> out;
  for (const Interval& i : parts_) {
    if (i.lo) out.push_back(*i.lo);
    if (i.hi) out.push_back(*i.hi);
  }
  return out;
}

std::string IntervalSet::describe() const {
  if (parts_.empty()) return "{}";
  std::ostringstream os;
  for (size_t k = 0; k < parts_.size(); ++k) {
    const Interval& i = parts_[k];
    if (k) os << " u ";
    os << (i.lo_closed ? "[" : "(");
    if (i.lo)
      os << i.lo->str();
    else
      os << "-inf";
    os << ",";
    if (i.hi)
      os << i.hi->str();
    else
      os << "+inf";
    os << (i.hi_closed ? "]" : ")");
  }
  return os.str();
}

}  // namespace hyperconv
