#pragma once

#include "hyperconv/interval.hpp"

namespace hyperconv {

/// A product constraint, one interval set per component; an unconstrained
/// component is the whole line.
struct Cylinder {
  std::vector<IntervalSet> comps;

  static Cylinder free(int dim) { return Cylinder{std::vector<IntervalSet>(static_cast<size_t>(dim), IntervalSet::line())}; }
  int dim() const { return static_cast<int>(comps.size()); }
  bool is_empty() const;
  bool contains(const std::vector<Rat>& v) const;
  bool subset_of(const Cylinder& o) const;  // component-wise
  bool operator==(const Cylinder& o) const { return comps == o.comps; }
};

/// A finite union of cylinders; the model of a subset of C(X,R) with one
/// rational coordinate per comparability component. Cylinders are kept
/// non-redundant; equality and containment are decided exactly on a common
/// refinement grid.
class Region {
 public:
  explicit Region(int dim) : dim_(dim) {}
  Region(int dim, std::vector<Cylinder> cylinders);

  static Region whole(int dim) { return Region(dim, {Cylinder::free(dim)}); }
  static Region nothing(int dim) { return Region(dim); }

  int dim() const { return dim_; }
  const std::vector<Cylinder>& cylinders() const { return cylinders_; }
  bool is_empty() const { return cylinders_.empty(); }
  bool contains(const std::vector<Rat>& v) const;

  Region unite(const Region& o) const;
  Region intersect(const Region& o) const;

  std::string describe() const;

 private:
  void canonicalize();
  int dim_;
  std::vector<Cylinder> cylinders_;
};

bool region_subset(const Region& a, const Region& b);
bool region_equal(const Region& a, const Region& b);

/// Image under a strictly increasing affine map applied to every component.
Region region_affine(const Region& r, const Rat& scale, const Rat& shift);

}  // namespace hyperconv
