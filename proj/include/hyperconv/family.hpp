#pragma once

#include <span>
#include <string>
#include <vector>

#include "hyperconv/space.hpp"

namespace hyperconv {

/// Cached inclusion structure of the opens of a space, indexed like
/// space.opens(). Sets of opens ("open families", "hypersets") are Mask64
/// values over these indices throughout.
class OpensLattice {
 public:
  explicit OpensLattice(const FiniteSpace& space);

  const FiniteSpace& space() const { return *space_; }
  int size() const { return static_cast<int>(sup_.size()); }
  Mask64 all() const { return full_mask(size()); }
  Mask64 supersets(int open_idx) const { return sup_[static_cast<size_t>(open_idx)]; }
  Mask64 subsets(int open_idx) const { return sub_[static_cast<size_t>(open_idx)]; }
  Mask64 opens_containing(PointSet s) const;  // the family O_X(s)

  Mask64 up_close(Mask64 family) const;
  Mask64 down_close(Mask64 family) const;
  bool is_up_closed(Mask64 family) const { return up_close(family) == family; }

  PointSet union_of(Mask64 family) const;
  PointSet intersection_of(Mask64 family) const;  // full set for the empty family

 private:
  const FiniteSpace* space_;
  std::vector<Mask64> sup_, sub_;
};

/// An openly isotone family of opens, canonically stored as the antichain of
/// its minimal members. Denotes {U open : exists m in minimals, m <= U}.
class IsotoneFamily {
 public:
  static IsotoneFamily from_minimals(const FiniteSpace& space, std::vector<PointSet> minimals);
  /// Union of O_X(D) over the generating sets D (which need not be open).
  static IsotoneFamily from_generators(const FiniteSpace& space, std::span<const PointSet> generators);
  /// From an up-closed set of opens; throws NotIsotone otherwise.
  static IsotoneFamily from_members(const OpensLattice& lat, Mask64 members);
  static IsotoneFamily empty(const FiniteSpace& space) { return from_minimals(space, {}); }
  static IsotoneFamily whole(const FiniteSpace& space) { return from_minimals(space, {0}); }

  const FiniteSpace& space() const { return *space_; }
  const std::vector<PointSet>& minimals() const { return minimals_; }
  bool is_empty() const { return minimals_.empty(); }
  bool contains(PointSet open) const;  // membership via the antichain
  Mask64 members(const OpensLattice& lat) const;

  IsotoneFamily intersect(const IsotoneFamily& other) const;
  bool operator==(const IsotoneFamily& o) const { return minimals_ == o.minimals_; }
  bool operator<(const IsotoneFamily& o) const { return minimals_ < o.minimals_; }

  std::string describe() const;

 private:
  const FiniteSpace* space_ = nullptr;
  std::vector<PointSet> minimals_;  // sorted antichain
};

/// All sets of pairwise inclusion-incomparable opens.
std::vector<Mask64> all_antichain_masks(const OpensLattice& lat);
/// All up-closed sets of opens (the isotone families, as member masks).
std::vector<Mask64> all_up_sets(const OpensLattice& lat);

/// Literal compactness: every set of opens whose union lies in the family has
/// a finite subfamily whose union lies in it. Only inclusion-maximal
/// candidate subfamilies (antichains) are tested; dropping non-maximal
/// members changes neither the union nor the searched subfamilies.
bool is_compact_family(const IsotoneFamily& family);

/// A collection of isotone families (a "hyperspace topology subbase").
struct AlphaCollection {
  const FiniteSpace* space = nullptr;
  std::vector<IsotoneFamily> families;  // sorted, duplicate-free
  std::string label;                    // p, k, kappa, s, or custom

  bool non_degenerate() const;  // has a nonempty member family
  bool contains(const IsotoneFamily& f) const;
};

AlphaCollection make_alpha(const FiniteSpace& space, std::vector<IsotoneFamily> families,
                           std::string label = "custom");

struct StandardAlphas {
  AlphaCollection p;      // generated by sets of finite subsets
  AlphaCollection k;      // generated by sets of (literally checked) compact subsets
  AlphaCollection kappa;  // all compact isotone families
  AlphaCollection s;      // {O(x) : x in X}, one entry per point
};

/// Each collection computed from its own definition; on finite spaces the
/// harness separately asserts p = k = kappa.
StandardAlphas standard_alphas(const FiniteSpace& space);

/// Closure of the collection under pairwise family intersection.
AlphaCollection intersection_closure(const AlphaCollection& alpha);

bool collections_equal_as_sets(const AlphaCollection& a, const AlphaCollection& b);

/// Literal subset compactness of an arbitrary point set.
bool is_compact_subset(const FiniteSpace& space, PointSet s);

/// A principal filter on C(X,$): the up-closure (in the powerset of the
/// carrier) of a nonempty kernel set of opens.
struct HyperFilter {
  const FiniteSpace* space = nullptr;
  Mask64 kernel = 0;  // over opens indices, nonempty

  bool valid() const { return kernel != 0; }
};

HyperFilter make_hyperfilter(const FiniteSpace& space, Mask64 kernel);

/// Filter order: F <= G (F coarser) iff kernel(G) is a subset of kernel(F).
bool filter_leq(const HyperFilter& f, const HyperFilter& g);
HyperFilter filter_sup(const HyperFilter& f, const HyperFilter& g);  // kernel intersection; NoSupremum if empty
HyperFilter filter_inf(const HyperFilter& f, const HyperFilter& g);  // kernel union

/// O-natural regularization: replaces the kernel by its up-closure among
/// opens, i.e. the filter generated by {O_X(G) : G in the kernel}.
HyperFilter regularize(const OpensLattice& lat, const HyperFilter& f);

// Mesh. Families of subsets of X mesh iff every pair of members intersects;
// a single set A stands for {A}.
bool mesh(std::span<const PointSet> a, std::span<const PointSet> b);
bool mesh(PointSet a, std::span<const PointSet> b);
// On the hyperspace: a subset R of C(X,$) against a collection of subsets.
bool mesh_hyper(Mask64 r, std::span<const Mask64> collection);
bool mesh_hyper(const HyperFilter& f, const HyperFilter& g);  // kernels intersect

/// Every member of P is contained in some member of R.
bool refines(const OpensLattice& lat, Mask64 p, Mask64 r);

struct IdealOps {
  bool is_ideal_subbase = false;
  Mask64 ideal_closure = 0;  // closure under nonempty finite unions
};
IdealOps ideal_ops(const OpensLattice& lat, Mask64 p);

/// Reduced ideal of a principal hyperfilter: all intersections of supersets
/// of the kernel, as a set of opens.
Mask64 reduced_ideal(const OpensLattice& lat, const HyperFilter& f);

struct SeparationWitness {
  PointSet member = 0;   // the O being separated
  PointSet inner = 0;    // A' with saturation(A') inside O
  std::vector<std::uint8_t> h;  // value per component, 0 on A', 1 off O
};

struct FunctionalSeparation {
  bool separated = false;
  std::vector<SeparationWitness> witnesses;  // one per minimal member when separated
};

/// A family is functionally separated iff every member contains the
/// component saturation of some member; h is the witnessing continuous map
/// into {0,1} (constant per component).
FunctionalSeparation is_functionally_separated(const IsotoneFamily& family);

}  // namespace hyperconv
