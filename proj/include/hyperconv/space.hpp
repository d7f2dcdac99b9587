#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperconv/bits.hpp"
#include "hyperconv/error.hpp"

namespace hyperconv {

struct SeparationProfile {
  bool t0 = false;
  bool t1 = false;
  bool normal = false;
};

/// A finite topological space: points {0..n-1} and an explicit family of open
/// sets, each stored as a bit vector. Immutable after construction; the
/// specialization preorder and comparability components are derived once.
///
/// Finite topologies are Alexandrov: opens are exactly the up-sets of the
/// specialization preorder, and every point has a smallest open around it.
class FiniteSpace {
 public:
  /// Validates the family (must contain the empty and full sets and be closed
  /// under binary union and intersection). Throws NotATopology; never repairs.
  static FiniteSpace from_opens(int points, std::vector<PointSet> opens);

  /// Opens are all up-sets of the reflexive-transitive closure of the edges.
  static FiniteSpace from_preorder(int points, const std::vector<std::pair<int, int>>& le_edges);

  static FiniteSpace sierpinski();  // opens {}, {1}, {0,1}
  static FiniteSpace discrete(int n);
  static FiniteSpace indiscrete(int n);
  static FiniteSpace chain(int n);  // opens totally ordered by inclusion

  int points() const { return n_; }
  PointSet all_points() const { return static_cast<PointSet>(full_mask(n_)); }
  const std::vector<PointSet>& opens() const { return opens_; }
  int open_count() const { return static_cast<int>(opens_.size()); }
  bool is_open(PointSet s) const { return open_index(s) >= 0; }
  int open_index(PointSet s) const;  // -1 if s is not open
  PointSet open_at(int idx) const { return opens_[static_cast<size_t>(idx)]; }

  PointSet interior(PointSet s) const;  // largest open inside s
  PointSet closure(PointSet s) const;   // complement of interior of complement
  PointSet up_closure(PointSet s) const;  // smallest open superset
  bool is_closed(PointSet s) const { return is_open(all_points() & ~s); }

  /// Specialization: leq(x,y) iff every open containing x contains y.
  bool leq(int x, int y) const { return (core_[static_cast<size_t>(x)] >> y) & 1u; }
  PointSet core(int x) const { return core_[static_cast<size_t>(x)]; }

  /// Blocks of the symmetrized specialization relation. Blocks are clopen.
  const std::vector<PointSet>& components() const { return components_; }
  int component_of(int x) const { return comp_of_[static_cast<size_t>(x)]; }
  PointSet saturation(PointSet s) const;  // union of components meeting s

  SeparationProfile separation_profile() const;
  /// Every point has a base of closed neighborhoods (cl(core(x)) = core(x)).
  bool regular() const;

  bool operator==(const FiniteSpace& o) const { return n_ == o.n_ && opens_ == o.opens_; }
  bool operator!=(const FiniteSpace& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  FiniteSpace() = default;
  void finish();

  int n_ = 0;
  std::vector<PointSet> opens_;      // sorted ascending as bit patterns
  std::vector<PointSet> core_;       // per point: smallest open containing it
  std::vector<PointSet> components_;
  std::vector<int> comp_of_;
};

/// A continuous map between finite spaces. Holds non-owning pointers; the
/// spaces must outlive the map.
struct ContinuousMap {
  const FiniteSpace* source = nullptr;
  const FiniteSpace* target = nullptr;
  std::vector<std::uint8_t> table;

  int operator()(int x) const { return table[static_cast<size_t>(x)]; }
  PointSet preimage(PointSet target_set) const;
  PointSet image(PointSet source_set) const;

  bool operator==(const ContinuousMap& o) const { return table == o.table; }
  bool operator<(const ContinuousMap& o) const { return table < o.table; }
};

bool is_continuous(const FiniteSpace& X, const FiniteSpace& Z, const std::vector<std::uint8_t>& table);

/// All continuous maps X -> Z, duplicate-free, sorted by table.
std::vector<ContinuousMap> continuous_maps(const FiniteSpace& X, const FiniteSpace& Z);

ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f);  // g after f

/// Product topology; point (x,y) has index x*Y.points()+y.
FiniteSpace product(const FiniteSpace& X, const FiniteSpace& Y);

FiniteSpace space_from_json(const std::string& text);
std::string space_to_json(const FiniteSpace& space);

}  // namespace hyperconv
