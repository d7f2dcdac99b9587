#pragma once

#include "hyperconv/hyperspace.hpp"
#include "hyperconv/region.hpp"

namespace hyperconv {

/// Component model of C(X,R): a continuous real map on a finite space is
/// constant on comparability components, so the carrier is one rational
/// coordinate per component block.
struct RealModel {
  const FiniteSpace* space = nullptr;
  std::vector<PointSet> blocks;

  int dim() const { return static_cast<int>(blocks.size()); }
  PointSet block_union(Mask64 comp_subset) const;
  Mask64 components_meeting(PointSet s) const;
};

RealModel make_real_model(const FiniteSpace& X);

/// Truncated shrinking ladder of zero neighborhoods W_n = (-1/(n+1), 1/(n+1)).
struct ScaleLadder {
  int depth = 8;

  Rat radius(int n) const { return Rat(1, n + 1); }
  IntervalSet window(int n) const {
    return IntervalSet({Interval::open(-radius(n), radius(n))});
  }
};

/// A filter on C(X,R) given by a descending truncated base of regions.
struct SymbolicFilter {
  std::vector<Region> base;

  int depth() const { return static_cast<int>(base.size()); }
  const Region& deepest() const { return base.back(); }
};

SymbolicFilter make_symbolic_filter(std::vector<Region> base);  // checks descent and nonemptiness
SymbolicFilter principal_at_zero(const RealModel& model, int depth);

/// {f : the preimage of W lies in the family}, as a union of cylinders over
/// component subsets. For each subset T whose block union the family
/// contains: value in W on T, value outside W off T.
Region bracket_region(const RealModel& model, const IsotoneFamily& family, const IntervalSet& w);
/// Same with exact membership in an arbitrary set of opens (not isotonized).
Region bracket_region_exact(const RealModel& model, const OpensLattice& lat, Mask64 opens_set,
                            const IntervalSet& w);
/// {f : some member of the family is inside the zero set of f}: cylinders
/// pinning the components that meet a minimal member to 0.
Region bracket_region_zero(const RealModel& model, const IsotoneFamily& family);

/// Erected filter of a hyperfilter along the ladder; the kernel is
/// O-natural-regularized first. Bases are intersected cumulatively.
SymbolicFilter erected_filter(const RealModel& model, const HyperFilter& alpha, int depth);
/// Truncated supremum of the sequence [alpha_n, W_n].
SymbolicFilter sup_erected(const RealModel& model, const std::vector<HyperFilter>& alphas, int depth);

struct PreimageResult {
  HyperFilter filter;
  bool stabilized = false;  // deeper base elements stopped changing the kernel
};

/// The filter generated by the achievable preimage opens { f^-(W) : f in R }
/// along the base; per cylinder a component is forced in, forced out, or
/// optional.
PreimageResult filter_preimage(const RealModel& model, const SymbolicFilter& f, const IntervalSet& w);

/// Decides convergence of the symbolic filter to the zero function in the
/// lift of tau: X must be a tau-limit of every ladder preimage. Throws
/// NotSolid when tau fails the solidity axioms and TruncationInsufficient
/// when some preimage has not stabilized. Callers holding a solidity result
/// for tau may pass check_solid = false.
bool lift_limit_at_zero(const HyperConvergence& tau, const RealModel& model, const SymbolicFilter& f,
                        int depth, bool check_solid = true);

struct TransferCompactResult {
  bool leq = false;        // alpha <= [alpha, N(0)]^-(W)
  bool eq = false;         // equality of the two filters
  bool separated = false;  // kernel family functionally separated
};

TransferCompactResult verify_transfer_compact(const RealModel& model, const HyperFilter& alpha,
                                              const IntervalSet& w, int depth);

/// f_upper: the filter erected from the ladder preimages of f itself.
SymbolicFilter f_upper(const RealModel& model, const SymbolicFilter& f, int depth);

/// Erected filter rebuilt through the relation {(f,A,k) : A inside the
/// preimage of W_k}: base[n] is the union over k >= n and minimal members A
/// of the cylinders pinning the components meeting A into W_k.
SymbolicFilter delta_reconstruction(const RealModel& model, const HyperFilter& alpha, int depth);

}  // namespace hyperconv
