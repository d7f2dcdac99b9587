#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperconv/convergence.hpp"
#include "hyperconv/family.hpp"

namespace hyperconv {

/// A convergence whose carrier is C(X,$), the opens of X in their canonical
/// (sorted) order.
struct HyperConvergence {
  const FiniteSpace* space = nullptr;
  Convergence conv;
  std::string provenance;  // "scott", "alpha:p", ...
};

/// The Scott convergence [X,$]: a principal filter with kernel K converges
/// to Y iff Y is inside the interior of the intersection of K. Supersets of
/// K only shrink that intersection, so the union over all of them collapses
/// to the kernel term; the harness asserts the collapse separately.
HyperConvergence scott_convergence(const FiniteSpace& X);

/// Interior of the union over all superset kernels, computed literally.
/// Oracle for the collapse assertion; exponential in the carrier.
Mask64 scott_lim_full_union(const OpensLattice& lat, Mask64 kernel);

/// The topology on C(X,$) with the collection as open subbase.
/// Throws DegenerateAlpha when no member family is nonempty.
HyperConvergence hyper_topology(const AlphaCollection& alpha);

struct SolidityReport {
  bool lower = false;
  bool upper_regular = false;
  bool compact = false;
  bool directed_sups = false;
  bool pseudotopology = false;
  bool solid = false;
};

/// Each axiom checked exhaustively over kernels. Directed systems of filters
/// are enumerated as comparable pairs; a finite directed system attains its
/// top, so pairs decide the general condition on a finite carrier.
SolidityReport solidity_check(const HyperConvergence& tau);

struct CoverFlags {
  bool is_cover = false;
  bool is_alpha_cover = false;
};

/// is_cover: U inside the union of P. is_alpha_cover: P meets every nonempty
/// member family of alpha.
CoverFlags cover_predicates(const OpensLattice& lat, Mask64 p, const AlphaCollection* alpha, PointSet u);

/// P meets every nonempty member family containing U; the covers entering
/// the U-local cover numbers. For U = X this is is_alpha_cover.
bool is_alpha_cover_of(const OpensLattice& lat, Mask64 p, const AlphaCollection& alpha, PointSet u);

struct CoverNumbers {
  int lindelof = 0;  // worst-case minimal sub-cover size over alpha-covers of U
  int arens = 0;     // minimal subset of alpha below every member
};

CoverNumbers cover_numbers(const AlphaCollection& alpha, PointSet u);

enum class SelectionMode { Hurewicz, Rothberger };

struct SelectionResult {
  bool possible = false;
  std::vector<Mask64> picks;  // one subset (or singleton) per listed cover
  int max_pick = 0;           // Hurewicz: minimized max pick size
  std::string diagnostic;
};

/// Hurewicz: finite picks from each listed cover whose union is an
/// alpha-cover of U, minimizing the largest pick. Rothberger: one element
/// per cover. Throws NotACover if some listed family is not an alpha-cover.
SelectionResult selection(const AlphaCollection& alpha, const std::vector<Mask64>& covers,
                          SelectionMode mode, PointSet u);

/// Closed sets of X, sorted; the carrier of the complement view.
std::vector<PointSet> closed_sets(const FiniteSpace& X);

/// Upper Kuratowski convergence on closed sets: C is a limit of the kernel
/// iff the closure of the kernel's union is inside C.
Convergence upper_kuratowski_view(const FiniteSpace& X);

struct TauInstance {
  HyperConvergence tau;
  bool between_p_and_scott = false;  // p(X,$) <= tau <= [X,$]
};

/// The hyperconvergence suite used by the laws: the Scott convergence and
/// the topologies of the standard collections (plus the indiscrete one).
std::vector<TauInstance> standard_hyperconvergences(const FiniteSpace& X, const StandardAlphas& alphas);

}  // namespace hyperconv
