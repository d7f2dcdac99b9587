#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyperconv/bits.hpp"
#include "hyperconv/error.hpp"

namespace hyperconv {

/// On a finite carrier every filter is principal, so a convergence is a map
/// from nonempty kernel subsets to limit subsets satisfying
///   centered:  x in lim({x})
///   monotone:  K inside K' implies lim(K') inside lim(K)
/// Carriers are capped at 64 elements so kernels fit one machine word.
/// Limits are computed by a pure rule; nothing is cached, so values are
/// safe to share across threads.
class Convergence {
 public:
  using Rule = std::function<Mask64(Mask64)>;

  Convergence(int carrier_size, Rule rule);

  /// Tabulated construction with full axiom validation. Entries must cover
  /// every nonempty kernel. Throws NotCentered / NotMonotone.
  static Convergence from_table(int carrier_size, std::vector<Mask64> lim_by_kernel);

  static Convergence chaotic(int carrier_size);  // lim(K) = everything

  int size() const { return m_; }
  Mask64 carrier_mask() const { return full_mask(m_); }
  Mask64 lim(Mask64 kernel) const;
  Mask64 lim_point(int x) const { return lim(bit(x)); }

  /// Exhaustive axiom check (centering plus one-element kernel extensions,
  /// which is equivalent to full monotonicity). Throws on violation.
  void validate() const;

 private:
  int m_;
  Rule rule_;
};

/// Builds the convergence from an explicit (kernel -> limits) list; missing
/// kernels are rejected. Used for hand-written instances.
Convergence make_convergence(int carrier_size,
                             const std::vector<std::pair<Mask64, Mask64>>& entries);

// -- comparison -------------------------------------------------------------

// Kernel enumeration cap for the generic all-kernel routines. Function-space
// carriers above the cap use the incremental evaluators in funcspace.
inline constexpr int kKernelEnumCap = 22;

/// Pointwise limit-set inclusion over all kernels (coarse >= has the larger
/// limit sets). Early exit on the first violated kernel.
bool convergence_leq(const Convergence& finer, const Convergence& coarser);
bool convergence_equal(const Convergence& a, const Convergence& b);
/// First kernel where the relation fails, or 0 when it holds.
Mask64 find_leq_violation(const Convergence& finer, const Convergence& coarser);
Mask64 find_equal_violation(const Convergence& a, const Convergence& b);

// -- derived structure -------------------------------------------------------

/// adh S = union of lim over all kernels meeting S, organized as the exact
/// decomposition adh S = union over x in S of adh {x}.
class AdherenceTable {
 public:
  explicit AdherenceTable(const Convergence& conv);
  Mask64 adherence(Mask64 s) const;  // adh of the empty set is empty
  Mask64 single(int x) const { return per_element_[static_cast<size_t>(x)]; }

 private:
  std::vector<Mask64> per_element_;
};

Mask64 adherence(const Convergence& conv, Mask64 s);

struct ConvergenceClass {
  bool pseudotopology = false;
  bool pretopology = false;
  bool topology = false;
};

ConvergenceClass classify(const Convergence& conv);

enum class Reflection { T, P };

/// P: finest pretopology coarser than conv (vicinity kernel of x is the
/// union of all kernels converging to x). T: finest topology coarser than
/// conv; its opens are the sets closed under the singleton-limit relation.
Convergence reflect(const Convergence& conv, Reflection level);

/// Minimal open neighborhoods of the topological reflection: the transitive
/// closure of the relation x -> {f : x in lim({f})}. Only singleton limits
/// enter, so this works on carriers too large to enumerate kernels.
std::vector<Mask64> t_reflection_neighborhoods(int carrier_size, const std::vector<Mask64>& point_lims);

/// The convergence of the topology with the given minimal neighborhoods.
Convergence topology_from_neighborhoods(std::vector<Mask64> neighborhoods);

/// Coarsest convergence making every map continuous into its target.
Convergence initial(int carrier_size, const std::vector<std::vector<int>>& maps,
                    const std::vector<const Convergence*>& targets);

/// Least m such that every S with x in adh(S) has a sub-S of size <= m with
/// x still in its adherence. Brute force over subsets.
int tightness_at(const Convergence& conv, int x);

}  // namespace hyperconv
