#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperconv/hyperspace.hpp"

namespace hyperconv {

/// The full list of continuous maps X -> Z, the carrier of every function
/// space structure. Maps are sorted by table, so indices are canonical.
struct FunctionCarrier {
  const FiniteSpace* X = nullptr;
  const FiniteSpace* Z = nullptr;
  std::vector<ContinuousMap> maps;

  int size() const { return static_cast<int>(maps.size()); }
  const ContinuousMap& at(int i) const { return maps[static_cast<size_t>(i)]; }
  int index_of(const std::vector<std::uint8_t>& table) const;
};

FunctionCarrier make_function_carrier(const FiniteSpace& X, const FiniteSpace& Z);

struct FunctionConvergence {
  const FunctionCarrier* carrier = nullptr;
  Convergence conv;
  std::string provenance;  // alpha-topology | natural | lift | dual
};

// Bracket sets, as masks over the carrier.
Mask64 bracket(const FunctionCarrier& c, PointSet d, PointSet u_open);              // {f : f(D) inside U}
Mask64 bracket(const FunctionCarrier& c, const IsotoneFamily& a, PointSet u_open);  // {f : preimage in A}
/// Closed-set bracket {f : some A in the family is inside the preimage of C}.
Mask64 bracket_closed(const FunctionCarrier& c, const IsotoneFamily& a, PointSet c_closed);

/// Minimal neighborhood per map in the topology with subbase
/// {[A,U] : A in alpha, U open in Z}.
std::vector<Mask64> alpha_topology_neighborhoods(const FunctionCarrier& c, const AlphaCollection& alpha);

FunctionConvergence alpha_function_topology(const FunctionCarrier& c, const AlphaCollection& alpha);

/// Natural convergence: f0 is a limit of K iff, for every open U of Z,
/// f0's preimage of U is covered by the interior of the intersection of the
/// preimages over K.
FunctionConvergence natural_convergence(const FunctionCarrier& c);

/// Preimage-wise lift, built as the initial convergence of the maps
/// f -> preimage of U, one per open U of Z.
FunctionConvergence preimage_lift(const FunctionCarrier& c, const HyperConvergence& tau);
/// Same structure by the direct formula; the agreement is a checked law.
FunctionConvergence preimage_lift_direct(const FunctionCarrier& c, const HyperConvergence& tau);
/// Lift testing only the listed opens of Z (e.g. an ideal basis).
FunctionConvergence preimage_lift_over(const FunctionCarrier& c, const HyperConvergence& tau,
                                       std::vector<PointSet> opens_of_z);
/// Closed-set route: tests preimages of the listed closed sets in the
/// complement (upper Kuratowski) view of tau.
FunctionConvergence preimage_lift_closed_over(const FunctionCarrier& c, const HyperConvergence& tau,
                                              std::vector<PointSet> closed_of_z);

/// Z-dual convergence of a collection of isotone families.
FunctionConvergence dual_convergence(const FunctionCarrier& c, const AlphaCollection& alpha);

/// h composed with f, as a map between carriers; h must be continuous Z -> W.
std::vector<int> lower_conjugate_table(const FunctionCarrier& from, const FunctionCarrier& to,
                                       const ContinuousMap& h);

// -- incremental limit evaluators ---------------------------------------------
//
// Exact per-kernel limit masks maintained along a depth-first walk of all
// nonempty kernels. They make all-kernel comparisons feasible on carriers
// where 2^m rule evaluations would not be (the worst instance in the law grid
// has 27 maps). Each class mirrors one rule-based construction above and is
// cross-checked against it on small carriers.

class TopoLim {
 public:
  TopoLim(int carrier_size, const std::vector<Mask64>& neighborhoods);
  void push(int e) { stack_.push_back(stack_.back() & contains_[static_cast<size_t>(e)]); }
  void pop() { stack_.pop_back(); }
  Mask64 lim() const { return stack_.back(); }

 private:
  std::vector<Mask64> contains_;  // per element e: {f : e in V(f)}
  std::vector<Mask64> stack_;
};

class LiftLim {
 public:
  LiftLim(const FunctionCarrier& c, const HyperConvergence& tau);
  void push(int e);
  void pop();
  Mask64 lim() const;

 private:
  int n_u_;
  std::vector<std::vector<int>> proj_;        // [u][f] -> open index of preimage
  std::vector<Mask64> tau_table_;             // lim per hyper kernel
  std::vector<std::vector<Mask64>> func_of_;  // [u][hyper mask] -> maps whose projection lies in mask
  std::vector<std::vector<Mask64>> stack_;    // [u] projected kernels
};

class NaturalLim {
 public:
  explicit NaturalLim(const FunctionCarrier& c);
  void push(int e);
  void pop();
  Mask64 lim() const;

 private:
  int n_u_;
  std::vector<std::vector<PointSet>> pre_;   // [u][f] preimage
  std::vector<int> int_open_;                // point set -> open index of its interior
  std::vector<std::vector<Mask64>> below_;   // [u][open idx] -> maps with preimage inside it
  std::vector<std::vector<PointSet>> stack_; // [u] running intersections
};

class DualLim {
 public:
  DualLim(const FunctionCarrier& c, const AlphaCollection& alpha);
  void push(int e);
  void pop();
  Mask64 lim() const { return all_ & ~acc_.back(); }

 private:
  struct Kill {
    int pair;
    int slot;
  };
  Mask64 all_;
  std::vector<Mask64> member_mask_;           // per (family, open) pair: maps inside [A,U]
  std::vector<std::vector<Mask64>> brackets_; // per pair: [m,U] masks for minimal m
  std::vector<std::vector<Kill>> kills_;      // per element: slots it invalidates
  std::vector<std::vector<bool>> alive_;
  std::vector<int> count_;
  std::vector<Mask64> acc_;                   // violated-members union, per depth
  std::vector<std::vector<Kill>> undo_;
};

/// Wraps any Convergence as an (inefficient) incremental source.
class RuleLim {
 public:
  explicit RuleLim(const Convergence& conv) : conv_(&conv) { stack_.push_back(0); }
  void push(int e) { stack_.push_back(stack_.back() | bit(e)); }
  void pop() { stack_.pop_back(); }
  Mask64 lim() const { return conv_->lim(stack_.back()); }

 private:
  const Convergence* conv_;
  std::vector<Mask64> stack_;
};

enum class KernelRel { Equal, LeftInsideRight };

/// Walks every nonempty kernel once; returns the first kernel whose limit
/// masks violate the relation (lim_a == lim_b, or lim_a inside lim_b), or 0.
template <class A, class B>
Mask64 incremental_compare(int carrier_size, A& a, B& b, KernelRel rel) {
  Mask64 kernel = 0;
  Mask64 found = 0;
  auto rec = [&](auto&& self, int next) -> bool {
    for (int e = next; e < carrier_size; ++e) {
      a.push(e);
      b.push(e);
      kernel |= bit(e);
      Mask64 la = a.lim(), lb = b.lim();
      bool ok = rel == KernelRel::Equal ? la == lb : subset(la, lb);
      if (!ok) {
        found = kernel;
        return false;
      }
      if (!self(self, e + 1)) return false;
      a.pop();
      b.pop();
      kernel &= ~bit(e);
    }
    return true;
  };
  rec(rec, 0);
  return found;
}

/// Singleton limits of an incremental source (enough to rebuild topological
/// reflections on large carriers).
template <class A>
std::vector<Mask64> incremental_point_lims(int carrier_size, A& a) {
  std::vector<Mask64> out;
  out.reserve(static_cast<size_t>(carrier_size));
  for (int e = 0; e < carrier_size; ++e) {
    a.push(e);
    out.push_back(a.lim());
    a.pop();
  }
  return out;
}

}  // namespace hyperconv
