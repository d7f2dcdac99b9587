#include "hyperconv/transfer.hpp"

#include <algorithm>

namespace hyperconv {

PointSet RealModel::block_union(Mask64 comp_subset) const {
  PointSet out = 0;
  for_each_bit(comp_subset, [&](int i) { out |= blocks[static_cast<size_t>(i)]; });
  return out;
}

Mask64 RealModel::components_meeting(PointSet s) const {
  Mask64 out = 0;
  for (size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i] & s) out |= bit(static_cast<int>(i));
  return out;
}

RealModel make_real_model(const FiniteSpace& X) {
  if (X.components().size() > 6) fail(ErrorKind::SizeTooLarge, "component model capped at 6 blocks");
  return RealModel{&X, X.components()};
}

SymbolicFilter make_symbolic_filter(std::vector<Region> base) {
  if (base.empty()) fail(ErrorKind::EmptyBase, "symbolic filter needs at least one base region");
  for (size_t n = 0; n < base.size(); ++n) {
    if (base[n].is_empty()) fail(ErrorKind::EmptyBase, "base region " + std::to_string(n) + " is empty");
    if (n > 0 && !region_subset(base[n], base[n - 1]))
      fail(ErrorKind::BadInput, "base is not descending at depth " + std::to_string(n));
  }
  return SymbolicFilter{std::move(base)};
}

SymbolicFilter principal_at_zero(const RealModel& model, int depth) {
  Cylinder zero;
  for (int d = 0; d < model.dim(); ++d) zero.comps.push_back(IntervalSet::point(0));
  Region r(model.dim(), {zero});
  return make_symbolic_filter(std::vector<Region>(static_cast<size_t>(depth), r));
}

namespace {
Region bracket_region_impl(const RealModel& model, const IntervalSet& w,
                           const std::function<bool(PointSet)>& member) {
  int c = model.dim();
  IntervalSet out_w = w.complement();
  std::vector<Cylinder> cyls;
  for (Mask64 t = 0; t < (Mask64{1} << c); ++t) {
    if (!member(model.block_union(t))) continue;
    Cylinder cur;
    for (int d = 0; d < c; ++d) cur.comps.push_back((t & bit(d)) ? w : out_w);
    cyls.push_back(std::move(cur));
  }
  return Region(c, std::move(cyls));
}
}  // namespace

Region bracket_region(const RealModel& model, const IsotoneFamily& family, const IntervalSet& w) {
  return bracket_region_impl(model, w, [&](PointSet u) { return family.contains(u); });
}

Region bracket_region_exact(const RealModel& model, const OpensLattice& lat, Mask64 opens_set,
                            const IntervalSet& w) {
  const FiniteSpace& X = lat.space();
  return bracket_region_impl(model, w, [&](PointSet u) {
    int idx = X.open_index(u);
    return idx >= 0 && (opens_set & bit(idx));
  });
}

Region bracket_region_zero(const RealModel& model, const IsotoneFamily& family) {
  int c = model.dim();
  std::vector<Cylinder> cyls;
  for (PointSet m : family.minimals()) {
    Mask64 pinned = model.components_meeting(m);
    Cylinder cur;
    for (int d = 0; d < c; ++d)
      cur.comps.push_back((pinned & bit(d)) ? IntervalSet::point(0) : IntervalSet::line());
    cyls.push_back(std::move(cur));
  }
  return Region(c, std::move(cyls));
}

SymbolicFilter erected_filter(const RealModel& model, const HyperFilter& alpha, int depth) {
  if (depth < 1) fail(ErrorKind::BadInput, "depth must be at least 1");
  OpensLattice lat(*alpha.space);
  HyperFilter reg = regularize(lat, alpha);
  IsotoneFamily fam = IsotoneFamily::from_members(lat, reg.kernel);
  ScaleLadder ladder{depth};
  std::vector<Region> base;
  for (int n = 0; n < depth; ++n) {
    Region r = bracket_region(model, fam, ladder.window(n));
    if (n > 0) r = r.intersect(base.back());
    base.push_back(std::move(r));
  }
  return make_symbolic_filter(std::move(base));
}

SymbolicFilter sup_erected(const RealModel& model, const std::vector<HyperFilter>& alphas, int depth) {
  if (alphas.empty()) fail(ErrorKind::BadInput, "need at least one filter");
  if (depth < 1 || depth > static_cast<int>(alphas.size()))
    fail(ErrorKind::BadInput, "depth must match the filter sequence");
  ScaleLadder ladder{depth};
  std::vector<Region> base;
  for (int n = 0; n < depth; ++n) {
    OpensLattice lat(*alphas[static_cast<size_t>(n)].space);
    HyperFilter reg = regularize(lat, alphas[static_cast<size_t>(n)]);
    IsotoneFamily fam = IsotoneFamily::from_members(lat, reg.kernel);
    Region r = bracket_region(model, fam, ladder.window(n));
    if (n > 0) r = r.intersect(base.back());
    base.push_back(std::move(r));
  }
  return make_symbolic_filter(std::move(base));
}

namespace {
// Achievable preimage opens over one region: per cylinder, components whose
// constraint lies inside W are forced in, disjoint ones are forced out, and
// mixed ones contribute both ways.
Mask64 achievable_opens(const RealModel& model, const OpensLattice& lat, const Region& r,
                        const IntervalSet& w) {
  Mask64 out = 0;
  for (const Cylinder& cyl : r.cylinders()) {
    Mask64 forced = 0, optional = 0;
    for (int d = 0; d < model.dim(); ++d) {
      const IntervalSet& cs = cyl.comps[static_cast<size_t>(d)];
      if (cs.subset_of(w))
        forced |= bit(d);
      else if (!cs.intersect(w).is_empty())
        optional |= bit(d);
    }
    for_each_submask(optional, [&](Mask64 s) {
      out |= bit(lat.space().open_index(model.block_union(forced | s)));
    });
  }
  return out;
}
}  // namespace

PreimageResult filter_preimage(const RealModel& model, const SymbolicFilter& f, const IntervalSet& w) {
  OpensLattice lat(*model.space);
  std::vector<Mask64> kernels;
  for (const Region& r : f.base) kernels.push_back(achievable_opens(model, lat, r, w));
  Mask64 kernel = kernels.front();
  for (Mask64 k : kernels) kernel &= k;
  if (kernel == 0) fail(ErrorKind::TruncationInsufficient, "preimage kernels have empty intersection");
  PreimageResult out;
  out.filter = make_hyperfilter(*model.space, kernel);
  out.stabilized = kernels.size() >= 2 && kernels[kernels.size() - 1] == kernels[kernels.size() - 2];
  return out;
}

bool lift_limit_at_zero(const HyperConvergence& tau, const RealModel& model, const SymbolicFilter& f,
                        int depth, bool check_solid) {
  if (check_solid && !solidity_check(tau).solid)
    fail(ErrorKind::NotSolid, "lift convergence requires a solid hyperconvergence");
  ScaleLadder ladder{depth};
  int x_idx = tau.space->open_index(tau.space->all_points());
  for (int n = 0; n < depth; ++n) {
    PreimageResult pre = filter_preimage(model, f, ladder.window(n));
    if (!pre.stabilized)
      fail(ErrorKind::TruncationInsufficient, "preimage at depth " + std::to_string(n) + " unstable");
    if (!(tau.conv.lim(pre.filter.kernel) & bit(x_idx))) return false;
  }
  return true;
}

TransferCompactResult verify_transfer_compact(const RealModel& model, const HyperFilter& alpha,
                                              const IntervalSet& w, int depth) {
  OpensLattice lat(*alpha.space);
  HyperFilter reg = regularize(lat, alpha);
  SymbolicFilter erected = erected_filter(model, alpha, depth);
  PreimageResult pre = filter_preimage(model, erected, w);
  TransferCompactResult out;
  out.leq = subset(pre.filter.kernel, reg.kernel);
  out.eq = pre.filter.kernel == reg.kernel;
  out.separated = is_functionally_separated(IsotoneFamily::from_members(lat, reg.kernel)).separated;
  return out;
}

SymbolicFilter f_upper(const RealModel& model, const SymbolicFilter& f, int depth) {
  OpensLattice lat(*model.space);
  ScaleLadder ladder{depth};
  std::vector<Region> base;
  for (int n = 0; n < depth; ++n) {
    IntervalSet w = ladder.window(n);
    PreimageResult pre = filter_preimage(model, f, w);
    if (!pre.stabilized)
      fail(ErrorKind::TruncationInsufficient, "preimage at depth " + std::to_string(n) + " unstable");
    Region r = bracket_region_exact(model, lat, pre.filter.kernel, w);
    if (n > 0) r = r.intersect(base.back());
    base.push_back(std::move(r));
  }
  return make_symbolic_filter(std::move(base));
}

SymbolicFilter delta_reconstruction(const RealModel& model, const HyperFilter& alpha, int depth) {
  if (depth < 1) fail(ErrorKind::BadInput, "depth must be at least 1");
  OpensLattice lat(*alpha.space);
  HyperFilter reg = regularize(lat, alpha);
  IsotoneFamily fam = IsotoneFamily::from_members(lat, reg.kernel);
  ScaleLadder ladder{depth};
  int c = model.dim();
  std::vector<Region> base;
  for (int n = 0; n < depth; ++n) {
    Region acc = Region::nothing(c);
    for (int k = n; k < depth; ++k) {
      IntervalSet w = ladder.window(k);
      for (PointSet m : fam.minimals()) {
        Mask64 touched = model.components_meeting(m);
        Cylinder cyl;
        for (int d = 0; d < c; ++d) cyl.comps.push_back((touched & bit(d)) ? w : IntervalSet::line());
        acc = acc.unite(Region(c, {cyl}));
      }
    }
    base.push_back(std::move(acc));
  }
  return make_symbolic_filter(std::move(base));
}

}  // namespace hyperconv
