#include "hyperconv/funcspace.hpp"

#include <algorithm>

namespace hyperconv {

int FunctionCarrier::index_of(const std::vector<std::uint8_t>& table) const {
  ContinuousMap probe{X, Z, table};
  auto it = std::lower_bound(maps.begin(), maps.end(), probe);
  if (it == maps.end() || !(it->table == table)) return -1;
  return static_cast<int>(it - maps.begin());
}

FunctionCarrier make_function_carrier(const FiniteSpace& X, const FiniteSpace& Z) {
  FunctionCarrier c;
  c.X = &X;
  c.Z = &Z;
  c.maps = continuous_maps(X, Z);
  if (c.maps.size() > 64) fail(ErrorKind::CarrierTooLarge, "function carrier above 64 maps");
  return c;
}

Mask64 bracket(const FunctionCarrier& c, PointSet d, PointSet u_open) {
  Mask64 out = 0;
  for (int i = 0; i < c.size(); ++i)
    if (subset(c.at(i).image(d), u_open)) out |= bit(i);
  return out;
}

Mask64 bracket(const FunctionCarrier& c, const IsotoneFamily& a, PointSet u_open) {
  Mask64 out = 0;
  for (int i = 0; i < c.size(); ++i)
    if (a.contains(c.at(i).preimage(u_open))) out |= bit(i);
  return out;
}

Mask64 bracket_closed(const FunctionCarrier& c, const IsotoneFamily& a, PointSet c_closed) {
  Mask64 out = 0;
  for (int i = 0; i < c.size(); ++i) {
    PointSet pre = c.at(i).preimage(c_closed);
    for (PointSet m : a.minimals()) {
      if (subset(m, pre)) {
        out |= bit(i);
        break;
      }
    }
  }
  return out;
}

std::vector<Mask64> alpha_topology_neighborhoods(const FunctionCarrier& c, const AlphaCollection& alpha) {
  std::vector<Mask64> nbhd(static_cast<size_t>(c.size()), full_mask(c.size()));
  for (const auto& fam : alpha.families) {
    for (PointSet u : c.Z->opens()) {
      Mask64 b = bracket(c, fam, u);
      for (int i = 0; i < c.size(); ++i)
        if (b & bit(i)) nbhd[static_cast<size_t>(i)] &= b;
    }
  }
  return nbhd;
}

FunctionConvergence alpha_function_topology(const FunctionCarrier& c, const AlphaCollection& alpha) {
  if (!alpha.non_degenerate()) fail(ErrorKind::DegenerateAlpha, "degenerate collection");
  Convergence conv = topology_from_neighborhoods(alpha_topology_neighborhoods(c, alpha));
  return FunctionConvergence{&c, std::move(conv), "alpha-topology:" + alpha.label};
}

FunctionConvergence natural_convergence(const FunctionCarrier& c) {
  auto carrier = &c;
  Convergence conv(c.size(), [carrier](Mask64 k) {
    const FiniteSpace& X = *carrier->X;
    Mask64 out = full_mask(carrier->size());
    for (PointSet u : carrier->Z->opens()) {
      PointSet inter = X.all_points();
      for_each_bit(k, [&](int f) { inter &= carrier->at(f).preimage(u); });
      PointSet covered = X.interior(inter);
      Mask64 keep = 0;
      for (int f0 = 0; f0 < carrier->size(); ++f0)
        if (subset(carrier->at(f0).preimage(u), covered)) keep |= bit(f0);
      out &= keep;
    }
    return out;
  });
  return FunctionConvergence{&c, std::move(conv), "natural"};
}

FunctionConvergence preimage_lift(const FunctionCarrier& c, const HyperConvergence& tau) {
  if (tau.space != c.X) fail(ErrorKind::ArityMismatch, "hyperconvergence lives on a different space");
  auto base = std::make_shared<Convergence>(tau.conv);
  std::vector<std::vector<int>> maps;
  std::vector<const Convergence*> targets;
  for (PointSet u : c.Z->opens()) {
    std::vector<int> star(static_cast<size_t>(c.size()));
    for (int f = 0; f < c.size(); ++f)
      star[static_cast<size_t>(f)] = c.X->open_index(c.at(f).preimage(u));
    maps.push_back(std::move(star));
    targets.push_back(base.get());
  }
  auto inner = std::make_shared<Convergence>(initial(c.size(), maps, targets));
  // the outer closure keeps the copied base convergence alive
  Convergence conv(c.size(), [base, inner](Mask64 k) { return inner->lim(k); });
  return FunctionConvergence{&c, std::move(conv), "lift:" + tau.provenance};
}

namespace {
FunctionConvergence lift_over_impl(const FunctionCarrier& c, Convergence base,
                                   const FiniteSpace& base_space, std::vector<PointSet> test_sets,
                                   bool closed_side, std::string provenance) {
  auto carrier = &c;
  auto sets = std::make_shared<std::vector<PointSet>>(std::move(test_sets));
  // base carrier is the sorted opens (or closed sets) of X
  std::vector<PointSet> base_carrier;
  if (closed_side)
    base_carrier = closed_sets(base_space);
  else
    base_carrier = base_space.opens();
  auto base_idx = std::make_shared<std::vector<PointSet>>(std::move(base_carrier));
  auto basep = std::make_shared<Convergence>(std::move(base));
  Convergence conv(c.size(), [carrier, sets, base_idx, basep](Mask64 k) {
    Mask64 out = full_mask(carrier->size());
    for (PointSet u : *sets) {
      Mask64 hyper = 0;
      std::vector<int> proj(static_cast<size_t>(carrier->size()));
      for (int f = 0; f < carrier->size(); ++f) {
        PointSet pre = carrier->at(f).preimage(u);
        auto it = std::lower_bound(base_idx->begin(), base_idx->end(), pre);
        proj[static_cast<size_t>(f)] = static_cast<int>(it - base_idx->begin());
      }
      for_each_bit(k, [&](int f) { hyper |= bit(proj[static_cast<size_t>(f)]); });
      Mask64 l = basep->lim(hyper);
      Mask64 keep = 0;
      for (int f = 0; f < carrier->size(); ++f)
        if (l & bit(proj[static_cast<size_t>(f)])) keep |= bit(f);
      out &= keep;
    }
    return out;
  });
  return FunctionConvergence{&c, std::move(conv), std::move(provenance)};
}
}  // namespace

FunctionConvergence preimage_lift_direct(const FunctionCarrier& c, const HyperConvergence& tau) {
  if (tau.space != c.X) fail(ErrorKind::ArityMismatch, "hyperconvergence lives on a different space");
  std::vector<PointSet> all_opens = c.Z->opens();
  return lift_over_impl(c, tau.conv, *c.X, std::move(all_opens), false, "lift-direct:" + tau.provenance);
}

FunctionConvergence preimage_lift_over(const FunctionCarrier& c, const HyperConvergence& tau,
                                       std::vector<PointSet> opens_of_z) {
  for (PointSet u : opens_of_z)
    if (!c.Z->is_open(u)) fail(ErrorKind::BadInput, "test set is not open in Z");
  return lift_over_impl(c, tau.conv, *c.X, std::move(opens_of_z), false, "lift-basis:" + tau.provenance);
}

FunctionConvergence preimage_lift_closed_over(const FunctionCarrier& c, const HyperConvergence& tau,
                                              std::vector<PointSet> closed_of_z) {
  for (PointSet s : closed_of_z)
    if (!c.Z->is_closed(s)) fail(ErrorKind::BadInput, "test set is not closed in Z");
  // evaluated through the complement image of tau on closed sets
  std::vector<PointSet> closed = closed_sets(*tau.space);
  auto closedp = std::make_shared<std::vector<PointSet>>(closed);
  auto tau_copy = std::make_shared<Convergence>(tau.conv);
  const FiniteSpace* xp = tau.space;
  Convergence cview(static_cast<int>(closed.size()), [closedp, tau_copy, xp](Mask64 k) {
    Mask64 hyper = 0;
    for_each_bit(k, [&](int i) {
      hyper |= bit(xp->open_index(xp->all_points() & ~(*closedp)[static_cast<size_t>(i)]));
    });
    Mask64 l = tau_copy->lim(hyper);
    Mask64 out = 0;
    for (size_t i = 0; i < closedp->size(); ++i)
      if (l & bit(xp->open_index(xp->all_points() & ~(*closedp)[i]))) out |= bit(static_cast<int>(i));
    return out;
  });
  return lift_over_impl(c, std::move(cview), *c.X, std::move(closed_of_z), true,
                        "lift-closed:" + tau.provenance);
}

FunctionConvergence dual_convergence(const FunctionCarrier& c, const AlphaCollection& alpha) {
  auto carrier = &c;
  struct Pair {
    Mask64 member_mask;
    std::vector<Mask64> brackets;
  };
  auto pairs = std::make_shared<std::vector<Pair>>();
  for (const auto& fam : alpha.families) {
    for (PointSet u : c.Z->opens()) {
      Pair p;
      p.member_mask = bracket(c, fam, u);
      for (PointSet m : fam.minimals()) p.brackets.push_back(bracket(c, m, u));
      pairs->push_back(std::move(p));
    }
  }
  Convergence conv(c.size(), [carrier, pairs](Mask64 k) {
    Mask64 out = full_mask(carrier->size());
    for (const auto& p : *pairs) {
      bool ok = false;
      for (Mask64 b : p.brackets) {
        if (subset(k, b)) {
          ok = true;
          break;
        }
      }
      if (!ok) out &= ~p.member_mask;
    }
    return out;
  });
  return FunctionConvergence{&c, std::move(conv), "dual:" + alpha.label};
}

std::vector<int> lower_conjugate_table(const FunctionCarrier& from, const FunctionCarrier& to,
                                       const ContinuousMap& h) {
  std::vector<int> out(static_cast<size_t>(from.size()));
  for (int f = 0; f < from.size(); ++f) {
    ContinuousMap comp = compose(h, from.at(f));
    int idx = to.index_of(comp.table);
    if (idx < 0) fail(ErrorKind::InconsistentSpec, "composite map missing from target carrier");
    out[static_cast<size_t>(f)] = idx;
  }
  return out;
}

// -- incremental evaluators ---------------------------------------------------

TopoLim::TopoLim(int carrier_size, const std::vector<Mask64>& neighborhoods) {
  contains_.assign(static_cast<size_t>(carrier_size), 0);
  for (int e = 0; e < carrier_size; ++e)
    for (int f = 0; f < carrier_size; ++f)
      if (neighborhoods[static_cast<size_t>(f)] & bit(e)) contains_[static_cast<size_t>(e)] |= bit(f);
  stack_.push_back(full_mask(carrier_size));
}

LiftLim::LiftLim(const FunctionCarrier& c, const HyperConvergence& tau) {
  const FiniteSpace& X = *c.X;
  int h = X.open_count();
  if (h > 16) fail(ErrorKind::CarrierTooLarge, "lift evaluator caps the hyper carrier at 16 opens");
  n_u_ = static_cast<int>(c.Z->opens().size());
  proj_.resize(static_cast<size_t>(n_u_));
  func_of_.resize(static_cast<size_t>(n_u_));
  for (int u = 0; u < n_u_; ++u) {
    PointSet uset = c.Z->opens()[static_cast<size_t>(u)];
    auto& pr = proj_[static_cast<size_t>(u)];
    pr.resize(static_cast<size_t>(c.size()));
    for (int f = 0; f < c.size(); ++f) pr[static_cast<size_t>(f)] = X.open_index(c.at(f).preimage(uset));
    auto& fo = func_of_[static_cast<size_t>(u)];
    fo.assign(size_t{1} << h, 0);
    for (int f = 0; f < c.size(); ++f) {
      Mask64 pbit = bit(pr[static_cast<size_t>(f)]);
      for (Mask64 msk = 0; msk < fo.size(); ++msk)
        if (msk & pbit) fo[static_cast<size_t>(msk)] |= bit(f);
    }
  }
  tau_table_.assign(size_t{1} << h, 0);
  for (Mask64 k = 1; k < tau_table_.size(); ++k) tau_table_[static_cast<size_t>(k)] = tau.conv.lim(k);
  tau_table_[0] = full_mask(h);  // an empty projected kernel constrains nothing
  stack_.assign(static_cast<size_t>(n_u_), {0});
}

void LiftLim::push(int e) {
  for (int u = 0; u < n_u_; ++u) {
    auto& st = stack_[static_cast<size_t>(u)];
    st.push_back(st.back() | bit(proj_[static_cast<size_t>(u)][static_cast<size_t>(e)]));
  }
}

void LiftLim::pop() {
  for (int u = 0; u < n_u_; ++u) stack_[static_cast<size_t>(u)].pop_back();
}

Mask64 LiftLim::lim() const {
  Mask64 out = ~Mask64{0};
  for (int u = 0; u < n_u_; ++u) {
    Mask64 hyper = stack_[static_cast<size_t>(u)].back();
    out &= func_of_[static_cast<size_t>(u)][static_cast<size_t>(tau_table_[static_cast<size_t>(hyper)])];
  }
  return out;
}

NaturalLim::NaturalLim(const FunctionCarrier& c) {
  const FiniteSpace& X = *c.X;
  n_u_ = static_cast<int>(c.Z->opens().size());
  pre_.resize(static_cast<size_t>(n_u_));
  below_.resize(static_cast<size_t>(n_u_));
  int_open_.assign(size_t{1} << X.points(), 0);
  for (PointSet s = 0; s <= X.all_points(); ++s) {
    int_open_[static_cast<size_t>(s)] = X.open_index(X.interior(s));
    if (s == X.all_points()) break;
  }
  for (int u = 0; u < n_u_; ++u) {
    PointSet uset = c.Z->opens()[static_cast<size_t>(u)];
    auto& pr = pre_[static_cast<size_t>(u)];
    pr.resize(static_cast<size_t>(c.size()));
    for (int f = 0; f < c.size(); ++f) pr[static_cast<size_t>(f)] = c.at(f).preimage(uset);
    auto& bl = below_[static_cast<size_t>(u)];
    bl.assign(static_cast<size_t>(X.open_count()), 0);
    for (int o = 0; o < X.open_count(); ++o)
      for (int f = 0; f < c.size(); ++f)
        if (subset(pr[static_cast<size_t>(f)], X.open_at(o))) bl[static_cast<size_t>(o)] |= bit(f);
    stack_.push_back({X.all_points()});
  }
}

void NaturalLim::push(int e) {
  for (int u = 0; u < n_u_; ++u) {
    auto& st = stack_[static_cast<size_t>(u)];
    st.push_back(st.back() & pre_[static_cast<size_t>(u)][static_cast<size_t>(e)]);
  }
}

void NaturalLim::pop() {
  for (int u = 0; u < n_u_; ++u) stack_[static_cast<size_t>(u)].pop_back();
}

Mask64 NaturalLim::lim() const {
  Mask64 out = ~Mask64{0};
  for (int u = 0; u < n_u_; ++u) {
    PointSet inter = stack_[static_cast<size_t>(u)].back();
    int open = int_open_[static_cast<size_t>(inter)];
    out &= below_[static_cast<size_t>(u)][static_cast<size_t>(open)];
  }
  return out;
}

DualLim::DualLim(const FunctionCarrier& c, const AlphaCollection& alpha) {
  all_ = full_mask(c.size());
  kills_.resize(static_cast<size_t>(c.size()));
  for (const auto& fam : alpha.families) {
    for (PointSet u : c.Z->opens()) {
      int pair = static_cast<int>(member_mask_.size());
      member_mask_.push_back(bracket(c, fam, u));
      std::vector<Mask64> brs;
      for (PointSet m : fam.minimals()) brs.push_back(bracket(c, m, u));
      for (int slot = 0; slot < static_cast<int>(brs.size()); ++slot)
        for (int e = 0; e < c.size(); ++e)
          if (!(brs[static_cast<size_t>(slot)] & bit(e)))
            kills_[static_cast<size_t>(e)].push_back({pair, slot});
      alive_.push_back(std::vector<bool>(brs.size(), true));
      count_.push_back(static_cast<int>(brs.size()));
      brackets_.push_back(std::move(brs));
    }
  }
  // a pair with no surviving minimal-bracket is violated from the start
  Mask64 acc0 = 0;
  for (size_t p = 0; p < member_mask_.size(); ++p)
    if (count_[p] == 0) acc0 |= member_mask_[p];
  acc_.push_back(acc0);
}

void DualLim::push(int e) {
  acc_.push_back(acc_.back());
  undo_.push_back({});
  for (const Kill& k : kills_[static_cast<size_t>(e)]) {
    if (!alive_[static_cast<size_t>(k.pair)][static_cast<size_t>(k.slot)]) continue;
    alive_[static_cast<size_t>(k.pair)][static_cast<size_t>(k.slot)] = false;
    undo_.back().push_back(k);
    if (--count_[static_cast<size_t>(k.pair)] == 0) acc_.back() |= member_mask_[static_cast<size_t>(k.pair)];
  }
}

void DualLim::pop() {
  for (const Kill& k : undo_.back()) {
    alive_[static_cast<size_t>(k.pair)][static_cast<size_t>(k.slot)] = true;
    ++count_[static_cast<size_t>(k.pair)];
  }
  undo_.pop_back();
  acc_.pop_back();
}

}  // namespace hyperconv
